#include "eucstruct/inversion.hpp"

#include <stdexcept>
#include <string>

#include "eucstruct/modular.hpp"

namespace eucstruct {

namespace {

void check_inverse_domain(const char* op, const Int& m, const Int& n) {
  const std::string name(op);
  if (n < 2) throw std::domain_error(name + ": n must be >= 2");
  if (m < 1) throw std::domain_error(name + ": m must be >= 1");
  if (gcd(m, n) != 1) throw std::domain_error(name + ": m has no inverse (gcd(m, n) != 1)");
}

}  // namespace

InversionResult mod_inverse(const Int& m_in, const Int& n, bool pre_reduce) {
  check_inverse_domain("mod_inverse", m_in, n);
  Int m = m_in;
  if (pre_reduce && m >= n) m %= n;  // coprimality rules out m % n == 0
  InversionResult result;
  result.trace = ea_trace_general(n * n, m * n + 1);
  RemainderStop stop = first_remainder_below(result.trace, Threshold::below(n));
  result.inverse = stop.value;
  result.stop_index = stop.index;
  return result;
}

Int seysen_inverse(const Int& m, const Int& n, const Int& f, bool allow_small_f) {
  check_inverse_domain("seysen_inverse", m, n);
  if (f < 1) throw std::domain_error("seysen_inverse: f must be >= 1");
  if (!allow_small_f && f <= 2 * n)
    throw std::domain_error("seysen_inverse: requires f > 2n (pass allow_small_f to override)");
  const Int u = f * n;
  const Int v = f * m + 1;
  if (u <= v) throw std::domain_error("seysen_inverse: requires f*n > f*m + 1 (m must be < n)");
  EaTrace trace = ea_trace(u, v);
  RemainderStop stop = first_remainder_below(trace, Threshold::below(f + n));
  return stop.value - f;
}

Int inverse_baseline(const Int& m, const Int& n) {
  if (n < 2) throw std::domain_error("inverse_baseline: n must be >= 2");
  if (m < 1) throw std::domain_error("inverse_baseline: m must be >= 1");
  ExtGcd e = ext_gcd(m, n);
  if (e.g != 1) throw std::domain_error("inverse_baseline: m has no inverse (gcd(m, n) != 1)");
  Int x = e.x % n;
  if (x <= 0) x += n;
  return x;
}

}  // namespace eucstruct
