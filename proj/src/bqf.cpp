#include "eucstruct/bqf.hpp"

#include <stdexcept>

#include "eucstruct/modular.hpp"

namespace eucstruct {

Int recover_b(const Int& p, const Int& c, const Int& r_prev) {
  if (bqf_value(r_prev, c) == p) return r_prev;
  const Int alt = r_prev - c;
  if (alt > 0 && bqf_value(alt, c) == p) return alt;
  throw std::domain_error("recover_b: neither candidate satisfies b^2 + 3bc + c^2 = p");
}

BqfRun represent_prime_with_root(const Int& p, const Int& v) {
  if (v <= 0 || v >= p) throw std::domain_error("represent_prime: root must satisfy 0 < v < p");
  if ((v * v + v - 1) % p != 0)
    throw std::domain_error("represent_prime: v^2 + v - 1 != 0 (mod p)");
  BqfRun run;
  run.v = v;
  run.trace = ea_trace(p, v);
  RemainderStop stop = first_remainder_below(run.trace, Threshold::below_sqrt_fifth(p));
  run.stop_index = stop.index;
  const Int& r_prev = run.trace.remainders[stop.index];  // r_{stop-1}
  run.rep.p = p;
  run.rep.c = stop.value;
  run.rep.b = recover_b(p, stop.value, r_prev);
  return run;
}

BqfRepresentation represent_prime(const Int& p) {
  const Int v = solve_golden_congruence(p);  // validates p prime, p == +-1 (mod 5)
  return represent_prime_with_root(p, v).rep;
}

std::vector<std::pair<Int, Int>> brute_force_representations(const Int& p) {
  if (p < 1) throw std::domain_error("brute_force_representations: p must be >= 1");
  std::vector<std::pair<Int, Int>> found;
  for (Int c = 1; 5 * c * c < p; ++c) {
    // b^2 + 3bc + (c^2 - p) = 0  =>  b = (-3c + sqrt(5c^2 + 4p)) / 2.
    const Int disc = 5 * c * c + 4 * p;
    Int root;
    if (!is_perfect_square(disc, &root)) continue;
    const Int numerator = root - 3 * c;
    if (numerator <= 0 || numerator % 2 != 0) continue;
    const Int b = numerator / 2;
    if (b > c && bqf_value(b, c) == p) found.emplace_back(b, c);
  }
  return found;
}

}  // namespace eucstruct
