#include "eucstruct/ea.hpp"

#include <stdexcept>

#include "eucstruct/errors.hpp"

namespace eucstruct {

namespace {

EaTrace run_divisions(const Int& u, const Int& v) {
  EaTrace trace;
  trace.u = u;
  trace.v = v;
  trace.remainders.reserve(8);
  trace.remainders.push_back(u);
  trace.remainders.push_back(v);
  Int dividend = u;
  Int divisor = v;
  Int q, r;
  while (divisor != 0) {
    boost::multiprecision::divide_qr(dividend, divisor, q, r);
    trace.quotients.push_back(q);
    trace.remainders.push_back(r);
    dividend = divisor;
    divisor = r;
  }
  return trace;
}

void check_divisor(const Int& v) {
  if (v < 1) throw std::domain_error("ea_trace: v must be >= 1");
}

}  // namespace

EaTrace ea_trace(const Int& u, const Int& v) {
  check_divisor(v);
  if (u <= v) throw std::domain_error("ea_trace: requires u > v");
  return run_divisions(u, v);
}

EaTrace ea_trace_general(const Int& u, const Int& v) {
  check_divisor(v);
  if (u < 1) throw std::domain_error("ea_trace_general: u must be >= 1");
  return run_divisions(u, v);
}

EaTrace ea_trace_parity(const Int& u, const Int& v, int delta) {
  if (delta != 0 && delta != 1) throw std::domain_error("ea_trace_parity: delta must be 0 or 1");
  EaTrace trace = ea_trace(u, v);
  if (static_cast<int>(trace.steps() % 2) == delta) {
    trace.delta = delta;
    return trace;
  }
  // Split the final division r_{s-2} = q_s * r_{s-1} + 0 into two steps with
  // quotients q_s - 1 and 1, adding one step and flipping the parity.
  if (trace.quotients.back() == 1)
    throw degenerate_error("ea_trace_parity: final quotient 1 cannot be parity-adjusted");
  const Int gcd_remainder = trace.remainders[trace.remainders.size() - 2];
  trace.quotients.back() -= 1;
  trace.quotients.push_back(1);
  trace.remainders.back() = gcd_remainder;
  trace.remainders.push_back(0);
  trace.modified = true;
  trace.delta = delta;
  return trace;
}

void validate_trace(const EaTrace& trace) {
  const std::size_t s = trace.quotients.size();
  if (trace.remainders.size() != s + 2)
    throw verification_error("trace: remainder sequence must have steps + 2 entries");
  if (s == 0) throw verification_error("trace: must contain at least one division");
  if (trace.remainders.front() != trace.u) throw verification_error("trace: r_{-1} != u");
  if (trace.remainders[1] != trace.v) throw verification_error("trace: r_0 != v");
  if (trace.remainders.back() != 0) throw verification_error("trace: final remainder != 0");
  if (trace.v < 1) throw verification_error("trace: v must be >= 1");

  for (std::size_t i = 1; i <= s; ++i) {
    const Int& dividend = trace.remainders[i - 1];
    const Int& divisor = trace.remainders[i];
    const Int& rem = trace.remainders[i + 1];
    const Int& q = trace.quotients[i - 1];
    if (dividend != q * divisor + rem)
      throw verification_error("trace: division identity fails at step " + std::to_string(i));
    if (rem < 0) throw verification_error("trace: negative remainder at step " + std::to_string(i));
    const bool final_split_pair = trace.modified && i == s - 1;
    if (final_split_pair) {
      if (rem != divisor)
        throw verification_error("trace: modified run must repeat the gcd remainder");
    } else if (rem >= divisor) {
      throw verification_error("trace: remainders must strictly decrease at step " + std::to_string(i));
    }
    if (q < 0 || (q == 0 && i != 1))
      throw verification_error("trace: nonpositive quotient at step " + std::to_string(i));
  }
  if (trace.modified) {
    if (s < 2 || trace.quotients.back() != 1)
      throw verification_error("trace: modified run must end with quotient 1");
  } else if (s >= 2 && trace.quotients.back() < 2) {
    throw verification_error("trace: plain run must end with quotient >= 2");
  }
  if (trace.delta && static_cast<int>(s % 2) != *trace.delta)
    throw verification_error("trace: step-count parity disagrees with delta");
  if (!trace.delta && trace.modified)
    throw verification_error("trace: modified run without a parity request");
}

Threshold Threshold::below(Int bound) { return Threshold(Kind::value, std::move(bound)); }

Threshold Threshold::below_sqrt_fifth(Int p) { return Threshold(Kind::sqrt_fifth, std::move(p)); }

bool Threshold::admits(const Int& r) const {
  if (kind_ == Kind::value) return r < payload_;
  return 5 * r * r < payload_;
}

RemainderStop first_remainder_below(const EaTrace& trace, const Threshold& threshold,
                                    const Int& min_value) {
  for (std::size_t i = 1; i < trace.remainders.size() - 1; ++i) {
    const Int& r = trace.remainders[i + 1];  // r_i
    if (r >= min_value && threshold.admits(r)) return RemainderStop{i, r};
  }
  throw std::logic_error("first_remainder_below: no remainder admitted by the threshold");
}

}  // namespace eucstruct
