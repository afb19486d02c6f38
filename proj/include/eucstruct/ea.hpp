#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eucstruct/int_types.hpp"

namespace eucstruct {

// Full record of a Euclidean-algorithm run on (u, v):
//
//   r_{-1} = u, r_0 = v,  r_{i-2} = q_i * r_{i-1} + r_i  (i = 1..s),  r_s = 0.
//
// `remainders` stores r_{-1}..r_s (size s+2), `quotients` stores q_1..q_s.
// When `modified` is set, the run's final division was split in two
// (quotients q_s - 1 and 1) to flip the parity of the step count; the two
// final nonzero remainders are then equal. `delta` records the parity the
// caller requested (steps % 2 == delta), or nullopt for a plain run.
struct EaTrace {
  Int u;
  Int v;
  std::optional<int> delta;
  bool modified = false;
  std::vector<Int> quotients;
  std::vector<Int> remainders;

  std::size_t steps() const { return quotients.size(); }

  // r_i for i in [-1, steps()].
  const Int& remainder(std::ptrdiff_t i) const { return remainders.at(static_cast<std::size_t>(i + 1)); }
  // q_i for i in [1, steps()].
  const Int& quotient(std::size_t i) const { return quotients.at(i - 1); }
};

// Plain run; requires u > v >= 1.
EaTrace ea_trace(const Int& u, const Int& v);

// Parity-normalized run; requires u > v >= 1 and delta in {0, 1}. Returns the
// plain run when its step count already has parity delta, otherwise the
// modified run (one extra step). Throws degenerate_error if the adjustment
// would produce a zero quotient (impossible under u > v; defensive only).
EaTrace ea_trace_parity(const Int& u, const Int& v, int delta);

// Plain run that also accepts v >= u (the first quotient is then 0, and the
// second division self-reduces). Needed by callers that feed (n^2, m*n+1)
// with m >= n. Requires u >= 1, v >= 1.
EaTrace ea_trace_general(const Int& u, const Int& v);

// Re-derives every structural invariant of a trace (division identities,
// monotonicity, parity/modified consistency); throws verification_error with
// a description of the first violation. Used by JSON ingestion and tests.
void validate_trace(const EaTrace& trace);

// Exact-integer stopping threshold for remainder scans: either r < bound, or
// 5*r^2 < p (i.e. r < sqrt(p/5), evaluated without any rounding).
class Threshold {
 public:
  static Threshold below(Int bound);
  // Admits r exactly when 5*r^2 < p.
  static Threshold below_sqrt_fifth(Int p);

  bool admits(const Int& r) const;

 private:
  enum class Kind { value, sqrt_fifth };
  Threshold(Kind kind, Int payload) : kind_(kind), payload_(std::move(payload)) {}
  Kind kind_;
  Int payload_;
};

struct RemainderStop {
  std::size_t index;  // position i >= 1 in the remainder sequence
  Int value;          // r_index
};

// First i >= 1 with threshold.admits(r_i) and r_i >= min_value. r_0 = v is
// never eligible; the terminal 0 is. Throws std::logic_error when no
// remainder qualifies (cannot happen for the bounds the algorithms use; a
// trigger means the trace is malformed).
RemainderStop first_remainder_below(const EaTrace& trace, const Threshold& threshold,
                                    const Int& min_value = Int(0));

}  // namespace eucstruct
