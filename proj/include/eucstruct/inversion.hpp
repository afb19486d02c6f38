#pragma once

#include <cstddef>

#include "eucstruct/ea.hpp"
#include "eucstruct/int_types.hpp"

namespace eucstruct {

// Result of the remainder-scan inversion: run the Euclidean algorithm on
// (n^2, m*n + 1) and stop at the first remainder below n — that remainder is
// m^{-1} mod n. The full run is kept for inspection.
struct InversionResult {
  Int inverse;            // in (0, n)
  EaTrace trace;          // trace.u = n^2, trace.v = m*n + 1
  std::size_t stop_index; // index of the stopping remainder in the trace
};

// Requires n >= 2, m >= 1, gcd(m, n) = 1. m >= n is accepted as-is (the run
// then starts with quotient 0 and self-reduces by its third division); set
// pre_reduce to fold m mod n first instead.
InversionResult mod_inverse(const Int& m, const Int& n, bool pre_reduce = false);

// Scaled-run baseline: run the Euclidean algorithm on (f*n, f*m + 1), stop at
// the first remainder r below f + n, and return r - f (may be negative). The
// result is only guaranteed congruent to m^{-1} mod n when f > 2n; passing
// allow_small_f permits smaller f (the return value can then fail to be an
// inverse at all). Requires n >= 2, 1 <= m < n, gcd(m, n) = 1, f >= 1.
Int seysen_inverse(const Int& m, const Int& n, const Int& f, bool allow_small_f = false);

// Classical baseline via the extended Euclidean algorithm; returns the
// canonical representative in (0, n). Same domain as mod_inverse.
Int inverse_baseline(const Int& m, const Int& n);

}  // namespace eucstruct
