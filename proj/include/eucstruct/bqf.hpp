#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "eucstruct/ea.hpp"
#include "eucstruct/int_types.hpp"

namespace eucstruct {

// p = b^2 + 3bc + c^2 with b > c > 0; the pair is pinned by
// 5b^2 > p > 5c^2 (so b > sqrt(p/5) > c).
struct BqfRepresentation {
  Int p;
  Int b;
  Int c;
};

inline Int bqf_value(const Int& b, const Int& c) { return b * b + 3 * b * c + c * c; }

// Full record of one representation run: solve v^2 + v - 1 == 0 (mod p), run
// the Euclidean algorithm on (p, v), stop at the first remainder c with
// 5c^2 < p; the preceding remainder is b or b + c, disambiguated by direct
// evaluation of the form.
struct BqfRun {
  BqfRepresentation rep;
  Int v;                   // congruence root used
  std::size_t stop_index;  // index of c in the trace
  EaTrace trace;
};

// Requires p prime with p == +-1 (mod 5). Uses solve_golden_congruence's root.
BqfRepresentation represent_prime(const Int& p);

// Same, with an explicit congruence root (0 < v < p, v^2 + v - 1 == 0 mod p);
// both roots of the congruence produce the same (b, c).
BqfRun represent_prime_with_root(const Int& p, const Int& v);

// Disambiguates the remainder preceding the stop: returns r_prev when
// r_prev^2 + 3*r_prev*c + c^2 == p, else r_prev - c (verified the same way).
// Throws std::domain_error when neither candidate satisfies the form.
Int recover_b(const Int& p, const Int& c, const Int& r_prev);

// Exhaustive search for all (b, c) with b > c > 0 and b^2 + 3bc + c^2 = p.
// Works for any positive p; the primes this library targets yield exactly one
// pair, primes p == +-2 (mod 5) yield none.
std::vector<std::pair<Int, Int>> brute_force_representations(const Int& p);

}  // namespace eucstruct
