#pragma once

#include <cstdint>
#include <optional>

#include "eucstruct/int_types.hpp"

namespace eucstruct {

// Miller-Rabin primality. Below 2^64 the fixed witness set
// {2,3,5,7,11,13,17,19,23,29,31,37} makes the answer deterministic; above,
// `rounds` random witnesses are drawn from a generator seeded with `seed`
// (fixed default, so runs are reproducible).
bool is_prime(const Int& n, unsigned rounds = 40, std::uint64_t seed = 0x5eed0001u);

// Square root of a mod p (p an odd prime). Returns the smaller of the two
// roots, or nullopt for a quadratic non-residue. a is reduced mod p first.
std::optional<Int> mod_sqrt(const Int& a, const Int& p);

// The root v of v^2 + v - 1 == 0 (mod p) derived from the smaller square
// root of 5, i.e. v = (-1 + sqrt(5)) * 2^{-1} mod p. Requires p prime with
// p == +-1 (mod 5); the other root is p - 1 - v.
Int solve_golden_congruence(const Int& p);

// u = a * b^2 with a squarefree.
struct SquarefreeSplit {
  Int a;
  Int b;
};

SquarefreeSplit squarefree_decompose(const Int& u);

// g = gcd(m, n) together with x, y such that m*x + n*y = g and
// |x| <= n / (2g)  (x is reduced into (-n/(2g), n/(2g)]).
struct ExtGcd {
  Int g;
  Int x;
  Int y;
};

ExtGcd ext_gcd(const Int& m, const Int& n);

}  // namespace eucstruct
