#include "eucstruct/modular.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace eucstruct {

namespace {

// One Miller-Rabin round: n - 1 = d * 2^r with d odd. Returns true when the
// witness leaves n possibly prime.
bool miller_rabin_round(const Int& n, const Int& d, unsigned r, const Int& witness) {
  Int x = powmod(witness, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Int& n, unsigned rounds, std::uint64_t seed) {
  if (n < 2) return false;
  static constexpr std::array<unsigned, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }

  Int d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d >>= 1;
    ++r;
  }

  const Int two_pow_64 = Int(1) << 64;
  if (n < two_pow_64) {
    for (unsigned w : kSmall)
      if (!miller_rabin_round(n, d, r, w)) return false;
    return true;
  }

  if (rounds < 40) rounds = 40;
  std::mt19937_64 rng(seed);
  for (unsigned i = 0; i < rounds; ++i) {
    Int witness = 2 + random_below(rng, n - 3);  // in [2, n-2]
    if (!miller_rabin_round(n, d, r, witness)) return false;
  }
  return true;
}

std::optional<Int> mod_sqrt(const Int& a_in, const Int& p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::domain_error("mod_sqrt: p must be an odd prime");
  Int a = a_in % p;
  if (a < 0) a += p;
  if (a == 0) return Int(0);

  // Euler criterion.
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;

  Int root;
  if (p % 4 == 3) {
    root = powmod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks. p - 1 = q * 2^s with q odd.
    Int q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
      q >>= 1;
      ++s;
    }
    Int z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    Int m = s;
    Int c = powmod(z, q, p);
    Int t = powmod(a, q, p);
    root = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
      Int i = 0;
      Int probe = t;
      while (probe != 1) {
        probe = (probe * probe) % p;
        ++i;
        if (i == m) throw std::logic_error("mod_sqrt: residue check inconsistent");
      }
      Int b = c;
      for (Int j = 0; j < m - i - 1; ++j) b = (b * b) % p;
      m = i;
      c = (b * b) % p;
      t = (t * c) % p;
      root = (root * b) % p;
    }
  }
  Int other = p - root;
  return root <= other ? root : other;
}

Int solve_golden_congruence(const Int& p) {
  if (!is_prime(p)) throw std::domain_error("solve_golden_congruence: p must be prime");
  const Int res = p % 5;
  if (res != 1 && res != 4)
    throw std::domain_error("solve_golden_congruence: requires p == +-1 (mod 5)");
  auto root5 = mod_sqrt(Int(5), p);
  if (!root5) throw std::logic_error("solve_golden_congruence: 5 must be a residue mod p");
  const Int inv2 = (p + 1) / 2;  // p is odd
  Int v = ((*root5 - 1) * inv2) % p;
  if (v < 0) v += p;
  return v;
}

SquarefreeSplit squarefree_decompose(const Int& u) {
  if (u < 1) throw std::domain_error("squarefree_decompose: u must be >= 1");
  Int a = 1, b = 1;
  Int rest = u;
  for (Int d = 2; d * d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    unsigned exp = 0;
    while (rest % d == 0) {
      rest /= d;
      ++exp;
    }
    for (unsigned i = 0; i + 1 < exp; i += 2) b *= d;
    if (exp % 2 == 1) a *= d;
  }
  // rest has no prime factor <= cbrt(rest): it is 1, prime, a prime square,
  // or a product of two distinct primes — squarefree unless a perfect square.
  Int root;
  if (rest > 1 && is_perfect_square(rest, &root)) {
    b *= root;
  } else {
    a *= rest;
  }
  return SquarefreeSplit{a, b};
}

ExtGcd ext_gcd(const Int& m, const Int& n) {
  if (m < 1 || n < 1) throw std::domain_error("ext_gcd: operands must be >= 1");
  Int old_r = m, r = n;
  Int old_x = 1, x = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * x;
    old_x = x;
    x = tmp;
  }
  Int g = old_r;
  Int cx = old_x;
  // Reduce x into (-n/(2g), n/(2g)]: x is unique modulo n/g.
  const Int modulus = n / g;
  cx %= modulus;
  if (cx < 0) cx += modulus;
  if (2 * cx > modulus) cx -= modulus;
  Int cy = (g - m * cx) / n;
  return ExtGcd{g, cx, cy};
}

}  // namespace eucstruct
