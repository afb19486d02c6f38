#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/integer.hpp>

namespace eucstruct {

// All arithmetic in this library is arbitrary-precision; operand sizes are
// never assumed to fit a machine word.
using Int = boost::multiprecision::cpp_int;

inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  if (root) *root = r;
  return r * r == n;
}

inline Int powmod(const Int& base, const Int& exp, const Int& mod) {
  return boost::multiprecision::powm(base, exp, mod);
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline unsigned bit_length(const Int& n) {
  if (n == 0) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(n)) + 1u;
}

// Parses a nonnegative decimal integer; rejects signs, whitespace, and empty
// input so CLI/JSON operands are unambiguous.
inline Int parse_natural(const std::string& text) {
  if (text.empty()) throw std::domain_error("expected a decimal integer, got empty string");
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw std::domain_error("expected a nonnegative decimal integer, got '" + text + "'");
  }
  return Int(text);
}

inline std::string to_string(const Int& n) { return n.str(); }

// Uniform random integer with exactly `bits` bits (top bit set).
inline Int random_bits(std::mt19937_64& rng, unsigned bits) {
  if (bits == 0) return 0;
  Int n = 0;
  for (unsigned produced = 0; produced < bits; produced += 64) {
    n <<= 64;
    n |= Int(rng());
  }
  n &= (Int(1) << bits) - 1;
  n |= Int(1) << (bits - 1);
  return n;
}

// Uniform random integer in [0, bound) by rejection sampling.
inline Int random_below(std::mt19937_64& rng, const Int& bound) {
  if (bound <= 0) throw std::domain_error("random_below: bound must be positive");
  unsigned bits = bit_length(bound);
  for (;;) {
    Int n = 0;
    for (unsigned produced = 0; produced < bits; produced += 64) {
      n <<= 64;
      n |= Int(rng());
    }
    n &= (Int(1) << bits) - 1;
    if (n < bound) return n;
  }
}

}  // namespace eucstruct
