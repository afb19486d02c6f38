#pragma once

// Brute-force reference implementations used by the test suite.  Everything
// here is written in the most direct way possible (trial division, linear
// scans, textbook recursions) so the tests compare the library against
// independently derived values rather than against itself.

#include <eucstruct/int_types.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oracles {

using eucstruct::Int;

// Remainder/quotient chain of repeated division, straight from the
// definition: r_{i-2} = q_i * r_{i-1} + r_i until the remainder hits zero.
struct DivisionChain {
  std::vector<Int> quotients;
  std::vector<Int> remainders;  // starts with u, v; ends with 0
};

inline DivisionChain division_chain(const Int& u, const Int& v) {
  DivisionChain chain;
  chain.remainders.push_back(u);
  chain.remainders.push_back(v);
  Int high = u;
  Int low = v;
  while (low != 0) {
    chain.quotients.push_back(high / low);
    Int next = high % low;
    chain.remainders.push_back(next);
    high = low;
    low = next;
  }
  return chain;
}

// Linear-scan modular inverse; only usable for small moduli.
inline std::optional<Int> brute_inverse(const Int& m, const Int& n) {
  for (Int w = 1; w < n; ++w) {
    if (m * w % n == 1) return w;
  }
  return std::nullopt;
}

// Linear-scan square root mod p; returns the smaller root.
inline std::optional<Int> brute_sqrt(const Int& a, const Int& p) {
  for (Int r = 0; r <= p / 2; ++r) {
    if (r * r % p == a % p) return r;
  }
  return std::nullopt;
}

// Continuant by the defining left-edge expansion:
//   K() = 1, K(q_1) = q_1, K(q_1..q_k) = q_1 * K(q_2..q_k) + K(q_3..q_k).
inline Int continuant_by_definition(const std::vector<Int>& q, std::size_t first,
                                    std::size_t count) {
  if (count == 0) return 1;
  if (count == 1) return q.at(first);
  return q.at(first) * continuant_by_definition(q, first + 1, count - 1) +
         continuant_by_definition(q, first + 2, count - 2);
}

// Trial-division primality for small n.
inline bool brute_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Squarefree test by trial division over square divisors.
inline bool brute_is_squarefree(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

// All (b, c) with b > c > 0 and b^2 + 3bc + c^2 == p, by full scan.
inline std::vector<std::pair<Int, Int>> brute_form_representations(const Int& p) {
  std::vector<std::pair<Int, Int>> found;
  for (Int b = 1; b * b <= p; ++b) {
    for (Int c = 1; c < b; ++c) {
      if (b * b + 3 * b * c + c * c == p) found.emplace_back(b, c);
    }
  }
  return found;
}

}  // namespace oracles
