#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <eucstruct/continuants.hpp>
#include <eucstruct/ea.hpp>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"

using eucstruct::BezoutSequence;
using eucstruct::ContinuantTable;
using eucstruct::Int;

namespace {
std::vector<Int> V(std::initializer_list<long long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

// Every sequence of the given length with entries in [1, max_entry].
void for_each_sequence(std::size_t length, long long max_entry,
                       const std::function<void(const std::vector<Int>&)>& fn) {
  std::vector<long long> digits(length, 1);
  std::vector<Int> seq(length, 1);
  while (true) {
    for (std::size_t k = 0; k < length; ++k) seq[k] = digits[k];
    fn(seq);
    std::size_t pos = 0;
    while (pos < length && digits[pos] == max_entry) digits[pos++] = 1;
    if (pos == length) break;
    ++digits[pos];
  }
}
}  // namespace

TEST_CASE("bracket values of small sequences") {
  const ContinuantTable t = eucstruct::continuants(V({1, 1, 2}));
  CHECK(t.at(1, 3) == 5);
  CHECK(t.at(2, 3) == 3);
  CHECK(t.at(3, 3) == 2);
  CHECK(t.at(1, 1) == 1);
  CHECK(t.full() == 5);

  const ContinuantTable g = eucstruct::continuants(V({3, 1, 2}));
  CHECK(g.at(1, 3) == 11);
  CHECK(g.at(2, 3) == 3);

  // Base cases: empty bracket 1, underflow bracket 0.
  CHECK(t.at(2, 1) == 1);
  CHECK(t.at(3, 1) == 0);
  CHECK(t.at(1, 0) == 1);
  CHECK(t.at(1, -1) == 0);
}

TEST_CASE("the empty sequence still has its base brackets") {
  const ContinuantTable t = eucstruct::continuants({});
  CHECK(t.at(1, 0) == 1);
  CHECK(t.at(1, -1) == 0);
  CHECK(t.full() == 1);
}

TEST_CASE("out-of-range bracket indices throw") {
  const ContinuantTable t = eucstruct::continuants(V({1, 1, 2}));
  CHECK_THROWS_AS((void)t.at(1, 4), std::out_of_range);
  CHECK_THROWS_AS((void)t.at(0, 2), std::out_of_range);
  CHECK_THROWS_AS((void)t.at(4, 1), std::out_of_range);
  CHECK_THROWS_AS((void)t.at(3, 0), std::out_of_range);
}

TEST_CASE("quotients must be positive unless the unchecked constructor is used") {
  CHECK_THROWS_AS(eucstruct::continuants(V({2, 0, 1})), std::domain_error);
  const ContinuantTable t = eucstruct::continuants_unchecked(V({2, 0, 1}));
  CHECK(t.at(1, 3) == 3);  // 2*(0*1+1)... checked below against the oracle
  CHECK(t.at(1, 3) == oracles::continuant_by_definition(V({2, 0, 1}), 0, 3));
}

TEST_CASE("table values, symmetry and both recurrences vs direct evaluation") {
  for (std::size_t length = 0; length <= 6; ++length) {
    for_each_sequence(length, 3, [&](const std::vector<Int>& seq) {
      const ContinuantTable table = eucstruct::continuants(seq);
      const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(length);
      std::vector<Int> reversed(seq.rbegin(), seq.rend());
      const ContinuantTable mirror = eucstruct::continuants(reversed);
      for (std::size_t i = 1; static_cast<std::ptrdiff_t>(i) <= s + 1; ++i) {
        for (std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) - 2; j <= s; ++j) {
          const Int direct = (j < static_cast<std::ptrdiff_t>(i))
                                 ? Int(j == static_cast<std::ptrdiff_t>(i) - 1 ? 1 : 0)
                                 : oracles::continuant_by_definition(
                                       seq, i - 1, static_cast<std::size_t>(j) - i + 1);
          REQUIRE(table.at(i, j) == direct);
          // Symmetry: [q_i..q_j] of seq equals [q_{s+1-j}..q_{s+1-i}] of the
          // reversed sequence.
          if (j >= static_cast<std::ptrdiff_t>(i)) {
            REQUIRE(table.at(i, j) ==
                    mirror.at(static_cast<std::size_t>(s + 1 - j),
                              s + 1 - static_cast<std::ptrdiff_t>(i)));
            // Mirrored recurrence: strip the right edge instead of the left.
            REQUIRE(table.at(i, j) == seq[static_cast<std::size_t>(j) - 1] * table.at(i, j - 1) +
                                          table.at(i, j - 2));
          }
        }
      }
    });
  }
}

TEST_CASE("back-substitution coefficients of known runs") {
  const BezoutSequence b = eucstruct::bezout_coefficients(eucstruct::ea_trace(5, 3));
  // q = [1, 1, 2]: beta = 0, 1, 1, 2, 5
  CHECK(b.beta == V({0, 1, 1, 2, 5}));
  CHECK(b.at(-1) == 0);
  CHECK(b.at(0) == 1);
  CHECK(b.at(3) == 5);
  CHECK(b.steps() == 3);

  const BezoutSequence unit = eucstruct::bezout_coefficients(eucstruct::ea_trace(7, 1));
  CHECK(unit.beta == V({0, 1, 7}));

  const BezoutSequence t = eucstruct::bezout_coefficients(eucstruct::ea_trace(3, 2));
  CHECK(t.beta == V({0, 1, 1, 3}));
}

TEST_CASE("coefficients agree between the trace and quotient-list entry points") {
  const auto trace = eucstruct::ea_trace(144, 61);
  const BezoutSequence a = eucstruct::bezout_coefficients(trace);
  const BezoutSequence b = eucstruct::bezout_of_quotients(trace.quotients);
  CHECK(a.beta == b.beta);
}

TEST_CASE("beta_i equals the leading bracket of the first i quotients") {
  const auto trace = eucstruct::ea_trace(11, 3);
  const BezoutSequence beta = eucstruct::bezout_coefficients(trace);
  const ContinuantTable table = eucstruct::continuants(trace.quotients);
  for (std::ptrdiff_t i = 0; i <= static_cast<std::ptrdiff_t>(trace.steps()); ++i) {
    REQUIRE(beta.at(i) == table.at(1, i));
  }
}

TEST_CASE("run invariants tie remainders and coefficients together") {
  // For every pair (coprime or not) and both parities:
  //   v * beta_i == (-1)^i * r_i (mod u)  for i = -1..s, and
  //   u == beta_i * r_{i-1} + beta_{i-1} * r_i  for i = 0..s.
  for (long long u = 2; u <= 80; ++u) {
    for (long long v = 1; v < u; ++v) {
      for (int delta = 0; delta <= 1; ++delta) {
        const auto trace = eucstruct::ea_trace_parity(u, v, delta);
        const BezoutSequence beta = eucstruct::bezout_coefficients(trace);
        const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(trace.steps());
        for (std::ptrdiff_t i = -1; i <= s; ++i) {
          const Int sign = (i % 2 == 0) ? 1 : -1;
          Int lhs = (Int(v) * beta.at(i) - sign * trace.remainder(i)) % u;
          if (lhs < 0) lhs += u;
          REQUIRE(lhs == 0);
          if (i >= 0) {
            REQUIRE(Int(u) == beta.at(i) * trace.remainder(i - 1) +
                                  beta.at(i - 1) * trace.remainder(i));
          }
        }
      }
    }
  }
}

TEST_CASE("coprime runs: remainders are trailing brackets and u is the full bracket") {
  for (long long u = 2; u <= 60; ++u) {
    for (long long v = 1; v < u; ++v) {
      if (eucstruct::gcd(Int(u), Int(v)) != 1) continue;
      const auto trace = eucstruct::ea_trace(u, v);
      const ContinuantTable table = eucstruct::continuants(trace.quotients);
      const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(trace.steps());
      for (std::ptrdiff_t i = -1; i <= s; ++i) {
        REQUIRE(trace.remainder(i) ==
                table.at(static_cast<std::size_t>(i + 2), s));
      }
      const BezoutSequence beta = eucstruct::bezout_coefficients(trace);
      REQUIRE(beta.at(s) == u);
      if (s >= 2) REQUIRE(Int(u) > 2 * beta.at(s - 1));
    }
  }
}
