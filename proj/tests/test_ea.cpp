#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <eucstruct/ea.hpp>
#include <eucstruct/errors.hpp>

#include <stdexcept>
#include <vector>

#include "oracles.hpp"

using eucstruct::EaTrace;
using eucstruct::Int;
using eucstruct::Threshold;

namespace {
std::vector<Int> V(std::initializer_list<long long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}
}  // namespace

TEST_CASE("plain run on (11, 3)") {
  const EaTrace t = eucstruct::ea_trace(11, 3);
  CHECK(t.u == 11);
  CHECK(t.v == 3);
  CHECK(t.quotients == V({3, 1, 2}));
  CHECK(t.remainders == V({11, 3, 2, 1, 0}));
  CHECK(t.steps() == 3);
  CHECK_FALSE(t.modified);
  CHECK_FALSE(t.delta.has_value());
  CHECK(t.remainder(-1) == 11);
  CHECK(t.remainder(0) == 3);
  CHECK(t.remainder(3) == 0);
  CHECK(t.quotient(1) == 3);
  CHECK(t.quotient(3) == 2);
  CHECK_THROWS_AS((void)t.remainder(4), std::out_of_range);
  CHECK_THROWS_AS((void)t.quotient(0), std::out_of_range);
  eucstruct::validate_trace(t);
}

TEST_CASE("plain run on (144, 61)") {
  const EaTrace t = eucstruct::ea_trace(144, 61);
  CHECK(t.quotients == V({2, 2, 1, 3, 2, 2}));
  CHECK(t.remainders == V({144, 61, 22, 17, 5, 2, 1, 0}));
}

TEST_CASE("single-step and unit-divisor runs") {
  const EaTrace t = eucstruct::ea_trace(7, 1);
  CHECK(t.quotients == V({7}));
  CHECK(t.remainders == V({7, 1, 0}));

  const EaTrace exact = eucstruct::ea_trace(6, 2);
  CHECK(exact.quotients == V({3}));
  CHECK(exact.remainders == V({6, 2, 0}));
}

TEST_CASE("plain run matches the division-chain oracle for every pair") {
  for (long long u = 2; u <= 120; ++u) {
    for (long long v = 1; v < u; ++v) {
      const EaTrace t = eucstruct::ea_trace(u, v);
      const auto chain = oracles::division_chain(u, v);
      REQUIRE(t.quotients == chain.quotients);
      REQUIRE(t.remainders == chain.remainders);
      eucstruct::validate_trace(t);
    }
  }
}

TEST_CASE("plain run rejects out-of-domain inputs") {
  CHECK_THROWS_AS(eucstruct::ea_trace(5, 0), std::domain_error);
  CHECK_THROWS_AS(eucstruct::ea_trace(5, 5), std::domain_error);
  CHECK_THROWS_AS(eucstruct::ea_trace(3, 7), std::domain_error);
  CHECK_THROWS_AS(eucstruct::ea_trace(0, 0), std::domain_error);
}

TEST_CASE("parity-normalized runs") {
  SUBCASE("already the requested parity: unmodified") {
    const EaTrace t = eucstruct::ea_trace_parity(11, 3, 1);
    CHECK(t.quotients == V({3, 1, 2}));
    CHECK_FALSE(t.modified);
    CHECK(t.delta == 1);

    const EaTrace e = eucstruct::ea_trace_parity(11, 2, 0);
    CHECK(e.quotients == V({5, 2}));
    CHECK_FALSE(e.modified);
  }

  SUBCASE("opposite parity: final division splits in two") {
    const EaTrace t = eucstruct::ea_trace_parity(11, 3, 0);
    CHECK(t.quotients == V({3, 1, 1, 1}));
    CHECK(t.remainders == V({11, 3, 2, 1, 1, 0}));
    CHECK(t.modified);
    CHECK(t.delta == 0);
    eucstruct::validate_trace(t);

    const EaTrace f = eucstruct::ea_trace_parity(25, 16, 0);
    CHECK(f.quotients == V({1, 1, 1, 3, 1, 1}));
    CHECK(f.remainders == V({25, 16, 9, 7, 2, 1, 1, 0}));
    CHECK(f.modified);
  }

  SUBCASE("non-coprime pair: the duplicated tail is the gcd") {
    const EaTrace t = eucstruct::ea_trace_parity(6, 2, 0);
    CHECK(t.quotients == V({2, 1}));
    CHECK(t.remainders == V({6, 2, 2, 0}));
    CHECK(t.modified);
    eucstruct::validate_trace(t);
  }

  SUBCASE("delta outside {0,1} is rejected") {
    CHECK_THROWS_AS(eucstruct::ea_trace_parity(11, 3, 2), std::domain_error);
    CHECK_THROWS_AS(eucstruct::ea_trace_parity(11, 3, -1), std::domain_error);
  }
}

TEST_CASE("parity contract holds for every pair and both parities") {
  for (long long u = 2; u <= 60; ++u) {
    for (long long v = 1; v < u; ++v) {
      const EaTrace plain = eucstruct::ea_trace(u, v);
      for (int delta = 0; delta <= 1; ++delta) {
        const EaTrace t = eucstruct::ea_trace_parity(u, v, delta);
        REQUIRE(t.steps() % 2 == static_cast<std::size_t>(delta));
        REQUIRE(t.modified == (plain.steps() % 2 != static_cast<std::size_t>(delta)));
        eucstruct::validate_trace(t);
        // A modified run only reshuffles the tail: the remainder sequence is
        // the plain one with the gcd entry doubled.
        if (t.modified) {
          REQUIRE(t.steps() == plain.steps() + 1);
          for (std::size_t i = 0; i + 2 < plain.remainders.size(); ++i)
            REQUIRE(t.remainders.at(i) == plain.remainders.at(i));
          REQUIRE(t.remainders.at(t.remainders.size() - 2) ==
                  plain.remainders.at(plain.remainders.size() - 2));
          REQUIRE(t.remainders.at(t.remainders.size() - 3) ==
                  plain.remainders.at(plain.remainders.size() - 2));
        }
      }
    }
  }
}

TEST_CASE("general runs accept v >= u with a leading zero quotient") {
  const EaTrace t = eucstruct::ea_trace_general(9, 16);
  CHECK(t.quotients == V({0, 1, 1, 3, 2}));
  CHECK(t.remainders == V({9, 16, 9, 7, 2, 1, 0}));
  eucstruct::validate_trace(t);

  // With u > v the general run is the plain run.
  const EaTrace same = eucstruct::ea_trace_general(16, 9);
  CHECK(same.quotients == eucstruct::ea_trace(16, 9).quotients);
  CHECK(same.remainders == eucstruct::ea_trace(16, 9).remainders);

  CHECK_THROWS_AS(eucstruct::ea_trace_general(0, 5), std::domain_error);
  CHECK_THROWS_AS(eucstruct::ea_trace_general(5, 0), std::domain_error);
}

TEST_CASE("trace validation rejects tampered traces") {
  EaTrace t = eucstruct::ea_trace(144, 61);

  SUBCASE("corrupted remainder") {
    t.remainders[3] = 18;
    CHECK_THROWS_AS(eucstruct::validate_trace(t), eucstruct::verification_error);
  }
  SUBCASE("corrupted quotient") {
    t.quotients[0] = 3;
    CHECK_THROWS_AS(eucstruct::validate_trace(t), eucstruct::verification_error);
  }
  SUBCASE("endpoint mismatch") {
    t.u = 145;
    CHECK_THROWS_AS(eucstruct::validate_trace(t), eucstruct::verification_error);
  }
  SUBCASE("parity flag contradicts the step count") {
    t.delta = 1;  // 6 steps is even
    CHECK_THROWS_AS(eucstruct::validate_trace(t), eucstruct::verification_error);
  }
  SUBCASE("modified flag without the duplicated tail") {
    t.modified = true;
    CHECK_THROWS_AS(eucstruct::validate_trace(t), eucstruct::verification_error);
  }
  SUBCASE("zero quotient after the first step") {
    t.quotients[2] = 0;
    CHECK_THROWS_AS(eucstruct::validate_trace(t), eucstruct::verification_error);
  }
}

TEST_CASE("thresholds compare exactly") {
  const Threshold twelve = Threshold::below(12);
  CHECK(twelve.admits(11));
  CHECK(twelve.admits(0));
  CHECK_FALSE(twelve.admits(12));
  CHECK_FALSE(twelve.admits(13));

  // 5 r^2 < p with no rounding anywhere.
  const Threshold fifth = Threshold::below_sqrt_fifth(11);
  CHECK(fifth.admits(1));
  CHECK_FALSE(fifth.admits(2));  // 5*4 = 20 >= 11
  CHECK(Threshold::below_sqrt_fifth(21).admits(2));       // 20 < 21
  CHECK_FALSE(Threshold::below_sqrt_fifth(45).admits(3)); // 45 >= 45, boundary
  CHECK(Threshold::below_sqrt_fifth(46).admits(3));
}

TEST_CASE("first admissible remainder") {
  using eucstruct::first_remainder_below;

  const EaTrace t = eucstruct::ea_trace(144, 61);
  const auto stop = first_remainder_below(t, Threshold::below(12));
  CHECK(stop.index == 3);
  CHECK(stop.value == 5);

  const auto tail = first_remainder_below(t, Threshold::below(3));
  CHECK(tail.index == 4);
  CHECK(tail.value == 2);

  const auto golden = first_remainder_below(eucstruct::ea_trace(11, 3),
                                            Threshold::below_sqrt_fifth(11));
  CHECK(golden.index == 2);
  CHECK(golden.value == 1);

  // r_0 is never eligible: on (7, 1) the scan starts at r_1 = 0.
  const EaTrace unit = eucstruct::ea_trace(7, 1);
  const auto zero = first_remainder_below(unit, Threshold::below(7));
  CHECK(zero.index == 1);
  CHECK(zero.value == 0);
  // Excluding zero leaves nothing at index >= 1 on that trace.
  CHECK_THROWS_AS(first_remainder_below(unit, Threshold::below(7), 1), std::logic_error);
}
