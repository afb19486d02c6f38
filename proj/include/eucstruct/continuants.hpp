#pragma once

#include <cstddef>
#include <vector>

#include "eucstruct/ea.hpp"
#include "eucstruct/int_types.hpp"

namespace eucstruct {

// Table of bracket values over a quotient sequence q_1..q_s:
//
//   [q_i..q_j] = q_i * [q_{i+1}..q_j] + [q_{i+2}..q_j],
//   [empty] = 1 (j = i-1), [underflow] = 0 (j = i-2),
//
// stored for every (i, j) with 1 <= i <= j+2 <= s+2. The bracket is symmetric
// ([q_i..q_j] = [q_j..q_i]) and also satisfies the mirrored recurrence
// [q_i..q_j] = q_j * [q_i..q_{j-1}] + [q_i..q_{j-2}].
class ContinuantTable {
 public:
  explicit ContinuantTable(std::vector<Int> quotients);

  const std::vector<Int>& quotients() const { return quotients_; }
  std::size_t size() const { return quotients_.size(); }

  // [q_i..q_j]; valid for 1 <= i <= j+2 <= size()+2.
  const Int& at(std::size_t i, std::ptrdiff_t j) const;

  // Whole-sequence value [q_1..q_s].
  const Int& full() const { return at(1, static_cast<std::ptrdiff_t>(size())); }

 private:
  std::vector<Int> quotients_;
  std::vector<std::vector<Int>> rows_;  // rows_[i-1][j - (i-2)] = [q_i..q_j]
};

// Builds the table; every quotient must be >= 1.
ContinuantTable continuants(std::vector<Int> quotients);

// Same, but permits zero/negative entries (the recurrences still apply).
// For analysis only; the public constructor's positivity guarantee is what
// ties table values to remainders of an actual run.
ContinuantTable continuants_unchecked(std::vector<Int> quotients);

// Back-substitution coefficients beta_i = [q_1..q_i] of a run: the values
// with v * beta_i == (-1)^i * r_i (mod u). Stored for i = -1..s, computed by
// beta_i = q_i * beta_{i-1} + beta_{i-2} with beta_{-1} = 0, beta_0 = 1.
struct BezoutSequence {
  std::vector<Int> beta;  // beta[k] = beta_{k-1}

  // beta_i for i in [-1, steps].
  const Int& at(std::ptrdiff_t i) const { return beta.at(static_cast<std::size_t>(i + 1)); }
  std::size_t steps() const { return beta.size() - 2; }
};

BezoutSequence bezout_coefficients(const EaTrace& trace);
BezoutSequence bezout_of_quotients(const std::vector<Int>& quotients);

}  // namespace eucstruct
