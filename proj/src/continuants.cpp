#include "eucstruct/continuants.hpp"

#include <stdexcept>
#include <utility>

namespace eucstruct {

ContinuantTable::ContinuantTable(std::vector<Int> quotients) : quotients_(std::move(quotients)) {
  const std::size_t s = quotients_.size();
  rows_.resize(s + 2);
  // Fill row i (1-based) right-to-left in j so that [q_{i+1}..q_j] and
  // [q_{i+2}..q_j] are available; iterate i from the bottom up.
  for (std::size_t i = s + 2; i >= 1; --i) {
    auto& row = rows_[i - 1];
    row.resize(s + 3 - i);            // j = i-2 .. s
    row[0] = 0;                       // [q_i..q_{i-2}]
    if (row.size() > 1) row[1] = 1;   // [q_i..q_{i-1}]
    for (std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i); j <= static_cast<std::ptrdiff_t>(s); ++j) {
      const Int& tail1 = rows_[i].at(static_cast<std::size_t>(j - static_cast<std::ptrdiff_t>(i) + 1));
      const Int& tail2 = rows_[i + 1].at(static_cast<std::size_t>(j - static_cast<std::ptrdiff_t>(i)));
      row[static_cast<std::size_t>(j - static_cast<std::ptrdiff_t>(i) + 2)] =
          quotients_[i - 1] * tail1 + tail2;
    }
  }
}

const Int& ContinuantTable::at(std::size_t i, std::ptrdiff_t j) const {
  const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(quotients_.size());
  if (i < 1 || static_cast<std::ptrdiff_t>(i) > j + 2 || j > s)
    throw std::out_of_range("ContinuantTable::at: need 1 <= i <= j+2 <= size()+2");
  return rows_[i - 1][static_cast<std::size_t>(j - (static_cast<std::ptrdiff_t>(i) - 2))];
}

ContinuantTable continuants(std::vector<Int> quotients) {
  for (const Int& q : quotients)
    if (q < 1) throw std::domain_error("continuants: quotients must be positive");
  return ContinuantTable(std::move(quotients));
}

ContinuantTable continuants_unchecked(std::vector<Int> quotients) {
  return ContinuantTable(std::move(quotients));
}

BezoutSequence bezout_of_quotients(const std::vector<Int>& quotients) {
  BezoutSequence seq;
  seq.beta.reserve(quotients.size() + 2);
  seq.beta.push_back(0);
  seq.beta.push_back(1);
  for (const Int& q : quotients) {
    const std::size_t k = seq.beta.size();
    seq.beta.push_back(q * seq.beta[k - 1] + seq.beta[k - 2]);
  }
  return seq;
}

BezoutSequence bezout_coefficients(const EaTrace& trace) {
  return bezout_of_quotients(trace.quotients);
}

}  // namespace eucstruct
