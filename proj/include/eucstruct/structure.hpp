#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eucstruct/ea.hpp"
#include "eucstruct/int_types.hpp"

namespace eucstruct {

// One division of a (predicted) run: dividend = quotient * divisor + remainder.
struct EaEquation {
  Int dividend;
  Int quotient;
  Int divisor;
  Int remainder;

  bool operator==(const EaEquation&) const = default;
};

// Which constructor produced a predicted run, with its case selectors.
enum class PredictionFamily {
  golden_shift,    // (u, v-1) run derived from the v^2 + v - 1 congruence
  square_unit,     // (b^2, bc +- 1) run derived from the (b, c) run
  square_general,  // (a b^2, abc +- 1) run derived from the (b, c) run
};

struct Provenance {
  PredictionFamily family;
  int sign = 0;       // golden_shift: unused; square_unit: sigma; square_general: (-1)^k
  int middle_case = 0;  // parity selector that chose the middle block
  std::string describe() const;
};

// A run predicted equation-by-equation from a shorter run, without executing
// any division. The equations chain: each divisor/remainder pair is the next
// equation's dividend/divisor.
struct PredictedTrace {
  Int u;
  Int v;
  std::vector<EaEquation> equations;
  Provenance provenance;

  std::vector<Int> quotient_list() const;
  std::vector<Int> remainder_chain() const;  // r_{-1}..r_s
};

// Converts an executed trace into its equation list for comparisons.
std::vector<EaEquation> equations_of(const EaTrace& trace);

// Predicts the odd-length run on (u, v) with v^2 + v - 1 == 0 (mod u) and the
// even-length run on (u, v - 1) it determines:
//   t_i = r_i + (-1)^{i+1} r_{2s-i}, middle quotients q_s + 3*delta1 and
//   q_s + 3*delta0. Returns the predicted (u, v-1) run.
// Domain errors when the congruence fails or 0 < v < u is violated; throws
// verification_error if the executed (u, v) run does not fit the expected
// end-symmetric shape (that would falsify the construction).
PredictedTrace predict_shifted_trace(const Int& u, const Int& v);

// Predicts the (b^2, bc + sign) run from the (b, c) run:
//   t_i = b*r_i + sign*(-1)^i*beta_i, middle quotients q_s +- 1, then the
//   mirrored beta ladder. Requires b > c > 1 coprime, sign in {+1, -1}.
PredictedTrace predict_square_trace(const Int& b, const Int& c, int sign);

// Predicts the (a*b^2, a*b*c + (-1)^k) run from the (b, c) run:
//   t_i = a*b*r_i + (-1)^{i+k}*beta_i with a four-equation middle block.
// Requires a >= 2, b > c > 1 coprime, k in {0, 1}.
PredictedTrace predict_general_trace(const Int& a, const Int& b, const Int& c, int k);

// ---- End-symmetric quotient-pattern templates ----------------------------

enum class PatternFamily { golden, shifted, square };

// One successful template reading of a quotient sequence.
//   golden : [base_1..base_{s-1}, base_s + sign, 1, base_s, base_{s-1}..base_1]
//   shifted: [base_1..base_{s-1}, base_s + 3*sign, base_s, base_{s-1}..base_1]
//   square 1: [base_1..base_{s-1}, base_s + 2*sign, base_s, base_{s-1}..base_1]
//   square 2: [base_1..base_s + 1, x, 1, base_s, .., base_1]   (base may be empty)
//   square 3: [base_1..base_s - 1, 1, x, base_s, .., base_1]   (base may be empty)
struct TemplateMatch {
  int template_index = 1;        // 1..3 (square); always 1 for golden/shifted
  std::vector<Int> base_quotients;
  std::optional<Int> middle_x;   // square templates 2/3 only
  int middle_sign = 0;           // golden/shifted/square-1: the sign used

  std::vector<Int> reassemble(PatternFamily family) const;
};

struct PatternReport {
  PatternFamily family;
  std::vector<TemplateMatch> all_matches;  // empty when nothing fits

  bool matched() const { return !all_matches.empty(); }
  const TemplateMatch& primary() const { return all_matches.front(); }
};

// Tries every admissible reading of `family`'s templates against the
// quotient sequence and reports all fits. The golden/shifted middle sign is
// pinned to the step parity; square template 1 accepts either sign (recorded
// in middle_sign).
PatternReport match_end_symmetric(const std::vector<Int>& quotients, PatternFamily family);

// ---- Classification of square-congruence inputs --------------------------

// One reading of (u, v): a congruence sign with its derived parameters and
// the template fit that verified against them.
struct SquareClassification {
  int congruence_sign;  // +1: (v+1)^2 == 0 (mod u); -1: (v-1)^2 == 0 (mod u)
  Int a, b, c;          // u = a*b^2 (a squarefree), v = a*b*c - congruence_sign
  Int gcd_bc;
  std::optional<Int> expected_x;  // gcd(b,c)^2*a - 1 unless gcd(b,c) = a = 1
  PatternReport report;
  std::size_t verified_match;     // index into report.all_matches
};

// Requires 0 < v < u and at least one of (v+1)^2, (v-1)^2 == 0 (mod u).
// Evaluates every congruence sign that holds (tiny u can satisfy both).
// For each reading, cross-checks the template fits:
//   - gcd(b,c) = a = 1  =>  some template-1 match exists;
//   - otherwise         =>  some template-2/3 match carries x = gcd(b,c)^2*a - 1.
// Throws verification_error when a reading has no qualifying match.
std::vector<SquareClassification> classify_pattern(const Int& u, const Int& v);

}  // namespace eucstruct
