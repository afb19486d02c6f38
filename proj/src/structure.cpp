#include "eucstruct/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "eucstruct/continuants.hpp"
#include "eucstruct/errors.hpp"
#include "eucstruct/modular.hpp"

namespace eucstruct {

std::string Provenance::describe() const {
  switch (family) {
    case PredictionFamily::golden_shift:
      return std::string("golden-shift/base-steps-") + (middle_case == 1 ? "odd" : "even");
    case PredictionFamily::square_unit:
      return std::string("square-unit/sign") + (sign > 0 ? "+1" : "-1") + "/base-steps-" +
             (middle_case == 1 ? "odd" : "even");
    case PredictionFamily::square_general:
      return std::string("square-general/sign") + (sign > 0 ? "+1" : "-1") + "/middle-" +
             (middle_case == 1 ? "split" : "plain");
  }
  return "unknown";
}

std::vector<Int> PredictedTrace::quotient_list() const {
  std::vector<Int> out;
  out.reserve(equations.size());
  for (const auto& eq : equations) out.push_back(eq.quotient);
  return out;
}

std::vector<Int> PredictedTrace::remainder_chain() const {
  std::vector<Int> out;
  out.reserve(equations.size() + 2);
  if (equations.empty()) return out;
  out.push_back(equations.front().dividend);
  out.push_back(equations.front().divisor);
  for (const auto& eq : equations) out.push_back(eq.remainder);
  return out;
}

std::vector<EaEquation> equations_of(const EaTrace& trace) {
  std::vector<EaEquation> out;
  out.reserve(trace.steps());
  for (std::size_t i = 1; i <= trace.steps(); ++i)
    out.push_back(EaEquation{trace.remainder(static_cast<std::ptrdiff_t>(i) - 2), trace.quotient(i),
                             trace.remainder(static_cast<std::ptrdiff_t>(i) - 1),
                             trace.remainder(static_cast<std::ptrdiff_t>(i))});
  return out;
}

namespace {

// Appends dividend = q * divisor + remainder and sanity-checks the identity.
// remainder == divisor is tolerated because a parity-modified target run has
// exactly one such split step; remainder > divisor or a broken identity means
// the construction itself is wrong.
void push_equation(std::vector<EaEquation>& eqs, Int dividend, Int quotient, Int divisor,
                   Int remainder) {
  if (quotient < 1 || divisor < 1 || remainder < 0 || remainder > divisor ||
      dividend != quotient * divisor + remainder)
    throw verification_error("predicted trace: equation is not a valid division step");
  eqs.push_back(EaEquation{std::move(dividend), std::move(quotient), std::move(divisor),
                           std::move(remainder)});
}

}  // namespace

PredictedTrace predict_shifted_trace(const Int& u, const Int& v) {
  if (u < 2 || v <= 0 || v >= u)
    throw std::domain_error("predict_shifted_trace: requires 0 < v < u, u >= 2");
  if ((v * v + v - 1) % u != 0)
    throw std::domain_error("predict_shifted_trace: v^2 + v - 1 != 0 (mod u)");

  const EaTrace run = ea_trace_parity(u, v, 1);
  const std::size_t total = run.steps();  // 2s + 1
  if (total < 3 || total % 2 == 0)
    throw verification_error("predict_shifted_trace: odd-parity run shorter than 3 steps");
  const std::size_t s = (total - 1) / 2;
  const int delta1 = (s % 2 == 1) ? 1 : 0;
  const int delta0 = 1 - delta1;

  // The run must read q_1..q_{s-1}, q_s + delta1, 1, q_s + delta0, q_{s-1}..q_1.
  if (run.quotient(s + 1) != 1)
    throw verification_error("predict_shifted_trace: middle quotient != 1");
  const Int qs = run.quotient(s) - delta1;
  if (qs < 1 || run.quotient(s + 2) - delta0 != qs)
    throw verification_error("predict_shifted_trace: middle block mismatch");
  for (std::size_t i = 1; i + 1 <= s; ++i)
    if (run.quotient(i) != run.quotient(2 * s + 2 - i))
      throw verification_error("predict_shifted_trace: end symmetry violated");

  auto base_q = [&](std::size_t i) -> Int {  // q_1..q_s of the symmetric core
    return i == s ? qs : run.quotient(i);
  };
  auto r = [&](std::ptrdiff_t i) -> const Int& { return run.remainder(i); };
  auto t = [&](std::ptrdiff_t i) -> Int {  // r_i + (-1)^{i+1} r_{2s-i}
    const Int& mirror = r(static_cast<std::ptrdiff_t>(2 * s) - i);
    if (i % 2 == 0) return Int(r(i) - mirror);
    return Int(r(i) + mirror);
  };

  PredictedTrace predicted;
  predicted.u = u;
  predicted.v = v - 1;
  predicted.provenance = Provenance{PredictionFamily::golden_shift, 0, delta1};
  auto& eqs = predicted.equations;
  for (std::size_t i = 1; i + 1 <= s; ++i)
    push_equation(eqs, t(static_cast<std::ptrdiff_t>(i) - 2), base_q(i),
                  t(static_cast<std::ptrdiff_t>(i) - 1), t(static_cast<std::ptrdiff_t>(i)));
  push_equation(eqs, t(static_cast<std::ptrdiff_t>(s) - 2), qs + 3 * delta1,
                t(static_cast<std::ptrdiff_t>(s) - 1), r(static_cast<std::ptrdiff_t>(s) + 1));
  push_equation(eqs, t(static_cast<std::ptrdiff_t>(s) - 1), qs + 3 * delta0,
                r(static_cast<std::ptrdiff_t>(s) + 1), r(static_cast<std::ptrdiff_t>(s) + 2));
  for (std::size_t i = s + 2; i <= 2 * s; ++i)
    push_equation(eqs, r(static_cast<std::ptrdiff_t>(i) - 1), base_q(2 * s + 1 - i),
                  r(static_cast<std::ptrdiff_t>(i)), r(static_cast<std::ptrdiff_t>(i) + 1));
  return predicted;
}

PredictedTrace predict_square_trace(const Int& b, const Int& c, int sign) {
  if (sign != 1 && sign != -1) throw std::domain_error("predict_square_trace: sign must be +-1");
  if (!(b > c && c > 1)) throw std::domain_error("predict_square_trace: requires b > c > 1");
  if (gcd(b, c) != 1) throw std::domain_error("predict_square_trace: requires gcd(b, c) = 1");

  const EaTrace run = ea_trace(b, c);
  const BezoutSequence beta = bezout_coefficients(run);
  const std::size_t s = run.steps();  // >= 2: c > 1 and coprime rule out one step

  auto r = [&](std::ptrdiff_t i) -> const Int& { return run.remainder(i); };
  auto bb = [&](std::ptrdiff_t i) -> const Int& { return beta.at(i); };
  auto t = [&](std::ptrdiff_t i) -> Int {
    const int s_i = (i % 2 == 0) ? sign : -sign;  // sign * (-1)^i
    if (s_i > 0) return Int(b * r(i) + bb(i));
    return Int(b * r(i) - bb(i));
  };
  const int e_s = (s % 2 == 0) ? sign : -sign;  // sign * (-1)^s

  PredictedTrace predicted;
  predicted.u = b * b;
  predicted.v = b * c + sign;
  predicted.provenance = Provenance{PredictionFamily::square_unit, sign, static_cast<int>(s % 2)};
  auto& eqs = predicted.equations;
  for (std::size_t i = 1; i + 1 <= s; ++i)
    push_equation(eqs, t(static_cast<std::ptrdiff_t>(i) - 2), run.quotient(i),
                  t(static_cast<std::ptrdiff_t>(i) - 1), t(static_cast<std::ptrdiff_t>(i)));
  const std::ptrdiff_t sp = static_cast<std::ptrdiff_t>(s);
  push_equation(eqs, t(sp - 2), run.quotient(s) + e_s, t(sp - 1), bb(sp - 1));
  push_equation(eqs, t(sp - 1), run.quotient(s) - e_s, bb(sp - 1), bb(sp - 2));
  for (std::size_t i = s + 2; i <= 2 * s; ++i) {
    const std::ptrdiff_t top = static_cast<std::ptrdiff_t>(2 * s + 1 - i);
    push_equation(eqs, bb(top), run.quotient(static_cast<std::size_t>(top)), bb(top - 1), bb(top - 2));
  }
  return predicted;
}

PredictedTrace predict_general_trace(const Int& a, const Int& b, const Int& c, int k) {
  if (k != 0 && k != 1) throw std::domain_error("predict_general_trace: k must be 0 or 1");
  if (a < 2) throw std::domain_error("predict_general_trace: requires a >= 2");
  if (!(b > c && c > 1)) throw std::domain_error("predict_general_trace: requires b > c > 1");
  if (gcd(b, c) != 1) throw std::domain_error("predict_general_trace: requires gcd(b, c) = 1");

  const EaTrace run = ea_trace(b, c);
  const BezoutSequence beta = bezout_coefficients(run);
  const std::size_t s = run.steps();
  const Int ab = a * b;
  const int unit = (k == 0) ? 1 : -1;  // (-1)^k

  auto r = [&](std::ptrdiff_t i) -> const Int& { return run.remainder(i); };
  auto bb = [&](std::ptrdiff_t i) -> const Int& { return beta.at(i); };
  auto t = [&](std::ptrdiff_t i) -> Int {
    const int s_i = (i % 2 == 0) ? unit : -unit;  // (-1)^{i+k}
    if (s_i > 0) return Int(ab * r(i) + bb(i));
    return Int(ab * r(i) - bb(i));
  };
  const bool middle_split = ((s + static_cast<std::size_t>(k)) % 2) == 1;  // (-1)^{s+k} = -1

  PredictedTrace predicted;
  predicted.u = ab * b;
  predicted.v = ab * c + unit;
  predicted.provenance =
      Provenance{PredictionFamily::square_general, unit, middle_split ? 1 : 0};
  auto& eqs = predicted.equations;
  for (std::size_t i = 1; i + 1 <= s; ++i)
    push_equation(eqs, t(static_cast<std::ptrdiff_t>(i) - 2), run.quotient(i),
                  t(static_cast<std::ptrdiff_t>(i) - 1), t(static_cast<std::ptrdiff_t>(i)));
  const std::ptrdiff_t sp = static_cast<std::ptrdiff_t>(s);
  const Int t_last = t(sp - 1);
  if (middle_split) {
    push_equation(eqs, t(sp - 2), run.quotient(s) - 1, t_last, t_last - b);
    push_equation(eqs, t_last, 1, t_last - b, b);
    push_equation(eqs, t_last - b, a - 1, b, bb(sp - 1));
    push_equation(eqs, b, run.quotient(s), bb(sp - 1), bb(sp - 2));
  } else {
    push_equation(eqs, t(sp - 2), run.quotient(s), t_last, b);
    push_equation(eqs, t_last, a - 1, b, b - bb(sp - 1));
    push_equation(eqs, b, 1, b - bb(sp - 1), bb(sp - 1));
    push_equation(eqs, b - bb(sp - 1), run.quotient(s) - 1, bb(sp - 1), bb(sp - 2));
  }
  for (std::size_t i = s + 4; i <= 2 * s + 2; ++i) {
    const std::ptrdiff_t top = static_cast<std::ptrdiff_t>(2 * s + 3 - i);
    push_equation(eqs, bb(top), run.quotient(static_cast<std::size_t>(top)), bb(top - 1), bb(top - 2));
  }
  return predicted;
}

// ---- Template matching ----------------------------------------------------

namespace {

void try_symmetric_single_middle(const std::vector<Int>& q, int stride, PatternFamily family,
                                 std::vector<TemplateMatch>& out) {
  // Template: [base_1..base_{s-1}, base_s + stride_sign*stride, <1 for golden>,
  //            base_s, base_{s-1}..base_1]. Golden has the literal 1 between
  // the two middle entries; shifted/square-1 do not.
  const bool has_one = family == PatternFamily::golden;
  const std::size_t len = q.size();
  const std::size_t overhead = has_one ? 1 : 0;
  if (len < 2 + overhead || (len - overhead) % 2 != 0) return;
  const std::size_t s = (len - overhead) / 2;

  for (std::size_t i = 1; i + 1 <= s; ++i)
    if (q[i - 1] != q[len - i]) return;
  if (has_one && q[s] != 1) return;

  const Int& left = q[s - 1];                    // base_s + sign*stride
  const Int& base_s = q[s + overhead];           // base_s
  std::vector<int> signs;
  if (family == PatternFamily::square) {
    signs = {1, -1};  // the observed middle sign varies with the congruence sign
  } else {
    signs = {s % 2 == 1 ? 1 : -1};  // pinned to the base step parity
  }
  for (int sign : signs) {
    if (left != base_s + sign * stride) continue;
    TemplateMatch match;
    match.template_index = 1;
    match.middle_sign = sign;
    match.base_quotients.assign(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(s - 1));
    match.base_quotients.push_back(base_s);
    out.push_back(std::move(match));
  }
}

void try_square_with_x(const std::vector<Int>& q, int template_index,
                       std::vector<TemplateMatch>& out) {
  // Template 2: [base_1..base_s + 1, x, 1, base_s, base_{s-1}..base_1]
  // Template 3: [base_1..base_s - 1, 1, x, base_s, base_{s-1}..base_1]
  // s = 0 degenerates to [x, 1] / [1, x].
  const std::size_t len = q.size();
  if (len < 2 || len % 2 != 0) return;
  const std::size_t s = (len - 2) / 2;

  for (std::size_t i = 1; i + 1 <= s; ++i)
    if (q[i - 1] != q[len - i]) return;

  TemplateMatch match;
  match.template_index = template_index;
  if (s == 0) {
    const Int& first = q[0];
    const Int& second = q[1];
    if (template_index == 2) {
      if (second != 1 || first < 1) return;
      match.middle_x = first;
    } else {
      if (first != 1 || second < 1) return;
      match.middle_x = second;
    }
    out.push_back(std::move(match));
    return;
  }

  const Int& base_s = q[s + 2];
  if (template_index == 2) {
    if (q[s - 1] != base_s + 1 || q[s + 1] != 1 || q[s] < 1) return;
    match.middle_x = q[s];
  } else {
    if (q[s - 1] != base_s - 1 || q[s] != 1 || q[s + 1] < 1) return;
    match.middle_x = q[s + 1];
  }
  match.base_quotients.assign(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(s - 1));
  match.base_quotients.push_back(base_s);
  out.push_back(std::move(match));
}

}  // namespace

std::vector<Int> TemplateMatch::reassemble(PatternFamily family) const {
  std::vector<Int> q;
  const std::size_t s = base_quotients.size();
  if (template_index == 1) {
    if (s == 0) throw std::logic_error("reassemble: template 1 requires a nonempty base");
    const int stride = family == PatternFamily::golden ? 1 : (family == PatternFamily::shifted ? 3 : 2);
    for (std::size_t i = 0; i + 1 < s; ++i) q.push_back(base_quotients[i]);
    q.push_back(base_quotients[s - 1] + middle_sign * stride);
    if (family == PatternFamily::golden) q.push_back(1);
    q.push_back(base_quotients[s - 1]);
    for (std::size_t i = s - 1; i >= 1; --i) q.push_back(base_quotients[i - 1]);
    return q;
  }
  for (std::size_t i = 0; i + 1 < s; ++i) q.push_back(base_quotients[i]);
  if (template_index == 2) {
    if (s > 0) q.push_back(base_quotients[s - 1] + 1);
    q.push_back(*middle_x);
    q.push_back(1);
  } else {
    if (s > 0) q.push_back(base_quotients[s - 1] - 1);
    q.push_back(1);
    q.push_back(*middle_x);
  }
  if (s > 0) q.push_back(base_quotients[s - 1]);
  for (std::size_t i = s; i >= 2; --i) q.push_back(base_quotients[i - 2]);
  return q;
}

PatternReport match_end_symmetric(const std::vector<Int>& quotients, PatternFamily family) {
  for (const Int& q : quotients)
    if (q < 1) throw std::domain_error("match_end_symmetric: quotients must be positive");
  PatternReport report;
  report.family = family;
  switch (family) {
    case PatternFamily::golden:
      try_symmetric_single_middle(quotients, 1, family, report.all_matches);
      break;
    case PatternFamily::shifted:
      try_symmetric_single_middle(quotients, 3, family, report.all_matches);
      break;
    case PatternFamily::square:
      try_symmetric_single_middle(quotients, 2, family, report.all_matches);
      try_square_with_x(quotients, 2, report.all_matches);
      try_square_with_x(quotients, 3, report.all_matches);
      break;
  }
  return report;
}

std::vector<SquareClassification> classify_pattern(const Int& u, const Int& v) {
  if (u < 2 || v <= 0 || v >= u)
    throw std::domain_error("classify_pattern: requires 0 < v < u, u >= 2");
  const bool plus_holds = ((v + 1) * (v + 1)) % u == 0;
  const bool minus_holds = ((v - 1) * (v - 1)) % u == 0;
  if (!plus_holds && !minus_holds)
    throw std::domain_error("classify_pattern: neither (v+1)^2 nor (v-1)^2 is 0 mod u");

  const SquarefreeSplit split = squarefree_decompose(u);
  const EaTrace run = ea_trace_parity(u, v, 0);
  const PatternReport report = match_end_symmetric(run.quotients, PatternFamily::square);

  std::vector<SquareClassification> readings;
  for (int congruence_sign : {+1, -1}) {
    if (congruence_sign > 0 ? !plus_holds : !minus_holds) continue;
    SquareClassification reading;
    reading.congruence_sign = congruence_sign;
    reading.a = split.a;
    reading.b = split.b;
    // v + congruence_sign = a*b*c exactly (the congruence forces ab | v+-1).
    const Int shifted = v + congruence_sign;
    if (shifted % (split.a * split.b) != 0)
      throw verification_error("classify_pattern: v +- 1 is not divisible by a*b");
    reading.c = shifted / (split.a * split.b);
    reading.gcd_bc = gcd(reading.b, reading.c);  // gcd(b, 0) = b covers v = 1
    reading.report = report;

    const bool plain_case = reading.gcd_bc == 1 && reading.a == 1;
    if (!plain_case) reading.expected_x = reading.gcd_bc * reading.gcd_bc * reading.a - 1;

    bool found = false;
    for (std::size_t i = 0; i < report.all_matches.size(); ++i) {
      const TemplateMatch& m = report.all_matches[i];
      if (plain_case ? m.template_index == 1
                     : (m.template_index != 1 && m.middle_x == reading.expected_x)) {
        reading.verified_match = i;
        found = true;
        break;
      }
    }
    if (!found)
      throw verification_error("classify_pattern: no template fit matches the derived parameters (u=" +
                               u.str() + ", v=" + v.str() + ")");
    readings.push_back(std::move(reading));
  }
  return readings;
}

}  // namespace eucstruct
