#include "eucstruct/json_io.hpp"

#include <stdexcept>
#include <string>

namespace eucstruct {

namespace {

std::string dec(const Int& value) { return value.str(); }

Int int_from_json(const json& j, const char* field) {
  if (!j.is_string())
    throw std::domain_error(std::string("trace JSON: field '") + field +
                            "' must be a decimal string");
  const std::string& text = j.get_ref<const std::string&>();
  if (text.empty()) throw std::domain_error(std::string("trace JSON: empty value in '") + field + "'");
  std::size_t start = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    start = 1;
    if (text.size() == 1)
      throw std::domain_error(std::string("trace JSON: bad integer in '") + field + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw std::domain_error(std::string("trace JSON: non-decimal digit in '") + field + "'");
  Int value(text.substr(start));
  if (negative) value = -value;
  return value;
}

const json& require_field(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end())
    throw std::domain_error(std::string("trace JSON: missing field '") + field + "'");
  return *it;
}

}  // namespace

json int_list_to_json(const std::vector<Int>& values) {
  json arr = json::array();
  for (const Int& value : values) arr.push_back(dec(value));
  return arr;
}

std::vector<Int> int_list_from_json(const json& j, const char* field) {
  if (!j.is_array())
    throw std::domain_error(std::string("trace JSON: field '") + field + "' must be an array");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(int_from_json(item, field));
  return out;
}

json trace_to_json(const EaTrace& trace) {
  json j;
  j["u"] = dec(trace.u);
  j["v"] = dec(trace.v);
  if (trace.delta.has_value())
    j["delta"] = *trace.delta;
  else
    j["delta"] = nullptr;
  j["modified"] = trace.modified;
  j["quotients"] = int_list_to_json(trace.quotients);
  j["remainders"] = int_list_to_json(trace.remainders);
  return j;
}

EaTrace trace_from_json(const json& j) {
  if (!j.is_object()) throw std::domain_error("trace JSON: top level must be an object");
  EaTrace trace;
  trace.u = int_from_json(require_field(j, "u"), "u");
  trace.v = int_from_json(require_field(j, "v"), "v");
  const json& delta = require_field(j, "delta");
  if (delta.is_null()) {
    trace.delta.reset();
  } else if (delta.is_number_integer() &&
             (delta.get<int>() == 0 || delta.get<int>() == 1)) {
    trace.delta = delta.get<int>();
  } else {
    throw std::domain_error("trace JSON: 'delta' must be 0, 1, or null");
  }
  const json& modified = require_field(j, "modified");
  if (!modified.is_boolean()) throw std::domain_error("trace JSON: 'modified' must be a boolean");
  trace.modified = modified.get<bool>();
  trace.quotients = int_list_from_json(require_field(j, "quotients"), "quotients");
  trace.remainders = int_list_from_json(require_field(j, "remainders"), "remainders");
  validate_trace(trace);
  return trace;
}

json equation_to_json(const EaEquation& eq) {
  json j;
  j["dividend"] = dec(eq.dividend);
  j["quotient"] = dec(eq.quotient);
  j["divisor"] = dec(eq.divisor);
  j["remainder"] = dec(eq.remainder);
  return j;
}

json predicted_trace_to_json(const PredictedTrace& predicted) {
  json j;
  j["u"] = dec(predicted.u);
  j["v"] = dec(predicted.v);
  j["provenance"] = predicted.provenance.describe();
  json eqs = json::array();
  for (const auto& eq : predicted.equations) eqs.push_back(equation_to_json(eq));
  j["equations"] = eqs;
  j["quotients"] = int_list_to_json(predicted.quotient_list());
  j["remainders"] = int_list_to_json(predicted.remainder_chain());
  return j;
}

json inversion_result_to_json(const Int& m, const Int& n, const InversionResult& result) {
  json j;
  j["m"] = dec(m);
  j["n"] = dec(n);
  j["inverse"] = dec(result.inverse);
  j["stop_index"] = result.stop_index;
  j["trace"] = trace_to_json(result.trace);
  return j;
}

json bqf_run_to_json(const BqfRun& run) {
  json j;
  j["p"] = dec(run.rep.p);
  j["b"] = dec(run.rep.b);
  j["c"] = dec(run.rep.c);
  j["v"] = dec(run.v);
  j["stop_index"] = run.stop_index;
  return j;
}

json classification_to_json(const SquareClassification& reading) {
  json j;
  j["congruence_sign"] = reading.congruence_sign;
  j["a"] = dec(reading.a);
  j["b"] = dec(reading.b);
  j["c"] = dec(reading.c);
  j["gcd_bc"] = dec(reading.gcd_bc);
  if (reading.expected_x.has_value())
    j["expected_x"] = dec(*reading.expected_x);
  else
    j["expected_x"] = nullptr;
  const TemplateMatch& match = reading.report.all_matches.at(reading.verified_match);
  j["template"] = match.template_index;
  j["base_quotients"] = int_list_to_json(match.base_quotients);
  if (match.middle_x.has_value())
    j["middle_x"] = dec(*match.middle_x);
  else
    j["middle_x"] = nullptr;
  if (match.template_index == 1) j["middle_sign"] = match.middle_sign;
  json all = json::array();
  for (const TemplateMatch& m : reading.report.all_matches) {
    json entry;
    entry["template"] = m.template_index;
    entry["base_quotients"] = int_list_to_json(m.base_quotients);
    if (m.middle_x.has_value())
      entry["middle_x"] = dec(*m.middle_x);
    else
      entry["middle_x"] = nullptr;
    if (m.template_index == 1) entry["middle_sign"] = m.middle_sign;
    all.push_back(entry);
  }
  j["all_matches"] = all;
  return j;
}

}  // namespace eucstruct
