#pragma once

#include <json.hpp>

#include "eucstruct/bqf.hpp"
#include "eucstruct/ea.hpp"
#include "eucstruct/int_types.hpp"
#include "eucstruct/inversion.hpp"
#include "eucstruct/structure.hpp"

// JSON wire formats. All arbitrary-precision values travel as decimal strings
// so they survive the double-precision limits of JSON numbers; small
// structural fields (indices, parities, booleans) stay native.
namespace eucstruct {

using json = nlohmann::json;

// {"u": dec-str, "v": dec-str, "delta": 0|1|null, "modified": bool,
//  "quotients": [dec-str...], "remainders": [dec-str...]}
json trace_to_json(const EaTrace& trace);

// Parses the schema above, checks field types, and re-validates every trace
// invariant (throws std::domain_error on malformed input).
EaTrace trace_from_json(const json& j);

json equation_to_json(const EaEquation& eq);
json predicted_trace_to_json(const PredictedTrace& predicted);

json inversion_result_to_json(const Int& m, const Int& n, const InversionResult& result);
json bqf_run_to_json(const BqfRun& run);
json classification_to_json(const SquareClassification& reading);

// Helpers shared by the CLI and the sweep reporters.
json int_list_to_json(const std::vector<Int>& values);
std::vector<Int> int_list_from_json(const json& j, const char* field);

}  // namespace eucstruct
