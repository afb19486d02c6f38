// Python bindings. Integers cross the boundary losslessly: arbitrary-size
// python ints are converted to and from the C++ big-integer type through
// their decimal representation.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <eucstruct/bqf.hpp>
#include <eucstruct/continuants.hpp>
#include <eucstruct/ea.hpp>
#include <eucstruct/errors.hpp>
#include <eucstruct/inversion.hpp>
#include <eucstruct/json_io.hpp>
#include <eucstruct/modular.hpp>
#include <eucstruct/structure.hpp>

#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;

namespace pybind11 {
namespace detail {

template <>
struct type_caster<eucstruct::Int> {
 public:
  PYBIND11_TYPE_CASTER(eucstruct::Int, const_name("int"));

  bool load(handle src, bool) {
    PyObject* ptr = src.ptr();
    if (!PyLong_Check(ptr)) return false;
    PyObject* as_str = PyObject_Str(ptr);
    if (as_str == nullptr) {
      PyErr_Clear();
      return false;
    }
    const std::string text = py::cast<std::string>(py::reinterpret_steal<py::object>(as_str));
    try {
      value = eucstruct::Int(text);
    } catch (const std::exception&) {
      return false;
    }
    return true;
  }

  static handle cast(const eucstruct::Int& src, return_value_policy, handle) {
    return handle(PyLong_FromString(src.str().c_str(), nullptr, 10));
  }
};

}  // namespace detail
}  // namespace pybind11

PYBIND11_MODULE(eucstruct, m) {
  using eucstruct::EaEquation;
  using eucstruct::EaTrace;
  using eucstruct::Int;

  m.doc() =
      "Euclidean-algorithm structure toolkit: remainder-scan modular inverses, "
      "quadratic-form representations of primes, predicted division chains, and "
      "end-symmetric quotient-pattern classification.";

  py::register_exception<eucstruct::verification_error>(m, "VerificationError");

  // ---- traces -------------------------------------------------------------

  py::class_<EaTrace>(m, "EaTrace")
      .def_readonly("u", &EaTrace::u)
      .def_readonly("v", &EaTrace::v)
      .def_readonly("delta", &EaTrace::delta)
      .def_readonly("modified", &EaTrace::modified)
      .def_readonly("quotients", &EaTrace::quotients)
      .def_readonly("remainders", &EaTrace::remainders)
      .def("steps", &EaTrace::steps)
      .def("__repr__", [](const EaTrace& t) {
        return "EaTrace(u=" + t.u.str() + ", v=" + t.v.str() + ", steps=" +
               std::to_string(t.steps()) + ")";
      });

  m.def("ea_trace", &eucstruct::ea_trace, py::arg("u"), py::arg("v"),
        "Plain division chain on (u, v); requires u > v >= 1.");
  m.def("ea_trace_parity", &eucstruct::ea_trace_parity, py::arg("u"), py::arg("v"),
        py::arg("delta"), "Run whose step count has the requested parity.");
  m.def("ea_trace_general", &eucstruct::ea_trace_general, py::arg("u"), py::arg("v"),
        "Plain run that also accepts v >= u (leading quotient 0).");
  m.def("validate_trace", &eucstruct::validate_trace, py::arg("trace"),
        "Re-derives every structural invariant; raises VerificationError on a mismatch.");

  m.def(
      "continuant",
      [](const std::vector<Int>& quotients) { return eucstruct::continuants(quotients).full(); },
      py::arg("quotients"), "Bracket value of the whole quotient sequence.");
  m.def(
      "bezout_coefficients",
      [](const std::vector<Int>& quotients) {
        return eucstruct::bezout_of_quotients(quotients).beta;
      },
      py::arg("quotients"),
      "Back-substitution coefficients beta_{-1}..beta_s of a quotient sequence.");

  // ---- modular helpers ------------------------------------------------------

  m.def("is_prime", &eucstruct::is_prime, py::arg("n"), py::arg("rounds") = 40,
        py::arg("seed") = 0x5eed0001u, "Miller-Rabin primality (deterministic below 2^64).");
  m.def("mod_sqrt", &eucstruct::mod_sqrt, py::arg("a"), py::arg("p"),
        "Smaller square root of a mod p, or None for a non-residue.");
  m.def("solve_golden_congruence", &eucstruct::solve_golden_congruence, py::arg("p"),
        "Root of v^2 + v - 1 == 0 (mod p) for prime p == +-1 (mod 5).");
  m.def(
      "squarefree_decompose",
      [](const Int& u) {
        const auto split = eucstruct::squarefree_decompose(u);
        return std::make_tuple(split.a, split.b);
      },
      py::arg("u"), "(a, b) with u = a*b^2 and a squarefree.");
  m.def(
      "ext_gcd",
      [](const Int& m_op, const Int& n_op) {
        const auto r = eucstruct::ext_gcd(m_op, n_op);
        return std::make_tuple(r.g, r.x, r.y);
      },
      py::arg("m"), py::arg("n"), "(g, x, y) with m*x + n*y = g and |x| <= n/(2g).");

  // ---- inversion ------------------------------------------------------------

  py::class_<eucstruct::InversionResult>(m, "InversionResult")
      .def_readonly("inverse", &eucstruct::InversionResult::inverse)
      .def_readonly("trace", &eucstruct::InversionResult::trace)
      .def_readonly("stop_index", &eucstruct::InversionResult::stop_index)
      .def("__repr__", [](const eucstruct::InversionResult& r) {
        return "InversionResult(inverse=" + r.inverse.str() + ")";
      });

  m.def("mod_inverse", &eucstruct::mod_inverse, py::arg("m"), py::arg("n"),
        py::arg("pre_reduce") = false,
        "m^{-1} mod n via the first remainder below n in the run on (n^2, m*n + 1).");
  m.def("seysen_inverse", &eucstruct::seysen_inverse, py::arg("m"), py::arg("n"), py::arg("f"),
        py::arg("allow_small_f") = false,
        "Scaled-run variant on (f*n, f*m + 1); correct whenever f > 2n.");
  m.def("inverse_baseline", &eucstruct::inverse_baseline, py::arg("m"), py::arg("n"),
        "Classical extended-gcd inverse, canonical representative in (0, n).");

  // ---- quadratic-form representations ---------------------------------------

  py::class_<eucstruct::BqfRepresentation>(m, "BqfRepresentation")
      .def_readonly("p", &eucstruct::BqfRepresentation::p)
      .def_readonly("b", &eucstruct::BqfRepresentation::b)
      .def_readonly("c", &eucstruct::BqfRepresentation::c)
      .def("__repr__", [](const eucstruct::BqfRepresentation& r) {
        return r.p.str() + " = " + r.b.str() + "^2 + 3*" + r.b.str() + "*" + r.c.str() + " + " +
               r.c.str() + "^2";
      });

  py::class_<eucstruct::BqfRun>(m, "BqfRun")
      .def_readonly("rep", &eucstruct::BqfRun::rep)
      .def_readonly("v", &eucstruct::BqfRun::v)
      .def_readonly("stop_index", &eucstruct::BqfRun::stop_index)
      .def_readonly("trace", &eucstruct::BqfRun::trace);

  m.def("bqf_value", &eucstruct::bqf_value, py::arg("b"), py::arg("c"),
        "b^2 + 3bc + c^2.");
  m.def("represent_prime", &eucstruct::represent_prime, py::arg("p"),
        "The unique (b, c) with p = b^2 + 3bc + c^2, for prime p == +-1 (mod 5).");
  m.def("represent_prime_with_root", &eucstruct::represent_prime_with_root, py::arg("p"),
        py::arg("v"), "Same, using an explicit congruence root; returns the full run.");
  m.def("recover_b", &eucstruct::recover_b, py::arg("p"), py::arg("c"), py::arg("r_prev"),
        "Disambiguates the remainder preceding the stop (b versus b + c).");
  m.def("brute_force_representations", &eucstruct::brute_force_representations, py::arg("p"),
        "All (b, c) with b > c > 0 representing p, by exhaustive search.");

  // ---- predicted runs --------------------------------------------------------

  py::class_<EaEquation>(m, "EaEquation")
      .def_readonly("dividend", &EaEquation::dividend)
      .def_readonly("quotient", &EaEquation::quotient)
      .def_readonly("divisor", &EaEquation::divisor)
      .def_readonly("remainder", &EaEquation::remainder)
      .def("__eq__",
           [](const EaEquation& a, const EaEquation& b) { return a == b; })
      .def("__repr__", [](const EaEquation& e) {
        return e.dividend.str() + " = " + e.quotient.str() + "*" + e.divisor.str() + " + " +
               e.remainder.str();
      });

  py::class_<eucstruct::PredictedTrace>(m, "PredictedTrace")
      .def_readonly("u", &eucstruct::PredictedTrace::u)
      .def_readonly("v", &eucstruct::PredictedTrace::v)
      .def_readonly("equations", &eucstruct::PredictedTrace::equations)
      .def_property_readonly(
          "provenance",
          [](const eucstruct::PredictedTrace& t) { return t.provenance.describe(); })
      .def("quotients", &eucstruct::PredictedTrace::quotient_list)
      .def("remainders", &eucstruct::PredictedTrace::remainder_chain)
      .def("__repr__", [](const eucstruct::PredictedTrace& t) {
        return "PredictedTrace(u=" + t.u.str() + ", v=" + t.v.str() + ", equations=" +
               std::to_string(t.equations.size()) + ")";
      });

  m.def("equations_of", &eucstruct::equations_of, py::arg("trace"),
        "Equation list of an executed run, for comparison with predictions.");
  m.def("predict_shifted_trace", &eucstruct::predict_shifted_trace, py::arg("u"), py::arg("v"),
        "Predicts the even-parity run on (u, v - 1) from the run on (u, v), "
        "where v^2 + v - 1 == 0 (mod u).");
  m.def("predict_square_trace", &eucstruct::predict_square_trace, py::arg("b"), py::arg("c"),
        py::arg("sign"), "Predicts the even-parity run on (b^2, b*c + sign).");
  m.def("predict_general_trace", &eucstruct::predict_general_trace, py::arg("a"), py::arg("b"),
        py::arg("c"), py::arg("k"),
        "Predicts the even-parity run on (a*b^2, a*b*c + (-1)^k).");

  // ---- pattern templates and classification -----------------------------------

  py::enum_<eucstruct::PatternFamily>(m, "PatternFamily")
      .value("golden", eucstruct::PatternFamily::golden)
      .value("shifted", eucstruct::PatternFamily::shifted)
      .value("square", eucstruct::PatternFamily::square);

  py::class_<eucstruct::TemplateMatch>(m, "TemplateMatch")
      .def_readonly("template_index", &eucstruct::TemplateMatch::template_index)
      .def_readonly("base_quotients", &eucstruct::TemplateMatch::base_quotients)
      .def_readonly("middle_x", &eucstruct::TemplateMatch::middle_x)
      .def_readonly("middle_sign", &eucstruct::TemplateMatch::middle_sign)
      .def("reassemble", &eucstruct::TemplateMatch::reassemble, py::arg("family"));

  py::class_<eucstruct::PatternReport>(m, "PatternReport")
      .def_readonly("family", &eucstruct::PatternReport::family)
      .def_readonly("all_matches", &eucstruct::PatternReport::all_matches)
      .def("matched", &eucstruct::PatternReport::matched)
      .def("primary", [](const eucstruct::PatternReport& r) {
        if (!r.matched()) throw std::domain_error("primary(): the report has no matches");
        return r.primary();
      });

  py::class_<eucstruct::SquareClassification>(m, "SquareClassification")
      .def_readonly("congruence_sign", &eucstruct::SquareClassification::congruence_sign)
      .def_readonly("a", &eucstruct::SquareClassification::a)
      .def_readonly("b", &eucstruct::SquareClassification::b)
      .def_readonly("c", &eucstruct::SquareClassification::c)
      .def_readonly("gcd_bc", &eucstruct::SquareClassification::gcd_bc)
      .def_readonly("expected_x", &eucstruct::SquareClassification::expected_x)
      .def_readonly("report", &eucstruct::SquareClassification::report)
      .def_readonly("verified_match", &eucstruct::SquareClassification::verified_match)
      .def_property_readonly("verified", [](const eucstruct::SquareClassification& c) {
        return c.report.all_matches.at(c.verified_match);
      });

  m.def("match_end_symmetric", &eucstruct::match_end_symmetric, py::arg("quotients"),
        py::arg("family"), "All template readings of a quotient sequence.");
  m.def("classify_pattern", &eucstruct::classify_pattern, py::arg("u"), py::arg("v"),
        "Readings of (u, v) under the square congruences, cross-checked "
        "against the template fits of the executed run.");

  // ---- JSON ------------------------------------------------------------------

  m.def(
      "trace_to_json", [](const EaTrace& t) { return eucstruct::trace_to_json(t).dump(); },
      py::arg("trace"), "Serializes a trace to its JSON wire format.");
  m.def(
      "trace_from_json",
      [](const std::string& text) {
        return eucstruct::trace_from_json(nlohmann::json::parse(text));
      },
      py::arg("text"), "Parses and validates a trace from its JSON wire format.");
}
