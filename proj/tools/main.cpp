#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "eucstruct/bench.hpp"
#include "eucstruct/bqf.hpp"
#include "eucstruct/ea.hpp"
#include "eucstruct/errors.hpp"
#include "eucstruct/int_types.hpp"
#include "eucstruct/inversion.hpp"
#include "eucstruct/json_io.hpp"
#include "eucstruct/modular.hpp"
#include "eucstruct/structure.hpp"
#include "eucstruct/verify.hpp"

namespace {

using eucstruct::Int;

Int parse_operand(const char* name, const std::string& text) {
  try {
    return eucstruct::parse_natural(text);
  } catch (const std::domain_error&) {
    throw std::domain_error(std::string(name) + " must be a decimal natural number, got '" +
                            text + "'");
  }
}

std::string join_ints(const std::vector<Int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + values[i].str();
  return out;
}

struct InvertArgs {
  std::string m, n, seysen_f;
  bool has_seysen = false;
};

int run_invert(const InvertArgs& args) {
  const Int m = parse_operand("-m", args.m);
  const Int n = parse_operand("-n", args.n);
  if (!args.has_seysen) {
    const eucstruct::InversionResult result = eucstruct::mod_inverse(m, n);
    std::cout << result.inverse.str() << "\n";
    return 0;
  }
  const Int f = parse_operand("--seysen", args.seysen_f);
  const Int r = eucstruct::seysen_inverse(m, n, f, /*allow_small_f=*/true);
  std::cout << r.str() << "\n";
  Int residue = (m * r) % n;
  if (residue < 0) residue += n;
  if (residue != 1) {
    std::cerr << "warning: " << r.str() << " is not an inverse of " << m.str() << " (mod "
              << n.str() << ")";
    if (f <= 2 * n) std::cerr << "; the scale factor " << f.str() << " violates f > 2n";
    std::cerr << "\n";
  }
  return 0;
}

struct RepresentArgs {
  std::string p;
  bool both_roots = false;
};

void print_representation(const eucstruct::BqfRun& run, bool with_root) {
  const Int& p = run.rep.p;
  const Int& b = run.rep.b;
  const Int& c = run.rep.c;
  std::cout << p.str() << " = " << b.str() << "^2 + 3*" << b.str() << "*" << c.str() << " + "
            << c.str() << "^2 (b=" << b.str() << ", c=" << c.str() << ")";
  if (with_root) std::cout << " [v=" << run.v.str() << "]";
  std::cout << "\n";
}

int run_represent(const RepresentArgs& args) {
  const Int p = parse_operand("-p", args.p);
  const Int v = eucstruct::solve_golden_congruence(p);
  if (!args.both_roots) {
    print_representation(eucstruct::represent_prime_with_root(p, v), false);
    return 0;
  }
  print_representation(eucstruct::represent_prime_with_root(p, v), true);
  print_representation(eucstruct::represent_prime_with_root(p, p - 1 - v), true);
  return 0;
}

struct TraceArgs {
  std::string u, v;
  int delta = -1;  // -1 = unconstrained
  bool json_output = false;
};

int run_trace(const TraceArgs& args) {
  const Int u = parse_operand("U", args.u);
  const Int v = parse_operand("V", args.v);
  const eucstruct::EaTrace trace = (args.delta == -1)
                                       ? eucstruct::ea_trace(u, v)
                                       : eucstruct::ea_trace_parity(u, v, args.delta);
  if (args.json_output) {
    std::cout << eucstruct::trace_to_json(trace).dump() << "\n";
    return 0;
  }
  std::cout << "u = " << trace.u.str() << "\n";
  std::cout << "v = " << trace.v.str() << "\n";
  std::cout << "steps = " << trace.steps() << "\n";
  std::cout << "delta = " << (trace.delta ? std::to_string(*trace.delta) : "unconstrained")
            << "\n";
  std::cout << "modified = " << (trace.modified ? "yes" : "no") << "\n";
  std::cout << "quotients: " << join_ints(trace.quotients) << "\n";
  std::cout << "remainders: " << join_ints(trace.remainders) << "\n";
  return 0;
}

struct ClassifyArgs {
  std::string u, v;
  bool json_output = false;
};

int run_classify(const ClassifyArgs& args) {
  const Int u = parse_operand("U", args.u);
  const Int v = parse_operand("V", args.v);
  const auto readings = eucstruct::classify_pattern(u, v);
  if (args.json_output) {
    nlohmann::json j;
    j["u"] = u.str();
    j["v"] = v.str();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& reading : readings) arr.push_back(eucstruct::classification_to_json(reading));
    j["readings"] = arr;
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "u = " << u.str() << ", v = " << v.str() << "\n";
  for (std::size_t idx = 0; idx < readings.size(); ++idx) {
    const auto& reading = readings[idx];
    std::cout << "reading " << idx + 1 << ": congruence (v"
              << (reading.congruence_sign > 0 ? "+" : "-") << "1)^2 = 0 (mod u); a = "
              << reading.a.str() << ", b = " << reading.b.str() << ", c = " << reading.c.str()
              << ", gcd(b,c) = " << reading.gcd_bc.str();
    if (reading.expected_x)
      std::cout << ", expected x = " << reading.expected_x->str();
    std::cout << "\n";
    const auto& match = reading.report.all_matches.at(reading.verified_match);
    std::cout << "  matched template " << match.template_index << "; base quotients: "
              << (match.base_quotients.empty() ? "(none)" : join_ints(match.base_quotients));
    if (match.middle_x) std::cout << "; x = " << match.middle_x->str();
    if (match.template_index == 1)
      std::cout << "; middle sign " << (match.middle_sign > 0 ? "+" : "-");
    std::cout << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t max_b = 0;
  std::uint64_t max_u = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string report_path;
  bool has_max_b = false, has_max_u = false, has_seed = false;
};

int run_verify(const VerifyArgs& args) {
  eucstruct::verify::Options options;
  if (args.has_max_b) {
    options.unit_max_b = args.max_b;
    options.general_max_b = args.max_b;
  }
  if (args.has_max_u) {
    options.golden_prime_max = args.max_u;
    options.golden_composite_max = args.max_u;
    options.classify_max_u = args.max_u;
  }
  if (args.has_seed) options.seed = args.seed;
  options.jobs = args.jobs;

  std::vector<eucstruct::verify::SweepReport> reports;
  std::vector<nlohmann::json> per_prime_lines;
  auto append = [&reports](std::vector<eucstruct::verify::SweepReport> batch) {
    for (auto& report : batch) reports.push_back(std::move(report));
  };
  const bool all = args.suite == "all";
  if (all || args.suite == "core") append(eucstruct::verify::run_core(options));
  if (all || args.suite == "inversion") append(eucstruct::verify::run_inversion(options));
  if (all || args.suite == "bqf")
    append(eucstruct::verify::run_bqf(
        options, args.suite == "bqf" && !args.report_path.empty() ? &per_prime_lines : nullptr));
  if (all || args.suite == "structure") append(eucstruct::verify::run_structure(options));

  if (!args.report_path.empty()) {
    std::ofstream out(args.report_path);
    if (!out) throw std::domain_error("cannot open report file '" + args.report_path + "'");
    if (args.suite == "bqf") {
      // One line per prime processed by the representation sweep.
      for (const auto& line : per_prime_lines) out << line.dump() << "\n";
    } else {
      // Discrepancy records only; an empty file means full agreement.
      for (const auto& report : reports)
        for (const auto& d : report.discrepancies)
          if (!d.theorem.empty()) out << d.record.dump() << "\n";
    }
  }

  bool all_passed = true;
  for (const auto& report : reports) {
    if (report.passed()) {
      std::cout << "PASS " << report.name << ": " << report.cases << " cases\n";
    } else {
      all_passed = false;
      std::cout << "FAIL " << report.name << ": " << report.cases << " cases, "
                << report.discrepancies.size() << " discrepancies\n";
      std::size_t shown = 0;
      for (const auto& d : report.discrepancies) {
        if (shown++ == 10) {
          std::cerr << "  ... (" << report.discrepancies.size() - 10 << " more)\n";
          break;
        }
        std::cerr << "  " << d.text << "\n";
      }
    }
  }
  std::cout << (all_passed ? "all sweeps passed" : "verification FAILED") << "\n";
  return all_passed ? 0 : 2;
}

struct BenchArgs {
  std::vector<unsigned> bits{64, 128, 256, 512};
  int iters = 200;
  std::vector<std::string> baselines{"extgcd", "seysen"};
  std::string csv_path;
};

int run_bench([[maybe_unused]] const BenchArgs& args) {
#ifndef NDEBUG
  std::cerr << "bench refuses to run in an unoptimized build; configure with "
               "-DCMAKE_BUILD_TYPE=Release\n";
  return 1;
#else
  eucstruct::bench::BenchConfig config;
  config.bits = args.bits;
  config.iterations = args.iters;
  config.run_extgcd = false;
  config.run_seysen = false;
  for (const auto& name : args.baselines) {
    if (name == "extgcd") config.run_extgcd = true;
    if (name == "seysen") config.run_seysen = true;
  }
  const auto rows = eucstruct::bench::run(config);
  const std::string csv = eucstruct::bench::csv_report(rows, config);
  if (args.csv_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(args.csv_path);
    if (!out) throw std::domain_error("cannot open CSV file '" + args.csv_path + "'");
    out << csv;
    std::cout << "wrote " << rows.size() << " rows to " << args.csv_path << "\n";
  }
  return 0;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Euclidean-algorithm toolkit: modular inversion via EA(n^2, mn+1), prime representation "
      "by x^2 + 3xy + y^2, recorded traces, quotient-pattern classification, verification "
      "sweeps, and benchmarks"};
  app.require_subcommand(1);

  InvertArgs invert_args;
  CLI::App* invert = app.add_subcommand("invert", "Compute the inverse of m modulo n");
  invert->add_option("-m", invert_args.m, "value to invert")->required();
  invert->add_option("-n", invert_args.n, "modulus")->required();
  CLI::Option* seysen_opt = invert->add_option(
      "--seysen", invert_args.seysen_f,
      "use the scaled variant EA(fn, fm+1) with this f instead (correct only for f > 2n)");

  RepresentArgs represent_args;
  CLI::App* represent =
      app.add_subcommand("represent", "Represent a prime p = +-1 (mod 5) as b^2 + 3bc + c^2");
  represent->add_option("-p", represent_args.p, "prime to represent")->required();
  represent->add_flag("--both-roots", represent_args.both_roots,
                      "run the algorithm with both congruence roots");

  TraceArgs trace_args;
  CLI::App* trace = app.add_subcommand("trace", "Print the full division trace of (U, V)");
  trace->add_option("U", trace_args.u, "dividend")->required();
  trace->add_option("V", trace_args.v, "divisor")->required();
  trace->add_option("--delta", trace_args.delta, "force the step-count parity (0 or 1)")
      ->check(CLI::IsMember({0, 1}));
  trace->add_flag("--json", trace_args.json_output, "emit the trace as a JSON object");

  ClassifyArgs classify_args;
  CLI::App* classify = app.add_subcommand(
      "classify", "Classify the quotient pattern of (U, V) when (V+-1)^2 = 0 (mod U)");
  classify->add_option("U", classify_args.u, "modulus")->required();
  classify->add_option("V", classify_args.v, "residue")->required();
  classify->add_flag("--json", classify_args.json_output, "emit the readings as JSON");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run cross-validation sweeps");
  verify->add_option("--suite", verify_args.suite, "which sweep family to run")
      ->required()
      ->check(CLI::IsMember({"core", "inversion", "bqf", "structure", "all"}));
  CLI::Option* max_b_opt = verify->add_option(
      "--max-b", verify_args.max_b, "override the base bound b of the square-family trace sweeps");
  CLI::Option* max_u_opt = verify->add_option(
      "--max-u", verify_args.max_u,
      "override the modulus bound u of the golden-family and classification sweeps");
  CLI::Option* seed_opt =
      verify->add_option("--seed", verify_args.seed, "seed for the randomized sweeps");
  verify->add_option("--jobs", verify_args.jobs, "worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--report", verify_args.report_path,
                     "write a JSONL report (discrepancy records; per-prime lines for --suite bqf)");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Time the inversion kernels");
  bench->add_option("--bits", bench_args.bits, "modulus sizes to measure")
      ->delimiter(',')
      ->check(CLI::IsMember({64, 128, 256, 512}));
  bench->add_option("--iters", bench_args.iters, "samples per algorithm and bit size")
      ->check(CLI::PositiveNumber);
  bench->add_option("--baselines", bench_args.baselines, "baselines to include")
      ->delimiter(',')
      ->check(CLI::IsMember({"extgcd", "seysen"}));
  bench->add_option("--csv", bench_args.csv_path, "write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or a usage diagnostic
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(invert)) {
      invert_args.has_seysen = seysen_opt->count() > 0;
      return run_invert(invert_args);
    }
    if (app.got_subcommand(represent)) return run_represent(represent_args);
    if (app.got_subcommand(trace)) return run_trace(trace_args);
    if (app.got_subcommand(classify)) return run_classify(classify_args);
    if (app.got_subcommand(verify)) {
      verify_args.has_max_b = max_b_opt->count() > 0;
      verify_args.has_max_u = max_u_opt->count() > 0;
      verify_args.has_seed = seed_opt->count() > 0;
      return run_verify(verify_args);
    }
    if (app.got_subcommand(bench)) return run_bench(bench_args);
    std::cerr << "no subcommand selected\n";
    return 1;
  } catch (const eucstruct::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
