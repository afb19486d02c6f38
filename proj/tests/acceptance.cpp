// Acceptance harness: checks the twelve release criteria end to end and
// prints exactly one PASS/FAIL line for each. Exits nonzero if any fails.

#include <eucstruct/bqf.hpp>
#include <eucstruct/ea.hpp>
#include <eucstruct/inversion.hpp>
#include <eucstruct/verify.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using eucstruct::Int;

struct Outcome {
  bool ok = true;
  std::uint64_t cases = 0;
  std::string detail;
};

struct Harness {
  bool all_ok = true;

  void report(int id, const std::string& text, const Outcome& outcome) {
    all_ok = all_ok && outcome.ok;
    std::printf("%s %2d: %s", outcome.ok ? "PASS" : "FAIL", id, text.c_str());
    if (outcome.cases > 0) std::printf(" [%llu cases]", static_cast<unsigned long long>(outcome.cases));
    if (!outcome.ok && !outcome.detail.empty()) std::printf(" -- %s", outcome.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
};

Outcome direct(bool ok, std::string detail = "") {
  Outcome o;
  o.ok = ok;
  if (!ok) o.detail = std::move(detail);
  return o;
}

// Folds the named sweep reports into a single outcome.
Outcome from_reports(const std::map<std::string, const eucstruct::verify::SweepReport*>& by_name,
                     std::initializer_list<const char*> names) {
  Outcome o;
  for (const char* name : names) {
    auto it = by_name.find(name);
    if (it == by_name.end()) {
      o.ok = false;
      o.detail += std::string("missing sweep ") + name + "; ";
      continue;
    }
    const auto* report = it->second;
    o.cases += report->cases;
    if (!report->passed()) {
      o.ok = false;
      std::ostringstream msg;
      msg << report->name << ": " << report->discrepancies.size()
          << " discrepancies (first: " << report->discrepancies.front().text << "); ";
      o.detail += msg.str();
    }
  }
  return o;
}

Outcome check_worked_inverse() {
  const auto r = eucstruct::mod_inverse(5, 12);
  const std::vector<Int> quotients = {2, 2, 1, 3, 2, 2};
  const std::vector<Int> remainders = {144, 61, 22, 17, 5, 2, 1, 0};
  if (r.trace.u != 144 || r.trace.v != 61)
    return direct(false, "run operands are not (144, 61)");
  if (r.trace.quotients != quotients) return direct(false, "unexpected quotient sequence");
  if (r.trace.remainders != remainders) return direct(false, "unexpected remainder sequence");
  if (r.stop_index != 3) return direct(false, "scan did not stop at remainder index 3");
  if (r.inverse != 5) return direct(false, "inverse is not 5");
  if (5 * r.inverse % 12 != 1) return direct(false, "result is not an inverse");
  return direct(true);
}

Outcome check_scaled_counterexample() {
  try {
    (void)eucstruct::seysen_inverse(5, 12, 12);
    return direct(false, "f = n was accepted without the override flag");
  } catch (const std::domain_error&) {
  }
  const Int relaxed = eucstruct::seysen_inverse(5, 12, 12, /*allow_small_f=*/true);
  if (relaxed != 10) return direct(false, "scan value is not 10");
  Int residue = 5 * relaxed % 12;
  if (residue < 0) residue += 12;
  if (residue == 1) return direct(false, "value unexpectedly is an inverse");
  const Int fixed = eucstruct::seysen_inverse(5, 12, 25);
  if (fixed != 5) return direct(false, "f = 25 does not recover the true inverse");
  return direct(true);
}

Outcome check_benchmark_table() {
  const std::string path = std::string(EUCSTRUCT_REPO_ROOT) + "/docs/benchmark.csv";
  std::ifstream in(path);
  if (!in.good()) return direct(false, "cannot open " + path);
  std::string line;
  bool header_seen = false;
  std::set<std::pair<std::string, long>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "algorithm,bits,iterations,median_ns,p10_ns,p90_ns")
        return direct(false, "unexpected header: " + line);
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6) return direct(false, "malformed row: " + line);
    long bits = 0, iterations = 0;
    long long median = 0, p10 = 0, p90 = 0;
    try {
      bits = std::stol(fields[1]);
      iterations = std::stol(fields[2]);
      median = std::stoll(fields[3]);
      p10 = std::stoll(fields[4]);
      p90 = std::stoll(fields[5]);
    } catch (const std::exception&) {
      return direct(false, "non-numeric field in row: " + line);
    }
    if (iterations < 1 || median <= 0 || p10 <= 0 || p90 <= 0)
      return direct(false, "non-positive measurement in row: " + line);
    if (p10 > median || median > p90)
      return direct(false, "percentiles out of order in row: " + line);
    if (!rows.emplace(fields[0], bits).second)
      return direct(false, "duplicate row for " + fields[0] + "/" + fields[1]);
  }
  if (!header_seen) return direct(false, "no header row found");
  std::set<std::pair<std::string, long>> expected;
  for (const char* alg : {"mod_inverse", "seysen_inverse", "ext_gcd"})
    for (long bits : {64L, 128L, 256L, 512L}) expected.emplace(alg, bits);
  if (rows != expected) return direct(false, "rows do not cover 3 algorithms x 4 bit widths");
  Outcome o = direct(true);
  o.cases = rows.size();
  return o;
}

}  // namespace

int main() {
  Harness harness;

  eucstruct::verify::Options options;
  const unsigned hw = std::thread::hardware_concurrency();
  options.jobs = static_cast<int>(std::max(1u, std::min(hw, 8u)));

  std::vector<eucstruct::verify::SweepReport> reports;
  for (auto& r : eucstruct::verify::run_core(options)) reports.push_back(std::move(r));
  for (auto& r : eucstruct::verify::run_inversion(options)) reports.push_back(std::move(r));
  for (auto& r : eucstruct::verify::run_bqf(options, nullptr)) reports.push_back(std::move(r));
  for (auto& r : eucstruct::verify::run_structure(options)) reports.push_back(std::move(r));

  std::map<std::string, const eucstruct::verify::SweepReport*> by_name;
  for (const auto& r : reports) by_name[r.name] = &r;

  harness.report(1, "inverse of 5 mod 12 comes out of the run on (144, 61) at remainder 5",
                 check_worked_inverse());
  harness.report(2, "scaled scan with f = n = 12 yields 10 and is flagged as a non-inverse",
                 check_scaled_counterexample());
  harness.report(3,
                 "remainder-scan inverses agree with the extended-gcd baseline "
                 "(all coprime pairs n <= 400; 10000 random 256-bit moduli)",
                 from_reports(by_name, {"inversion/exhaustive-agreement",
                                        "inversion/random-agreement"}));
  harness.report(4,
                 "every prime p < 100000, p == +-1 (mod 5), is represented by "
                 "b^2 + 3bc + c^2 with 5c^2 < p and 5*r_prev^2 > p",
                 from_reports(by_name, {"bqf/representation-correctness"}));
  harness.report(5, "the representation is the unique one, brute-forced for p < 10000",
                 from_reports(by_name, {"bqf/uniqueness"}));
  harness.report(6,
                 "predicted (b^2, bc +- 1) runs equal executed runs for every "
                 "coprime b > c > 1 with b <= 200, both signs",
                 from_reports(by_name, {"structure/square-unit-traces"}));
  harness.report(7,
                 "predicted (a*b^2, a*b*c +- 1) runs equal executed runs for "
                 "a in [2, 20], b <= 60, both units",
                 from_reports(by_name, {"structure/square-general-traces"}));
  harness.report(8,
                 "predicted shifted runs equal executed runs for every congruence "
                 "root (primes <= 100000 and composite u <= 2000), one step shorter",
                 from_reports(by_name, {"structure/golden-shift-traces"}));
  harness.report(9,
                 "coefficient congruence and combination identities hold for every "
                 "pair u <= 300, both parities",
                 from_reports(by_name, {"core/bezout-congruence", "core/bezout-combination"}));
  harness.report(10,
                 "bracket symmetry and both recurrences hold for every quotient "
                 "sequence of length <= 8 with entries in [1, 5]",
                 from_reports(by_name, {"core/continuant-symmetry"}));
  harness.report(11,
                 "classification never raises, reassembles the executed run exactly, "
                 "and carries x = gcd(b,c)^2*a - 1, for all admissible v with u <= 5000",
                 from_reports(by_name, {"structure/pattern-classification"}));
  harness.report(12, "committed benchmark table covers 3 algorithms x 4 bit widths",
                 check_benchmark_table());

  // Sweeps not named by a criterion still have to pass (they back the unit
  // invariants); surface any failure explicitly.
  static const std::set<std::string> mapped = {
      "inversion/exhaustive-agreement", "inversion/random-agreement",
      "bqf/representation-correctness", "bqf/uniqueness",
      "structure/square-unit-traces",   "structure/square-general-traces",
      "structure/golden-shift-traces",  "core/bezout-congruence",
      "core/bezout-combination",        "core/continuant-symmetry",
      "structure/pattern-classification"};
  for (const auto& report : reports) {
    if (mapped.count(report.name) || report.passed()) continue;
    harness.all_ok = false;
    std::printf("FAIL --: supporting sweep %s: %zu discrepancies (first: %s)\n",
                report.name.c_str(), report.discrepancies.size(),
                report.discrepancies.front().text.c_str());
  }

  std::printf("%s\n", harness.all_ok ? "acceptance: all criteria satisfied"
                                     : "acceptance: FAILURES PRESENT");
  return harness.all_ok ? 0 : 1;
}
