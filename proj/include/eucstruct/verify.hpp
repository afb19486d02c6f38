#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "eucstruct/int_types.hpp"

// Cross-validation sweeps: every invariant promised by the library modules,
// runnable in bulk with deterministic results. A sweep passes iff its
// discrepancy list is empty; any entry is a bug surfaced, never suppressed.
namespace eucstruct::verify {

struct Options {
  // Predicted-trace sweeps over the square families.
  std::uint64_t unit_max_b = 200;    // coprime 1 < c < b <= unit_max_b, both signs
  std::uint64_t general_max_b = 60;  // with a in [2, general_max_a], k in {0, 1}
  std::uint64_t general_max_a = 20;
  // Predicted-trace sweep over the golden family.
  std::uint64_t golden_prime_max = 100000;    // primes = +-1 (mod 5), canonical root
  std::uint64_t golden_composite_max = 2000;  // composite moduli, roots found by scan
  // Quotient-pattern classification sweep.
  std::uint64_t classify_max_u = 5000;
  // Euclidean-core sweeps.
  std::uint64_t division_max_u = 500;
  std::uint64_t lemma_max_u = 300;
  int continuant_max_len = 8;
  int continuant_max_entry = 5;
  // Inversion sweeps.
  std::uint64_t invert_exhaustive_max_n = 400;
  int invert_random_pairs = 10000;
  unsigned invert_random_bits = 256;
  int seysen_random_pairs = 1000;
  unsigned seysen_random_bits = 64;
  std::uint64_t linkage_max_n = 200;
  // Prime-representation sweeps.
  std::uint64_t bqf_prime_max = 100000;
  std::uint64_t bqf_unique_max = 10000;
  // Shared.
  std::uint64_t seed = 0x5eed0001ULL;
  int jobs = 1;
};

struct Discrepancy {
  // Wire label for the JSONL report ("3.1", "3.3", "3.4", "3.5") when the
  // failing sweep belongs to the predicted-trace/classification family;
  // empty for the other sweeps (those report through `text` only).
  std::string theorem;
  nlohmann::json record;  // {"theorem":..., "input":{...}, "expected":[...], "actual":[...]}
  std::string text;       // human-readable one-liner
};

struct SweepReport {
  std::string name;
  std::uint64_t cases = 0;
  std::vector<Discrepancy> discrepancies;
  bool passed() const { return discrepancies.empty(); }
};

// Suite runners. Each returns one report per named sweep, in a fixed order,
// with deterministic content for a fixed Options (independent of jobs).
std::vector<SweepReport> run_core(const Options& options);
std::vector<SweepReport> run_inversion(const Options& options);
// When per_prime_lines is non-null it receives one JSON object per prime
// processed by the representation sweep: {"p","b","c","v","stop_index"}.
std::vector<SweepReport> run_bqf(const Options& options,
                                 std::vector<nlohmann::json>* per_prime_lines);
std::vector<SweepReport> run_structure(const Options& options);

// Primes in [2, limit], ascending (simple sieve; shared by sweeps and tests).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace eucstruct::verify
