#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eucstruct/int_types.hpp"

// Timing harness for the inversion kernels. Operands are generated from a
// fixed seed so the numbers being inverted are reproducible; the timings,
// of course, are not.
namespace eucstruct::bench {

struct BenchConfig {
  std::vector<unsigned> bits = {64, 128, 256, 512};  // bit length of the modulus n
  int iterations = 200;                              // samples per (algorithm, bits)
  bool run_extgcd = true;
  bool run_seysen = true;  // uses f = 2n + 1, the smallest admissible scale factor
  std::uint64_t seed = 0x5eed0001ULL;
};

struct BenchRow {
  std::string algorithm;  // "mod_inverse" | "seysen_inverse" | "ext_gcd"
  unsigned bits = 0;
  int iterations = 0;
  std::uint64_t median_ns = 0;
  std::uint64_t p10_ns = 0;
  std::uint64_t p90_ns = 0;
};

// Runs every configured kernel over `iterations` seeded coprime pairs per bit
// size, timing each call individually; percentiles are nearest-rank.
std::vector<BenchRow> run(const BenchConfig& config);

// CSV serialization: '#' metadata comment lines (CPU identifier, seed,
// iteration count), then a header row, then one row per BenchRow.
std::string csv_report(const std::vector<BenchRow>& rows, const BenchConfig& config);

// First "model name" from /proc/cpuinfo, or "unknown".
std::string cpu_identifier();

}  // namespace eucstruct::bench
