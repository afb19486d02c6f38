#include "eucstruct/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "eucstruct/inversion.hpp"

namespace eucstruct::bench {

namespace {

using clock_type = std::chrono::steady_clock;

// Keeps results observable so the calls cannot be optimized away.
volatile std::uint64_t g_checksum = 0;

std::vector<std::pair<Int, Int>> make_operands(unsigned bits, int count, std::uint64_t seed) {
  // Per-bit-size stream: the 128-bit operand set does not depend on whether
  // the 64-bit set was generated in the same process.
  std::mt19937_64 rng(seed + bits);
  std::vector<std::pair<Int, Int>> pairs;
  pairs.reserve(static_cast<std::size_t>(count));
  while (pairs.size() < static_cast<std::size_t>(count)) {
    const Int n = random_bits(rng, bits);
    const Int m = 1 + random_below(rng, n - 1);
    if (gcd(m, n) != 1) continue;
    pairs.emplace_back(m, n);
  }
  return pairs;
}

template <typename Kernel>
BenchRow time_kernel(const std::string& name, unsigned bits,
                     const std::vector<std::pair<Int, Int>>& pairs, Kernel&& kernel) {
  std::vector<std::uint64_t> samples;
  samples.reserve(pairs.size());
  for (const auto& [m, n] : pairs) {
    const auto start = clock_type::now();
    const Int result = kernel(m, n);
    const auto stop = clock_type::now();
    g_checksum = g_checksum + Int(result % 255 + 255).convert_to<std::uint64_t>();
    samples.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
  }
  std::sort(samples.begin(), samples.end());
  auto nearest_rank = [&samples](double q) {
    const std::size_t idx = static_cast<std::size_t>(q * static_cast<double>(samples.size() - 1));
    return samples[idx];
  };
  BenchRow row;
  row.algorithm = name;
  row.bits = bits;
  row.iterations = static_cast<int>(pairs.size());
  row.p10_ns = nearest_rank(0.10);
  row.median_ns = nearest_rank(0.50);
  row.p90_ns = nearest_rank(0.90);
  return row;
}

}  // namespace

std::string cpu_identifier() {
  std::ifstream cpuinfo("/proc/cpuinfo");
  std::string line;
  while (std::getline(cpuinfo, line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    if (line.rfind("model name", 0) == 0) {
      std::size_t start = colon + 1;
      while (start < line.size() && line[start] == ' ') ++start;
      return line.substr(start);
    }
  }
  return "unknown";
}

std::vector<BenchRow> run(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (const unsigned bits : config.bits) {
    const auto pairs = make_operands(bits, config.iterations, config.seed);
    rows.push_back(time_kernel("mod_inverse", bits, pairs, [](const Int& m, const Int& n) {
      return mod_inverse(m, n).inverse;
    }));
    if (config.run_seysen)
      rows.push_back(time_kernel("seysen_inverse", bits, pairs, [](const Int& m, const Int& n) {
        return seysen_inverse(m, n, 2 * n + 1);
      }));
    if (config.run_extgcd)
      rows.push_back(time_kernel("ext_gcd", bits, pairs, [](const Int& m, const Int& n) {
        return inverse_baseline(m, n);
      }));
  }
  return rows;
}

std::string csv_report(const std::vector<BenchRow>& rows, const BenchConfig& config) {
  std::ostringstream out;
  out << "# modular inversion timings, one steady_clock sample per call, nearest-rank percentiles\n";
  out << "# cpu: " << cpu_identifier() << "\n";
  out << "# seed: " << config.seed << "\n";
  out << "# iterations per algorithm and bit size: " << config.iterations << "\n";
  out << "# seysen_inverse scale factor: f = 2n + 1\n";
  out << "algorithm,bits,iterations,median_ns,p10_ns,p90_ns\n";
  for (const BenchRow& row : rows)
    out << row.algorithm << ',' << row.bits << ',' << row.iterations << ',' << row.median_ns
        << ',' << row.p10_ns << ',' << row.p90_ns << '\n';
  return out.str();
}

}  // namespace eucstruct::bench
