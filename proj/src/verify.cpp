#include "eucstruct/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numeric>
#include <random>
#include <thread>
#include <utility>

#include "eucstruct/bqf.hpp"
#include "eucstruct/continuants.hpp"
#include "eucstruct/ea.hpp"
#include "eucstruct/errors.hpp"
#include "eucstruct/inversion.hpp"
#include "eucstruct/json_io.hpp"
#include "eucstruct/modular.hpp"
#include "eucstruct/structure.hpp"

namespace eucstruct::verify {

namespace {

using nlohmann::json;

// Runs check(i, sink) for i in [0, n) across `jobs` threads over contiguous
// index chunks, then concatenates the per-chunk sinks in chunk order. The
// result is therefore in item-index order and identical for every jobs value.
template <typename Check>
std::vector<Discrepancy> parallel_collect(std::uint64_t n, int jobs, Check&& check) {
  const std::uint64_t workers =
      std::min<std::uint64_t>(std::max(jobs, 1), std::max<std::uint64_t>(n, 1));
  if (workers <= 1) {
    std::vector<Discrepancy> sink;
    for (std::uint64_t i = 0; i < n; ++i) check(i, sink);
    return sink;
  }
  std::vector<std::vector<Discrepancy>> sinks(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::uint64_t t = 0; t < workers; ++t) {
    const std::uint64_t lo = n * t / workers;
    const std::uint64_t hi = n * (t + 1) / workers;
    threads.emplace_back([&check, &sinks, &errors, t, lo, hi] {
      try {
        for (std::uint64_t i = lo; i < hi; ++i) check(i, sinks[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& thread : threads) thread.join();
  for (auto& error : errors)
    if (error) std::rethrow_exception(error);
  std::vector<Discrepancy> merged;
  for (auto& sink : sinks)
    merged.insert(merged.end(), std::make_move_iterator(sink.begin()),
                  std::make_move_iterator(sink.end()));
  return merged;
}

Discrepancy plain_failure(std::string text) {
  Discrepancy d;
  d.record = nullptr;
  d.text = std::move(text);
  return d;
}

Discrepancy labeled_failure(const char* theorem, json input, json expected, json actual,
                            std::string text) {
  Discrepancy d;
  d.theorem = theorem;
  d.record = json{{"theorem", theorem},
                  {"input", std::move(input)},
                  {"expected", std::move(expected)},
                  {"actual", std::move(actual)}};
  d.text = std::move(text);
  return d;
}

// Compares a predicted trace against the actual parity-normalized run and
// files a labeled discrepancy on any difference.
void compare_predicted(const char* theorem, const json& input, const PredictedTrace& predicted,
                       const EaTrace& actual, std::vector<Discrepancy>& sink) {
  const std::vector<Int> predicted_q = predicted.quotient_list();
  const std::vector<Int> predicted_r = predicted.remainder_chain();
  if (predicted_q == actual.quotients && predicted_r == actual.remainders) return;
  if (predicted_q != actual.quotients) {
    sink.push_back(labeled_failure(theorem, input, int_list_to_json(predicted_q),
                                   int_list_to_json(actual.quotients),
                                   std::string("quotient mismatch, input ") + input.dump()));
  } else {
    sink.push_back(labeled_failure(theorem, input, int_list_to_json(predicted_r),
                                   int_list_to_json(actual.remainders),
                                   std::string("remainder mismatch, input ") + input.dump()));
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> all_pairs(std::uint64_t max_u) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t u = 2; u <= max_u; ++u)
    for (std::uint64_t v = 1; v < u; ++v) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> coprime_c_above_1(std::uint64_t max_b) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t b = 3; b <= max_b; ++b)
    for (std::uint64_t c = 2; c < b; ++c)
      if (std::gcd(b, c) == 1) out.emplace_back(b, c);
  return out;
}

std::uint64_t golden_congruence_residue(std::uint64_t v, std::uint64_t u) {
  const unsigned __int128 value = (unsigned __int128)v * v + v - 1;  // v >= 1
  return static_cast<std::uint64_t>(value % u);
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

// ---- core --------------------------------------------------------------

namespace {

void check_division_validity(std::uint64_t u, std::uint64_t v, std::vector<Discrepancy>& sink) {
  try {
    const EaTrace trace = ea_trace(Int(u), Int(v));
    validate_trace(trace);
  } catch (const std::exception& e) {
    sink.push_back(plain_failure("division validity failed at (u=" + std::to_string(u) +
                                 ", v=" + std::to_string(v) + "): " + e.what()));
  }
}

void check_parity_contract(std::uint64_t u, std::uint64_t v, int delta,
                           std::vector<Discrepancy>& sink) {
  const std::string where =
      "(u=" + std::to_string(u) + ", v=" + std::to_string(v) + ", delta=" + std::to_string(delta) + ")";
  try {
    const EaTrace plain = ea_trace(Int(u), Int(v));
    const EaTrace t = ea_trace_parity(Int(u), Int(v), delta);
    validate_trace(t);
    if (t.steps() % 2 != static_cast<std::size_t>(delta)) {
      sink.push_back(plain_failure("parity contract: wrong step parity at " + where));
      return;
    }
    const bool should_modify = plain.steps() % 2 != static_cast<std::size_t>(delta);
    if (t.modified != should_modify) {
      sink.push_back(plain_failure("parity contract: wrong modified flag at " + where));
      return;
    }
    bool agrees;
    if (!t.modified) {
      agrees = t.remainders == plain.remainders && t.quotients == plain.quotients;
    } else {
      const std::size_t pr = plain.remainders.size();
      const std::size_t pq = plain.quotients.size();
      agrees = t.remainders.size() == pr + 1 && t.quotients.size() == pq + 1 &&
               std::equal(plain.remainders.begin(), plain.remainders.end() - 1,
                          t.remainders.begin()) &&
               t.remainders[pr - 1] == plain.remainders[pr - 2] && t.remainders.back() == 0 &&
               std::equal(plain.quotients.begin(), plain.quotients.end() - 1,
                          t.quotients.begin()) &&
               t.quotients[pq - 1] == plain.quotients.back() - 1 && t.quotients.back() == 1;
    }
    if (!agrees)
      sink.push_back(plain_failure(
          "parity contract: trace disagrees with the standard run beyond the final step at " +
          where));
  } catch (const std::exception& e) {
    sink.push_back(plain_failure("parity contract raised at " + where + ": " + e.what()));
  }
}

// Decodes a flattened index over all sequences of length 1..max_len with
// entries 1..max_entry, ordered by length then lexicographically.
std::vector<Int> decode_sequence(std::uint64_t index, int max_len, int max_entry) {
  const std::uint64_t base = static_cast<std::uint64_t>(max_entry);
  std::uint64_t band = base;
  int len = 1;
  while (index >= band && len < max_len) {
    index -= band;
    band *= base;
    ++len;
  }
  std::vector<Int> seq(static_cast<std::size_t>(len));
  for (int pos = len - 1; pos >= 0; --pos) {
    seq[static_cast<std::size_t>(pos)] = Int(1 + index % base);
    index /= base;
  }
  return seq;
}

std::uint64_t sequence_count(int max_len, int max_entry) {
  std::uint64_t total = 0, band = 1;
  for (int len = 1; len <= max_len; ++len) {
    band *= static_cast<std::uint64_t>(max_entry);
    total += band;
  }
  return total;
}

void check_continuant_symmetry(std::uint64_t index, int max_len, int max_entry,
                               std::vector<Discrepancy>& sink) {
  const std::vector<Int> seq = decode_sequence(index, max_len, max_entry);
  std::vector<Int> reversed(seq.rbegin(), seq.rend());
  const ContinuantTable table = continuants(seq);
  const ContinuantTable mirror = continuants(reversed);
  const std::size_t s = seq.size();
  auto describe = [&seq]() {
    std::string text = "[";
    for (std::size_t i = 0; i < seq.size(); ++i)
      text += (i ? " " : "") + seq[i].str();
    return text + "]";
  };
  for (std::size_t i = 1; i <= s + 2; ++i) {
    for (std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) - 2;
         j <= static_cast<std::ptrdiff_t>(s); ++j) {
      // Symmetry: the (i, j) bracket equals the mirrored bracket of the
      // reversed sequence.
      const std::ptrdiff_t sp = static_cast<std::ptrdiff_t>(s);
      const Int& forward = table.at(i, j);
      const Int& backward = mirror.at(static_cast<std::size_t>(sp + 1 - j),
                                      sp + 1 - static_cast<std::ptrdiff_t>(i));
      if (forward != backward) {
        sink.push_back(plain_failure("continuant symmetry failed for " + describe() + " at (" +
                                     std::to_string(i) + ", " + std::to_string(j) + ")"));
        return;
      }
      // Mirrored recurrence on the forward table.
      if (j >= static_cast<std::ptrdiff_t>(i)) {
        const Int expected = seq[static_cast<std::size_t>(j - 1)] * table.at(i, j - 1) +
                             table.at(i, j - 2);
        if (forward != expected) {
          sink.push_back(plain_failure("continuant mirrored recurrence failed for " + describe() +
                                       " at (" + std::to_string(i) + ", " + std::to_string(j) +
                                       ")"));
          return;
        }
      }
    }
  }
}

void check_remainder_continuant_identity(std::uint64_t u, std::uint64_t v,
                                         std::vector<Discrepancy>& sink) {
  try {
    const EaTrace trace = ea_trace(Int(u), Int(v));
    const ContinuantTable table(trace.quotients);
    const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(trace.steps());
    for (std::ptrdiff_t i = -1; i <= s; ++i) {
      if (trace.remainder(i) != table.at(static_cast<std::size_t>(i + 2), s)) {
        sink.push_back(plain_failure("remainder/continuant identity failed at (u=" +
                                     std::to_string(u) + ", v=" + std::to_string(v) +
                                     ", i=" + std::to_string(i) + ")"));
        return;
      }
    }
  } catch (const std::exception& e) {
    sink.push_back(plain_failure("remainder/continuant identity raised at (u=" +
                                 std::to_string(u) + ", v=" + std::to_string(v) + "): " +
                                 e.what()));
  }
}

void check_bezout_laws(std::uint64_t u64, std::uint64_t v64, int delta, bool congruence_law,
                       std::vector<Discrepancy>& sink) {
  const std::string where = "(u=" + std::to_string(u64) + ", v=" + std::to_string(v64) +
                            ", delta=" + std::to_string(delta) + ")";
  try {
    const Int u(u64), v(v64);
    const EaTrace trace = ea_trace_parity(u, v, delta);
    const BezoutSequence beta = bezout_coefficients(trace);
    const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(trace.steps());
    if (congruence_law) {
      for (std::ptrdiff_t i = -1; i <= s; ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;  // (-1)^i, i = -1 included
        Int lhs = (v * beta.at(i) - sign * trace.remainder(i)) % u;
        if (lhs < 0) lhs += u;
        if (lhs != 0) {
          sink.push_back(plain_failure("Bezout congruence v*beta_i = (-1)^i r_i failed at " +
                                       where + ", i=" + std::to_string(i)));
          return;
        }
      }
    } else {
      for (std::ptrdiff_t i = 0; i <= s; ++i) {
        if (u != beta.at(i) * trace.remainder(i - 1) + beta.at(i - 1) * trace.remainder(i)) {
          sink.push_back(plain_failure("Bezout combination u = beta_i r_{i-1} + beta_{i-1} r_i "
                                       "failed at " +
                                       where + ", i=" + std::to_string(i)));
          return;
        }
      }
    }
  } catch (const std::exception& e) {
    sink.push_back(plain_failure("Bezout law check raised at " + where + ": " + e.what()));
  }
}

}  // namespace

std::vector<SweepReport> run_core(const Options& options) {
  std::vector<SweepReport> reports;

  {
    SweepReport report;
    report.name = "core/division-validity";
    const auto pairs = all_pairs(options.division_max_u);
    report.cases = pairs.size();
    report.discrepancies = parallel_collect(
        pairs.size(), options.jobs, [&pairs](std::uint64_t i, std::vector<Discrepancy>& sink) {
          check_division_validity(pairs[i].first, pairs[i].second, sink);
        });
    reports.push_back(std::move(report));
  }

  {
    SweepReport report;
    report.name = "core/parity-contract";
    const auto pairs = all_pairs(options.division_max_u);
    report.cases = pairs.size() * 2;
    report.discrepancies = parallel_collect(
        pairs.size() * 2, options.jobs, [&pairs](std::uint64_t i, std::vector<Discrepancy>& sink) {
          check_parity_contract(pairs[i / 2].first, pairs[i / 2].second, static_cast<int>(i % 2),
                                sink);
        });
    reports.push_back(std::move(report));
  }

  {
    SweepReport report;
    report.name = "core/continuant-symmetry";
    const std::uint64_t total = sequence_count(options.continuant_max_len,
                                               options.continuant_max_entry);
    report.cases = total;
    report.discrepancies = parallel_collect(
        total, options.jobs, [&options](std::uint64_t i, std::vector<Discrepancy>& sink) {
          check_continuant_symmetry(i, options.continuant_max_len, options.continuant_max_entry,
                                    sink);
        });
    reports.push_back(std::move(report));
  }

  {
    SweepReport report;
    report.name = "core/remainder-continuant-identity";
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (const auto& [u, v] : all_pairs(options.lemma_max_u))
      if (std::gcd(u, v) == 1) pairs.emplace_back(u, v);
    report.cases = pairs.size();
    report.discrepancies = parallel_collect(
        pairs.size(), options.jobs, [&pairs](std::uint64_t i, std::vector<Discrepancy>& sink) {
          check_remainder_continuant_identity(pairs[i].first, pairs[i].second, sink);
        });
    reports.push_back(std::move(report));
  }

  const auto lemma_pairs = all_pairs(options.lemma_max_u);
  for (const bool congruence_law : {true, false}) {
    SweepReport report;
    report.name = congruence_law ? "core/bezout-congruence" : "core/bezout-combination";
    report.cases = lemma_pairs.size() * 2;
    report.discrepancies =
        parallel_collect(lemma_pairs.size() * 2, options.jobs,
                         [&lemma_pairs, congruence_law](std::uint64_t i,
                                                        std::vector<Discrepancy>& sink) {
                           check_bezout_laws(lemma_pairs[i / 2].first, lemma_pairs[i / 2].second,
                                             static_cast<int>(i % 2), congruence_law, sink);
                         });
    reports.push_back(std::move(report));
  }

  return reports;
}

// ---- inversion -----------------------------------------------------------

namespace {

void check_inverse_agreement(const Int& m, const Int& n, std::vector<Discrepancy>& sink) {
  try {
    const InversionResult result = mod_inverse(m, n);
    const Int baseline = inverse_baseline(m, n);
    if (result.inverse != baseline || result.inverse < 1 || (m * result.inverse) % n != 1) {
      sink.push_back(plain_failure("inversion mismatch at (m=" + m.str() + ", n=" + n.str() +
                                   "): got " + result.inverse.str() + ", baseline " +
                                   baseline.str()));
    }
  } catch (const std::exception& e) {
    sink.push_back(plain_failure("inversion raised at (m=" + m.str() + ", n=" + n.str() +
                                 "): " + e.what()));
  }
}

}  // namespace

std::vector<SweepReport> run_inversion(const Options& options) {
  std::vector<SweepReport> reports;

  {
    SweepReport report;
    report.name = "inversion/exhaustive-agreement";
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t n = 2; n <= options.invert_exhaustive_max_n; ++n)
      for (std::uint64_t m = 1; m < n; ++m)
        if (std::gcd(m, n) == 1) pairs.emplace_back(m, n);
    report.cases = pairs.size();
    report.discrepancies = parallel_collect(
        pairs.size(), options.jobs, [&pairs](std::uint64_t i, std::vector<Discrepancy>& sink) {
          check_inverse_agreement(Int(pairs[i].first), Int(pairs[i].second), sink);
        });
    reports.push_back(std::move(report));
  }

  {
    SweepReport report;
    report.name = "inversion/random-agreement";
    std::mt19937_64 rng(options.seed);
    std::vector<std::pair<Int, Int>> pairs;
    pairs.reserve(static_cast<std::size_t>(options.invert_random_pairs));
    while (pairs.size() < static_cast<std::size_t>(options.invert_random_pairs)) {
      const Int n = random_bits(rng, options.invert_random_bits);
      const Int m = 1 + random_below(rng, n - 1);
      if (gcd(m, n) != 1) continue;
      pairs.emplace_back(m, n);
    }
    report.cases = pairs.size();
    report.discrepancies = parallel_collect(
        pairs.size(), options.jobs, [&pairs](std::uint64_t i, std::vector<Discrepancy>& sink) {
          check_inverse_agreement(pairs[i].first, pairs[i].second, sink);
        });
    reports.push_back(std::move(report));
  }

  {
    SweepReport report;
    report.name = "inversion/seysen-agreement";
    std::mt19937_64 rng(options.seed ^ 0x5e75e700ULL);
    std::vector<std::tuple<Int, Int, Int>> triples;
    triples.reserve(static_cast<std::size_t>(options.seysen_random_pairs));
    while (triples.size() < static_cast<std::size_t>(options.seysen_random_pairs)) {
      const Int n = random_bits(rng, options.seysen_random_bits);
      const Int m = 1 + random_below(rng, n - 1);
      if (gcd(m, n) != 1) continue;
      const Int f = 2 * n + 1 + random_below(rng, 2 * n);  // uniform over (2n, 4n]
      triples.emplace_back(m, n, f);
    }
    report.cases = triples.size();
    report.discrepancies = parallel_collect(
        triples.size(), options.jobs, [&triples](std::uint64_t i, std::vector<Discrepancy>& sink) {
          const auto& [m, n, f] = triples[i];
          try {
            Int got = seysen_inverse(m, n, f) % n;
            if (got < 0) got += n;
            const Int baseline = inverse_baseline(m, n);
            if (got != baseline)
              sink.push_back(plain_failure("seysen mismatch at (m=" + m.str() + ", n=" + n.str() +
                                           ", f=" + f.str() + "): got " + got.str() +
                                           ", baseline " + baseline.str()));
          } catch (const std::exception& e) {
            sink.push_back(plain_failure("seysen raised at (m=" + m.str() + ", n=" + n.str() +
                                         ", f=" + f.str() + "): " + e.what()));
          }
        });
    reports.push_back(std::move(report));
  }

  {
    SweepReport report;
    report.name = "inversion/square-trace-linkage";
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t n = 3; n <= options.linkage_max_n; ++n)
      for (std::uint64_t m = 2; m < n; ++m)
        if (std::gcd(m, n) == 1) pairs.emplace_back(m, n);
    report.cases = pairs.size();
    report.discrepancies = parallel_collect(
        pairs.size(), options.jobs, [&pairs](std::uint64_t i, std::vector<Discrepancy>& sink) {
          const Int m(pairs[i].first), n(pairs[i].second);
          const std::string where = "(m=" + m.str() + ", n=" + n.str() + ")";
          try {
            const InversionResult result = mod_inverse(m, n);
            const EaTrace base_run = ea_trace(n, m);
            const BezoutSequence beta = bezout_coefficients(base_run);
            const std::size_t s = base_run.steps();
            const Int& beta_prev = beta.at(static_cast<std::ptrdiff_t>(s) - 1);
            const Int expected = (s % 2 == 1) ? beta_prev : Int(n - beta_prev);
            const PredictedTrace predicted = predict_square_trace(n, m, +1);
            const std::vector<Int> chain = predicted.remainder_chain();
            Int first_below = -1;
            for (std::size_t idx = 2; idx < chain.size(); ++idx)
              if (chain[idx] < n) {
                first_below = chain[idx];
                break;
              }
            if (result.inverse != expected || result.inverse != first_below)
              sink.push_back(plain_failure(
                  "inverse/Bezout linkage mismatch at " + where + ": inverse " +
                  result.inverse.str() + ", Bezout form " + expected.str() +
                  ", predicted-chain stop " + first_below.str()));
          } catch (const std::exception& e) {
            sink.push_back(plain_failure("linkage check raised at " + where + ": " + e.what()));
          }
        });
    reports.push_back(std::move(report));
  }

  return reports;
}

// ---- bqf -------------------------------------------------------------------

std::vector<SweepReport> run_bqf(const Options& options,
                                 std::vector<nlohmann::json>* per_prime_lines) {
  std::vector<SweepReport> reports;

  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : primes_up_to(options.bqf_prime_max))
    if (p % 5 == 1 || p % 5 == 4) primes.push_back(p);

  {
    SweepReport report;
    report.name = "bqf/representation-correctness";
    report.cases = primes.size();
    std::vector<json> lines(primes.size());
    report.discrepancies = parallel_collect(
        primes.size(), options.jobs,
        [&primes, &lines](std::uint64_t i, std::vector<Discrepancy>& sink) {
          const Int p(primes[i]);
          try {
            const Int v = solve_golden_congruence(p);
            const BqfRun run = represent_prime_with_root(p, v);
            lines[i] = bqf_run_to_json(run);
            const Int& b = run.rep.b;
            const Int& c = run.rep.c;
            const Int r_prev = run.trace.remainder(static_cast<std::ptrdiff_t>(run.stop_index) - 1);
            if (!(b > c && c > 0) || bqf_value(b, c) != p || 5 * c * c >= p ||
                5 * r_prev * r_prev <= p)
              sink.push_back(plain_failure("representation invariant failed at p=" + p.str() +
                                           ": b=" + b.str() + ", c=" + c.str() +
                                           ", r_prev=" + r_prev.str()));
          } catch (const std::exception& e) {
            sink.push_back(plain_failure("representation raised at p=" + p.str() + ": " +
                                         e.what()));
          }
        });
    if (per_prime_lines != nullptr)
      for (auto& line : lines)
        if (!line.is_null()) per_prime_lines->push_back(std::move(line));
    reports.push_back(std::move(report));
  }

  std::vector<std::uint64_t> small_primes;
  for (std::uint64_t p : primes)
    if (p <= options.bqf_unique_max) small_primes.push_back(p);

  {
    SweepReport report;
    report.name = "bqf/uniqueness";
    report.cases = small_primes.size();
    report.discrepancies = parallel_collect(
        small_primes.size(), options.jobs,
        [&small_primes](std::uint64_t i, std::vector<Discrepancy>& sink) {
          const Int p(small_primes[i]);
          try {
            const BqfRepresentation rep = represent_prime(p);
            const auto all = brute_force_representations(p);
            if (all.size() != 1 || all[0].first != rep.b || all[0].second != rep.c)
              sink.push_back(plain_failure("uniqueness failed at p=" + p.str() + ": oracle found " +
                                           std::to_string(all.size()) + " representation(s)"));
          } catch (const std::exception& e) {
            sink.push_back(plain_failure("uniqueness raised at p=" + p.str() + ": " + e.what()));
          }
        });
    reports.push_back(std::move(report));
  }

  {
    SweepReport report;
    report.name = "bqf/root-independence";
    report.cases = small_primes.size();
    report.discrepancies = parallel_collect(
        small_primes.size(), options.jobs,
        [&small_primes](std::uint64_t i, std::vector<Discrepancy>& sink) {
          const Int p(small_primes[i]);
          try {
            const Int v = solve_golden_congruence(p);
            const Int w = p - 1 - v;
            const BqfRun left = represent_prime_with_root(p, v);
            const BqfRun right = represent_prime_with_root(p, w);
            if (left.rep.b != right.rep.b || left.rep.c != right.rep.c)
              sink.push_back(plain_failure("root independence failed at p=" + p.str() +
                                           ": roots " + v.str() + " and " + w.str() +
                                           " give different representations"));
          } catch (const std::exception& e) {
            sink.push_back(plain_failure("root independence raised at p=" + p.str() + ": " +
                                         e.what()));
          }
        });
    reports.push_back(std::move(report));
  }

  return reports;
}

// ---- structure -------------------------------------------------------------

std::vector<SweepReport> run_structure(const Options& options) {
  std::vector<SweepReport> reports;

  {
    SweepReport report;
    report.name = "structure/golden-shift-traces";
    std::vector<std::pair<std::uint64_t, std::uint64_t>> items;
    for (std::uint64_t p : primes_up_to(options.golden_prime_max)) {
      if (p % 5 != 1 && p % 5 != 4) continue;
      const Int v = solve_golden_congruence(Int(p));
      items.emplace_back(p, v.convert_to<std::uint64_t>());
    }
    {
      const auto sieve = primes_up_to(options.golden_composite_max);
      std::vector<bool> is_prime_flag(options.golden_composite_max + 1, false);
      for (std::uint64_t p : sieve) is_prime_flag[p] = true;
      for (std::uint64_t u = 4; u <= options.golden_composite_max; ++u) {
        if (is_prime_flag[u]) continue;
        for (std::uint64_t v = 1; v < u; ++v)
          if (golden_congruence_residue(v, u) == 0) items.emplace_back(u, v);
      }
    }
    report.cases = items.size();
    report.discrepancies = parallel_collect(
        items.size(), options.jobs, [&items](std::uint64_t i, std::vector<Discrepancy>& sink) {
          const Int u(items[i].first), v(items[i].second);
          const json input{{"u", u.str()}, {"v", v.str()}};
          try {
            const PredictedTrace predicted = predict_shifted_trace(u, v);
            const EaTrace actual = ea_trace_parity(u, v - 1, 0);
            compare_predicted("3.1", input, predicted, actual, sink);
            const EaTrace odd_run = ea_trace_parity(u, v, 1);
            if (actual.steps() + 1 != odd_run.steps())
              sink.push_back(labeled_failure(
                  "3.1", input, json::array({std::to_string(odd_run.steps() - 1)}),
                  json::array({std::to_string(actual.steps())}),
                  "step count is not exactly one fewer, input " + input.dump()));
          } catch (const std::exception& e) {
            sink.push_back(labeled_failure("3.1", input, json::array(), json::array(),
                                           std::string("raised: ") + e.what() + ", input " +
                                               input.dump()));
          }
        });
    reports.push_back(std::move(report));
  }

  {
    SweepReport report;
    report.name = "structure/square-unit-traces";
    const auto pairs = coprime_c_above_1(options.unit_max_b);
    report.cases = pairs.size() * 2;
    report.discrepancies = parallel_collect(
        pairs.size() * 2, options.jobs, [&pairs](std::uint64_t i, std::vector<Discrepancy>& sink) {
          const Int b(pairs[i / 2].first), c(pairs[i / 2].second);
          const int sign = (i % 2 == 0) ? 1 : -1;
          const json input{{"b", b.str()}, {"c", c.str()}, {"sign", sign}};
          try {
            const PredictedTrace predicted = predict_square_trace(b, c, sign);
            const EaTrace actual = ea_trace_parity(b * b, b * c + sign, 0);
            compare_predicted("3.3", input, predicted, actual, sink);
          } catch (const std::exception& e) {
            sink.push_back(labeled_failure("3.3", input, json::array(), json::array(),
                                           std::string("raised: ") + e.what() + ", input " +
                                               input.dump()));
          }
        });
    reports.push_back(std::move(report));
  }

  {
    SweepReport report;
    report.name = "structure/square-general-traces";
    const auto pairs = coprime_c_above_1(options.general_max_b);
    const std::uint64_t a_span = options.general_max_a - 1;  // a in [2, general_max_a]
    const std::uint64_t total = pairs.size() * a_span * 2;
    report.cases = total;
    report.discrepancies = parallel_collect(
        total, options.jobs, [&pairs, a_span](std::uint64_t i, std::vector<Discrepancy>& sink) {
          const auto& [b64, c64] = pairs[i / (a_span * 2)];
          const std::uint64_t rest = i % (a_span * 2);
          const Int a(2 + rest / 2), b(b64), c(c64);
          const int k = static_cast<int>(rest % 2);
          const json input{{"a", a.str()}, {"b", b.str()}, {"c", c.str()}, {"k", k}};
          try {
            const PredictedTrace predicted = predict_general_trace(a, b, c, k);
            const int unit = (k == 0) ? 1 : -1;
            const EaTrace actual = ea_trace_parity(a * b * b, a * b * c + unit, 0);
            compare_predicted("3.4", input, predicted, actual, sink);
          } catch (const std::exception& e) {
            sink.push_back(labeled_failure("3.4", input, json::array(), json::array(),
                                           std::string("raised: ") + e.what() + ", input " +
                                               input.dump()));
          }
        });
    reports.push_back(std::move(report));
  }

  {
    SweepReport report;
    report.name = "structure/pattern-classification";
    std::vector<std::pair<std::uint64_t, std::uint64_t>> items;
    for (std::uint64_t u = 2; u <= options.classify_max_u; ++u) {
      const SquarefreeSplit split = squarefree_decompose(Int(u));
      const std::uint64_t ab = Int(split.a * split.b).convert_to<std::uint64_t>();
      std::vector<std::uint64_t> candidates;
      for (std::uint64_t v = 1; v < u; v += ab) candidates.push_back(v);      // (v-1)^2 = 0 (mod u)
      for (std::uint64_t v = ab - 1; v < u; v += ab)                           // (v+1)^2 = 0 (mod u)
        if (v >= 1) candidates.push_back(v);
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (std::uint64_t v : candidates) items.emplace_back(u, v);
    }
    report.cases = items.size();
    report.discrepancies = parallel_collect(
        items.size(), options.jobs, [&items](std::uint64_t i, std::vector<Discrepancy>& sink) {
          const Int u(items[i].first), v(items[i].second);
          const json input{{"u", u.str()}, {"v", v.str()}};
          try {
            const auto readings = classify_pattern(u, v);
            const EaTrace run = ea_trace_parity(u, v, 0);
            for (const auto& reading : readings) {
              const TemplateMatch& match = reading.report.all_matches.at(reading.verified_match);
              const std::vector<Int> rebuilt = match.reassemble(PatternFamily::square);
              if (rebuilt != run.quotients) {
                sink.push_back(labeled_failure("3.5", input, int_list_to_json(rebuilt),
                                               int_list_to_json(run.quotients),
                                               "template reassembly mismatch, input " +
                                                   input.dump()));
                return;
              }
            }
          } catch (const std::exception& e) {
            json observed = json::array();
            try {
              observed = int_list_to_json(ea_trace_parity(u, v, 0).quotients);
            } catch (...) {
            }
            sink.push_back(labeled_failure("3.5", input, json::array(), observed,
                                           std::string("raised: ") + e.what() + ", input " +
                                               input.dump()));
          }
        });
    reports.push_back(std::move(report));
  }

  return reports;
}

}  // namespace eucstruct::verify
