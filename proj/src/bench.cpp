#include "kmis/bench.hpp"

#include <chrono>
#include <ostream>
#include <stdexcept>

#include "kmis/kmismatch.hpp"
#include "kmis/randomized.hpp"
#include "kmis/text_io.hpp"

namespace kmis {

namespace {

using Clock = std::chrono::steady_clock;

void run_cell(const std::string& algorithm, const Sequence& text,
              const Sequence& pattern, std::uint32_t k, double epsilon,
              double alpha, SeededRng& rng, BenchRecord& record) {
  WorkCounters wc;
  std::vector<std::uint32_t> all;
  if (algorithm == "subset") {
    all.resize(text.size() - pattern.size() + 1);
    for (std::size_t i = 0; i < all.size(); ++i) {
      all[i] = static_cast<std::uint32_t>(i + 1);
    }
  }
  const auto start = Clock::now();
  if (algorithm == "naive") {
    naive_profile(text, pattern);
  } else if (algorithm == "abrahamson") {
    abrahamson_profile(text, pattern, &wc);
  } else if (algorithm == "wildcard") {
    wildcard_profile(text, pattern, &wc);
  } else if (algorithm == "subset") {
    subset_k_mismatches(text, pattern, std::move(all), k, &wc);
  } else if (algorithm == "knapsack") {
    knapsack_k_mismatches(text, pattern, k, &wc);
  } else if (algorithm == "lv") {
    las_vegas_k_mismatches(text, pattern, k, alpha, rng);
  } else if (algorithm == "approx") {
    approx_count(text, pattern, epsilon, alpha, rng);
  } else {
    throw std::invalid_argument("unknown algorithm: " + algorithm);
  }
  const auto stop = Clock::now();
  record.ms = std::chrono::duration<double, std::milli>(stop - start).count();
  record.counters = wc;
}

}  // namespace

std::vector<BenchRecord> run_bench(const Sequence& text, const BenchGrid& grid,
                                   std::uint64_t seed) {
  std::vector<BenchRecord> records;
  const SeededRng root(seed);
  std::uint64_t cell = 0;
  for (const std::string& algorithm : grid.algorithms) {
    for (std::uint64_t n : grid.text_lengths) {
      if (n > text.size()) {
        throw std::invalid_argument("bench: truncation exceeds the text");
      }
      const Sequence prefix(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(n));
      const Rank sigma = max_rank(prefix);
      for (std::uint64_t m : grid.pattern_lengths) {
        for (std::uint64_t k : grid.thresholds) {
          SeededRng cell_rng = root.split(cell++);
          const Sequence pattern =
              extract_pattern(prefix, static_cast<std::uint32_t>(m), cell_rng);
          BenchRecord record;
          record.algorithm = algorithm;
          record.n = n;
          record.m = m;
          record.k = k;
          record.sigma = sigma;
          record.seed = seed;
          run_cell(algorithm, prefix, pattern, static_cast<std::uint32_t>(k),
                   grid.epsilon, grid.alpha, cell_rng, record);
          records.push_back(std::move(record));
        }
      }
    }
  }
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "algorithm,n,m,k,sigma,seed,ms,marks,convs,lce\n";
  for (const BenchRecord& r : records) {
    out << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.k << ','
        << r.sigma << ',' << r.seed << ',' << r.ms << ',' << r.counters.marks_created
        << ',' << r.counters.convolutions_run << ',' << r.counters.lce_queries
        << '\n';
  }
}

}  // namespace kmis
