#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kmis/core.hpp"
#include "kmis/counting.hpp"

namespace kmis {

// One timed cell of a benchmark sweep.
struct BenchRecord {
  std::string algorithm;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t k = 0;
  std::uint64_t sigma = 0;
  std::uint64_t seed = 0;
  double ms = 0.0;
  WorkCounters counters;
};

struct BenchGrid {
  std::vector<std::string> algorithms;  // naive abrahamson wildcard subset knapsack lv approx
  std::vector<std::uint64_t> text_lengths;     // truncation thresholds
  std::vector<std::uint64_t> pattern_lengths;  // random windows of the text
  std::vector<std::uint64_t> thresholds;       // k values
  double epsilon = 0.2;  // approx only
  double alpha = 1.0;
};

// Runs every (algorithm, n, m, k) cell on truncations of the text with a
// randomly extracted pattern per cell. Timing wraps the algorithm call only;
// each cell draws its own stream from the seed, so the sweep order never
// changes the inputs.
std::vector<BenchRecord> run_bench(const Sequence& text, const BenchGrid& grid,
                                   std::uint64_t seed);

// Header: algorithm,n,m,k,sigma,seed,ms,marks,convs,lce
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace kmis
