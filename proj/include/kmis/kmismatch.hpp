#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kmis/convolution.hpp"
#include "kmis/core.hpp"
#include "kmis/counting.hpp"
#include "kmis/suffix_index.hpp"

namespace kmis {

// Greedy selection of up to 2k pattern-character instances, cheapest text
// frequency first. `picked[r]` counts instances of rank r in the knapsack;
// the last character taken may be included only partially.
struct KnapsackPlan {
  std::vector<std::uint32_t> picked;
  std::uint64_t size = 0;
  std::uint64_t cost = 0;
  double budget = 0.0;
  bool filled = false;  // size reached 2k
};

// Default budget n * sqrt(k * log2(max(k,2))); the max keeps it positive at
// k = 1.
double knapsack_budget(std::size_t n, std::uint32_t k);

// Fills the knapsack greedily in ascending text-frequency order (ties by
// ascending rank) while size < 2k and cost < budget; the cost may overshoot
// the budget by the last character taken. Frequencies are indexed by rank,
// entry 0 ignored.
KnapsackPlan knapsack_plan(std::span<const std::uint32_t> pattern_freq,
                           std::span<const std::uint64_t> text_freq,
                           std::uint32_t k, double budget);

// Mismatches between pattern[s1..s1+len-1] and pattern[s2..s2+len-1] added to
// `count`, jumping from one mismatch to the next with lce queries and giving
// up once the running total exceeds k.
std::uint32_t update_mism(std::uint32_t count, std::uint32_t s1, std::uint32_t s2,
                          std::uint32_t len, std::uint32_t k,
                          const SuffixIndex& index, WorkCounters* wc = nullptr);

// Bounded distances for the requested alignments only, scanning the text once
// through matching-statistic segments and counting mismatches inside each
// segment by pattern-vs-pattern jumps. O(m) index memory, O(k) work per
// alignment. No wild cards.
BoundedReport subset_k_mismatches(const Sequence& text, const Sequence& pattern,
                                  std::vector<std::uint32_t> positions,
                                  std::uint32_t k, WorkCounters* wc = nullptr);

// Bounded distances for every alignment. When the knapsack fills within
// budget, marking plus the >= k filter feeds the subset search; otherwise
// marking of the picked instances plus correlations of the remaining
// characters count matches exactly. No wild cards. budget_override > 0
// replaces the default knapsack_budget(n, k).
BoundedReport knapsack_k_mismatches(const Sequence& text, const Sequence& pattern,
                                    std::uint32_t k, WorkCounters* wc = nullptr,
                                    const CorrelateOptions& opt = {},
                                    double budget_override = 0.0);

}  // namespace kmis
