#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kmis/convolution.hpp"
#include "kmis/core.hpp"

namespace kmis {

// Work instrumentation shared by the deterministic algorithms. Counters only
// ever grow during a run.
struct WorkCounters {
  std::uint64_t marks_created = 0;
  std::uint64_t convolutions_run = 0;
  std::uint64_t lce_queries = 0;
  std::uint64_t text_segments = 0;      // matching-statistic segments scanned
  std::uint64_t filter_candidates = 0;  // alignments surviving the mark filter
};

// Ascending pattern positions per rank; wild-card positions are excluded.
class PositionTable {
 public:
  explicit PositionTable(const Sequence& pattern);

  // Table reduced to the given ranks.
  PositionTable restricted(std::span<const Rank> gamma) const;

  // Table keeping only the first take[r] positions of every rank r; take is
  // rank-indexed, entry 0 unused.
  PositionTable truncated(std::span<const std::uint32_t> take) const;

  const std::vector<std::uint32_t>& positions(Rank r) const;
  std::uint32_t frequency(Rank r) const;
  Rank max_rank() const { return static_cast<Rank>(pos_.size()); }

  // Number of listed positions; g for the full table.
  std::uint64_t total() const { return total_; }

 private:
  PositionTable() = default;
  std::vector<std::vector<std::uint32_t>> pos_;  // pos_[r-1]: positions of rank r
  std::uint64_t total_ = 0;
};

// For every text position holding a tabled character, bumps the counter of
// each alignment that would match it against one of that character's pattern
// instances. marks[i-1] belongs to alignment i; the vector runs to n so
// suffix overlaps keep their marks, callers read [1..n-m+1].
std::vector<std::uint32_t> mark(const Sequence& text, const PositionTable& table,
                                WorkCounters* wc = nullptr);

// Exact profile without wild cards: correlations for the most frequent
// pattern characters, marking for the rest. Throws std::invalid_argument if
// either sequence contains a wild card.
DistanceProfile abrahamson_profile(const Sequence& text, const Sequence& pattern,
                                   WorkCounters* wc = nullptr,
                                   const CorrelateOptions& opt = {});

// Exact profile with wild cards on either side: the frequency split runs on
// the non-wild-card positions and a single correlation accounts for every
// pair touching a wild card.
DistanceProfile wildcard_profile(const Sequence& text, const Sequence& pattern,
                                 WorkCounters* wc = nullptr,
                                 const CorrelateOptions& opt = {});

}  // namespace kmis
