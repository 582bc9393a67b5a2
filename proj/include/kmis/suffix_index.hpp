#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kmis/core.hpp"

namespace kmis {

// Longest match of the text from a given position against any pattern
// substring: text[text_pos..text_pos+length-1] == pattern[witness..witness+length-1]
// and the match cannot be extended (or the text ends). witness is 1 when
// length is 0.
struct MatchStat {
  std::uint32_t text_pos = 0;
  std::uint32_t length = 0;
  std::uint32_t witness = 0;
};

// Suffix array, adjacent-suffix LCP and a sparse range-minimum table over the
// pattern. Everything is built once in O(m log m); longest-common-extension
// queries then cost O(1). End-of-string compares lexicographically smallest.
// Wild cards are rejected: their extension semantics are undefined here.
// Immutable after construction, queries are freely concurrent.
class SuffixIndex {
 public:
  explicit SuffixIndex(Sequence pattern);

  std::uint32_t size() const { return static_cast<std::uint32_t>(pat_.size()); }
  const Sequence& pattern() const { return pat_; }

  // Longest d with pattern[i..i+d-1] == pattern[j..j+d-1]; i, j 1-based.
  std::uint32_t lce(std::uint32_t i, std::uint32_t j) const;

  // Longest substring of the text starting at `from` (1-based) that occurs
  // anywhere in the pattern. A wild card in the text never extends a match.
  MatchStat matching_statistics(const Sequence& text, std::uint32_t from) const;

  // Suffix start positions (1-based) in lexicographic order.
  std::span<const std::uint32_t> suffix_array() const { return sa_; }

  // adjacent_lcp()[r] is the LCP of the suffixes at sorted positions r and
  // r+1 (1-based sorted positions, so r in [1..m-1]).
  std::span<const std::uint32_t> adjacent_lcp() const {
    return {lcp_.data() + 1, lcp_.size() - 1};
  }

  // Minimum adjacent LCP between sorted positions a and b (1-based, a < b).
  std::uint32_t range_min_lcp(std::uint32_t a, std::uint32_t b) const;

 private:
  void build_suffix_array();
  void build_lcp();
  void build_rmq();

  Sequence pat_;
  std::vector<std::uint32_t> sa_;    // sa_[r]: 0-based suffix start at sorted rank r
  std::vector<std::uint32_t> rank_;  // inverse of sa_
  std::vector<std::uint32_t> lcp_;   // lcp_[r]: LCP of sa_[r-1], sa_[r]; lcp_[0] = 0
  std::vector<std::vector<std::uint32_t>> sparse_;
};

}  // namespace kmis
