#include "kmis/counting.hpp"

#include <algorithm>
#include <cmath>

namespace kmis {

namespace {

const std::vector<std::uint32_t> kNoPositions;

// Ranks present in the table, most frequent first, ties by ascending rank.
std::vector<Rank> ranks_by_frequency(const PositionTable& table) {
  std::vector<Rank> ranks;
  for (Rank r = 1; r <= table.max_rank(); ++r) {
    if (table.frequency(r) > 0) ranks.push_back(r);
  }
  std::sort(ranks.begin(), ranks.end(), [&](Rank a, Rank b) {
    const auto fa = table.frequency(a);
    const auto fb = table.frequency(b);
    return fa != fb ? fa > fb : a < b;
  });
  return ranks;
}

// ceil(sqrt(weight / log2(max(m,2)))), at least 1: the frequent-set size that
// balances the correlation and marking phases.
std::size_t frequent_set_size(std::uint64_t weight, std::size_t m) {
  const double lg = std::log2(static_cast<double>(std::max<std::size_t>(m, 2)));
  const double raw = std::sqrt(static_cast<double>(weight) / lg);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(raw)));
}

// Match counts from the frequency split: correlations for the top set,
// marking for everything else. Leaves wild-card pairs untouched.
std::vector<std::int64_t> split_match_counts(const Sequence& text,
                                             const Sequence& pattern,
                                             const PositionTable& table,
                                             std::uint64_t weight,
                                             WorkCounters* wc,
                                             const CorrelateOptions& opt) {
  const std::size_t alignments = text.size() - pattern.size() + 1;
  std::vector<std::int64_t> matches(alignments, 0);
  std::vector<Rank> ranks = ranks_by_frequency(table);
  const std::size_t a = std::min(ranks.size(), frequent_set_size(weight, pattern.size()));

  for (std::size_t idx = 0; idx < a; ++idx) {
    const IntVector c = indicator_correlate(text, pattern, ranks[idx], opt);
    if (wc) ++wc->convolutions_run;
    for (std::size_t i = 0; i < alignments; ++i) matches[i] += c[i];
  }
  if (a < ranks.size()) {
    const std::vector<Rank> rare(ranks.begin() + static_cast<std::ptrdiff_t>(a),
                                 ranks.end());
    const std::vector<std::uint32_t> marks = mark(text, table.restricted(rare), wc);
    for (std::size_t i = 0; i < alignments; ++i) matches[i] += marks[i];
  }
  return matches;
}

}  // namespace

PositionTable::PositionTable(const Sequence& pattern) {
  pos_.resize(kmis::max_rank(pattern));
  for (std::size_t j = 0; j < pattern.size(); ++j) {
    const Rank r = pattern[j];
    if (r == 0) continue;
    pos_[r - 1].push_back(static_cast<std::uint32_t>(j + 1));
    ++total_;
  }
}

PositionTable PositionTable::restricted(std::span<const Rank> gamma) const {
  PositionTable out;
  out.pos_.resize(pos_.size());
  for (Rank r : gamma) {
    if (r == 0 || r > pos_.size()) continue;
    out.pos_[r - 1] = pos_[r - 1];
    out.total_ += pos_[r - 1].size();
  }
  return out;
}

PositionTable PositionTable::truncated(std::span<const std::uint32_t> take) const {
  PositionTable out;
  out.pos_.resize(pos_.size());
  for (std::size_t slot = 0; slot < pos_.size(); ++slot) {
    const Rank r = static_cast<Rank>(slot + 1);  // take is rank-indexed
    const std::size_t want = r < take.size() ? take[r] : 0;
    const std::size_t count = std::min(want, pos_[slot].size());
    out.pos_[slot].assign(pos_[slot].begin(),
                          pos_[slot].begin() + static_cast<std::ptrdiff_t>(count));
    out.total_ += count;
  }
  return out;
}

const std::vector<std::uint32_t>& PositionTable::positions(Rank r) const {
  if (r == 0 || r > pos_.size()) return kNoPositions;
  return pos_[r - 1];
}

std::uint32_t PositionTable::frequency(Rank r) const {
  return static_cast<std::uint32_t>(positions(r).size());
}

std::vector<std::uint32_t> mark(const Sequence& text, const PositionTable& table,
                                WorkCounters* wc) {
  std::vector<std::uint32_t> marks(text.size(), 0);
  std::uint64_t created = 0;
  for (std::size_t i = 1; i <= text.size(); ++i) {
    const Rank r = text[i - 1];
    if (r == 0) continue;
    for (std::uint32_t j : table.positions(r)) {
      if (j > i) break;  // positions ascend; i-j+1 must stay positive
      ++marks[i - j];
      ++created;
    }
  }
  if (wc) wc->marks_created += created;
  return marks;
}

DistanceProfile abrahamson_profile(const Sequence& text, const Sequence& pattern,
                                   WorkCounters* wc, const CorrelateOptions& opt) {
  check_alignment_sizes(text.size(), pattern.size());
  if (has_wildcard(text) || has_wildcard(pattern)) {
    throw std::invalid_argument(
        "abrahamson_profile: wild cards present, use wildcard_profile");
  }
  const std::size_t m = pattern.size();
  PositionTable table(pattern);
  const std::vector<std::int64_t> matches =
      split_match_counts(text, pattern, table, m, wc, opt);

  DistanceProfile out(matches.size());
  for (std::size_t i = 0; i < matches.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(static_cast<std::int64_t>(m) - matches[i]);
  }
  return out;
}

DistanceProfile wildcard_profile(const Sequence& text, const Sequence& pattern,
                                 WorkCounters* wc, const CorrelateOptions& opt) {
  check_alignment_sizes(text.size(), pattern.size());
  const std::size_t m = pattern.size();
  const std::size_t alignments = text.size() - m + 1;

  PositionTable table(pattern);
  const std::uint64_t g = table.total();
  std::vector<std::int64_t> matches(alignments, 0);
  if (g > 0) {
    matches = split_match_counts(text, pattern, table, g, wc, opt);
  }

  // Pairs with a wild card on either side all match: m minus the number of
  // alignments' doubly-non-wild positions.
  IntVector x(text.size());
  IntVector y(pattern.size());
  for (std::size_t i = 0; i < text.size(); ++i) x[i] = text[i] != 0 ? 1 : 0;
  for (std::size_t j = 0; j < pattern.size(); ++j) y[j] = pattern[j] != 0 ? 1 : 0;
  const IntVector both = correlate(x, y, opt);
  if (wc) ++wc->convolutions_run;

  DistanceProfile out(alignments);
  for (std::size_t i = 0; i < alignments; ++i) {
    const std::int64_t total_matches =
        matches[i] + (static_cast<std::int64_t>(m) - both[i]);
    out[i] = static_cast<std::uint32_t>(static_cast<std::int64_t>(m) - total_matches);
  }
  return out;
}

}  // namespace kmis
