#include "kmis/suffix_index.hpp"

#include <algorithm>
#include <bit>

namespace kmis {

SuffixIndex::SuffixIndex(Sequence pattern) : pat_(std::move(pattern)) {
  if (pat_.empty()) {
    throw std::invalid_argument("suffix index: empty pattern");
  }
  if (has_wildcard(pat_)) {
    throw std::invalid_argument("suffix index: wild cards are not supported");
  }
  build_suffix_array();
  build_lcp();
  build_rmq();
}

// Prefix doubling over the pattern plus a rank-0 sentinel, counting sorts per
// round: O(m log m) total.
void SuffixIndex::build_suffix_array() {
  const std::size_t m = pat_.size();
  const std::size_t len = m + 1;  // sentinel at index m, rank 0, smallest
  std::vector<std::uint32_t> s(len);
  for (std::size_t i = 0; i < m; ++i) s[i] = pat_[i];
  s[m] = 0;

  std::vector<std::uint32_t> sa(len), cls(len), sa2(len), cls2(len);
  const std::size_t k0 = static_cast<std::size_t>(
                             *std::max_element(s.begin(), s.end())) + 1;
  std::vector<std::uint32_t> cnt(std::max(k0, len), 0);

  for (std::size_t i = 0; i < len; ++i) ++cnt[s[i]];
  for (std::size_t v = 1; v < k0; ++v) cnt[v] += cnt[v - 1];
  for (std::size_t i = len; i-- > 0;) sa[--cnt[s[i]]] = static_cast<std::uint32_t>(i);
  cls[sa[0]] = 0;
  std::size_t classes = 1;
  for (std::size_t r = 1; r < len; ++r) {
    if (s[sa[r]] != s[sa[r - 1]]) ++classes;
    cls[sa[r]] = static_cast<std::uint32_t>(classes - 1);
  }

  for (std::size_t h = 1; h < len && classes < len; h <<= 1) {
    // Shift: sa2 ordered by the second half of each pair.
    for (std::size_t r = 0; r < len; ++r) {
      sa2[r] = sa[r] >= h ? static_cast<std::uint32_t>(sa[r] - h)
                          : static_cast<std::uint32_t>(sa[r] + len - h);
    }
    std::fill(cnt.begin(), cnt.begin() + static_cast<std::ptrdiff_t>(classes), 0);
    for (std::size_t r = 0; r < len; ++r) ++cnt[cls[sa2[r]]];
    for (std::size_t v = 1; v < classes; ++v) cnt[v] += cnt[v - 1];
    for (std::size_t r = len; r-- > 0;) sa[--cnt[cls[sa2[r]]]] = sa2[r];

    cls2[sa[0]] = 0;
    classes = 1;
    for (std::size_t r = 1; r < len; ++r) {
      const std::size_t cur_hi = cls[(sa[r] + h) % len];
      const std::size_t prev_hi = cls[(sa[r - 1] + h) % len];
      if (cls[sa[r]] != cls[sa[r - 1]] || cur_hi != prev_hi) ++classes;
      cls2[sa[r]] = static_cast<std::uint32_t>(classes - 1);
    }
    std::swap(cls, cls2);
  }

  // Drop the sentinel suffix, which sorts first.
  sa_.assign(sa.begin() + 1, sa.end());
  rank_.resize(m);
  for (std::size_t r = 0; r < m; ++r) rank_[sa_[r]] = static_cast<std::uint32_t>(r);
}

void SuffixIndex::build_lcp() {
  const std::size_t m = pat_.size();
  lcp_.assign(m, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (rank_[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa_[rank_[i] - 1];
    while (i + h < m && j + h < m && pat_[i + h] == pat_[j + h]) ++h;
    lcp_[rank_[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
}

void SuffixIndex::build_rmq() {
  const std::size_t m = lcp_.size();
  const std::size_t levels = static_cast<std::size_t>(std::bit_width(m));
  sparse_.assign(levels, {});
  sparse_[0] = lcp_;
  for (std::size_t j = 1; j < levels; ++j) {
    const std::size_t span = std::size_t{1} << j;
    sparse_[j].resize(m + 1 - span);
    for (std::size_t r = 0; r + span <= m; ++r) {
      sparse_[j][r] = std::min(sparse_[j - 1][r], sparse_[j - 1][r + span / 2]);
    }
  }
}

std::uint32_t SuffixIndex::range_min_lcp(std::uint32_t a, std::uint32_t b) const {
  if (a >= b || b > pat_.size()) {
    throw std::invalid_argument("range_min_lcp: need sorted positions a < b <= m");
  }
  // Adjacent LCP entries between sorted positions a and b live at
  // lcp_[a..b-1] in 0-based storage.
  const std::size_t lo = a;
  const std::size_t hi = b - 1;
  const std::size_t j = static_cast<std::size_t>(std::bit_width(hi - lo + 1)) - 1;
  return std::min(sparse_[j][lo], sparse_[j][hi + 1 - (std::size_t{1} << j)]);
}

std::uint32_t SuffixIndex::lce(std::uint32_t i, std::uint32_t j) const {
  const std::uint32_t m = size();
  if (i < 1 || j < 1 || i > m || j > m) {
    throw std::invalid_argument("lce: positions out of range");
  }
  if (i == j) return m - i + 1;
  std::uint32_t a = rank_[i - 1];
  std::uint32_t b = rank_[j - 1];
  if (a > b) std::swap(a, b);
  return range_min_lcp(a + 1, b + 1);
}

MatchStat SuffixIndex::matching_statistics(const Sequence& text,
                                           std::uint32_t from) const {
  const std::uint32_t m = size();
  if (from < 1 || from > text.size()) {
    throw std::invalid_argument("matching_statistics: position out of range");
  }
  // Suffixes sharing the current l-prefix form one sa_ interval; inside it
  // exhausted suffixes sort first, the rest ascend by the character at
  // offset l, so each extension is two binary searches.
  std::size_t lo = 0;
  std::size_t hi = m;  // half-open [lo, hi)
  std::uint32_t l = 0;
  std::uint32_t last_witness = 1;
  while (from - 1 + l < text.size() && l < m) {
    const Rank c = text[from - 1 + l];
    if (c == 0) break;  // wild cards never extend a match
    auto key_less = [&](std::uint32_t suffix, Rank value) {
      return suffix + l >= m || pat_[suffix + l] < value;
    };
    const auto begin = sa_.begin() + static_cast<std::ptrdiff_t>(lo);
    const auto end = sa_.begin() + static_cast<std::ptrdiff_t>(hi);
    const auto first = std::lower_bound(begin, end, c, key_less);
    const auto last = std::lower_bound(first, end, static_cast<Rank>(c + 1), key_less);
    if (first == last) break;
    lo = static_cast<std::size_t>(first - sa_.begin());
    hi = static_cast<std::size_t>(last - sa_.begin());
    ++l;
    last_witness = sa_[lo] + 1;
  }
  return MatchStat{from, l, last_witness};
}

}  // namespace kmis
