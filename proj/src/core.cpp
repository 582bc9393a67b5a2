#include "kmis/core.hpp"

#include <algorithm>

namespace kmis {

Sequence Alphabet::encode(std::string_view raw) {
  if (raw.empty()) {
    throw std::invalid_argument("encode: empty input");
  }
  Sequence out;
  out.reserve(raw.size());
  for (unsigned char b : raw) {
    if (wildcard_ && *wildcard_ == b) {
      out.push_back(0);
      continue;
    }
    if (rank_[b] < 0) {
      byte_of_.push_back(b);
      rank_[b] = static_cast<std::int32_t>(byte_of_.size());
    }
    out.push_back(static_cast<Rank>(rank_[b]));
  }
  return out;
}

std::string Alphabet::decode(const Sequence& seq) const {
  std::string out;
  out.reserve(seq.size());
  for (Rank r : seq) {
    out.push_back(static_cast<char>(byte_of(r)));
  }
  return out;
}

Rank Alphabet::rank_of(unsigned char b) const {
  if (wildcard_ && *wildcard_ == b) return 0;
  if (rank_[b] < 0) {
    throw std::out_of_range("rank_of: byte was never encoded");
  }
  return static_cast<Rank>(rank_[b]);
}

unsigned char Alphabet::byte_of(Rank r) const {
  if (r == 0) {
    if (!wildcard_) throw std::out_of_range("byte_of: no wild card byte configured");
    return *wildcard_;
  }
  if (r > byte_of_.size()) {
    throw std::out_of_range("byte_of: rank out of range");
  }
  return byte_of_[r - 1];
}

void check_alignment_sizes(std::size_t n, std::size_t m) {
  if (m == 0) throw std::invalid_argument("empty pattern");
  if (m > n) throw std::invalid_argument("pattern longer than text");
}

DistanceProfile naive_profile(const Sequence& text, const Sequence& pattern) {
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  check_alignment_sizes(n, m);
  DistanceProfile out(n - m + 1, 0);
  for (std::size_t i = 0; i + m <= n; ++i) {
    std::uint32_t d = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const Rank t = text[i + j];
      const Rank p = pattern[j];
      d += (t != 0 && p != 0 && t != p) ? 1 : 0;
    }
    out[i] = d;
  }
  return out;
}

BoundedReport threshold_profile(const DistanceProfile& profile, std::uint32_t k) {
  BoundedReport report;
  report.k = k;
  report.entries.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    ReportEntry e;
    e.alignment = static_cast<std::uint32_t>(i + 1);
    if (profile[i] <= k) {
      e.distance = profile[i];
    } else {
      e.exceeds_k = true;
    }
    report.entries.push_back(e);
  }
  return report;
}

Rank max_rank(const Sequence& seq) {
  Rank r = 0;
  for (Rank v : seq) r = std::max(r, v);
  return r;
}

bool has_wildcard(const Sequence& seq) {
  return std::find(seq.begin(), seq.end(), Rank{0}) != seq.end();
}

}  // namespace kmis
