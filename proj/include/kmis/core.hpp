#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kmis {

// Symbol rank. Rank 0 is reserved for the wild card, which matches any
// character and contributes nothing to any error term.
using Rank = std::uint32_t;

// A text or pattern after alphabet encoding. Element i-1 holds the rank of
// character i; positions and alignments are 1-based throughout the library,
// so alignment i places the pattern against text[i..i+m-1].
using Sequence = std::vector<Rank>;

// Exact Hamming distance per alignment; entry i-1 belongs to alignment i.
using DistanceProfile = std::vector<std::uint32_t>;

// Raised when a correlation cannot be computed exactly.
class precision_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maps raw bytes to ranks in [1..sigma], assigned in first-occurrence order.
// The wild card byte, when configured, always encodes to rank 0 and never
// owns a rank of its own. One alphabet must encode both text and pattern so
// that their ranks agree.
class Alphabet {
 public:
  Alphabet() { rank_.fill(-1); }
  explicit Alphabet(unsigned char wildcard_byte) : wildcard_(wildcard_byte) {
    rank_.fill(-1);
  }

  // Encodes raw bytes, extending the rank mapping as new bytes appear.
  Sequence encode(std::string_view raw);

  // Inverse of encode; rank 0 becomes the wild card byte.
  std::string decode(const Sequence& seq) const;

  std::size_t sigma() const { return byte_of_.size(); }
  std::optional<unsigned char> wildcard_byte() const { return wildcard_; }

  bool has_rank(unsigned char b) const {
    return rank_[b] >= 0 || (wildcard_ && *wildcard_ == b);
  }
  Rank rank_of(unsigned char b) const;
  unsigned char byte_of(Rank r) const;

 private:
  std::array<std::int32_t, 256> rank_{};
  std::vector<unsigned char> byte_of_;
  std::optional<unsigned char> wildcard_;
};

// Per-alignment verdict of a k-bounded search: the exact distance when it is
// at most k, otherwise only the fact that it exceeds k. `distance` is 0 when
// `exceeds_k` is set.
struct ReportEntry {
  std::uint32_t alignment = 0;
  std::uint32_t distance = 0;
  bool exceeds_k = false;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct BoundedReport {
  std::uint32_t k = 0;
  std::vector<ReportEntry> entries;  // ascending alignment order

  friend bool operator==(const BoundedReport&, const BoundedReport&) = default;
};

// The O(nm) scan every other algorithm is checked against. A rank-0 symbol on
// either side counts as a match. Throws std::invalid_argument when the
// pattern is empty or longer than the text.
DistanceProfile naive_profile(const Sequence& text, const Sequence& pattern);

// Reduces a full profile to the bounded-report shape at threshold k.
BoundedReport threshold_profile(const DistanceProfile& profile, std::uint32_t k);

// Largest rank present (0 for an all-wild-card or empty sequence).
Rank max_rank(const Sequence& seq);

bool has_wildcard(const Sequence& seq);

// Shared precondition of all alignment scans: 1 <= m <= n.
void check_alignment_sizes(std::size_t n, std::size_t m);

}  // namespace kmis
