#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kmis/core.hpp"

namespace kmis {

using IntVector = std::vector<std::int64_t>;

// Exact values up to this predicted magnitude survive the double-precision
// transform with room to spare for rounding.
inline constexpr std::int64_t kFftMagnitudeBound = std::int64_t{1} << 50;

// Plain 64-bit summation stays exact below this predicted magnitude.
inline constexpr std::int64_t kDirectMagnitudeBound = std::int64_t{1} << 62;

struct CorrelateOptions {
  // Minimum number of non-zero pattern coefficients before the transform
  // path pays off; everything lighter runs as plain summation.
  std::size_t fft_crossover = 64;
};

// Cross-correlation c_i = sum_j x[i+j-1] * y[j] for every alignment
// i in [1..n-m+1]. Results are always bit-exact: the engine predicts the
// maximum magnitude m*max|x|*max|y| in advance, uses the transform only when
// that fits kFftMagnitudeBound, falls back to direct summation up to
// kDirectMagnitudeBound, and throws precision_error beyond that rather than
// ever returning a rounded value. The text is processed in overlapping
// power-of-two blocks so scratch memory stays proportional to |y|.
IntVector correlate(std::span<const std::int64_t> x,
                    std::span<const std::int64_t> y,
                    const CorrelateOptions& opt = {});

// Number of positions j with text[i+j-1] == pattern[j] == alpha, per
// alignment. alpha must be a real rank (>= 1).
IntVector indicator_correlate(const Sequence& text, const Sequence& pattern,
                              Rank alpha, const CorrelateOptions& opt = {});

// sum_j (i+j-1)^w * t_{i+j-1}^a * p_j^b with w in {0,1} and a,b in {1,2,3}.
// Wild cards (rank 0) drop out automatically because 0^a == 0.
IntVector power_correlate(const Sequence& text, const Sequence& pattern,
                          int text_exp, int pattern_exp, bool position_weighted,
                          const CorrelateOptions& opt = {});

// Error-term profile sum_j (t-p)^2*t*p (position-weighted when asked),
// expanded into three power correlations. Zero exactly at the alignments
// where text and pattern match, wild cards counting as matches.
IntVector error_profile(const Sequence& text, const Sequence& pattern,
                        bool position_weighted, const CorrelateOptions& opt = {});

}  // namespace kmis
