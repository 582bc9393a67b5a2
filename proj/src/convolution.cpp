#include "kmis/convolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <utility>

namespace kmis {

namespace {

// The fftw planner is not reentrant; plan creation and destruction are
// serialized. Execution on per-call buffers is safe without the lock.
std::mutex fftw_planner_mutex;

std::size_t next_pow2(std::size_t v) {
  std::size_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

std::uint64_t abs_max(std::span<const std::int64_t> v) {
  std::uint64_t m = 0;
  for (std::int64_t x : v) {
    const std::uint64_t a =
        x < 0 ? ~static_cast<std::uint64_t>(x) + 1 : static_cast<std::uint64_t>(x);
    m = std::max(m, a);
  }
  return m;
}

// Scratch for one correlate() call: one transform size serves every block.
struct FftWorkspace {
  std::size_t size = 0;
  double* real = nullptr;
  fftw_complex* spec = nullptr;
  fftw_complex* pattern_spec = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;

  explicit FftWorkspace(std::size_t n) : size(n) {
    real = fftw_alloc_real(n);
    spec = fftw_alloc_complex(n / 2 + 1);
    pattern_spec = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard<std::mutex> lock(fftw_planner_mutex);
    forward = fftw_plan_dft_r2c_1d(static_cast<int>(n), real, spec, FFTW_ESTIMATE);
    inverse = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec, real, FFTW_ESTIMATE);
  }

  FftWorkspace(const FftWorkspace&) = delete;
  FftWorkspace& operator=(const FftWorkspace&) = delete;

  ~FftWorkspace() {
    {
      std::lock_guard<std::mutex> lock(fftw_planner_mutex);
      fftw_destroy_plan(forward);
      fftw_destroy_plan(inverse);
    }
    fftw_free(real);
    fftw_free(spec);
    fftw_free(pattern_spec);
  }
};

IntVector correlate_direct(std::span<const std::int64_t> x,
                           std::span<const std::int64_t> y) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  std::vector<std::pair<std::size_t, std::int64_t>> nz;
  nz.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (y[j] != 0) nz.emplace_back(j, y[j]);
  }
  IntVector out(n - m + 1, 0);
  for (std::size_t i = 0; i + m <= n; ++i) {
    std::int64_t acc = 0;
    for (const auto& [j, v] : nz) acc += x[i + j] * v;
    out[i] = acc;
  }
  return out;
}

IntVector correlate_fft(std::span<const std::int64_t> x,
                        std::span<const std::int64_t> y) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  const std::size_t total = n - m + 1;

  // Block length L - m + 1 with transform size L >= 4m keeps the circular
  // convolution free of wrap-around and the memory footprint O(m).
  const std::size_t L = 2 * next_pow2(2 * m);
  const std::size_t block_len = L - m + 1;
  const std::size_t bins = L / 2 + 1;
  FftWorkspace ws(L);

  // Pattern reversed once: correlation becomes plain convolution.
  for (std::size_t u = 0; u < m; ++u) {
    ws.real[u] = static_cast<double>(y[m - 1 - u]);
  }
  std::fill(ws.real + m, ws.real + L, 0.0);
  fftw_execute(ws.forward);
  std::memcpy(ws.pattern_spec, ws.spec, bins * sizeof(fftw_complex));

  IntVector out(total, 0);
  const double inv_scale = 1.0 / static_cast<double>(L);
  for (std::size_t o = 0; o < total; o += block_len - m + 1) {
    const std::size_t b = std::min(block_len, n - o);
    for (std::size_t u = 0; u < b; ++u) {
      ws.real[u] = static_cast<double>(x[o + u]);
    }
    std::fill(ws.real + b, ws.real + L, 0.0);
    fftw_execute(ws.forward);
    for (std::size_t f = 0; f < bins; ++f) {
      const double re = ws.spec[f][0] * ws.pattern_spec[f][0] -
                        ws.spec[f][1] * ws.pattern_spec[f][1];
      const double im = ws.spec[f][0] * ws.pattern_spec[f][1] +
                        ws.spec[f][1] * ws.pattern_spec[f][0];
      ws.spec[f][0] = re * inv_scale;
      ws.spec[f][1] = im * inv_scale;
    }
    fftw_execute(ws.inverse);
    const std::size_t in_block = std::min(b - m + 1, total - o);
    for (std::size_t i = 0; i < in_block; ++i) {
      out[o + i] = std::llround(ws.real[m - 1 + i]);
    }
  }
  return out;
}

}  // namespace

IntVector correlate(std::span<const std::int64_t> x,
                    std::span<const std::int64_t> y,
                    const CorrelateOptions& opt) {
  check_alignment_sizes(x.size(), y.size());
  const std::uint64_t max_x = abs_max(x);
  const std::uint64_t max_y = abs_max(y);
  const auto bound = static_cast<unsigned __int128>(y.size()) * max_x * max_y;
  if (bound > static_cast<unsigned __int128>(kDirectMagnitudeBound)) {
    throw precision_error("correlate: predicted magnitude exceeds the exact range");
  }
  if (max_x == 0 || max_y == 0) {
    return IntVector(x.size() - y.size() + 1, 0);
  }
  const bool fft_safe = bound <= static_cast<unsigned __int128>(kFftMagnitudeBound);
  const std::size_t weight =
      static_cast<std::size_t>(std::count_if(y.begin(), y.end(),
                                             [](std::int64_t v) { return v != 0; }));
  if (fft_safe && weight >= opt.fft_crossover) {
    return correlate_fft(x, y);
  }
  return correlate_direct(x, y);
}

IntVector indicator_correlate(const Sequence& text, const Sequence& pattern,
                              Rank alpha, const CorrelateOptions& opt) {
  if (alpha == 0) {
    throw std::invalid_argument("indicator_correlate: alpha must be a real rank");
  }
  IntVector x(text.size());
  IntVector y(pattern.size());
  for (std::size_t i = 0; i < text.size(); ++i) x[i] = text[i] == alpha ? 1 : 0;
  for (std::size_t j = 0; j < pattern.size(); ++j) y[j] = pattern[j] == alpha ? 1 : 0;
  return correlate(x, y, opt);
}

IntVector power_correlate(const Sequence& text, const Sequence& pattern,
                          int text_exp, int pattern_exp, bool position_weighted,
                          const CorrelateOptions& opt) {
  if (text_exp < 1 || text_exp > 3 || pattern_exp < 1 || pattern_exp > 3) {
    throw std::invalid_argument("power_correlate: exponents must be in [1..3]");
  }
  auto pow_small = [](std::int64_t v, int e) {
    std::int64_t r = v;
    for (int i = 1; i < e; ++i) r *= v;
    return r;
  };
  IntVector x(text.size());
  IntVector y(pattern.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    std::int64_t v = pow_small(static_cast<std::int64_t>(text[i]), text_exp);
    if (position_weighted) v *= static_cast<std::int64_t>(i + 1);
    x[i] = v;
  }
  for (std::size_t j = 0; j < pattern.size(); ++j) {
    y[j] = pow_small(static_cast<std::int64_t>(pattern[j]), pattern_exp);
  }
  return correlate(x, y, opt);
}

IntVector error_profile(const Sequence& text, const Sequence& pattern,
                        bool position_weighted, const CorrelateOptions& opt) {
  // (t-p)^2*t*p = t^3 p - 2 t^2 p^2 + t p^3
  IntVector e = power_correlate(text, pattern, 3, 1, position_weighted, opt);
  const IntVector mid = power_correlate(text, pattern, 2, 2, position_weighted, opt);
  const IntVector low = power_correlate(text, pattern, 1, 3, position_weighted, opt);
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] += low[i] - 2 * mid[i];
  }
  return e;
}

}  // namespace kmis
