#include "kmis/randomized.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kmis {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t error_term(Rank t, Rank p) {
  const auto a = static_cast<std::int64_t>(t);
  const auto b = static_cast<std::int64_t>(p);
  return (a - b) * (a - b) * a * b;
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed) : seed_(seed) {
  std::uint64_t state = seed;
  gen_.seed(splitmix64(state));
}

std::uint64_t SeededRng::next() { return gen_(); }

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below: zero bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

double SeededRng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

SeededRng SeededRng::split(std::uint64_t stream) const {
  std::uint64_t state = seed_ ^ (0x6a09e667f3bcc909ULL + stream);
  const std::uint64_t first = splitmix64(state);
  return SeededRng(first ^ splitmix64(state));
}

std::vector<OneMismatchResult> one_mismatch(const Sequence& text,
                                            const Sequence& pattern,
                                            const CorrelateOptions& opt) {
  const std::size_t m = pattern.size();
  check_alignment_sizes(text.size(), m);
  const IntVector residual = error_profile(text, pattern, false, opt);
  const IntVector weighted = error_profile(text, pattern, true, opt);

  std::vector<OneMismatchResult> out(residual.size());
  for (std::size_t i = 0; i < residual.size(); ++i) {
    const std::int64_t e = residual[i];
    if (e == 0) {
      out[i].kind = MismatchKind::zero;
      continue;
    }
    // A single mismatch makes the weighted sum e times its text position;
    // exact division plus one direct check confirms it.
    if (weighted[i] % e != 0) continue;
    const std::int64_t pos = weighted[i] / e;
    const auto lo = static_cast<std::int64_t>(i + 1);
    const auto hi = static_cast<std::int64_t>(i + m);
    if (pos < lo || pos > hi) continue;
    const Rank t = text[static_cast<std::size_t>(pos - 1)];
    const Rank p = pattern[static_cast<std::size_t>(pos - lo)];
    if (error_term(t, p) == e) {
      out[i].kind = MismatchKind::exactly_one;
      out[i].text_pos = static_cast<std::uint32_t>(pos);
    }
  }
  return out;
}

Sequence sample_project(const Sequence& pattern, std::uint32_t count,
                        SeededRng& rng) {
  const std::size_t m = pattern.size();
  if (count < 1 || count > m) {
    throw std::invalid_argument("sample_project: count out of range");
  }
  std::vector<std::uint32_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  Sequence out(m, 0);
  for (std::uint32_t u = 0; u < count; ++u) {
    const auto pick = u + static_cast<std::uint32_t>(rng.below(m - u));
    std::swap(idx[u], idx[pick]);
    out[idx[u]] = pattern[idx[u]];
  }
  return out;
}

MismatchLedger MismatchLedger::start(const Sequence& text, const Sequence& pattern,
                                     std::uint32_t k, const CorrelateOptions& opt) {
  MismatchLedger ledger;
  ledger.k = k;
  ledger.residual = error_profile(text, pattern, false, opt);
  ledger.found.resize(ledger.residual.size());
  return ledger;
}

bool MismatchLedger::settled() const {
  for (std::size_t i = 0; i < residual.size(); ++i) {
    if (residual[i] != 0 && found[i].size() <= k) return false;
  }
  return true;
}

bool MismatchLedger::record(std::uint32_t alignment, std::uint32_t text_pos,
                            const Sequence& text, const Sequence& pattern) {
  auto& list = found[alignment - 1];
  const auto it = std::lower_bound(list.begin(), list.end(), text_pos);
  if (it != list.end() && *it == text_pos) return false;
  list.insert(it, text_pos);
  const Rank t = text[text_pos - 1];
  const Rank p = pattern[text_pos - alignment];
  residual[alignment - 1] -= error_term(t, p);
  return true;
}

void sampling_step(const Sequence& text, const Sequence& pattern,
                   std::uint32_t count, SeededRng& rng, MismatchLedger& ledger,
                   const CorrelateOptions& opt) {
  const Sequence projected = sample_project(pattern, count, rng);
  const std::vector<OneMismatchResult> verdicts = one_mismatch(text, projected, opt);
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i].kind == MismatchKind::exactly_one) {
      // A mismatch against the projection is a mismatch against the pattern
      // at a sampled position.
      ledger.record(static_cast<std::uint32_t>(i + 1), verdicts[i].text_pos, text,
                    pattern);
    }
  }
}

void collect_mismatches(const Sequence& text, const Sequence& pattern,
                        std::uint32_t k, SeededRng& rng, MismatchLedger& ledger,
                        const SamplingConfig& cfg) {
  const std::size_t m = pattern.size();
  if (k == 0) throw std::invalid_argument("collect_mismatches: k must be positive");
  const double log2n =
      std::log2(static_cast<double>(std::max<std::size_t>(text.size(), 2)));
  const auto rounds = static_cast<std::uint64_t>(
      std::ceil(cfg.seed_rounds_factor * static_cast<double>(k) * log2n));
  const auto count =
      std::max<std::uint32_t>(1, static_cast<std::uint32_t>(m / k));
  for (std::uint64_t r = 0; r < rounds; ++r) {
    sampling_step(text, pattern, count, rng, ledger, cfg.correlate);
  }
}

BoundedReport las_vegas_k_mismatches(const Sequence& text, const Sequence& pattern,
                                     std::uint32_t k, double alpha, SeededRng& rng,
                                     const SamplingConfig& cfg) {
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  check_alignment_sizes(n, m);
  if (k == 0 || k > m) {
    throw std::invalid_argument("las_vegas_k_mismatches: need 1 <= k <= m");
  }

  MismatchLedger ledger = MismatchLedger::start(text, pattern, k, cfg.correlate);

  const double log2n = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
  // Halving phases cover alignments with 2^l k < q <= 2^(l+1) k; none are
  // needed once 2k >= m.
  std::uint32_t w = 0;
  if (2 * static_cast<std::size_t>(k) < m) {
    w = static_cast<std::uint32_t>(
        std::floor(std::log2(std::floor(static_cast<double>(m) /
                                        (2.0 * static_cast<double>(k))))));
  }
  const auto phase_steps = static_cast<std::uint64_t>(std::ceil(
      static_cast<double>(k) >= log2n
          ? cfg.phase_steps_factor * static_cast<double>(k)
          : cfg.phase_steps_factor * std::max(alpha, 1.0) * log2n));

  while (!ledger.settled()) {
    collect_mismatches(text, pattern, k, rng, ledger, cfg);

    std::uint32_t min_count =
        std::max<std::uint32_t>(1, static_cast<std::uint32_t>(m / k));
    for (std::uint32_t level = 1; level <= w && !ledger.settled(); ++level) {
      const auto count = std::max<std::uint32_t>(
          1, static_cast<std::uint32_t>(
                 m / ((std::size_t{1} << (level + 1)) * k)));
      min_count = std::min(min_count, count);
      for (std::uint64_t s = 0; s < phase_steps; ++s) {
        sampling_step(text, pattern, count, rng, ledger, cfg.correlate);
      }
    }
    // Size-1 samples reach alignments that mismatch almost everywhere; when
    // no phase above used them, one extra phase keeps progress certain for
    // every unsettled alignment.
    if (!ledger.settled() && min_count > 1) {
      for (std::uint64_t s = 0; s < phase_steps; ++s) {
        sampling_step(text, pattern, 1, rng, ledger, cfg.correlate);
      }
    }
  }

  BoundedReport report;
  report.k = k;
  report.entries.reserve(ledger.residual.size());
  for (std::size_t i = 0; i < ledger.residual.size(); ++i) {
    ReportEntry e;
    e.alignment = static_cast<std::uint32_t>(i + 1);
    if (ledger.found[i].size() > k) {
      e.exceeds_k = true;
    } else {
      e.distance = static_cast<std::uint32_t>(ledger.found[i].size());
    }
    report.entries.push_back(e);
  }
  return report;
}

EstimateProfile approx_count(const Sequence& text, const Sequence& pattern,
                             double epsilon, double alpha, SeededRng& rng,
                             bool one_sided, const CorrelateOptions& opt) {
  const std::size_t m = pattern.size();
  check_alignment_sizes(text.size(), m);
  if (m < 2) throw std::invalid_argument("approx_count: need m >= 2");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("approx_count: need 0 < epsilon < 1");
  }
  if (alpha <= 0.0) throw std::invalid_argument("approx_count: need alpha > 0");

  const auto phases = static_cast<std::uint32_t>(
      std::ceil(6.0 * (alpha + 3.0) * std::log(static_cast<double>(m)) /
                (epsilon * epsilon)));
  const Rank top = std::max(max_rank(text), max_rank(pattern));

  const std::size_t alignments = text.size() - m + 1;
  IntVector accumulated(alignments, 0);
  std::vector<Rank> mapping(top + 1, 0);
  Sequence mapped_text(text.size());
  Sequence mapped_pattern(m);
  for (std::uint32_t phase = 0; phase < phases; ++phase) {
    for (Rank r = 1; r <= top; ++r) {
      mapping[r] = 1 + static_cast<Rank>(rng.below(2));
    }
    for (std::size_t i = 0; i < text.size(); ++i) mapped_text[i] = mapping[text[i]];
    for (std::size_t j = 0; j < m; ++j) mapped_pattern[j] = mapping[pattern[j]];
    const IntVector phase_counts =
        error_profile(mapped_text, mapped_pattern, false, opt);
    for (std::size_t i = 0; i < alignments; ++i) accumulated[i] += phase_counts[i];
  }

  EstimateProfile profile;
  profile.epsilon = epsilon;
  profile.alpha = alpha;
  profile.phases = phases;
  profile.one_sided = one_sided;
  const double divisor = one_sided
                             ? (1.0 - epsilon) * static_cast<double>(phases)
                             : static_cast<double>(phases);
  profile.h.resize(alignments);
  for (std::size_t i = 0; i < alignments; ++i) {
    profile.h[i] = static_cast<double>(accumulated[i]) / divisor;
  }
  return profile;
}

}  // namespace kmis
