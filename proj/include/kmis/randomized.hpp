#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kmis/convolution.hpp"
#include "kmis/core.hpp"

namespace kmis {

// Deterministic random stream: the same seed reproduces the same run, and
// split() derives independent child streams for phases or bench cells.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);

  std::uint64_t next();
  // Uniform draw from [0, bound), bias-free.
  std::uint64_t below(std::uint64_t bound);
  double unit();  // [0, 1)

  SeededRng split(std::uint64_t stream) const;
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

enum class MismatchKind : std::uint8_t { zero, exactly_one, other };

struct OneMismatchResult {
  MismatchKind kind = MismatchKind::other;
  std::uint32_t text_pos = 0;  // set when kind == exactly_one
};

// Classifies every alignment as an exact match, exactly one mismatch (with
// the mismatching text position), or anything else, using six correlations:
// the error profile, its position-weighted twin, and a direct verification of
// the quotient. Wild cards on either side count as matches.
std::vector<OneMismatchResult> one_mismatch(const Sequence& text,
                                            const Sequence& pattern,
                                            const CorrelateOptions& opt = {});

// Copy of the pattern keeping a uniformly random size-`count` subset of
// positions and zeroing the rest.
Sequence sample_project(const Sequence& pattern, std::uint32_t count,
                        SeededRng& rng);

// Per-alignment residual error and the mismatching text positions discovered
// so far. residual[i-1] of alignment i is zero exactly when every mismatch of
// that alignment is listed in found[i-1].
struct MismatchLedger {
  std::vector<std::int64_t> residual;
  std::vector<std::vector<std::uint32_t>> found;  // sorted text positions
  std::uint32_t k = 0;

  static MismatchLedger start(const Sequence& text, const Sequence& pattern,
                              std::uint32_t k, const CorrelateOptions& opt = {});

  // Every alignment either fully accounted for or past the threshold.
  bool settled() const;

  // Folds one discovered mismatch in; returns false for duplicates.
  bool record(std::uint32_t alignment, std::uint32_t text_pos,
              const Sequence& text, const Sequence& pattern);
};

struct SamplingConfig {
  double seed_rounds_factor = 2.0;   // rounds = ceil(factor * k * log2 n)
  double phase_steps_factor = 36.0;  // steps per halving phase = ceil(factor * k)
  CorrelateOptions correlate;
};

// One sampling step: project `count` random pattern positions, solve the
// 1-mismatch instance against the text, and fold every isolated mismatch
// into the ledger.
void sampling_step(const Sequence& text, const Sequence& pattern,
                   std::uint32_t count, SeededRng& rng, MismatchLedger& ledger,
                   const CorrelateOptions& opt = {});

// The base stage: ceil(factor * k * log2 n) sampling steps of size
// max(1, m/k), which isolates mismatches of alignments with up to about 2k of
// them.
void collect_mismatches(const Sequence& text, const Sequence& pattern,
                        std::uint32_t k, SeededRng& rng, MismatchLedger& ledger,
                        const SamplingConfig& cfg = {});

// Always-correct bounded search, wild cards welcome: sampling rounds repeat,
// with halving sample sizes for the distant alignments, until every alignment
// is settled. Only the running time is random.
BoundedReport las_vegas_k_mismatches(const Sequence& text, const Sequence& pattern,
                                     std::uint32_t k, double alpha, SeededRng& rng,
                                     const SamplingConfig& cfg = {});

struct EstimateProfile {
  std::vector<double> h;  // h[i-1] estimates alignment i
  double epsilon = 0.0;
  double alpha = 0.0;
  std::uint32_t phases = 0;
  bool one_sided = false;
};

// (1 +/- epsilon) estimate of every alignment's distance with probability
// >= 1 - m^-alpha, by repeatedly projecting the alphabet onto {1,2} and
// correlating. one_sided rescales so estimates do not undershoot.
EstimateProfile approx_count(const Sequence& text, const Sequence& pattern,
                             double epsilon, double alpha, SeededRng& rng,
                             bool one_sided = false,
                             const CorrelateOptions& opt = {});

}  // namespace kmis
