#include "kmis/kmismatch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kmis {

namespace {

void reject_wildcards(const Sequence& text, const Sequence& pattern,
                      const char* who) {
  if (has_wildcard(text) || has_wildcard(pattern)) {
    throw std::invalid_argument(std::string(who) + ": wild cards are not supported");
  }
}

}  // namespace

double knapsack_budget(std::size_t n, std::uint32_t k) {
  const double lg = std::log2(static_cast<double>(std::max<std::uint32_t>(k, 2)));
  return static_cast<double>(n) * std::sqrt(static_cast<double>(k) * lg);
}

KnapsackPlan knapsack_plan(std::span<const std::uint32_t> pattern_freq,
                           std::span<const std::uint64_t> text_freq,
                           std::uint32_t k, double budget) {
  if (k == 0) throw std::invalid_argument("knapsack_plan: k must be positive");
  if (text_freq.size() < pattern_freq.size()) {
    throw std::invalid_argument("knapsack_plan: frequency tables disagree");
  }
  KnapsackPlan plan;
  plan.budget = budget;
  plan.picked.assign(pattern_freq.size(), 0);

  std::vector<Rank> order;
  for (Rank r = 1; r < pattern_freq.size(); ++r) {
    if (pattern_freq[r] > 0) order.push_back(r);
  }
  std::sort(order.begin(), order.end(), [&](Rank a, Rank b) {
    return text_freq[a] != text_freq[b] ? text_freq[a] < text_freq[b] : a < b;
  });

  const std::uint64_t target = 2 * static_cast<std::uint64_t>(k);
  for (std::size_t idx = 0;
       idx < order.size() && plan.size < target &&
       static_cast<double>(plan.cost) < budget;
       ++idx) {
    const Rank r = order[idx];
    const std::uint64_t take =
        std::min<std::uint64_t>(pattern_freq[r], target - plan.size);
    plan.picked[r] = static_cast<std::uint32_t>(take);
    plan.size += take;
    plan.cost += take * text_freq[r];
  }
  plan.filled = plan.size == target;
  return plan;
}

std::uint32_t update_mism(std::uint32_t count, std::uint32_t s1, std::uint32_t s2,
                          std::uint32_t len, std::uint32_t k,
                          const SuffixIndex& index, WorkCounters* wc) {
  if (s1 == s2) return count;  // identical substrings, nothing to find
  while (len > 0 && count <= k) {
    if (wc) ++wc->lce_queries;
    const std::uint32_t d = index.lce(s1, s2);
    if (d >= len) return count;
    ++count;
    s1 += d + 1;
    s2 += d + 1;
    len -= d + 1;
  }
  return count;
}

BoundedReport subset_k_mismatches(const Sequence& text, const Sequence& pattern,
                                  std::vector<std::uint32_t> positions,
                                  std::uint32_t k, WorkCounters* wc) {
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  check_alignment_sizes(n, m);
  reject_wildcards(text, pattern, "subset_k_mismatches");

  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  if (!positions.empty() &&
      (positions.front() < 1 || positions.back() > n - m + 1)) {
    throw std::invalid_argument("subset_k_mismatches: alignment out of range");
  }

  BoundedReport report;
  report.k = k;
  report.entries.resize(positions.size());
  if (positions.empty()) return report;

  const SuffixIndex index{Sequence(pattern)};

  std::vector<std::uint32_t> counts(positions.size(), 0);
  std::vector<std::size_t> active;  // indices into `positions`
  std::size_t next = 0;

  auto finalize = [&](std::size_t idx) {
    ReportEntry& e = report.entries[idx];
    e.alignment = positions[idx];
    if (counts[idx] > k) {
      e.exceeds_k = true;
    } else {
      e.distance = counts[idx];
    }
  };

  std::uint64_t pos = 1;
  while (pos <= n) {
    if (wc) ++wc->text_segments;
    const MatchStat ms =
        index.matching_statistics(text, static_cast<std::uint32_t>(pos));
    const std::uint64_t matched_end = pos + ms.length - 1;  // may be pos-1 if empty
    const std::uint64_t breaking = pos + ms.length;         // first unmatched position
    const std::uint64_t seg_end = std::min<std::uint64_t>(breaking, n);

    while (next < positions.size() && positions[next] <= breaking) {
      active.push_back(next++);
    }

    std::size_t keep = 0;
    for (std::size_t slot = 0; slot < active.size(); ++slot) {
      const std::size_t idx = active[slot];
      const std::uint64_t s = positions[idx];
      const std::uint64_t window_end = s + m - 1;
      std::uint32_t c = counts[idx];

      // Mismatches inside the matched region, via the pattern twin.
      const std::uint64_t start = std::max<std::uint64_t>(s, pos);
      const std::uint64_t stop = std::min<std::uint64_t>(matched_end, window_end);
      if (ms.length > 0 && start <= stop) {
        const auto offset = static_cast<std::uint32_t>(start - s + 1);
        const auto twin = static_cast<std::uint32_t>(ms.witness + (start - pos));
        c = update_mism(c, offset, twin,
                        static_cast<std::uint32_t>(stop - start + 1), k, index, wc);
      }
      // The character that broke the match is compared head-on; the twin
      // cannot stand in for it.
      if (c <= k && breaking <= n && breaking >= s && breaking <= window_end) {
        if (text[breaking - 1] != pattern[breaking - s]) ++c;
      }
      counts[idx] = c;

      if (c > k || window_end <= seg_end) {
        finalize(idx);  // ruled out, or the whole window has been scanned
      } else {
        active[keep++] = idx;
      }
    }
    active.resize(keep);
    pos = breaking + 1;
  }
  return report;
}

BoundedReport knapsack_k_mismatches(const Sequence& text, const Sequence& pattern,
                                    std::uint32_t k, WorkCounters* wc,
                                    const CorrelateOptions& opt,
                                    double budget_override) {
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  check_alignment_sizes(n, m);
  reject_wildcards(text, pattern, "knapsack_k_mismatches");
  if (k == 0 || k > m) {
    throw std::invalid_argument("knapsack_k_mismatches: need 1 <= k <= m");
  }
  const std::size_t alignments = n - m + 1;

  const Rank top = std::max(max_rank(text), max_rank(pattern));
  std::vector<std::uint32_t> pattern_freq(top + 1, 0);
  std::vector<std::uint64_t> text_freq(top + 1, 0);
  for (Rank r : pattern) ++pattern_freq[r];
  for (Rank r : text) ++text_freq[r];

  const double budget =
      budget_override > 0.0 ? budget_override : knapsack_budget(n, k);
  const KnapsackPlan plan = knapsack_plan(pattern_freq, text_freq, k, budget);
  const PositionTable table(pattern);

  if (plan.filled) {
    // A perfect alignment earns exactly 2k marks, so anything under k marks
    // hides more than k mismatches and only the rest needs verification.
    const std::vector<std::uint32_t> marks =
        mark(text, table.truncated(plan.picked), wc);
    std::vector<std::uint32_t> candidates;
    for (std::size_t i = 0; i < alignments; ++i) {
      if (marks[i] >= k) candidates.push_back(static_cast<std::uint32_t>(i + 1));
    }
    if (wc) wc->filter_candidates += candidates.size();

    BoundedReport verified =
        subset_k_mismatches(text, pattern, std::move(candidates), k, wc);
    BoundedReport report;
    report.k = k;
    report.entries.reserve(alignments);
    std::size_t vi = 0;
    for (std::size_t i = 1; i <= alignments; ++i) {
      if (vi < verified.entries.size() && verified.entries[vi].alignment == i) {
        report.entries.push_back(verified.entries[vi++]);
      } else {
        report.entries.push_back(
            {static_cast<std::uint32_t>(i), 0, /*exceeds_k=*/true});
      }
    }
    return report;
  }

  // Budget ran out (or the pattern is too short to fill 2k): marks from the
  // fully picked characters plus one correlation per remaining character add
  // up to exact match counts. A partially picked character is correlated in
  // full and its partial marks dropped, so nothing is counted twice.
  std::vector<std::uint32_t> full_take(plan.picked.size(), 0);
  std::vector<Rank> correlated;
  for (Rank r = 1; r <= top; ++r) {
    if (pattern_freq[r] == 0) continue;
    if (plan.picked[r] == pattern_freq[r]) {
      full_take[r] = plan.picked[r];
    } else {
      correlated.push_back(r);
    }
  }
  const std::vector<std::uint32_t> marks =
      mark(text, table.truncated(full_take), wc);
  std::vector<std::int64_t> match_counts(alignments, 0);
  for (std::size_t i = 0; i < alignments; ++i) match_counts[i] = marks[i];
  for (Rank r : correlated) {
    const IntVector c = indicator_correlate(text, pattern, r, opt);
    if (wc) ++wc->convolutions_run;
    for (std::size_t i = 0; i < alignments; ++i) match_counts[i] += c[i];
  }

  BoundedReport report;
  report.k = k;
  report.entries.reserve(alignments);
  for (std::size_t i = 0; i < alignments; ++i) {
    const auto distance =
        static_cast<std::uint32_t>(static_cast<std::int64_t>(m) - match_counts[i]);
    if (distance <= k) {
      report.entries.push_back({static_cast<std::uint32_t>(i + 1), distance, false});
    } else {
      report.entries.push_back({static_cast<std::uint32_t>(i + 1), 0, true});
    }
  }
  return report;
}

}  // namespace kmis
