// kmis: pattern matching with mismatches, with and without wild cards.
//
// Subcommands: count (full distance profile), kmm (bounded search), kmm-lv
// (randomized always-correct bounded search), approx (distance estimates),
// bench (timing sweep), verify (cross-check an algorithm against the naive
// scan). Profiles and reports print as TSV `position<TAB>value` with `>k` for
// alignments past the threshold; bench prints CSV.
//
// Exit codes: 0 success, 1 verify mismatch, 2 usage error, 3 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kmis/bench.hpp"
#include "kmis/core.hpp"
#include "kmis/counting.hpp"
#include "kmis/kmismatch.hpp"
#include "kmis/randomized.hpp"
#include "kmis/text_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct CommonOptions {
  std::string text_path;
  std::string format = "plain";
  std::string pattern_literal;
  std::string pattern_path;
  std::uint32_t random_pattern = 0;
  std::string wildcard;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
  std::size_t fft_crossover = 64;
};

struct Inputs {
  kmis::Alphabet alphabet;
  kmis::Sequence text;
  kmis::Sequence pattern;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_pattern) {
  cmd->add_option("--text", opt.text_path, "Text file")->required();
  cmd->add_option("--format", opt.format, "Input format: plain or fasta")
      ->check(CLI::IsMember({"plain", "fasta"}));
  if (needs_pattern) {
    auto* lit = cmd->add_option("--pattern", opt.pattern_literal, "Pattern literal");
    auto* file = cmd->add_option("--pattern-file", opt.pattern_path, "Pattern file");
    auto* rnd = cmd->add_option("--random-pattern", opt.random_pattern,
                                "Extract a random pattern of this length from the text");
    lit->excludes(file)->excludes(rnd);
    file->excludes(rnd);
  }
  cmd->add_option("--wildcard", opt.wildcard,
                  "Byte treated as the wild card (single character)");
  cmd->add_option("--seed", opt.seed, "Random seed (flag wins over KMIS_SEED)")
      ->each([&opt](const std::string&) { opt.seed_given = true; });
  cmd->add_option("--out", opt.out_path, "Output file (default stdout)");
  cmd->add_option("--fft-crossover", opt.fft_crossover,
                  "Pattern weight at which correlations switch to the transform");
}

std::uint64_t resolve_seed(const CommonOptions& opt) {
  if (opt.seed_given) return opt.seed;
  if (const char* env = std::getenv("KMIS_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return opt.seed;
}

Inputs load_inputs(const CommonOptions& opt, bool needs_pattern) {
  Inputs in;
  if (opt.wildcard.size() > 1) {
    throw CLI::ValidationError("--wildcard", "expects a single character");
  }
  in.alphabet = opt.wildcard.empty()
                    ? kmis::Alphabet()
                    : kmis::Alphabet(static_cast<unsigned char>(opt.wildcard[0]));
  in.seed = resolve_seed(opt);
  const auto format = opt.format == "fasta" ? kmis::TextFormat::fasta
                                            : kmis::TextFormat::plain;
  in.text = in.alphabet.encode(kmis::read_payload(opt.text_path, format));
  if (!needs_pattern) return in;

  if (!opt.pattern_literal.empty()) {
    in.pattern = in.alphabet.encode(opt.pattern_literal);
  } else if (!opt.pattern_path.empty()) {
    in.pattern = in.alphabet.encode(kmis::read_payload(opt.pattern_path, format));
  } else if (opt.random_pattern > 0) {
    kmis::SeededRng rng = kmis::SeededRng(in.seed).split(0x70617474);
    in.pattern = kmis::extract_pattern(in.text, opt.random_pattern, rng);
  } else {
    throw CLI::ValidationError(
        "pattern", "one of --pattern, --pattern-file, --random-pattern required");
  }
  return in;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

void print_profile(std::ostream& out, const kmis::DistanceProfile& profile) {
  for (std::size_t i = 0; i < profile.size(); ++i) {
    out << (i + 1) << '\t' << profile[i] << '\n';
  }
}

void print_report(std::ostream& out, const kmis::BoundedReport& report) {
  for (const kmis::ReportEntry& e : report.entries) {
    out << e.alignment << '\t';
    if (e.exceeds_k) {
      out << '>' << report.k;
    } else {
      out << e.distance;
    }
    out << '\n';
  }
}

std::vector<std::uint32_t> all_positions(const kmis::Sequence& text,
                                         const kmis::Sequence& pattern) {
  std::vector<std::uint32_t> all(text.size() - pattern.size() + 1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = static_cast<std::uint32_t>(i + 1);
  }
  return all;
}

std::vector<std::uint64_t> parse_list(const std::string& csv, const char* what) {
  std::vector<std::uint64_t> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::strtoull(item.c_str(), nullptr, 10));
  }
  if (out.empty()) {
    throw CLI::ValidationError(what, "expects a comma-separated list");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern matching with mismatches under Hamming distance"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string algo;
  std::uint32_t k = 1;
  double epsilon = 0.2;
  double alpha = 1.0;
  bool one_sided = false;
  std::string positions_csv;
  double budget_override = 0.0;
  kmis::SamplingConfig sampling;
  kmis::CorrelateOptions correlate_opt;

  auto* count = app.add_subcommand("count", "Exact distance profile");
  add_common(count, opt, true);
  count->add_option("--algo", algo, "naive | abrahamson | wildcard")
      ->required()
      ->check(CLI::IsMember({"naive", "abrahamson", "wildcard"}));

  auto* kmm = app.add_subcommand("kmm", "Bounded search up to k mismatches");
  add_common(kmm, opt, true);
  kmm->add_option("--algo", algo, "subset | knapsack")
      ->required()
      ->check(CLI::IsMember({"subset", "knapsack"}));
  kmm->add_option("-k,--k", k, "Mismatch threshold")->required()
      ->check(CLI::PositiveNumber);
  kmm->add_option("--positions", positions_csv,
                  "Subset only: comma-separated alignments (default all)");
  kmm->add_option("--budget", budget_override,
                  "Knapsack only: budget override (default n*sqrt(k*log2 k))");

  auto* kmm_lv = app.add_subcommand("kmm-lv", "Randomized always-correct bounded search");
  add_common(kmm_lv, opt, true);
  kmm_lv->add_option("-k,--k", k, "Mismatch threshold")->required()
      ->check(CLI::PositiveNumber);
  kmm_lv->add_option("--alpha", alpha, "Confidence exponent")
      ->check(CLI::PositiveNumber);
  kmm_lv->add_option("--seed-rounds-factor", sampling.seed_rounds_factor,
                     "Base-stage rounds per k*log2(n)");
  kmm_lv->add_option("--phase-steps-factor", sampling.phase_steps_factor,
                     "Sampling steps per halving phase, as a multiple of k");

  auto* approx = app.add_subcommand("approx", "Estimate every distance within 1+/-epsilon");
  add_common(approx, opt, true);
  approx->add_option("--epsilon", epsilon, "Relative accuracy in (0,1)")->required();
  approx->add_option("--alpha", alpha, "Confidence exponent")
      ->check(CLI::PositiveNumber);
  approx->add_flag("--one-sided", one_sided, "Never undershoot the true distance");

  std::string algos_csv = "naive,abrahamson,subset,knapsack";
  std::string n_csv;
  std::string m_csv;
  std::string k_csv;
  auto* bench = app.add_subcommand("bench", "Timing sweep, CSV per cell");
  add_common(bench, opt, false);
  bench->add_option("--algos", algos_csv, "Comma-separated algorithms");
  bench->add_option("--n-list", n_csv, "Comma-separated truncation lengths")->required();
  bench->add_option("--m-list", m_csv, "Comma-separated pattern lengths")->required();
  bench->add_option("--k-list", k_csv, "Comma-separated thresholds")->required();
  bench->add_option("--epsilon", epsilon, "Epsilon for approx cells");
  bench->add_option("--alpha", alpha, "Alpha for randomized cells");

  auto* verify = app.add_subcommand("verify", "Diff an algorithm against the naive scan");
  add_common(verify, opt, true);
  verify->add_option("--algo", algo,
                     "abrahamson | wildcard | subset | knapsack | lv | approx")
      ->required()
      ->check(CLI::IsMember(
          {"abrahamson", "wildcard", "subset", "knapsack", "lv", "approx"}));
  verify->add_option("-k,--k", k, "Mismatch threshold (bounded search only)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--epsilon", epsilon, "Approx only");
  verify->add_option("--alpha", alpha, "Randomized only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::ofstream file;
    correlate_opt.fft_crossover = opt.fft_crossover;
    sampling.correlate = correlate_opt;
    if (count->parsed()) {
      const Inputs in = load_inputs(opt, true);
      std::ostream& out = open_output(opt.out_path, file);
      kmis::DistanceProfile profile;
      if (algo == "naive") {
        profile = kmis::naive_profile(in.text, in.pattern);
      } else if (algo == "abrahamson") {
        profile = kmis::abrahamson_profile(in.text, in.pattern, nullptr, correlate_opt);
      } else {
        profile = kmis::wildcard_profile(in.text, in.pattern, nullptr, correlate_opt);
      }
      print_profile(out, profile);
    } else if (kmm->parsed()) {
      const Inputs in = load_inputs(opt, true);
      std::ostream& out = open_output(opt.out_path, file);
      kmis::BoundedReport report;
      if (algo == "subset") {
        std::vector<std::uint32_t> positions;
        if (positions_csv.empty()) {
          positions = all_positions(in.text, in.pattern);
        } else {
          for (std::uint64_t p : parse_list(positions_csv, "--positions")) {
            positions.push_back(static_cast<std::uint32_t>(p));
          }
        }
        report = kmis::subset_k_mismatches(in.text, in.pattern, positions, k);
      } else {
        report = kmis::knapsack_k_mismatches(in.text, in.pattern, k, nullptr,
                                             correlate_opt, budget_override);
      }
      print_report(out, report);
    } else if (kmm_lv->parsed()) {
      const Inputs in = load_inputs(opt, true);
      std::ostream& out = open_output(opt.out_path, file);
      kmis::SeededRng rng(in.seed);
      print_report(out, kmis::las_vegas_k_mismatches(in.text, in.pattern, k,
                                                     alpha, rng, sampling));
    } else if (approx->parsed()) {
      const Inputs in = load_inputs(opt, true);
      std::ostream& out = open_output(opt.out_path, file);
      kmis::SeededRng rng(in.seed);
      const kmis::EstimateProfile est =
          kmis::approx_count(in.text, in.pattern, epsilon, alpha, rng, one_sided,
                             correlate_opt);
      out.precision(6);
      out << std::fixed;
      for (std::size_t i = 0; i < est.h.size(); ++i) {
        out << (i + 1) << '\t' << est.h[i] << '\n';
      }
    } else if (bench->parsed()) {
      const Inputs in = load_inputs(opt, false);
      std::ostream& out = open_output(opt.out_path, file);
      kmis::BenchGrid grid;
      std::stringstream names(algos_csv);
      std::string name;
      while (std::getline(names, name, ',')) {
        if (!name.empty()) grid.algorithms.push_back(name);
      }
      grid.text_lengths = parse_list(n_csv, "--n-list");
      grid.pattern_lengths = parse_list(m_csv, "--m-list");
      grid.thresholds = parse_list(k_csv, "--k-list");
      grid.epsilon = epsilon;
      grid.alpha = alpha;
      kmis::write_bench_csv(out, kmis::run_bench(in.text, grid, in.seed));
    } else if (verify->parsed()) {
      const Inputs in = load_inputs(opt, true);
      std::ostream& out = open_output(opt.out_path, file);
      const kmis::DistanceProfile oracle = kmis::naive_profile(in.text, in.pattern);
      bool ok = true;
      if (algo == "abrahamson") {
        ok = kmis::abrahamson_profile(in.text, in.pattern) == oracle;
      } else if (algo == "wildcard") {
        ok = kmis::wildcard_profile(in.text, in.pattern) == oracle;
      } else if (algo == "subset") {
        ok = kmis::subset_k_mismatches(in.text, in.pattern,
                                       all_positions(in.text, in.pattern), k) ==
             kmis::threshold_profile(oracle, k);
      } else if (algo == "knapsack") {
        ok = kmis::knapsack_k_mismatches(in.text, in.pattern, k) ==
             kmis::threshold_profile(oracle, k);
      } else if (algo == "lv") {
        kmis::SeededRng rng(in.seed);
        ok = kmis::las_vegas_k_mismatches(in.text, in.pattern, k, alpha, rng) ==
             kmis::threshold_profile(oracle, k);
      } else {  // approx: estimates bracket the truth at most alignments
        kmis::SeededRng rng(in.seed);
        const kmis::EstimateProfile est =
            kmis::approx_count(in.text, in.pattern, epsilon, alpha, rng);
        std::size_t inside = 0;
        for (std::size_t i = 0; i < est.h.size(); ++i) {
          const double lo = (1.0 - epsilon) * oracle[i];
          const double hi = (1.0 + epsilon) * oracle[i];
          if (est.h[i] >= lo && est.h[i] <= hi) ++inside;
        }
        const double needed =
            1.0 - 2.0 * std::pow(static_cast<double>(in.pattern.size()), -alpha);
        ok = static_cast<double>(inside) >=
             needed * static_cast<double>(est.h.size());
      }
      out << (ok ? "OK" : "MISMATCH") << '\n';
      return ok ? kExitOk : kExitVerifyMismatch;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
