// Python bindings: string-in, plain-lists-out wrappers around the core
// operations. Wild cards are passed as an optional single character; text and
// pattern always share one alphabet so ranks agree.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>

#include "kmis/core.hpp"
#include "kmis/counting.hpp"
#include "kmis/kmismatch.hpp"
#include "kmis/randomized.hpp"

namespace py = pybind11;

namespace {

struct Encoded {
  kmis::Sequence text;
  kmis::Sequence pattern;
};

Encoded encode_pair(const std::string& text, const std::string& pattern,
                    const std::optional<std::string>& wildcard) {
  kmis::Alphabet alphabet;
  if (wildcard) {
    if (wildcard->size() != 1) {
      throw std::invalid_argument("wildcard must be a single character");
    }
    alphabet = kmis::Alphabet(static_cast<unsigned char>((*wildcard)[0]));
  }
  Encoded e;
  e.text = alphabet.encode(text);
  e.pattern = alphabet.encode(pattern);
  return e;
}

// (alignment, distance-or-None) pairs; None marks alignments past k.
std::vector<std::pair<std::uint32_t, std::optional<std::uint32_t>>> report_pairs(
    const kmis::BoundedReport& report) {
  std::vector<std::pair<std::uint32_t, std::optional<std::uint32_t>>> out;
  out.reserve(report.entries.size());
  for (const kmis::ReportEntry& e : report.entries) {
    out.emplace_back(e.alignment, e.exceeds_k
                                      ? std::nullopt
                                      : std::optional<std::uint32_t>(e.distance));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_kmis, m) {
  m.doc() = "pattern matching with mismatches under Hamming distance";

  m.def(
      "encode",
      [](const std::string& raw, const std::optional<std::string>& wildcard) {
        kmis::Alphabet alphabet;
        if (wildcard && !wildcard->empty()) {
          alphabet = kmis::Alphabet(static_cast<unsigned char>((*wildcard)[0]));
        }
        const kmis::Sequence seq = alphabet.encode(raw);
        return std::make_pair(seq, alphabet.sigma());
      },
      py::arg("raw"), py::arg("wildcard") = std::nullopt,
      "Rank-encode a string; returns (ranks, sigma). Wild cards become 0.");

  m.def(
      "naive_profile",
      [](const std::string& text, const std::string& pattern,
         const std::optional<std::string>& wildcard) {
        const Encoded e = encode_pair(text, pattern, wildcard);
        return kmis::naive_profile(e.text, e.pattern);
      },
      py::arg("text"), py::arg("pattern"), py::arg("wildcard") = std::nullopt,
      "Exact Hamming distance per alignment, by direct scan.");

  m.def(
      "abrahamson_profile",
      [](const std::string& text, const std::string& pattern) {
        const Encoded e = encode_pair(text, pattern, std::nullopt);
        return kmis::abrahamson_profile(e.text, e.pattern);
      },
      py::arg("text"), py::arg("pattern"),
      "Exact distance profile without wild cards.");

  m.def(
      "wildcard_profile",
      [](const std::string& text, const std::string& pattern,
         const std::optional<std::string>& wildcard) {
        const Encoded e = encode_pair(text, pattern, wildcard);
        return kmis::wildcard_profile(e.text, e.pattern);
      },
      py::arg("text"), py::arg("pattern"), py::arg("wildcard") = std::nullopt,
      "Exact distance profile, wild cards welcome on either side.");

  m.def(
      "subset_k_mismatches",
      [](const std::string& text, const std::string& pattern,
         const std::vector<std::uint32_t>& positions, std::uint32_t k) {
        const Encoded e = encode_pair(text, pattern, std::nullopt);
        return report_pairs(
            kmis::subset_k_mismatches(e.text, e.pattern, positions, k));
      },
      py::arg("text"), py::arg("pattern"), py::arg("positions"), py::arg("k"),
      "Bounded distances for chosen alignments; None past the threshold.");

  m.def(
      "knapsack_k_mismatches",
      [](const std::string& text, const std::string& pattern, std::uint32_t k) {
        const Encoded e = encode_pair(text, pattern, std::nullopt);
        return report_pairs(kmis::knapsack_k_mismatches(e.text, e.pattern, k));
      },
      py::arg("text"), py::arg("pattern"), py::arg("k"),
      "Bounded distances for every alignment; None past the threshold.");

  m.def(
      "las_vegas_k_mismatches",
      [](const std::string& text, const std::string& pattern, std::uint32_t k,
         double alpha, std::uint64_t seed,
         const std::optional<std::string>& wildcard) {
        const Encoded e = encode_pair(text, pattern, wildcard);
        kmis::SeededRng rng(seed);
        return report_pairs(
            kmis::las_vegas_k_mismatches(e.text, e.pattern, k, alpha, rng));
      },
      py::arg("text"), py::arg("pattern"), py::arg("k"), py::arg("alpha") = 1.0,
      py::arg("seed") = 0, py::arg("wildcard") = std::nullopt,
      "Randomized always-correct bounded search; only its runtime is random.");

  m.def(
      "approx_count",
      [](const std::string& text, const std::string& pattern, double epsilon,
         double alpha, std::uint64_t seed, bool one_sided,
         const std::optional<std::string>& wildcard) {
        const Encoded e = encode_pair(text, pattern, wildcard);
        kmis::SeededRng rng(seed);
        return kmis::approx_count(e.text, e.pattern, epsilon, alpha, rng,
                                  one_sided)
            .h;
      },
      py::arg("text"), py::arg("pattern"), py::arg("epsilon"),
      py::arg("alpha") = 1.0, py::arg("seed") = 0, py::arg("one_sided") = false,
      py::arg("wildcard") = std::nullopt,
      "Per-alignment distance estimates within a (1 +/- epsilon) factor.");

  m.def(
      "one_mismatch",
      [](const std::string& text, const std::string& pattern,
         const std::optional<std::string>& wildcard) {
        const Encoded e = encode_pair(text, pattern, wildcard);
        std::vector<std::pair<std::string, std::uint32_t>> out;
        for (const kmis::OneMismatchResult& r : kmis::one_mismatch(e.text, e.pattern)) {
          switch (r.kind) {
            case kmis::MismatchKind::zero:
              out.emplace_back("zero", 0);
              break;
            case kmis::MismatchKind::exactly_one:
              out.emplace_back("one", r.text_pos);
              break;
            case kmis::MismatchKind::other:
              out.emplace_back("other", 0);
              break;
          }
        }
        return out;
      },
      py::arg("text"), py::arg("pattern"), py::arg("wildcard") = std::nullopt,
      "Per alignment: ('zero', 0), ('one', mismatching text position), or "
      "('other', 0).");
}
