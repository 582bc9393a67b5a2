#pragma once

#include <random>
#include <string_view>
#include <utility>

#include "kmis/core.hpp"

namespace kmis::test {

// Encodes pattern first so the spec'd rank assignments of the worked examples
// come out as written; both sides share one alphabet.
inline std::pair<Sequence, Sequence> encode_pair(std::string_view text,
                                                 std::string_view pattern,
                                                 char wildcard = '\0') {
  Alphabet alphabet = wildcard ? Alphabet(static_cast<unsigned char>(wildcard))
                               : Alphabet();
  Sequence p = alphabet.encode(pattern);
  Sequence t = alphabet.encode(text);
  return {std::move(t), std::move(p)};
}

inline Sequence random_sequence(std::size_t n, std::uint32_t sigma,
                                double wildcard_density, std::mt19937& gen) {
  std::uniform_int_distribution<std::uint32_t> symbol(1, sigma);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Sequence out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = unit(gen) < wildcard_density ? 0 : symbol(gen);
  }
  return out;
}

}  // namespace kmis::test
