#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "kmis/suffix_index.hpp"

using namespace kmis;

namespace {

// Brute-force suffix order: sort suffix start positions lexicographically.
std::vector<std::uint32_t> sorted_suffixes(const Sequence& p) {
  std::vector<std::uint32_t> order(p.size());
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(p.begin() + a - 1, p.end(),
                                        p.begin() + b - 1, p.end());
  });
  return order;
}

std::uint32_t lce_oracle(const Sequence& p, std::uint32_t i, std::uint32_t j) {
  std::uint32_t d = 0;
  while (i - 1 + d < p.size() && j - 1 + d < p.size() &&
         p[i - 1 + d] == p[j - 1 + d]) {
    ++d;
  }
  return d;
}

// Ranks pinned to alphabetic order so the sorted-suffix examples read the
// same as they would over plain letters.
Sequence seq_of(std::string_view s) {
  Alphabet a;
  std::string sorted(s);
  std::sort(sorted.begin(), sorted.end());
  a.encode(sorted);
  return a.encode(s);
}

}  // namespace

TEST_CASE("suffix array of worked examples") {
  const SuffixIndex banana(seq_of("banana"));
  const std::vector<std::uint32_t> sa(banana.suffix_array().begin(),
                                      banana.suffix_array().end());
  CHECK(sa == std::vector<std::uint32_t>{5, 3, 1, 0, 4, 2});  // 0-based [6,4,2,1,5,3]

  const SuffixIndex aaa(seq_of("aaa"));
  const std::vector<std::uint32_t> sa2(aaa.suffix_array().begin(),
                                       aaa.suffix_array().end());
  CHECK(sa2 == std::vector<std::uint32_t>{2, 1, 0});
  const auto lcp = aaa.adjacent_lcp();
  REQUIRE(lcp.size() == 2);
  CHECK(lcp[0] == 1);
  CHECK(lcp[1] == 2);

  const SuffixIndex one(seq_of("z"));
  CHECK(one.suffix_array()[0] == 0);
}

TEST_CASE("construction rejects empty patterns and wild cards") {
  CHECK_THROWS_AS(SuffixIndex(Sequence{}), std::invalid_argument);
  CHECK_THROWS_AS(SuffixIndex(Sequence{1, 0, 2}), std::invalid_argument);
}

TEST_CASE("suffix array matches brute-force sorting on random patterns") {
  std::mt19937 gen(60);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t m = 1 + gen() % 120;
    const std::uint32_t sigma = 1 + gen() % 5;
    const Sequence p = test::random_sequence(m, sigma, 0.0, gen);
    const SuffixIndex index{Sequence(p)};
    const std::vector<std::uint32_t> expected = sorted_suffixes(p);
    REQUIRE(index.suffix_array().size() == m);
    for (std::size_t r = 0; r < m; ++r) {
      REQUIRE(index.suffix_array()[r] + 1 == expected[r]);
    }
    // adjacent LCP verified by direct comparison
    for (std::size_t r = 1; r < m; ++r) {
      REQUIRE(index.adjacent_lcp()[r - 1] ==
              lce_oracle(p, expected[r - 1], expected[r]));
    }
  }
}

TEST_CASE("lce answers worked examples") {
  const SuffixIndex abab(seq_of("abab"));
  CHECK(abab.lce(1, 3) == 2);
  CHECK(abab.lce(2, 2) == 3);  // self comparison runs to the end

  const SuffixIndex banana(seq_of("banana"));
  CHECK(banana.lce(2, 4) == 3);  // "anana" vs "ana"
  CHECK(banana.lce(1, 1) == 6);
  CHECK_THROWS_AS(banana.lce(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(banana.lce(1, 7), std::invalid_argument);
}

TEST_CASE("lce agrees with the oracle exhaustively for small patterns") {
  std::mt19937 gen(61);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t m = 1 + gen() % 64;
    const Sequence p = test::random_sequence(m, 1 + gen() % 3, 0.0, gen);
    const SuffixIndex index{Sequence(p)};
    for (std::uint32_t i = 1; i <= m; ++i) {
      for (std::uint32_t j = 1; j <= m; ++j) {
        REQUIRE(index.lce(i, j) == lce_oracle(p, i, j));
      }
    }
  }
}

TEST_CASE("lce agrees with the oracle on sampled pairs for larger patterns") {
  std::mt19937 gen(62);
  const Sequence p = test::random_sequence(700, 3, 0.0, gen);
  const SuffixIndex index{Sequence(p)};
  for (int iter = 0; iter < 3000; ++iter) {
    const std::uint32_t i = 1 + gen() % 700;
    const std::uint32_t j = 1 + gen() % 700;
    REQUIRE(index.lce(i, j) == lce_oracle(p, i, j));
  }
}

TEST_CASE("range minimum agrees with a linear scan") {
  std::mt19937 gen(63);
  const Sequence p = test::random_sequence(300, 2, 0.0, gen);
  const SuffixIndex index{Sequence(p)};
  const auto lcp = index.adjacent_lcp();
  for (int iter = 0; iter < 2000; ++iter) {
    std::uint32_t a = 1 + gen() % 299;
    std::uint32_t b = 1 + gen() % 300;
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    std::uint32_t expected = UINT32_MAX;
    for (std::uint32_t r = a; r < b; ++r) expected = std::min(expected, lcp[r - 1]);
    REQUIRE(index.range_min_lcp(a, b) == expected);
  }
}

TEST_CASE("matching statistics find the longest pattern substring") {
  Alphabet a;
  const Sequence p = a.encode("abc");
  const Sequence t = a.encode("abdabc");
  const SuffixIndex index{Sequence(p)};

  const MatchStat first = index.matching_statistics(t, 1);
  CHECK(first.length == 2);
  CHECK(first.witness == 1);

  const MatchStat fourth = index.matching_statistics(t, 4);
  CHECK(fourth.length == 3);
  CHECK(fourth.witness == 1);

  const MatchStat absent = index.matching_statistics(t, 3);  // 'd' not in "abc"
  CHECK(absent.length == 0);
}

TEST_CASE("a text wild card never extends a match") {
  Alphabet a('N');
  const Sequence p = a.encode("ab");
  const Sequence t = a.encode("aNb");
  const SuffixIndex index{Sequence(p)};
  CHECK(index.matching_statistics(t, 1).length == 1);
  CHECK(index.matching_statistics(t, 2).length == 0);
}

TEST_CASE("matching statistics are maximal") {
  std::mt19937 gen(64);
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t m = 1 + gen() % 64;
    const std::uint32_t sigma = 1 + gen() % 3;
    const Sequence p = test::random_sequence(m, sigma, 0.0, gen);
    const Sequence t = test::random_sequence(80, sigma, 0.0, gen);
    const SuffixIndex index{Sequence(p)};
    for (std::uint32_t from = 1; from <= t.size(); ++from) {
      const MatchStat ms = index.matching_statistics(t, from);
      REQUIRE(from + ms.length - 1 <= t.size());
      // the reported match really occurs at the witness
      for (std::uint32_t d = 0; d < ms.length; ++d) {
        REQUIRE(t[from - 1 + d] == p[ms.witness - 1 + d]);
      }
      // one more character must occur nowhere in the pattern
      if (from + ms.length - 1 < t.size() && ms.length < m) {
        bool extendable = false;
        for (std::size_t j = 0; j + ms.length < m; ++j) {
          bool match = true;
          for (std::uint32_t d = 0; d <= ms.length && match; ++d) {
            match = t[from - 1 + d] == p[j + d];
          }
          if (match) {
            extendable = true;
            break;
          }
        }
        REQUIRE_FALSE(extendable);
      }
    }
  }
}
