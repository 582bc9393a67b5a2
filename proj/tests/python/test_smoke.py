"""Smoke tests for the python module against a pure-python oracle."""

import random

import pytest

import kmis


def brute_profile(text, pattern, wildcard=None):
    out = []
    for i in range(len(text) - len(pattern) + 1):
        d = 0
        for j, p in enumerate(pattern):
            t = text[i + j]
            if t != wildcard and p != wildcard and t != p:
                d += 1
        out.append(d)
    return out


def test_encode():
    ranks, sigma = kmis.encode("abNa", wildcard="N")
    assert ranks == [1, 2, 0, 1]
    assert sigma == 2


def test_profiles_match_known_values():
    assert kmis.naive_profile("abcab", "abc") == [0, 3, 3]
    assert kmis.abrahamson_profile("abab", "ab") == [0, 2, 0]
    assert kmis.wildcard_profile("axbaab", "a?b", wildcard="?") == [0, 2, 2, 0]


def test_bounded_reports():
    assert kmis.knapsack_k_mismatches("aabb", "ab", 1) == [(1, 1), (2, 0), (3, 1)]
    assert kmis.subset_k_mismatches("abcab", "abc", [1, 2, 3], 1) == [
        (1, 0),
        (2, None),
        (3, None),
    ]
    assert kmis.las_vegas_k_mismatches("abcab", "abc", 1, seed=7) == [
        (1, 0),
        (2, None),
        (3, None),
    ]


def test_one_mismatch():
    verdicts = kmis.one_mismatch("acab", "ab")
    assert verdicts[0] == ("one", 2)
    assert verdicts[2] == ("zero", 0)


def test_random_cross_check():
    rng = random.Random(1234)
    for _ in range(25):
        sigma = rng.choice("24")
        letters = "abcdefghijklmnopqrstuvwxyz"[: int(sigma)]
        n = rng.randint(10, 120)
        m = rng.randint(2, min(n, 30))
        text = "".join(rng.choice(letters) for _ in range(n))
        pattern = "".join(rng.choice(letters) for _ in range(m))
        expected = brute_profile(text, pattern)
        assert kmis.abrahamson_profile(text, pattern) == expected
        k = rng.randint(1, m)
        got = kmis.knapsack_k_mismatches(text, pattern, k)
        assert got == [
            (i + 1, d if d <= k else None) for i, d in enumerate(expected)
        ]


def test_wildcards_cross_check():
    rng = random.Random(99)
    for _ in range(10):
        n = rng.randint(10, 80)
        m = rng.randint(2, min(n, 16))
        symbols = "abcN"
        text = "".join(rng.choice(symbols) for _ in range(n))
        pattern = "".join(rng.choice(symbols) for _ in range(m))
        assert kmis.wildcard_profile(text, pattern, wildcard="N") == brute_profile(
            text, pattern, wildcard="N"
        )


def test_approx_identity_is_exact():
    assert kmis.approx_count("banana", "banana", 0.3, seed=5) == [0.0]


def test_las_vegas_with_wildcards_matches_oracle():
    rng = random.Random(7)
    for seed in range(5):
        n = rng.randint(8, 60)
        m = rng.randint(2, min(n, 12))
        symbols = "abN"
        text = "".join(rng.choice(symbols) for _ in range(n))
        pattern = "".join(rng.choice(symbols) for _ in range(m))
        k = rng.randint(1, m)
        expected = [
            (i + 1, d if d <= k else None)
            for i, d in enumerate(brute_profile(text, pattern, wildcard="N"))
        ]
        got = kmis.las_vegas_k_mismatches(
            text, pattern, k, seed=seed, wildcard="N"
        )
        assert got == expected


def test_errors_surface_as_exceptions():
    with pytest.raises(ValueError):
        kmis.naive_profile("ab", "abc")
    with pytest.raises(ValueError):
        kmis.wildcard_profile("ab", "ab", wildcard="NN")
