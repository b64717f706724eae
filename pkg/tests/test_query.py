import numpy as np

from helpers import pstr, rand_pstring
from psax.plcp import build_index
from psax.pstring import pmatch, prev_encode
from psax.query import find_occurrences


def literal_scan(x, pattern):
    """Occurrence oracle: test every position with pmatch."""
    m = pattern.n
    out = []
    for i in range(1, x.n - m + 2):
        if pmatch(x.slice(i, i + m - 1), pattern):
            out.append(i)
    return out


def vector_scan(x, pattern):
    """Vectorized occurrence oracle over the whole-string encoding."""
    n, m = x.n, pattern.n
    if m > n:
        return []
    pv = prev_encode(x).values
    pat = prev_encode(pattern).values
    count = n - m + 1
    ok = np.ones(count, bool)
    for k in range(1, m + 1):
        col = pv[k - 1:k - 1 + count]
        local = np.where((col >= 0) & (col >= k), 0, col)
        ok &= local == pat[k - 1]
    return (np.flatnonzero(ok) + 1).tolist()


def test_golden_patterns():
    x = pstr("stssAtssAs")
    idx = build_index(x)
    assert find_occurrences(x, idx, pstr("ss")).tolist() == [3, 7]
    assert find_occurrences(x, idx, pstr("st")).tolist() == [1, 2, 6]
    assert find_occurrences(x, idx, pstr("A")).tolist() == [5, 9]


def test_pattern_longer_than_text():
    x = pstr("sts")
    idx = build_index(x)
    assert find_occurrences(x, idx, pstr("ststst")).tolist() == []


def test_full_text_pattern():
    x = pstr("stssAtssAs")
    idx = build_index(x)
    assert find_occurrences(x, idx, x).tolist() == [1]
    # and any p-matching rename of the whole text
    assert find_occurrences(x, idx, pstr("tsttAsttAt")).tolist() == [1]


def test_oracles_agree_small(rng):
    for _ in range(250):
        n = int(rng.integers(1, 30))
        x = rand_pstring(rng, n, pi=3, sigma=1)
        idx = build_index(x)
        m = int(rng.integers(1, min(n, 8) + 1))
        pattern = rand_pstring(rng, m, pi=3, sigma=1)
        want = literal_scan(x, pattern)
        assert vector_scan(x, pattern) == want
        assert find_occurrences(x, idx, pattern).tolist() == want


def test_random_larger(rng):
    x = rand_pstring(rng, 4000, pi=4, sigma=2)
    idx = build_index(x)
    for _ in range(60):
        m = int(rng.integers(1, 30))
        if rng.integers(0, 2):
            pattern = rand_pstring(rng, m, pi=4, sigma=2)
        else:  # sample a window so matches are guaranteed
            start = int(rng.integers(1, x.n - m + 2))
            pattern = x.slice(start, start + m - 1)
        want = vector_scan(x, pattern)
        assert find_occurrences(x, idx, pattern).tolist() == want
