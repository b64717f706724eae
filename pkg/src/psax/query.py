"""Parameterized pattern matching against a built index.

Binary search over the PSA: the pattern's prev encoding is compared with
suffix-local prev values obtained in constant time from the whole-string
encoding, so each probe costs O(|P|).
"""

from __future__ import annotations

import numpy as np

from .psa import PIndex
from .pstring import PString, prev_encode


def _compare_suffix(prev_vals: np.ndarray, n: int, i: int,
                    pat: np.ndarray) -> int:
    """Order of prev(x[i..n]) vs the pattern's prev encoding, considering
    only the first |P| symbols; a shorter suffix sorts first."""
    m = pat.size
    avail = n - i + 1
    for k in range(1, min(m, avail) + 1):
        v = prev_vals[i + k - 2]
        if v >= k:
            v = 0
        w = pat[k - 1]
        if v == w:
            continue
        kv = v if v >= 0 else n + (-v - 1)
        kw = w if w >= 0 else n + (-w - 1)
        return -1 if kv < kw else 1
    return -1 if avail < m else 0


def find_occurrences(x: PString, idx: PIndex, pattern: PString) -> np.ndarray:
    """All 1-based positions i where x[i..i+|P|-1] p-matches the pattern,
    ascending.  A pattern longer than the text yields an empty result."""
    n = x.n
    if pattern.n > n:
        return np.empty(0, np.int64)
    prev_vals = prev_encode(x).values
    pat = prev_encode(pattern).values
    psa = idx.psa

    lo, hi = 0, n
    while lo < hi:  # first rank with suffix >= pattern prefix
        mid = (lo + hi) // 2
        if _compare_suffix(prev_vals, n, int(psa[mid]), pat) < 0:
            lo = mid + 1
        else:
            hi = mid
    start = lo
    hi = n
    while lo < hi:  # first rank with suffix > pattern prefix
        mid = (lo + hi) // 2
        if _compare_suffix(prev_vals, n, int(psa[mid]), pat) <= 0:
            lo = mid + 1
        else:
            hi = mid
    return np.sort(psa[start:lo])
