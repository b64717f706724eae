"""Blockwise pLCP construction.

For each PSA-adjacent pair, common-prefix length accumulates block by
block: equal ranks add the whole (equal) block, the first differing pair
adds one LCE and stops.  The appended 0 of the last block is stripped by
capping at the true suffix lengths.
"""

from __future__ import annotations

import numpy as np

from ._mem import tune_allocator
from .blocks import BlockTable, scan_family, zeros_per_suffix
from .errors import CorruptIndexError, EmptyStringError
from .psa import PIndex, RankMatrix, column_index, column_ranks, \
    _column_sigma, _suffix_rows
from .pstring import PString, fwd_encode, prev_encode
from .suffix import Workspace, _k_lce_batch


def build_plcp(x: PString, idx: PIndex, table: BlockTable | None = None,
               ranks: RankMatrix | None = None) -> PIndex:
    """Fill the pLCP array for idx.psa.

    When table/ranks from the PSA build are passed they are reused;
    otherwise each family S_j is recomputed on the fly, keeping O(n)
    words alive.  Both paths produce identical output.
    """
    n = x.n
    psa = idx.psa
    if psa.size != n or not np.array_equal(np.sort(psa), np.arange(1, n + 1)):
        raise CorruptIndexError("psa is not a permutation of 1..n")
    tune_allocator()
    plcp = np.zeros(n, np.int64)
    if n == 1:
        return PIndex(psa=psa, plcp=plcp, n=n, pi=idx.pi, digest=idx.digest)

    p = prev_encode(x)
    f = fwd_encode(x)
    z = zeros_per_suffix(x, f) if table is None else table.z
    max_b = int(z[0]) + 1

    i1s = psa[:-1]
    i2s = psa[1:]
    active = np.ones(n - 1, bool)
    acc = np.zeros(n - 1, np.int64)

    ws = Workspace()
    for j in range(1, max_b + 1):
        if not active.any():
            break
        col = table.column(j) if table is not None else \
            scan_family(x, p, f, z, j, share_zero=True, ws=ws)
        ix = column_index(col, n, _column_sigma(col), ws)
        if ranks is not None:
            cr = ranks.matrix[j - 1, :col.m].astype(np.int64)
        else:
            cr = column_ranks(col, ix)
        blen = col.block_lengths()
        pos = ix.str_start[col.ref_str] + col.ref_off

        live = np.flatnonzero(active)
        both = (i1s[live] <= col.m) & (i2s[live] <= col.m)
        active[live[~both]] = False
        live = live[both]
        if live.size == 0:
            continue
        a1 = i1s[live] - 1
        a2 = i2s[live] - 1
        equal = cr[a1] == cr[a2]
        eq_rows = live[equal]
        if eq_rows.size:
            l1 = blen[a1[equal]]
            if not np.array_equal(l1, blen[a2[equal]]):
                raise AssertionError("equal block ranks with unequal lengths")
            acc[eq_rows] += l1
        ne_rows = live[~equal]
        if ne_rows.size:
            p1 = pos[a1[~equal]]
            p2 = pos[a2[~equal]]
            ext = np.empty(ne_rows.size, np.int64)
            _k_lce_batch(ix.isa, ix.lcp, ix.rmq_table, ix.size, p1, p2, ext)
            acc[ne_rows] += ext
            active[ne_rows] = False

    caps = np.minimum(n - i1s + 1, n - i2s + 1)
    plcp[1:] = np.minimum(acc, caps)
    return PIndex(psa=psa, plcp=plcp, n=n, pi=idx.pi, digest=idx.digest)


def naive_plcp(x: PString, psa: np.ndarray) -> np.ndarray:
    """Direct common-prefix scan over scratch prev encodings of adjacent
    PSA entries.  Intended for n up to ~10^4."""
    if x.n == 0:
        raise EmptyStringError("cannot index an empty string")
    rows = _suffix_rows(x)
    out = np.zeros(x.n, np.int64)
    for r in range(2, x.n + 1):
        a = rows[int(psa[r - 2]) - 1]
        b = rows[int(psa[r - 1]) - 1]
        m = min(a.size, b.size)
        neq = np.flatnonzero(a[:m] != b[:m])
        out[r - 1] = int(neq[0]) if neq.size else m
    return out


def build_index(x: PString, *, block_threshold: int = 64) -> PIndex:
    """Build psa and plcp in one go, sharing the rank matrix when pi is
    within the threshold.  Families are rescanned in the pLCP phase so
    only one is alive at a time."""
    from .psa import (_rank_matrix_streaming, build_psa,
                      radix_sort_rank_strings)

    if x.pi_count <= block_threshold:
        p = prev_encode(x)
        f = fwd_encode(x)
        z = zeros_per_suffix(x, f)
        rm = _rank_matrix_streaming(x, p, f, z)
        psa = radix_sort_rank_strings(rm)
        idx = PIndex(psa=psa, plcp=np.zeros(x.n, np.int64), n=x.n,
                     pi=x.pi_count, digest=x.digest())
        return build_plcp(x, idx, ranks=rm)
    idx = build_psa(x, block_threshold=block_threshold)
    return build_plcp(x, idx)
