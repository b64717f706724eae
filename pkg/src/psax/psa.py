"""Parameterized suffix array construction.

Pipeline: per-j block families -> dense block ranks -> rank strings ->
LSD radix sort.  With pi at most block_threshold the block table and the
full n x (pi+1) rank matrix are materialized; above it every radix pass
recomputes its column so that only O(n) words are alive at a time.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from ._mem import tune_allocator
from .blocks import BlockTable, FamilyColumn, scan_family, zeros_per_suffix
from .errors import EmptyStringError
from .pstring import PrevEncoding, PString, fwd_encode, prev_encode, \
    prev_order_keys, suffix_prev_values
from .suffix import FamilyIndex, Workspace, rank_positions

DEFAULT_BLOCK_THRESHOLD = 64


@dataclass(frozen=True)
class PIndex:
    """The built index: 1-based PSA and pLCP arrays plus metadata."""

    psa: np.ndarray
    plcp: np.ndarray
    n: int
    pi: int
    digest: bytes

    def __eq__(self, other) -> bool:
        return (isinstance(other, PIndex)
                and self.n == other.n and self.pi == other.pi
                and self.digest == other.digest
                and np.array_equal(self.psa, other.psa)
                and np.array_equal(self.plcp, other.plcp))


@dataclass(frozen=True)
class RankMatrix:
    """Rank strings C_i, padded with the sentinel rank 0.

    Stored by column: matrix[j-1, i-1] is the dense rank of block j of
    suffix i, or 0 when the suffix has fewer than j blocks (contiguous
    per-j rows keep the radix passes sequential); lens[i-1] = z_i + 1.
    """

    matrix: np.ndarray
    lens: np.ndarray

    def row(self, i: int) -> tuple:
        return tuple(int(v) for v in self.matrix[:self.lens[i - 1], i - 1])


def column_index(col: FamilyColumn, n: int, sigma: int,
                 ws: Workspace | None = None) -> FamilyIndex:
    """FamilyIndex over S_j, reusing the column's densified content."""
    return FamilyIndex(col.dense, col.fam_start, n + sigma, ws)


def column_ranks(col: FamilyColumn, ix: FamilyIndex,
                 ws: Workspace | None = None) -> np.ndarray:
    """Dense ranks C_{i,j} for i = 1..m of this column."""
    positions = ix.str_start[col.ref_str] + col.ref_off
    return rank_positions(ix, positions, col.block_lengths(), ws)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("PSAX_THREADS", "1")))
    except ValueError:
        return 1


def build_rank_matrix(table: BlockTable) -> RankMatrix:
    """Rank every column of the block table (PSAX_THREADS columns at a
    time; columns are independent and merged by index)."""
    n = table.n
    max_b = table.max_blocks
    matrix = np.zeros((max_b, n), np.int32)

    def fill(j: int):
        col = table.column(j)
        ix = column_index(col, n, _column_sigma(col))
        matrix[j - 1, :col.m] = column_ranks(col, ix)

    workers = _threads()
    if workers > 1 and max_b > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(fill, range(1, max_b + 1)))
    else:
        for j in range(1, max_b + 1):
            fill(j)
    return RankMatrix(matrix, table.z + 1)


def _rank_matrix_streaming(x: PString, p: PrevEncoding, f,
                           z: np.ndarray) -> RankMatrix:
    """Rank matrix built column by column; only one family (and its
    index) is alive at a time."""
    n = x.n
    max_b = int(z[0]) + 1
    matrix = np.zeros((max_b, n), np.int32)

    def fill(j: int, ws: Workspace | None = None):
        col = scan_family(x, p, f, z, j, share_zero=True, ws=ws)
        ix = column_index(col, n, _column_sigma(col), ws)
        matrix[j - 1, :col.m] = column_ranks(col, ix, ws)

    workers = _threads()
    if workers > 1 and max_b > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(fill, range(1, max_b + 1)))
    else:
        ws = Workspace()
        for j in range(1, max_b + 1):
            fill(j, ws)
    return RankMatrix(matrix, z + 1)


def _column_sigma(col: FamilyColumn) -> int:
    # densify_values bounded the static codes by the global static count;
    # the exact bound only needs to dominate every dense value
    return int(col.dense.max()) + 1 if col.dense.size else 1


@njit(cache=True, nogil=True)
def _k_counting_pass(keys, perm, counts, out):
    kmax = 0
    for t in range(perm.size):
        k = keys[perm[t]]
        if k > kmax:
            kmax = k
        counts[k] += 1
    acc = 0
    for v in range(kmax + 1):
        c = counts[v]
        counts[v] = acc
        acc += c
    for t in range(perm.size):
        p = perm[t]
        out[counts[keys[p]]] = p
        counts[keys[p]] += 1
    for v in range(kmax + 1):
        counts[v] = 0


def radix_sort_rank_strings(m: RankMatrix) -> np.ndarray:
    """Sort suffixes by their rank strings (proper prefixes first) with
    stable counting sorts over columns last to first; returns 1-based
    suffix positions."""
    max_b, n = m.matrix.shape
    perm = np.arange(n, dtype=np.int64)
    out = np.empty(n, np.int64)
    counts = np.zeros(n + 2, np.int64)
    for j in range(max_b - 1, -1, -1):
        _k_counting_pass(m.matrix[j], perm, counts, out)
        perm, out = out, perm
    return perm + 1


def _streaming_psa(x: PString, p: PrevEncoding, f, z: np.ndarray) -> np.ndarray:
    """Radix passes that rebuild one column's ranks at a time (O(n) live
    words regardless of pi)."""
    n = x.n
    max_b = int(z[0]) + 1
    perm = np.arange(n, dtype=np.int64)
    out = np.empty(n, np.int64)
    counts = np.zeros(n + 2, np.int64)
    keys = np.zeros(n, np.int32)
    ws = Workspace()
    for j in range(max_b, 0, -1):
        col = scan_family(x, p, f, z, j, share_zero=True, ws=ws)
        ix = column_index(col, n, _column_sigma(col), ws)
        keys[:] = 0
        keys[:col.m] = column_ranks(col, ix, ws)
        _k_counting_pass(keys, perm, counts, out)
        perm, out = out, perm
    return perm + 1


def build_psa(x: PString, *,
              block_threshold: int = DEFAULT_BLOCK_THRESHOLD) -> PIndex:
    """Build the parameterized suffix array of x (pLCP left zeroed)."""
    if x.n == 0:
        raise EmptyStringError("cannot index an empty string")
    psa = _psa_array(x, block_threshold)
    return PIndex(psa=psa, plcp=np.zeros(x.n, np.int64), n=x.n,
                  pi=x.pi_count, digest=x.digest())


def _psa_array(x: PString, block_threshold: int) -> np.ndarray:
    tune_allocator()
    p = prev_encode(x)
    f = fwd_encode(x)
    z = zeros_per_suffix(x, f)
    if x.pi_count <= block_threshold:
        return radix_sort_rank_strings(_rank_matrix_streaming(x, p, f, z))
    return _streaming_psa(x, p, f, z)


# ---------------------------------------------------------------------------
# Oracle and certificate


def _suffix_rows(x: PString, scratch_limit: int = 200) -> list:
    """Raw prev values of every suffix.  Small inputs use definition-only
    dict scans; larger ones derive rows from the whole-string encoding
    (the access formula is itself exhaustively tested against scratch)."""
    if x.n <= scratch_limit:
        rows = []
        for i in range(1, x.n + 1):
            last = {}
            row = np.empty(x.n - i + 1, np.int64)
            for pos in range(i - 1, x.n):
                sid = int(x.ids[pos])
                if x.is_param[pos]:
                    row[pos - i + 1] = 0 if sid not in last else pos - last[sid]
                    last[sid] = pos
                else:
                    row[pos - i + 1] = -(sid + 1)
            rows.append(row)
        return rows
    p = prev_encode(x)
    return [suffix_prev_values(p, i) for i in range(1, x.n + 1)]


def naive_psa(x: PString) -> np.ndarray:
    """Comparison-sort oracle: materialize prev(x[i..n]) for every i and
    sort under the symbol order.  Intended for n up to ~10^4."""
    if x.n == 0:
        raise EmptyStringError("cannot index an empty string")
    rows = _suffix_rows(x)
    hi = max(int(prev_order_keys(r, x.n).max()) if r.size else 0 for r in rows)
    dtype = ">u4" if hi < 2 ** 32 else ">u8"
    keys = [prev_order_keys(r, x.n).astype(dtype).tobytes() for r in rows]
    order = sorted(range(x.n), key=keys.__getitem__)
    return np.array(order, np.int64) + 1


def prev_suffix_less(p: PrevEncoding, i1: int, i2: int) -> bool:
    """prev(x[i1..n]) strictly precedes prev(x[i2..n]), decided through
    the constant-time suffix access formula."""
    a = prev_order_keys(suffix_prev_values(p, i1), p.n)
    b = prev_order_keys(suffix_prev_values(p, i2), p.n)
    m = min(a.size, b.size)
    neq = np.flatnonzero(a[:m] != b[:m])
    if neq.size:
        k = neq[0]
        return bool(a[k] < b[k])
    return a.size < b.size


def check_sorted(x: PString, psa: np.ndarray, pairs=None) -> bool:
    """Sortedness certificate: strict order of adjacent PSA entries.

    pairs selects which adjacent ranks r (2..n) to check; None means all.
    """
    p = prev_encode(x)
    if pairs is None:
        pairs = range(2, x.n + 1)
    for r in pairs:
        if not prev_suffix_less(p, int(psa[r - 2]), int(psa[r - 1])):
            return False
    return True
