"""Suffix sorting over integer alphabets, family indexes and LCE queries.

The suffix array construction is induced sorting (SA-IS), linear in
text length plus alphabet size.  A family index concatenates a set of
strings with per-string separators, builds SA + LCP + an RMQ structure,
and answers longest-common-extension queries in constant time.

Module-level operations use 1-based positions (the package convention);
the arrays stored on FamilyIndex are plain 0-based numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numba import njit

from .errors import EmptyStringError, OutOfRangeError

_I32MAX = np.iinfo(np.int32).max
_RMQ_BLOCK = 32


class Workspace:
    """Named reusable buffers for the column-at-a-time pipelines.

    Arrays handed out are views into retained backing stores, so a
    consumer must be done with one column's data before the next column
    is produced with the same workspace.  Concurrent column builds must
    not share a workspace.
    """

    __slots__ = ("_bufs",)

    def __init__(self):
        self._bufs = {}

    def get(self, name: str, size: int, dtype) -> np.ndarray:
        buf = self._bufs.get(name)
        if buf is None or buf.size < size or buf.dtype != np.dtype(dtype):
            buf = np.empty(size, dtype)
            self._bufs[name] = buf
        return buf[:size]

    def zeros(self, name: str, size: int, dtype) -> np.ndarray:
        out = self.get(name, size, dtype)
        out[:] = 0
        return out


def _alloc(ws: Workspace | None, name: str, size: int, dtype) -> np.ndarray:
    if ws is None:
        return np.empty(size, dtype)
    return ws.get(name, size, dtype)


# ---------------------------------------------------------------------------
# SA-IS


@njit(cache=True, nogil=True)
def _k_types(s, t):
    n = s.size
    t[n - 1] = 1
    if n >= 2:
        t[n - 2] = 0
        for i in range(n - 3, -1, -1):
            if s[i] < s[i + 1]:
                t[i] = 1
            elif s[i] > s[i + 1]:
                t[i] = 0
            else:
                t[i] = t[i + 1]


@njit(cache=True, nogil=True)
def _k_place_lms(sa, s, lms, tails):
    for idx in range(lms.size):
        p = lms[idx]
        c = s[p]
        sa[tails[c]] = p
        tails[c] -= 1


@njit(cache=True, nogil=True)
def _k_place_lms_ordered(sa, s, ordered, tails):
    for idx in range(ordered.size - 1, -1, -1):
        p = ordered[idx]
        c = s[p]
        sa[tails[c]] = p
        tails[c] -= 1


@njit(cache=True, nogil=True)
def _k_induce_l(sa, s, t, heads):
    for r in range(sa.size):
        p = sa[r]
        if p > 0 and t[p - 1] == 0:
            c = s[p - 1]
            sa[heads[c]] = p - 1
            heads[c] += 1


@njit(cache=True, nogil=True)
def _k_induce_s(sa, s, t, tails):
    for r in range(sa.size - 1, -1, -1):
        p = sa[r]
        if p > 0 and t[p - 1] == 1:
            c = s[p - 1]
            sa[tails[c]] = p - 1
            tails[c] -= 1


@njit(cache=True, nogil=True)
def _k_name_lms(sa, s, islms, name_of):
    n = sa.size
    name = -1
    prev = -1
    for r in range(n):
        p = sa[r]
        if not islms[p]:
            continue
        if prev < 0:
            name += 1
        else:
            # compare LMS substrings at prev and p; the sentinel one
            # (position n-1) equals nothing but itself
            if prev == n - 1 or p == n - 1:
                name += 1
            else:
                k = 0
                same = True
                while True:
                    a_end = k > 0 and islms[prev + k] == 1
                    b_end = k > 0 and islms[p + k] == 1
                    if a_end and b_end:
                        break
                    if a_end != b_end or s[prev + k] != s[p + k]:
                        same = False
                        break
                    k += 1
                if not same:
                    name += 1
        name_of[p] = name
        prev = p
    return name + 1


def _sais_sentinel(s: np.ndarray, k: int,
                   ws: Workspace | None = None) -> np.ndarray:
    """SA of s, where s ends with a unique smallest symbol 0.

    Workspace buffers are used for the top level only; recursion sizes
    shrink geometrically and allocate fresh.
    """
    n = s.size
    if n == 1:
        return np.zeros(1, np.int32)
    t = _alloc(ws, "sais_t", n, np.uint8)
    _k_types(s, t)
    islms = _alloc(ws, "sais_islms", n, np.uint8)
    islms[0] = 0
    np.multiply(t[1:], 1 - t[:-1], out=islms[1:])
    lms = np.flatnonzero(islms).astype(np.int32)
    counts = np.bincount(s, minlength=k)
    heads = np.zeros(k, np.int64)
    np.cumsum(counts[:-1], out=heads[1:])
    tails = np.cumsum(counts) - 1

    sa = _alloc(ws, "sais_sa", n, np.int32)
    sa.fill(-1)
    _k_place_lms(sa, s, lms, tails.copy())
    _k_induce_l(sa, s, t, heads.copy())
    _k_induce_s(sa, s, t, tails.copy())

    name_of = _alloc(ws, "sais_nameof", n, np.int32)
    name_of.fill(-1)
    n_names = int(_k_name_lms(sa, s, islms, name_of))
    summary = name_of[lms]
    if n_names < lms.size:
        ssa = _sais_sentinel(summary.astype(np.int32), n_names)
    else:
        ssa = np.empty(lms.size, np.int32)
        ssa[summary] = np.arange(lms.size, dtype=np.int32)

    sa.fill(-1)
    _k_place_lms_ordered(sa, s, lms[ssa], tails.copy())
    _k_induce_l(sa, s, t, heads)
    _k_induce_s(sa, s, t, tails)
    return sa


def _sais(codes: np.ndarray, alphabet_size: int,
          ws: Workspace | None = None) -> np.ndarray:
    """0-based suffix array of an int code sequence (codes >= 0)."""
    n = codes.size
    if n == 0:
        return np.empty(0, np.int32)
    s = _alloc(ws, "sais_s", n + 1, np.int32)
    if alphabet_size > n:
        # compact sparse alphabets so bucket arrays stay O(n)
        present = ws.zeros("sais_present", alphabet_size, np.uint8) \
            if ws is not None else np.zeros(alphabet_size, np.uint8)
        present[codes] = 1
        remap = _alloc(ws, "sais_remap", alphabet_size, np.int32)
        np.cumsum(present, dtype=np.int32, out=remap)
        s[:n] = remap[codes]
        s[n] = 0
        return _sais_sentinel(s, int(remap[-1]) + 1, ws)[1:]
    s[:n] = codes
    s[:n] += 1
    s[n] = 0
    return _sais_sentinel(s, alphabet_size + 1, ws)[1:]


@njit(cache=True, nogil=True)
def _k_kasai(codes, sa, isa, lcp):
    n = sa.size
    k = 0
    for i in range(n):
        r = isa[i]
        if r == 0:
            k = 0
            continue
        j = sa[r - 1]
        while i + k < n and j + k < n and codes[i + k] == codes[j + k]:
            k += 1
        lcp[r] = k
        if k > 0:
            k -= 1


# ---------------------------------------------------------------------------
# Range-minimum: block minima plus a sparse table over them.  Queries scan
# at most two partial blocks (a fixed constant) and do one table lookup.


def _rmq_build(a: np.ndarray) -> np.ndarray:
    n = a.size
    nb = max(1, (n + _RMQ_BLOCK - 1) // _RMQ_BLOCK)
    padded = np.full(nb * _RMQ_BLOCK, _I32MAX, np.int32)
    padded[:n] = a
    blk = padded.reshape(nb, _RMQ_BLOCK).min(axis=1)
    levels = max(1, nb.bit_length())
    table = np.full((levels, nb), _I32MAX, np.int32)
    table[0] = blk
    for d in range(1, levels):
        half = 1 << (d - 1)
        span = 1 << d
        if nb - span + 1 > 0:
            np.minimum(table[d - 1, :nb - span + 1],
                       table[d - 1, half:nb - span + 1 + half],
                       out=table[d, :nb - span + 1])
    return table


@njit(cache=True, nogil=True)
def _k_rmq(a, table, lo, hi):
    # min of a[lo:hi], hi > lo
    bl = lo // _RMQ_BLOCK
    br = (hi - 1) // _RMQ_BLOCK
    m = _I32MAX
    if bl == br:
        for p in range(lo, hi):
            if a[p] < m:
                m = a[p]
        return m
    for p in range(lo, (bl + 1) * _RMQ_BLOCK):
        if a[p] < m:
            m = a[p]
    for p in range(br * _RMQ_BLOCK, hi):
        if a[p] < m:
            m = a[p]
    nfull = br - bl - 1
    if nfull > 0:
        d = 0
        while (2 << d) <= nfull:
            d += 1
        lo_b = bl + 1
        if table[d, lo_b] < m:
            m = table[d, lo_b]
        if table[d, br - (1 << d)] < m:
            m = table[d, br - (1 << d)]
    return m


@njit(cache=True, nogil=True)
def _k_lce(isa, lcp, table, n, p1, p2):
    if p1 == p2:
        return n - p1
    r1 = isa[p1]
    r2 = isa[p2]
    if r1 > r2:
        r1, r2 = r2, r1
    return _k_rmq(lcp, table, r1 + 1, r2 + 1)


@njit(cache=True, nogil=True)
def _k_lce_batch(isa, lcp, table, n, p1s, p2s, out):
    for t in range(p1s.size):
        out[t] = _k_lce(isa, lcp, table, n, p1s[t], p2s[t])


@njit(cache=True, nogil=True)
def _k_rank_walk(sa, lcp, len_at, rank_at):
    # dense ranks of the marked positions (len_at > 0) in one SA pass;
    # adjacent marked suffixes carry equal blocks iff their lengths match
    # and the running LCP minimum between them covers that length
    cur = 0
    prev_len = -1
    run_min = _I32MAX
    seen = False
    for r in range(sa.size):
        if seen and lcp[r] < run_min:
            run_min = lcp[r]
        p = sa[r]
        length = len_at[p]
        if length > 0:
            if not seen:
                cur = 1
            elif length != prev_len or run_min < length:
                cur += 1
            rank_at[p] = cur
            prev_len = length
            run_min = _I32MAX
            seen = True


@njit(cache=True, nogil=True)
def _k_interleave(dense, concat_start, lens, m, codes):
    # content shifted by m, followed by its string's separator code
    src = 0
    for t in range(m):
        dst = concat_start[t]
        for _ in range(lens[t]):
            codes[dst] = dense[src] + m
            dst += 1
            src += 1
        codes[dst] = t


# ---------------------------------------------------------------------------
# Public surface


@dataclass(frozen=True)
class IntText:
    """An integer text with an exclusive upper bound on its codes."""

    codes: np.ndarray
    alphabet_size: int

    def __post_init__(self):
        codes = np.ascontiguousarray(self.codes, dtype=np.int64)
        object.__setattr__(self, "codes", codes)
        if codes.size == 0:
            raise EmptyStringError("empty text")
        if codes.min() < 0 or codes.max() >= self.alphabet_size:
            raise ValueError("codes must lie in [0, alphabet_size)")


def build_suffix_array(text: IntText) -> np.ndarray:
    """1-based suffix array of the text, via induced sorting."""
    return _sais(text.codes.astype(np.int32), text.alphabet_size).astype(np.int64) + 1


class FamilyIndex:
    """Generalized suffix structure over a set of strings.

    Strings are concatenated with per-string separator codes that sort
    below every content code and increase left to right.  Content codes
    realize the symbol order: distances ascending, then statics by id;
    the constructor takes already-densified non-negative values bounded
    by value_bound (see build_family_index for the raw-value surface).
    """

    __slots__ = ("codes", "n_strings", "str_start", "str_len", "size",
                 "sa", "isa", "lcp", "_rmq")

    def __init__(self, dense_content: np.ndarray, starts: np.ndarray,
                 value_bound: int, ws: Workspace | None = None):
        if starts.size == 0:
            raise EmptyStringError("empty family")
        m = int(starts.size)
        total = int(dense_content.size)
        lens = np.empty(m, np.int64)
        lens[:-1] = np.diff(starts)
        lens[-1] = total - starts[-1]
        if lens.min() <= 0:
            raise EmptyStringError("family strings must be nonempty")
        size = total + m
        codes = _alloc(ws, "fi_codes", size, np.int32)
        concat_start = starts + np.arange(m)
        _k_interleave(dense_content, concat_start, lens, m, codes)

        self.codes = codes
        self.n_strings = m
        self.str_start = concat_start
        self.str_len = lens
        self.size = size
        self.sa = _sais(codes, m + value_bound, ws)
        self.isa = _alloc(ws, "fi_isa", size, np.int32)
        self.isa[self.sa] = np.arange(size, dtype=np.int32)
        self.lcp = _alloc(ws, "fi_lcp", size, np.int32)
        self.lcp[0] = 0
        _k_kasai(codes, self.sa, self.isa, self.lcp)
        self._rmq = None

    @property
    def rmq_table(self) -> np.ndarray:
        # only LCE queries need the table; ranking does not
        if self._rmq is None:
            self._rmq = _rmq_build(self.lcp)
        return self._rmq

    def position(self, string_index: int, offset: int) -> int:
        """0-based concatenated position of (string, 0-based offset)."""
        return int(self.str_start[string_index]) + offset

    def suffix_length(self, string_index: int, offset: int) -> int:
        return int(self.str_len[string_index]) - offset

    def lce0(self, p1: int, p2: int) -> int:
        """LCE of two 0-based concatenated positions."""
        return int(_k_lce(self.isa, self.lcp, self.rmq_table,
                          self.size, p1, p2))


def densify_values(content: np.ndarray, dist_bound: int,
                   static_ids: np.ndarray) -> np.ndarray:
    """Map raw values (distances >= 0, statics stored as -(id+1)) to dense
    non-negative codes preserving the symbol order; the result is bounded
    by dist_bound + static_ids.size."""
    return np.where(
        content >= 0,
        content,
        dist_bound + np.searchsorted(static_ids, -content - 1),
    )


def build_family_index(strings: Sequence) -> FamilyIndex:
    """Index a family of raw-value strings (distances >= 0, statics < 0)."""
    arrays = [np.ascontiguousarray(s, dtype=np.int64) for s in strings]
    if not arrays:
        raise EmptyStringError("empty family")
    starts = np.zeros(len(arrays), np.int64)
    lens = np.array([a.size for a in arrays], np.int64)
    np.cumsum(lens[:-1], out=starts[1:])
    content = np.concatenate(arrays)
    dists = content[content >= 0]
    dist_bound = int(dists.max()) + 1 if dists.size else 1
    static_ids = np.unique(-content[content < 0] - 1)
    dense = densify_values(content, dist_bound, static_ids)
    return FamilyIndex(dense, starts, dist_bound + int(static_ids.size))


def lce(ix: FamilyIndex, p1: int, p2: int) -> int:
    """Longest common prefix of two suffixes of the concatenation,
    1-based concatenated positions."""
    for p in (p1, p2):
        if not 1 <= p <= ix.size:
            raise OutOfRangeError(f"position {p} outside 1..{ix.size}")
    return ix.lce0(p1 - 1, p2 - 1)


def rank_positions(ix: FamilyIndex, positions: np.ndarray,
                   lengths: np.ndarray | None = None,
                   ws: Workspace | None = None) -> np.ndarray:
    """Dense 1-based lexicographic ranks of the blocks starting at the
    given 0-based concatenated positions (each running to its string end).

    Two blocks are equal iff they have equal length and their LCE covers
    it; ranks increase by exactly one at each distinct block value.
    Linear in the index size: one SA walk with a running LCP minimum.
    """
    if lengths is None:
        ends = ix.str_start + ix.str_len
        owner = np.searchsorted(ix.str_start, positions, side="right") - 1
        lengths = ends[owner] - positions
    if ws is None:
        len_at = np.zeros(ix.size, np.int32)
    else:
        len_at = ws.zeros("rank_lenat", ix.size, np.int32)
    len_at[positions] = lengths
    rank_at = _alloc(ws, "rank_rankat", ix.size, np.int32)
    _k_rank_walk(ix.sa, ix.lcp, len_at, rank_at)
    return rank_at[positions].astype(np.int64)


def rank_blocks(ix: FamilyIndex, refs) -> np.ndarray:
    """Dense ranks of the blocks named by refs (BlockRef-like objects with
    family_string, 1-based start_offset and length) within their family."""
    positions = np.empty(len(refs), np.int64)
    for t, ref in enumerate(refs):
        end = ref.start_offset + ref.length - 1
        if end != int(ix.str_len[ref.family_string]):
            raise ValueError(
                f"block ref {ref} does not end at its family string end")
        positions[t] = ix.position(ref.family_string, ref.start_offset - 1)
    return rank_positions(ix, positions)
