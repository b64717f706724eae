"""Block decomposition of suffix prev encodings.

prev(x[i..n]) followed by one appended 0 splits into blocks, each ending
at a 0 (the appended 0 occupies virtual position n+1).  For a fixed block
index j, consecutive suffixes either reuse a suffix of the previous
suffix's block or start a fresh block right after it; the fresh blocks
form the family S_j, of total length at most n+1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import OutOfRangeError
from .pstring import FwdEncoding, PrevEncoding, PString
from .suffix import Workspace, _alloc


@njit(cache=True, nogil=True)
def _k_densify(content, dist_bound, static_ids, out):
    for t in range(content.size):
        v = content[t]
        if v >= 0:
            out[t] = v
        else:
            out[t] = dist_bound + np.searchsorted(static_ids, -v - 1)


@dataclass(frozen=True)
class BlockRef:
    """A block, referenced as a suffix of one family string.

    start_offset is 1-based within the family string; every block runs to
    the end of its string, so start_offset + length - 1 equals the string
    length.
    """

    family_string: int
    start_offset: int
    length: int


@njit(cache=True, nogil=True)
def _k_scan_family(prev_vals, fwd_vals, is_param, j, m, n, share_zero,
                   content, fam_start, fam_b, ref_str, ref_off, b_out):
    """Forward scan producing S_j and per-suffix block-j descriptors.

    Returns (content length, family string count).  Interval state (bcur,
    ecur) tracks block j of the previous suffix in global 1-based
    positions; ecur == n+1 denotes the virtual appended 0.  With
    share_zero, all single-symbol "0" blocks reuse one family string
    (S_j is a set; per-suffix intervals are unaffected).
    """
    L = 0
    F = 0
    zstr = -1
    # first suffix: locate block j of prev(x) directly
    zeros_seen = 0
    g = 1
    while g <= n and zeros_seen < j - 1:
        if prev_vals[g - 1] == 0:
            zeros_seen += 1
        g += 1
    bcur = g
    gg = g
    while gg <= n and prev_vals[gg - 1] != 0:
        gg += 1
    ecur = gg if gg <= n else n + 1
    fam_start[F] = L
    fam_b[F] = bcur
    top = ecur if ecur <= n else n
    for p in range(bcur, top + 1):
        content[L] = prev_vals[p - 1]
        L += 1
    if ecur == n + 1:
        content[L] = 0
        L += 1
    scur = F
    ocur = 0
    if share_zero and ecur == bcur:
        zstr = F
    F += 1
    ref_str[0] = scur
    ref_off[0] = ocur
    b_out[0] = bcur

    for i in range(2, m + 1):
        if is_param[i - 2] == 0:
            # dropping a static symbol keeps the block structure; only
            # block 1 loses its leading symbol
            if j == 1:
                bcur += 1
                ocur += 1
        else:
            # global position of the first occurrence of x[i-1] in x[i..n];
            # the stored INF distance n+1 lands k past every block end
            k = (i - 1) + fwd_vals[i - 2]
            if k < bcur:
                pass
            elif k <= ecur:
                ocur += k + 1 - bcur
                bcur = k + 1
            else:
                s = ecur + 1
                if share_zero and zstr >= 0:
                    if s > n:
                        singleton = True
                    else:
                        v = prev_vals[s - 1]
                        singleton = v == 0 or (v >= 0 and v >= s - i + 1)
                    if singleton:
                        scur = zstr
                        ocur = 0
                        bcur = s
                        ecur = s
                        ref_str[i - 1] = scur
                        ref_off[i - 1] = ocur
                        b_out[i - 1] = bcur
                        continue
                fam_start[F] = L
                fam_b[F] = s
                g = s
                while g <= n:
                    v = prev_vals[g - 1]
                    if v >= 0 and v >= g - i + 1:
                        v = 0
                    content[L] = v
                    L += 1
                    if v == 0:
                        break
                    g += 1
                if g > n:
                    content[L] = 0
                    L += 1
                    g = n + 1
                scur = F
                ocur = 0
                bcur = s
                ecur = g
                if share_zero and ecur == bcur:
                    zstr = F
                F += 1
        ref_str[i - 1] = scur
        ref_off[i - 1] = ocur
        b_out[i - 1] = bcur
    return L, F


class FamilyColumn:
    """S_j plus the block-j descriptor of every suffix that has one."""

    __slots__ = ("j", "m", "content", "dense", "fam_start", "fam_len",
                 "fam_b", "ref_str", "ref_off", "b")

    def __init__(self, j, m, content, dense, fam_start, fam_b,
                 ref_str, ref_off, b):
        self.j = j
        self.m = m
        self.content = content
        self.dense = dense
        self.fam_start = fam_start
        self.fam_b = fam_b
        self.ref_str = ref_str
        self.ref_off = ref_off
        self.b = b
        lens = np.empty(fam_start.size, np.int64)
        lens[:-1] = np.diff(fam_start)
        lens[-1] = content.size - fam_start[-1]
        self.fam_len = lens

    @property
    def n_strings(self) -> int:
        return int(self.fam_start.size)

    @property
    def total_length(self) -> int:
        return int(self.content.size)

    def block_lengths(self) -> np.ndarray:
        """Length of block j for each suffix i = 1..m."""
        return self.fam_len[self.ref_str] - self.ref_off

    def block_ends(self) -> np.ndarray:
        """Global end positions e_{i,j} for each suffix i = 1..m."""
        return self.b + self.block_lengths() - 1

    def family_string(self, f: int) -> np.ndarray:
        lo = int(self.fam_start[f])
        return self.content[lo:lo + int(self.fam_len[f])]

    def block_values(self, i: int) -> np.ndarray:
        """Raw values of block j of suffix i (1-based, i <= m)."""
        f = int(self.ref_str[i - 1])
        lo = int(self.fam_start[f]) + int(self.ref_off[i - 1])
        return self.content[lo:int(self.fam_start[f]) + int(self.fam_len[f])]


def scan_family(x: PString, p: PrevEncoding, f: FwdEncoding,
                z: np.ndarray, j: int, share_zero: bool = False,
                ws: Workspace | None = None) -> FamilyColumn | None:
    """Run the per-j scan; None when no suffix has a j-th block.

    share_zero collapses duplicate "0" family strings (the construction
    pipeline uses this; the literal per-event family list keeps one
    string per case-1 event).  With a workspace the returned column
    aliases reusable buffers and must be consumed before the next scan.
    """
    n = x.n
    m = int(np.searchsorted(-z, -(j - 1), side="right"))
    if m == 0:
        return None
    content = _alloc(ws, "scan_content", n + 2, np.int64)
    fam_start = _alloc(ws, "scan_fstart", n + 2, np.int64)
    fam_b = _alloc(ws, "scan_fb", n + 2, np.int64)
    ref_str = _alloc(ws, "scan_rstr", m, np.int32)
    ref_off = _alloc(ws, "scan_roff", m, np.int32)
    b_out = _alloc(ws, "scan_b", m, np.int64)
    length, n_fams = _k_scan_family(
        p.values, f.values, x.is_param, j, m, n, share_zero,
        content, fam_start, fam_b, ref_str, ref_off, b_out)
    if ws is None:
        content = content[:length].copy()
        fam_start = fam_start[:n_fams].copy()
        fam_b = fam_b[:n_fams].copy()
    else:
        content = content[:length]
        fam_start = fam_start[:n_fams]
        fam_b = fam_b[:n_fams]
    dense = _alloc(ws, "scan_dense", length, np.int32)
    _k_densify(content, n, x.static_ids, dense)
    return FamilyColumn(j, m, content, dense, fam_start, fam_b,
                        ref_str, ref_off, b_out)


def zeros_per_suffix(x: PString, f: FwdEncoding) -> np.ndarray:
    """z_i = number of 0s in prev(x[i..n]) = distinct Param symbols in
    x[i..n], for all i (0-based array)."""
    is_last = (f.values == x.n + 1) & x.is_param.astype(bool)
    return np.cumsum(is_last[::-1]).astype(np.int64)[::-1]


class BlockTable:
    """Per-j families S_j and per-suffix block descriptors."""

    __slots__ = ("n", "pi", "z", "columns")

    def __init__(self, n: int, pi: int, z: np.ndarray, columns: list):
        self.n = n
        self.pi = pi
        self.z = z
        self.columns = columns

    @property
    def max_blocks(self) -> int:
        return len(self.columns)

    def _check_i(self, i: int):
        if not 1 <= i <= self.n:
            raise OutOfRangeError(f"suffix {i} outside 1..{self.n}")

    def column(self, j: int) -> FamilyColumn:
        if not 1 <= j <= len(self.columns):
            raise OutOfRangeError(f"block index {j} outside 1..{len(self.columns)}")
        return self.columns[j - 1]

    def block_ref(self, i: int, j: int) -> BlockRef:
        self._check_i(i)
        col = self.column(j)
        if i > col.m:
            raise OutOfRangeError(f"suffix {i} has no block {j}")
        fs = int(col.ref_str[i - 1])
        off = int(col.ref_off[i - 1])
        return BlockRef(fs, off + 1, int(col.fam_len[fs]) - off)

    def interval(self, i: int, j: int) -> tuple[int, int]:
        """Global (b, e) of block j of suffix i; e may be the virtual n+1."""
        ref = self.block_ref(i, j)
        col = self.columns[j - 1]
        b = int(col.b[i - 1])
        return b, b + ref.length - 1

    def block_values(self, i: int, j: int) -> np.ndarray:
        self._check_i(i)
        col = self.column(j)
        if i > col.m:
            raise OutOfRangeError(f"suffix {i} has no block {j}")
        return col.block_values(i)

    def families(self, j: int) -> list:
        col = self.column(j)
        return [col.family_string(f) for f in range(col.n_strings)]


def decompose_blocks(x: PString, p: PrevEncoding, f: FwdEncoding) -> BlockTable:
    """Materialize every per-j family and block descriptor (Eq.-style
    decomposition of all suffixes)."""
    z = zeros_per_suffix(x, f)
    max_b = int(z[0]) + 1
    columns = []
    for j in range(1, max_b + 1):
        col = scan_family(x, p, f, z, j)
        assert col is not None
        columns.append(col)
    return BlockTable(x.n, x.pi_count, z, columns)


def block_count(t: BlockTable, i: int) -> int:
    """z_i + 1, the number of blocks of suffix i."""
    t._check_i(i)
    return int(t.z[i - 1]) + 1
