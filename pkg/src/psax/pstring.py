"""Input strings over a mixed static/parameterized alphabet and their encodings.

Positions in the public API are 1-based throughout, matching the index
arrays this package produces.  Raw value arrays use the convention:
distance d >= 0 stays d, a static symbol with id s is stored as -(s + 1).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np
from numba import njit

from .errors import EmptyStringError, OutOfRangeError


@dataclass(frozen=True)
class Param:
    """A parameterized symbol; subject to bijective renaming in a p-match."""

    id: int


@dataclass(frozen=True)
class Static:
    """A static symbol; must match literally."""

    id: int


@dataclass(frozen=True)
class Dist:
    """Distance to the previous (or next) occurrence of the same symbol."""

    d: int


class _Inf:
    """Sentinel for "no next occurrence" in the forward encoding."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INF"


INF = _Inf()

Symbol = Union[Param, Static]
PrevSymbol = Union[Dist, Static]
FwdSymbol = Union[Dist, Static, _Inf]


@njit(cache=True, nogil=True)
def _prev_kernel(is_param, ids, dense, pi, out):
    last = np.full(pi, -1, np.int64)
    for i in range(ids.size):
        if is_param[i]:
            q = dense[i]
            j = last[q]
            out[i] = 0 if j < 0 else i - j
            last[q] = i
        else:
            out[i] = -(ids[i] + 1)


@njit(cache=True, nogil=True)
def _fwd_kernel(is_param, ids, dense, pi, inf_val, out):
    nxt = np.full(pi, -1, np.int64)
    for i in range(ids.size - 1, -1, -1):
        if is_param[i]:
            q = dense[i]
            j = nxt[q]
            out[i] = inf_val if j < 0 else j - i
            nxt[q] = i
        else:
            out[i] = -(ids[i] + 1)


class PString:
    """A p-string: a sequence of Param/Static symbols with non-negative ids."""

    __slots__ = ("is_param", "ids", "n", "pi_count", "sigma_count",
                 "param_dense", "static_ids")

    def __init__(self, is_param: np.ndarray, ids: np.ndarray):
        is_param = np.ascontiguousarray(is_param, dtype=np.uint8)
        ids = np.ascontiguousarray(ids, dtype=np.int64)
        if ids.size == 0:
            raise EmptyStringError("p-string must have length >= 1")
        if ids.min() < 0:
            raise ValueError("symbol ids must be non-negative")
        self.is_param = is_param
        self.ids = ids
        self.n = int(ids.size)
        mask = is_param.astype(bool)
        uniq_p = np.unique(ids[mask])
        self.pi_count = int(uniq_p.size)
        self.static_ids = np.unique(ids[~mask])
        self.sigma_count = int(self.static_ids.size)
        dense = np.full(self.n, -1, np.int64)
        if uniq_p.size:
            dense[mask] = np.searchsorted(uniq_p, ids[mask])
        self.param_dense = dense

    @classmethod
    def from_symbols(cls, symbols: Iterable[Symbol]) -> "PString":
        syms = list(symbols)
        is_param = np.fromiter((isinstance(s, Param) for s in syms),
                               dtype=np.uint8, count=len(syms))
        ids = np.fromiter((s.id for s in syms), dtype=np.int64, count=len(syms))
        return cls(is_param, ids)

    @property
    def symbols(self) -> tuple:
        return tuple(Param(int(v)) if p else Static(int(v))
                     for p, v in zip(self.is_param, self.ids))

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return (isinstance(other, PString)
                and np.array_equal(self.is_param, other.is_param)
                and np.array_equal(self.ids, other.ids))

    def __hash__(self):
        return hash((self.n, self.ids.tobytes(), self.is_param.tobytes()))

    def __repr__(self) -> str:
        return f"PString(n={self.n}, pi={self.pi_count}, sigma={self.sigma_count})"

    def slice(self, start: int, stop: int) -> "PString":
        """Substring x[start..stop], 1-based inclusive bounds."""
        if not (1 <= start <= stop <= self.n):
            raise OutOfRangeError(f"slice [{start}..{stop}] outside 1..{self.n}")
        return PString(self.is_param[start - 1:stop], self.ids[start - 1:stop])

    def digest(self) -> bytes:
        """SHA-256 of a canonical byte encoding of the symbol sequence."""
        h = hashlib.sha256(b"psax-input\x00")
        h.update(np.uint64(self.n).tobytes())
        tagged = self.ids * 2 + self.is_param
        h.update(tagged.astype("<i8").tobytes())
        return h.digest()


class PrevEncoding:
    """prev(x): each Param symbol replaced by the distance to its previous
    occurrence (0 at a first occurrence), Static symbols kept as-is."""

    __slots__ = ("values", "n")

    def __init__(self, values: np.ndarray):
        self.values = values
        self.n = int(values.size)

    @property
    def symbols(self) -> tuple:
        return tuple(Dist(int(v)) if v >= 0 else Static(int(-v - 1))
                     for v in self.values)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, PrevEncoding) and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash(self.values.tobytes())


class FwdEncoding:
    """fwd(x): distance to the next occurrence, INF if none, statics as-is.

    INF is stored as n + 1, a distance that cannot occur.
    """

    __slots__ = ("values", "n")

    def __init__(self, values: np.ndarray):
        self.values = values
        self.n = int(values.size)

    @property
    def symbols(self) -> tuple:
        out = []
        for v in self.values:
            if v < 0:
                out.append(Static(int(-v - 1)))
            elif v == self.n + 1:
                out.append(INF)
            else:
                out.append(Dist(int(v)))
        return tuple(out)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, FwdEncoding) and np.array_equal(self.values, other.values)


def prev_encode(x: PString) -> PrevEncoding:
    """Compute prev(x) in one linear pass."""
    out = np.empty(x.n, np.int64)
    _prev_kernel(x.is_param, x.ids, x.param_dense, max(x.pi_count, 1), out)
    return PrevEncoding(out)


def fwd_encode(x: PString) -> FwdEncoding:
    """Compute fwd(x) in one linear pass."""
    out = np.empty(x.n, np.int64)
    _fwd_kernel(x.is_param, x.ids, x.param_dense, max(x.pi_count, 1),
                np.int64(x.n + 1), out)
    return FwdEncoding(out)


def suffix_prev_at(p: PrevEncoding, i: int, k: int) -> PrevSymbol:
    """Value prev(x[i..n])[k] retrieved from the whole-string encoding.

    A stored distance d at global position i+k-1 points before the suffix
    start exactly when d >= k, in which case the suffix-local value is 0.
    Constant time.
    """
    n = p.n
    if not 1 <= i <= n:
        raise OutOfRangeError(f"suffix start {i} outside 1..{n}")
    if not 1 <= k <= n - i + 1:
        raise OutOfRangeError(f"offset {k} outside 1..{n - i + 1}")
    v = int(p.values[i + k - 2])
    if v >= k:
        return Dist(0)
    if v >= 0:
        return Dist(v)
    return Static(-v - 1)


def suffix_prev_values(p: PrevEncoding, i: int) -> np.ndarray:
    """Raw value array of prev(x[i..n]), derived from the global encoding."""
    n = p.n
    if not 1 <= i <= n:
        raise OutOfRangeError(f"suffix start {i} outside 1..{n}")
    v = p.values[i - 1:]
    k = np.arange(1, n - i + 2)
    return np.where((v >= 0) & (v >= k), 0, v)


def prev_order_keys(values: np.ndarray, n: int) -> np.ndarray:
    """Map raw prev values to keys whose integer order realizes the symbol
    order: distances ascending, then static ids ascending."""
    return np.where(values >= 0, values, n + (-values - 1))


def pmatch(x: PString, y: PString) -> bool:
    """True iff x and y match up to a bijective renaming of Param symbols."""
    if x.n != y.n:
        return False
    return bool(np.array_equal(prev_encode(x).values, prev_encode(y).values))
