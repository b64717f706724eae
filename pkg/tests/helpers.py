"""Shared test helpers: tiny p-string builders and from-scratch oracles.

The oracles here work directly off the definitions (dict scans over raw
symbols, itertools over bijections) and deliberately share no code with
the library's construction paths.
"""

from itertools import permutations, product

import numpy as np

from psax.pstring import INF, Param, PString, Static


def pstr(s: str) -> PString:
    """ASCII convenience: lowercase letters are Param, the rest Static."""
    return PString.from_symbols(
        Param(ord(c)) if c.islower() else Static(ord(c)) for c in s
    )


def enc_list(encoding) -> list:
    """Encoding symbols as a plain list: d for Dist, 'A' for Static, INF."""
    out = []
    for sym in encoding.symbols:
        if sym is INF:
            out.append(INF)
        elif isinstance(sym, Static):
            out.append(chr(sym.id))
        else:
            out.append(sym.d)
    return out


def scratch_prev_values(x: PString, i: int = 1) -> list:
    """prev(x[i..n]) raw values computed from the definition alone."""
    last = {}
    out = []
    for pos in range(i - 1, x.n):
        sid = int(x.ids[pos])
        if x.is_param[pos]:
            out.append(0 if sid not in last else pos - last[sid])
            last[sid] = pos
        else:
            out.append(-(sid + 1))
    return out


def scratch_fwd_values(x: PString) -> list:
    """fwd(x) raw values from the definition; INF encoded as n + 1."""
    nxt = {}
    out = [0] * x.n
    for pos in range(x.n - 1, -1, -1):
        sid = int(x.ids[pos])
        if x.is_param[pos]:
            out[pos] = (x.n + 1) if sid not in nxt else nxt[sid] - pos
            nxt[sid] = pos
        else:
            out[pos] = -(sid + 1)
    return out


def scratch_blocks(x: PString, i: int) -> list:
    """Blocks of prev(x[i..n])0 as (values, b, e) with 1-based global
    positions; the appended 0 sits at virtual position n + 1."""
    vals = scratch_prev_values(x, i) + [0]
    blocks = []
    start = 0
    for k, v in enumerate(vals):
        if v == 0:
            blocks.append((vals[start:k + 1], i + start, i + k))
            start = k + 1
    return blocks


def bijection_pmatch(x: PString, y: PString) -> bool:
    """p-match decided by searching all bijections on the Param symbols."""
    if x.n != y.n:
        return False
    xs = sorted({int(v) for v, p in zip(x.ids, x.is_param) if p})
    ys = sorted({int(v) for v, p in zip(y.ids, y.is_param) if p})
    if len(xs) != len(ys):
        return False
    for perm in permutations(ys):
        phi = dict(zip(xs, perm))
        ok = True
        for pos in range(x.n):
            if bool(x.is_param[pos]) != bool(y.is_param[pos]):
                ok = False
                break
            if x.is_param[pos]:
                if phi[int(x.ids[pos])] != int(y.ids[pos]):
                    ok = False
                    break
            elif int(x.ids[pos]) != int(y.ids[pos]):
                ok = False
                break
        if ok:
            return True
    return False


def all_strings(alphabet: str, n: int):
    """All p-strings of exactly length n over the given characters."""
    for tup in product(alphabet, repeat=n):
        yield pstr("".join(tup))


def rand_pstring(rng: np.random.Generator, n: int, pi: int, sigma: int) -> PString:
    """Uniform random p-string over pi Param ids and sigma Static ids."""
    choices = pi + sigma
    draw = rng.integers(0, choices, n)
    is_param = (draw < pi).astype(np.uint8)
    ids = np.where(draw < pi, draw, draw - pi)
    if not is_param.any() and sigma == 0:  # pragma: no cover
        raise ValueError("empty alphabet")
    return PString(is_param, ids)


def rand_param_bijection(rng: np.random.Generator, x: PString) -> PString:
    """Apply a random bijective renaming to the Param ids of x."""
    uniq = np.unique(x.ids[x.is_param.astype(bool)])
    target = rng.permutation(uniq.size)
    mapping = dict(zip(uniq.tolist(), target.tolist()))
    ids = x.ids.copy()
    for pos in range(x.n):
        if x.is_param[pos]:
            ids[pos] = mapping[int(ids[pos])]
    return PString(x.is_param, ids)
