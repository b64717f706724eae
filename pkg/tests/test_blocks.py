import numpy as np
import pytest

from helpers import all_strings, pstr, rand_pstring, scratch_blocks
from psax.blocks import block_count, decompose_blocks
from psax.errors import OutOfRangeError
from psax.pstring import fwd_encode, prev_encode


def build(x):
    return decompose_blocks(x, prev_encode(x), fwd_encode(x))


def test_decompose_golden_fig_string():
    x = pstr("stssAtssAs")
    t = build(x)
    assert block_count(t, 1) == 3
    blocks = [t.block_values(1, j).tolist() for j in (1, 2, 3)]
    assert blocks == [[0], [0], [2, 1, -66, 4, 3, 1, -66, 2, 0]]
    assert block_count(t, 10) == 2
    assert [t.block_values(10, j).tolist() for j in (1, 2)] == [[0], [0]]


def test_decompose_single_static():
    x = pstr("A")
    t = build(x)
    assert block_count(t, 1) == 1
    assert t.block_values(1, 1).tolist() == [-66, 0]
    assert t.interval(1, 1) == (1, 2)


def test_family_s1_golden():
    t = build(pstr("stssAtssAs"))
    col = t.column(1)
    intervals = list(zip(col.fam_b.tolist(),
                         (col.fam_b + col.fam_len - 1).tolist()))
    assert intervals == [(1, 1), (2, 2), (3, 3), (4, 4), (5, 6),
                         (7, 7), (8, 8), (9, 10)]
    contents = [s.tolist() for s in t.families(1)]
    assert contents.count([0]) == 6
    assert contents.count([-66, 0]) == 2
    assert col.total_length == 10 <= 11


def test_block_count_range_checks():
    t = build(pstr("st"))
    with pytest.raises(OutOfRangeError):
        block_count(t, 0)
    with pytest.raises(OutOfRangeError):
        block_count(t, 3)
    with pytest.raises(OutOfRangeError):
        t.block_ref(2, block_count(t, 2) + 1)


def _check_against_scratch(x):
    t = build(x)
    n = x.n
    for i in range(1, n + 1):
        want = scratch_blocks(x, i)
        assert block_count(t, i) == len(want)
        assert len(want) <= x.pi_count + 1
        for j, (vals, b, e) in enumerate(want, start=1):
            assert t.block_values(i, j).tolist() == vals, (i, j)
            assert t.interval(i, j) == (b, e), (i, j)
            ref = t.block_ref(i, j)
            col = t.column(j)
            assert ref.start_offset + ref.length - 1 == \
                int(col.fam_len[ref.family_string])
    # structural facts per family
    for j in range(1, t.max_blocks + 1):
        col = t.column(j)
        assert col.total_length <= n + 1
        fam_e = col.fam_b + col.fam_len - 1
        # case-1 intervals are disjoint and appended left to right
        assert (col.fam_b[1:] > fam_e[:-1]).all()
        # e_{i,j} is non-decreasing over i
        ends = col.block_ends()
        assert (np.diff(ends) >= 0).all()
        # every family string contains exactly one 0, its last symbol
        for f in range(col.n_strings):
            s = col.family_string(f)
            assert s[-1] == 0 and (s[:-1] != 0).all()
    # concatenating block contents reproduces prev(x[i..n]) plus one 0
    from helpers import scratch_prev_values
    for i in range(1, n + 1):
        cat = np.concatenate([t.block_values(i, j)
                              for j in range(1, block_count(t, i) + 1)])
        assert cat.tolist() == scratch_prev_values(x, i) + [0]


def test_scratch_oracle_exhaustive_small():
    for n in range(1, 9):
        for x in all_strings("stA", n):
            _check_against_scratch(x)


def test_scratch_oracle_three_params(rng):
    for n in range(1, 7):
        for _ in range(60):
            x = rand_pstring(rng, n, pi=3, sigma=1)
            _check_against_scratch(x)


def test_scratch_oracle_random_longer(rng):
    for _ in range(250):
        n = int(rng.integers(1, 13))
        x = rand_pstring(rng, n, pi=3, sigma=2)
        _check_against_scratch(x)
    for _ in range(40):
        n = int(rng.integers(20, 120))
        x = rand_pstring(rng, n, pi=5, sigma=3)
        _check_against_scratch(x)


def test_family_total_length_bound_larger(rng):
    for _ in range(10):
        n = 3000
        x = rand_pstring(rng, n, pi=8, sigma=2)
        t = build(x)
        for j in range(1, t.max_blocks + 1):
            assert t.column(j).total_length <= n + 1
