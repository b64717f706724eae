import numpy as np
import pytest

from helpers import all_strings, pstr, rand_param_bijection, rand_pstring
from psax.blocks import decompose_blocks
from psax.errors import EmptyStringError
from psax.psa import (PIndex, RankMatrix, build_psa, build_rank_matrix,
                      check_sorted, naive_psa, prev_suffix_less,
                      radix_sort_rank_strings)
from psax.pstring import PString, fwd_encode, prev_encode


def test_psa_golden_fig():
    assert build_psa(pstr("stssAtssAs")).psa.tolist() == \
        [10, 6, 2, 1, 3, 7, 4, 8, 9, 5]


def test_psa_trivial():
    assert build_psa(pstr("AAA")).psa.tolist() == [3, 2, 1]
    assert build_psa(pstr("ss")).psa.tolist() == [2, 1]
    assert build_psa(pstr("s")).psa.tolist() == [1]


def test_naive_psa_golden():
    assert naive_psa(pstr("stssAtssAs")).tolist() == \
        [10, 6, 2, 1, 3, 7, 4, 8, 9, 5]
    assert naive_psa(pstr("s")).tolist() == [1]


def test_rank_matrix_golden():
    x = pstr("stssAtssAs")
    rm = build_rank_matrix(decompose_blocks(x, prev_encode(x), fwd_encode(x)))
    assert rm.matrix[0].tolist() == [1, 1, 1, 1, 2, 1, 1, 1, 2, 1]
    assert rm.row(10) == (1, 1)
    row6 = rm.row(6)
    assert len(row6) == 3 and row6[:2] == (1, 1) and row6[2] >= 1
    assert rm.row(10) < rm.row(6)  # prefix sorts first


def test_rank_matrix_single_static():
    x = pstr("A")
    rm = build_rank_matrix(decompose_blocks(x, prev_encode(x), fwd_encode(x)))
    assert rm.row(1) == (1,)


def test_radix_prefix_first():
    # rows {i1:(2,1), i2:(1), i3:(1,2), i4:(1,1)} -> [i2, i4, i3, i1]
    m = np.array([[2, 1], [1, 0], [1, 2], [1, 1]], np.int32).T.copy()
    lens = np.array([2, 1, 2, 2], np.int64)
    perm = radix_sort_rank_strings(RankMatrix(m, lens))
    assert perm.tolist() == [2, 4, 3, 1]
    single = radix_sort_rank_strings(RankMatrix(np.array([[1]], np.int32),
                                                np.array([1], np.int64)))
    assert single.tolist() == [1]


def test_empty_rejected():
    with pytest.raises(EmptyStringError):
        PString.from_symbols([])
    # an empty PString cannot exist, so build_psa can only see n >= 1


def _assert_oracle_match(x, threshold=64):
    idx = build_psa(x, block_threshold=threshold)
    want = naive_psa(x)
    assert idx.psa.tolist() == want.tolist(), x
    assert check_sorted(x, idx.psa)


def test_oracle_exhaustive_small():
    for n in range(1, 9):
        for x in all_strings("stA", n):
            _assert_oracle_match(x)


def test_oracle_exhaustive_small_streaming():
    for n in range(1, 7):
        for x in all_strings("stA", n):
            _assert_oracle_match(x, threshold=0)


def test_oracle_random(rng):
    for _ in range(150):
        n = int(rng.integers(1, 80))
        pi = int(rng.integers(1, 7))
        sigma = int(rng.integers(0, 4))
        x = rand_pstring(rng, n, pi=pi, sigma=sigma)
        _assert_oracle_match(x)


def test_oracle_random_streaming_matches_fast(rng):
    for _ in range(60):
        n = int(rng.integers(1, 120))
        x = rand_pstring(rng, n, pi=5, sigma=2)
        fast = build_psa(x).psa
        slow = build_psa(x, block_threshold=0).psa
        assert np.array_equal(fast, slow)


def test_lemma1_biconditional(rng):
    # row order of C_i (prefix-first) must equal prev-encoding order
    for _ in range(40):
        n = int(rng.integers(2, 24))
        x = rand_pstring(rng, n, pi=3, sigma=1)
        p = prev_encode(x)
        rm = build_rank_matrix(decompose_blocks(x, p, fwd_encode(x)))
        for i1 in range(1, n + 1):
            for i2 in range(1, n + 1):
                if i1 == i2:
                    continue
                assert prev_suffix_less(p, i1, i2) == (rm.row(i1) < rm.row(i2))


def test_renaming_invariance(rng):
    for _ in range(50):
        n = int(rng.integers(1, 200))
        x = rand_pstring(rng, n, pi=6, sigma=2)
        y = rand_param_bijection(rng, x)
        assert np.array_equal(build_psa(x).psa, build_psa(y).psa)


def test_psa_is_permutation_large(rng):
    x = rand_pstring(rng, 20_000, pi=12, sigma=3)
    idx = build_psa(x)
    assert np.array_equal(np.sort(idx.psa), np.arange(1, 20_001))
    picks = rng.integers(2, 20_001, 200)
    assert check_sorted(x, idx.psa, pairs=picks.tolist())


def test_threaded_build_matches(rng, monkeypatch):
    x = rand_pstring(rng, 3000, pi=8, sigma=2)
    base = build_psa(x).psa
    monkeypatch.setenv("PSAX_THREADS", "4")
    assert np.array_equal(build_psa(x).psa, base)
