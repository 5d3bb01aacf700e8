import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from conftest import GRID, S0
from superwedge.indexset import (
    Pattern, PatternError, Shape, block_key, check_defect, check_ideal_identity, defect,
    enumerate_patterns, in_ideal, kappa, make_pattern, poset_leq, row_weight, same_block, weight_at_level,
    window,
)
from superwedge.lattice import EpsWeight, eps, simple_root


def P(*rows, r=1, shape=S0):
    return make_pattern(shape, r, rows)


def test_make_pattern_examples():
    assert P((1, 0), (1, 0)) == kappa(S0, 1)
    P((0, 1), (1, 0))
    with pytest.raises(PatternError):
        P((1, 1), (1, 0))
    with pytest.raises(PatternError):
        P((1, 0, 0), (1, 0))


def test_window_examples():
    k1 = kappa(S0, 1)
    assert window(k1, 2) == ((0, 1, 0, 0), (1, 1, 0, 0))
    assert window(k1, 1) == ((1, 0), (1, 0))
    with pytest.raises(PatternError):
        window(kappa(S0, 2), 1)


def test_weight_examples():
    k1 = kappa(S0, 1)
    assert weight_at_level(k1, 1) == 2 * eps(0, 1)
    assert weight_at_level(k1, 2) == eps(-1, 2) + 2 * eps(0, 2)
    odd = Shape((1,), (1,), 0)
    p = make_pattern(odd, 1, [(1, 0), (1, 0)])
    assert row_weight(p, 0, 1) == -eps(1, 1)


def test_poset_examples():
    lam, mu = P((0, 1), (1, 0)), P((1, 0), (0, 1))
    assert poset_leq(lam, lam)
    assert not poset_leq(lam, mu)
    assert poset_leq(mu, lam)
    assert not poset_leq(kappa(S0, 1), lam)


def test_block_examples():
    k1 = kappa(S0, 1)
    a, b = P((0, 1), (1, 0)), P((1, 0), (0, 1))
    assert block_key(a) == block_key(b)
    assert block_key(k1) != block_key(a)
    assert weight_at_level(a, 1) == 2 * eps(0, 1) - simple_root(0, 1)


def test_kappa_examples():
    assert window(kappa(S0, 2), 2) == ((1, 0, 0, 0), (1, 1, 0, 0))
    odd = Shape((1,), (1,), 0)
    assert window(kappa(odd, 2), 2)[0] == (1, 1, 1, 0)
    with pytest.raises(PatternError):
        kappa(Shape((2,), (0,), 0), 1)


def test_ideal_examples():
    for r in (1, 2):
        k = kappa(S0, r)
        assert in_ideal(k, r) and not in_ideal(k, r, strict=True)
    k2 = kappa(S0, 2)
    assert in_ideal(k2, 1, strict=True) or not in_ideal(k2, 1)


def test_defect_examples():
    assert defect(kappa(S0, 1)) == 0
    p = P((0, 1), (1, 0))
    assert defect(p, 1) == defect(p, 2) == 1
    # beta = 2 alpha_0 against kappa = 2 eps_0: 2*2*2 - 8 = 0
    assert defect(P((0, 1), (0, 1))) == 0


def test_enumerate_examples():
    assert len(list(enumerate_patterns(S0, 1))) == 4
    assert len(list(enumerate_patterns(S0, 2))) == 24
    k1 = kappa(S0, 1)
    assert list(enumerate_patterns(S0, 1, block_key(k1))) == [k1]


def test_enumeration_is_lexicographic_and_complete(shape):
    for r in range(shape.r0, shape.r0 + 2):
        pats = list(enumerate_patterns(shape, r))
        windows = [window(p, r) for p in pats]
        assert windows == sorted(windows)
        assert len(set(pats)) == len(pats)
        expected = comb(2 * r, r)
        for k in shape.n:
            expected *= comb(2 * r, k)
        assert len(pats) == expected


def test_round_trip_through_windows(shape):
    for p in enumerate_patterns(shape, shape.r0 + 1):
        for s in range(p.native_level, shape.r0 + 3):
            assert make_pattern(shape, s, window(p, s)) == p
        assert Pattern.from_json(p.to_json()) == p


def test_window_growth_on_last_row(shape):
    for p in enumerate_patterns(shape, shape.r0):
        for s in range(shape.r0, shape.r0 + 2):
            a, b = window(p, s)[-1], window(p, s + 1)[-1]
            assert b == (1,) + a + (0,)


def test_weights_are_sums_of_rows_and_move_with_level(shape):
    witness = False
    for p in enumerate_patterns(shape, shape.r0):
        for s in (shape.r0, shape.r0 + 1):
            total = EpsWeight((), s)
            for i in range(shape.rows):
                total = total + row_weight(p, i, s)
            assert total == weight_at_level(p, s)
        witness |= weight_at_level(p, shape.r0).at_level(shape.r0 + 1) != weight_at_level(p, shape.r0 + 1)
    assert witness


def test_poset_is_level_independent(shape):
    r = shape.r0
    pats = list(enumerate_patterns(shape, r))
    for a, b in itertools.product(pats, pats):
        assert poset_leq(a, b, r) == poset_leq(a, b, r + 1)


def test_block_key_matches_weights_at_every_level(shape):
    r = shape.r0
    pats = list(enumerate_patterns(shape, r + 1))
    for a, b in itertools.product(pats[::3], pats[::5]):
        same = block_key(a) == block_key(b)
        for s in (r + 1, r + 2):
            assert same == same_block(a, b, s)
    for p in pats:
        for s in (r + 1, r + 2):
            assert block_key(p).weight_at(s) == weight_at_level(p, s)


def test_ideal_identity_and_closure(shape):
    r = shape.r0
    assert check_ideal_identity(shape, r, r + 1).passed
    assert check_ideal_identity(shape, r, r + 2).passed


def test_defect_checks(shape):
    for r in (shape.r0, shape.r0 + 1):
        rep = check_defect(shape, r)
        assert rep.passed, rep.counterexample


@given(st.sampled_from(GRID), st.data())
def test_random_patterns_round_trip_json(shape, data):
    r = data.draw(st.integers(shape.r0, shape.r0 + 2))
    rows = []
    for i in range(shape.rows):
        c = shape.background(i)
        k = shape.n[i] if i < shape.l else r
        marks = data.draw(st.sets(st.integers(0, 2 * r - 1), min_size=k, max_size=k))
        rows.append(tuple(1 - c if t in marks else c for t in range(2 * r)))
    p = make_pattern(shape, r, rows)
    assert p.native_level <= r
    assert window(p, r) == tuple(rows)
    assert Pattern.from_json(p.to_json()) == p
    assert defect(p) >= 0
