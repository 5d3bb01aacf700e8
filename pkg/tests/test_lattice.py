import pytest
from hypothesis import given, strategies as st

from superwedge.lattice import (
    INF, EpsWeight, LatticeError, RootCoeffs, dominance_leq, eps, pair_with_coroot,
    positive_cone_decompose, q_norm_difference, simple_root, cartan_entry,
)


def test_eps_examples():
    assert eps(0, 1).as_dict() == {0: 1}
    assert eps(5, INF).as_dict() == {5: 1}
    with pytest.raises(LatticeError):
        eps(2, 1)


def test_simple_root_examples():
    assert simple_root(0, 1).as_dict() == {0: 1, 1: -1}
    assert simple_root(1, 2).as_dict() == {1: 1, 2: -1}
    with pytest.raises(LatticeError):
        simple_root(1, 1)


def test_decompose_examples():
    assert positive_cone_decompose(simple_root(0)).coords == ((0, 1),)
    assert positive_cone_decompose(eps(0) - eps(2)).coords == ((0, 1), (1, 1))
    assert positive_cone_decompose(eps(0)) is None


def test_dominance_examples():
    assert dominance_leq(eps(0), eps(0))
    assert dominance_leq(eps(1), eps(0))
    assert not dominance_leq(eps(0), eps(1))
    with pytest.raises(LatticeError):
        dominance_leq(eps(0, 1), eps(0, 2))


def test_pairing_examples():
    assert pair_with_coroot(eps(0), 0) == 1
    assert pair_with_coroot(2 * eps(0), 0) == 2
    assert pair_with_coroot(eps(0) + eps(1), 0) == 0


def test_norm_difference_examples():
    k = 2 * eps(0)
    assert q_norm_difference(k, k) == 0
    assert q_norm_difference(k, k - simple_root(0)) == 2
    assert q_norm_difference(k, k - 2 * simple_root(0)) == 0
    # cross-check with the plain orthonormal form
    for lam in (k - simple_root(0), k - 2 * simple_root(0)):
        assert q_norm_difference(k, lam) == k.dot(k) - lam.dot(lam)


def test_finite_level_equality_is_mod_all_ones():
    ones = EpsWeight({i: 1 for i in range(-1, 3)}, 2)
    w = EpsWeight({0: 2, 1: -1}, 2)
    assert w + ones == w
    assert hash(w + ones) == hash(w)
    assert EpsWeight({0: 1}, INF) != EpsWeight({0: 1, 1: 0, 5: 0}, INF) + eps(3)


levels = st.integers(1, 4)


@st.composite
def root_combos(draw):
    r = draw(levels)
    coords = draw(st.dictionaries(st.integers(1 - r, r - 1), st.integers(-4, 4), max_size=2 * r))
    return RootCoeffs(coords, r)


@st.composite
def weights(draw, r):
    return EpsWeight(draw(st.dictionaries(st.integers(1 - r, r), st.integers(-3, 3))), r)


@given(root_combos())
def test_decomposition_round_trip(c):
    d = c.to_eps()
    back = positive_cone_decompose(d)
    assert back is not None
    assert back.to_eps() == d
    assert back.coords == c.coords


@given(st.dictionaries(st.integers(-5, 5), st.integers(-3, 3), max_size=4))
def test_decomposition_round_trip_infinite(coords):
    c = RootCoeffs(coords)
    assert positive_cone_decompose(c.to_eps()).coords == c.coords


@given(st.data())
def test_dominance_is_a_partial_order(data):
    r = data.draw(levels)
    a, b, c = (data.draw(weights(r)) for _ in range(3))
    assert dominance_leq(a, a)
    if dominance_leq(a, b) and dominance_leq(b, a):
        assert a == b
    if dominance_leq(a, b) and dominance_leq(b, c):
        assert dominance_leq(a, c)


@given(st.integers(-4, 4), st.integers(-4, 4))
def test_pairing_of_simple_roots_is_cartan(i, j):
    assert pair_with_coroot(simple_root(j), i) == cartan_entry(i, j)


@given(st.data())
def test_norm_difference_is_additive_and_all_ones_invariant(data):
    r = data.draw(levels)
    k = data.draw(weights(r))
    b1 = data.draw(root_combos().filter(lambda x: x.level == r))
    b2 = data.draw(root_combos().filter(lambda x: x.level == r))
    lam = k - b1.to_eps()
    mu = lam - b2.to_eps()
    assert q_norm_difference(k, lam) + q_norm_difference(lam, mu) == q_norm_difference(k, mu)
    ones = EpsWeight({i: 1 for i in range(1 - r, r + 1)}, r)
    assert q_norm_difference(k + ones, lam + ones) == q_norm_difference(k, lam)
    for i in range(1 - r, r):
        assert pair_with_coroot(k + ones, i) == pair_with_coroot(k, i)


@given(st.data())
def test_json_round_trip(data):
    r = data.draw(levels)
    w = data.draw(weights(r))
    assert EpsWeight.from_json(w.to_json()) == w
    c = data.draw(root_combos())
    assert RootCoeffs.from_json(c.to_json()) == c


@given(st.data())
def test_dominance_along_positive_chains(data):
    r = data.draw(levels)
    pos = st.dictionaries(st.integers(1 - r, r - 1), st.integers(0, 3))
    a = data.draw(weights(r))
    b = a + RootCoeffs(data.draw(pos), r).to_eps()
    c = b + RootCoeffs(data.draw(pos), r).to_eps()
    assert dominance_leq(a, b) and dominance_leq(b, c) and dominance_leq(a, c)
    if b != a:
        assert not dominance_leq(b, a)
