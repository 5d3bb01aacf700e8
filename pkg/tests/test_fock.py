import pytest
from hypothesis import given, strategies as st

from conftest import GRID, S0
from oracles import WedgeOracle
from superwedge.fock import (
    Actions, FockVector, apply_path, divided_power, e_act, e_basis, f_act, f_basis, k_act, specialize_q1,
    vacuum_reduction_path, verify_relations, weight_pairing,
)
from superwedge.indexset import (
    PatternError, block_key, enumerate_patterns, kappa, make_pattern, poset_leq, weight_at_level,
)
from superwedge.lattice import dominance_leq, positive_cone_decompose, simple_root
from superwedge.laurent import Q, Laurent, qfactorial, qint

K1 = kappa(S0, 1)
A = make_pattern(S0, 1, [(0, 1), (1, 0)])
B = make_pattern(S0, 1, [(1, 0), (0, 1)])
C = make_pattern(S0, 1, [(0, 1), (0, 1)])


def vec(*pairs):
    return FockVector({p: Laurent.coerce(a) for p, a in pairs})


def test_f_examples():
    assert f_act(0, FockVector.basis(K1)) == vec((A, Q ** -1), (B, 1))
    assert f_act(0, FockVector.basis(C), level=1) == 0


def test_e_examples():
    assert e_act(0, FockVector.basis(K1)) == 0
    assert e_act(0, f_act(0, FockVector.basis(K1))) == vec((K1, Q + Q ** -1))
    assert e_act(0, FockVector.basis(B)) == vec((K1, Q))


def test_k_examples():
    v = FockVector.basis(K1)
    assert k_act(0, v) == vec((K1, Q ** 2))
    assert k_act(0, k_act(0, v, inverse=True)) == v
    assert k_act(0, FockVector.basis(C)) == vec((C, Q ** -2))


def test_divided_power_examples():
    v = FockVector.basis(K1)
    assert divided_power("f", 0, 1, v) == f_act(0, v)
    assert divided_power("f", 0, 2, v) == FockVector.basis(C)
    assert divided_power("f", 0, 3, v) == 0


def test_specialization_examples():
    assert specialize_q1(f_act(0, FockVector.basis(K1))) == {A: 1, B: 1}
    assert specialize_q1(FockVector()) == {}
    assert specialize_q1(FockVector.basis(K1, qint(2))) == {K1: 2}


def test_level_guards():
    with pytest.raises(PatternError):
        f_act(1, FockVector.basis(K1), level=1)
    with pytest.raises(PatternError):
        f_act(0, FockVector.basis(kappa(S0, 2)), level=1)


def test_relation_examples():
    assert verify_relations(S0, 1, [0]).passed
    rep = verify_relations(S0, 2)
    assert rep.passed and rep.checks > 0
    for p in enumerate_patterns(S0, 2):
        v = FockVector.basis(p)
        assert e_act(0, f_act(1, v)) == f_act(1, e_act(0, v))


def _flipped_f(j, v, level=None):
    # q^{-tail} replaced by q^{+tail}
    acc = FockVector()
    for p, a in v.items():
        acc = acc + FockVector({p2: a * Laurent.monomial(-b.min_degree()) for p2, b in f_basis(p, j).items()})
    return acc


def test_flipped_exponent_is_caught():
    rep = verify_relations(S0, 2, acts=Actions(f=_flipped_f))
    assert not rep.passed
    assert rep.counterexample["family"] in ("commutator", "serre-f")


def test_relation_suite_small_grid(shape):
    for r in (shape.r0, shape.r0 + 1):
        rep = verify_relations(shape, r)
        assert rep.passed, rep.counterexample


def test_oracle_agreement_at_level_one_or_two(shape):
    r = shape.r0
    oracle = WedgeOracle(shape, r)
    for b in oracle.basis:
        p = oracle.pattern(b)
        for j in range(1 - r, r):
            assert oracle.action(b, "f", j) == specialize_q1(f_act(j, FockVector.basis(p)))
            assert oracle.action(b, "e", j) == specialize_q1(e_act(j, FockVector.basis(p)))


def test_weight_grading(shape):
    r = shape.r0 + 1
    for p in enumerate_patterns(shape, r):
        w = weight_at_level(p, r)
        for j in range(1 - r, r):
            for q in f_basis(p, j):
                assert weight_at_level(q, r) == w - simple_root(j, r)
            for q in e_basis(p, j):
                assert weight_at_level(q, r) == w + simple_root(j, r)
            assert weight_pairing(p, j) == w[j] - w[j + 1]


def test_kappa_is_highest(shape):
    for r in (shape.r0, shape.r0 + 1):
        k = kappa(shape, r)
        wk = weight_at_level(k, r)
        for j in range(1 - r, r):
            assert e_act(j, FockVector.basis(k), level=r) == 0
            for q in f_basis(k, j):
                wq = weight_at_level(q, r)
                assert wq != wk and dominance_leq(wq, wk)
        assert all(poset_leq(p, k) for p in enumerate_patterns(shape, r) if block_key(p) == block_key(k))


def test_vacuum_paths(shape):
    for r in range(shape.r0, shape.r0 + 3):
        path = vacuum_reduction_path(shape, r)
        assert path
        start = FockVector.basis(kappa(shape, r + 1))
        assert apply_path(path, start, r + 1) == FockVector.basis(kappa(shape, r))
        diff = weight_at_level(kappa(shape, r + 1), r + 1) - weight_at_level(kappa(shape, r), r + 1)
        assert sum(p for p, _ in path) == positive_cone_decompose(diff).height()
        assert all(1 - (r + 1) <= s <= r for _, s in path)


def test_vacuum_path_example():
    path = vacuum_reduction_path(S0, 1)
    assert apply_path(path, FockVector.basis(kappa(S0, 2))) == FockVector.basis(K1)


@given(st.sampled_from(GRID), st.data())
def test_divided_powers_are_exact(shape, data):
    r = shape.r0 + 1
    pats = list(enumerate_patterns(shape, r))
    p = data.draw(st.sampled_from(pats))
    j = data.draw(st.integers(1 - r, r - 1))
    n = data.draw(st.integers(1, 3))
    gen = data.draw(st.sampled_from("ef"))
    out = divided_power(gen, j, n, FockVector.basis(p))
    raw = FockVector.basis(p)
    for _ in range(n):
        raw = (f_act if gen == "f" else e_act)(j, raw)
    assert out.scale(qfactorial(n)) == raw


@given(st.sampled_from(GRID), st.data())
def test_vector_json_round_trip(shape, data):
    r = shape.r0
    pats = list(enumerate_patterns(shape, r))
    chosen = data.draw(st.lists(st.sampled_from(pats), max_size=4))
    v = FockVector({p: Q ** k + 1 for k, p in enumerate(chosen)})
    assert FockVector.from_json(v.to_json()) == v
