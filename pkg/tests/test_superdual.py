import pytest

from conftest import S0
from superwedge.indexset import PatternError, Shape, enumerate_patterns, kappa
from superwedge.superdual import DualityContext, swapped_column_transport, transport, verify_superduality


def test_transport_is_an_involution_preserving_rows(shape):
    ctx = DualityContext.of(shape)
    for p in enumerate_patterns(shape, shape.r0 + 1):
        q = transport(p, ctx)
        assert q.shape.epsilon == 1 - shape.epsilon
        assert q.rows == p.rows
        assert transport(q, ctx) == p


def test_transport_of_kappa_is_valid_on_the_other_side(shape):
    ctx = DualityContext.of(shape)
    for r in (shape.r0, shape.r0 + 1):
        q = transport(kappa(shape, r), ctx)
        assert q in set(enumerate_patterns(q.shape, q.native_level))


def test_context_validation():
    with pytest.raises(PatternError):
        DualityContext(S0.with_epsilon(1), S0)
    with pytest.raises(PatternError):
        DualityContext(S0, Shape((2,), (0,), 1))


def test_superduality_example():
    rep = verify_superduality(DualityContext.of(S0), 2, [-1, 0, 1])
    assert rep.passed, rep.counterexample


def test_superduality_small_grid(shape):
    rep = verify_superduality(DualityContext.of(shape), shape.r0, range(-2, 3))
    assert rep.passed, rep.counterexample


def test_swapped_column_transport_is_caught():
    rep = verify_superduality(DualityContext.of(S0), 2, [-1, 0, 1], move=swapped_column_transport)
    assert not rep.passed
    assert rep.details["bijection"] is True
    assert rep.details["intertwine"] is False
