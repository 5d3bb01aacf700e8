"""Super duality on the combinatorial level.

Both epsilon = 0 and epsilon = 1 limit index sets consist of the same
01-matrices: the last row is 1 far left and 0 far right either way.  So
transport is the identity on rows; only the shape tag changes.  What has
to be checked is that the two sides agree as posets and as sl_Z-modules
even though weights, markers and windows are computed with opposite
conventions on the last row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional

from .fock import FockVector, e_act, f_act, specialize_q1
from .report import Report
from .indexset import Pattern, PatternError, Shape, block_key, enumerate_patterns, poset_leq


@dataclass(frozen=True)
class DualityContext:
    shape0: Shape
    shape1: Shape

    def __post_init__(self):
        if self.shape0.epsilon != 0 or self.shape1.epsilon != 1:
            raise PatternError("shape0 must have epsilon 0 and shape1 epsilon 1")
        if (self.shape0.n, self.shape0.c) != (self.shape1.n, self.shape1.c):
            raise PatternError("the two shapes must share n and c")

    @classmethod
    def of(cls, shape: Shape) -> "DualityContext":
        return cls(shape.with_epsilon(0), shape.with_epsilon(1))

    def other(self, shape: Shape) -> Shape:
        if shape == self.shape0:
            return self.shape1
        if shape == self.shape1:
            return self.shape0
        raise PatternError(f"{shape} belongs to neither side")


def transport(p: Pattern, ctx: DualityContext) -> Pattern:
    """v_lambda -> v_lambda: same limit 01-matrix, other epsilon."""
    return Pattern(ctx.other(p.shape), p.rows)


def _transport_vector(v: Dict[Pattern, int], move: Callable[[Pattern], Pattern]) -> Dict[Pattern, int]:
    out: Dict[Pattern, int] = {}
    for p, a in v.items():
        q = move(p)
        out[q] = out.get(q, 0) + a
    return {p: a for p, a in out.items() if a}


def verify_superduality(ctx: DualityContext, depth: int, js: Iterable[int],
                        move: Optional[Callable[[Pattern, DualityContext], Pattern]] = None) -> Report:
    """Check that transport is a poset isomorphism and a q = 1 module intertwiner.

    The sample is every pattern realizable at level <= depth; it is built
    independently on both sides and must be matched bijectively by
    transport before the pairwise and action checks run.
    """
    move = move or transport
    js = list(js)
    report = Report(name=f"superdual(depth={depth})")
    flags = {"bijection": True, "poset": True, "blocks": True, "intertwine": True}

    def fail(check: str, **info) -> None:
        flags[check] = False
        report.fail(check=check, **info)

    side0 = list(enumerate_patterns(ctx.shape0, depth))
    side1 = set(enumerate_patterns(ctx.shape1, depth))
    image = [move(p, ctx) for p in side0]

    report.checks += 1
    if set(image) != side1 or len(set(image)) != len(side0):
        fail("bijection", depth=depth)
    for p, q in zip(side0, image):
        report.checks += 1
        if move(q, ctx) != p:
            fail("bijection", pattern=q.to_json())

    # (a) poset agreement, pairwise; weights on each side use that side's epsilon
    for p1, q1 in zip(side0, image):
        for p2, q2 in zip(side0, image):
            report.checks += 1
            if poset_leq(p1, p2, depth) != poset_leq(q1, q2, max(depth, q1.native_level, q2.native_level)):
                fail("poset", lam=p1.to_json(), mu=p2.to_json())

    # blocks: same partition of the sample
    part0: Dict = {}
    part1: Dict = {}
    for k, (p, q) in enumerate(zip(side0, image)):
        part0.setdefault(block_key(p), set()).add(k)
        part1.setdefault(block_key(q), set()).add(k)
    report.checks += 1
    if sorted(map(sorted, part0.values())) != sorted(map(sorted, part1.values())):
        fail("blocks")

    # (b) transport(x_j v) = x_j transport(v) at q = 1
    one = lambda p: move(p, ctx)
    for p, q in zip(side0, image):
        for j in js:
            for gen, op in (("f", f_act), ("e", e_act)):
                lhs = _transport_vector(specialize_q1(op(j, FockVector.basis(p))), one)
                rhs = specialize_q1(op(j, FockVector.basis(q)))
                report.checks += 1
                if lhs != rhs:
                    fail("intertwine", gen=gen, j=j, pattern=p.to_json(),
                         transported=_classical_json(lhs), acted=_classical_json(rhs))
    report.details = flags
    return report


def _classical_json(v: Dict[Pattern, int]) -> List[dict]:
    return [{"pattern": p.to_json(), "coeff": a} for p, a in sorted(v.items(), key=lambda t: t[0].sort_key())]


def swapped_column_transport(p: Pattern, ctx: DualityContext) -> Pattern:
    """A deliberately wrong transport: exchanges columns 0 and 1 of the last row.

    It is still an involutive bijection of the sample, so only the
    structural checks can catch it.
    """
    q = p.swap(p.shape.l, 0)
    return Pattern(ctx.other(p.shape), (q or p).rows)
