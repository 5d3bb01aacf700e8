"""Integral weights of gl(m|n+r), the weight/01-matrix dictionary, and Verma classes.

Weights are integer vectors over delta_1, ..., delta_{m+n+r}.  The super
form is (delta_i, delta_j) = (-1)^{p_i} delta_ij, with parities p_j read
off the block structure (n_1, ..., n_l, r) and (c_1, ..., c_l, epsilon).

Row i of the 01-matrix of lambda carries 1-c_i exactly at the positions
(lambda + rho_r, delta_k) for k in the i-th block.  Translation functors
act on Verma classes by moving one of those positions by one step, which
on the weight side is lambda -> lambda +- delta_k.  That is how
:func:`F_class` and :func:`E_class` compute, so comparing them with the
pattern toggles of :mod:`superwedge.fock` is a genuine two-route check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .fock import FockVector, e_act, f_act, specialize_q1
from .report import Report
from .indexset import Pattern, PatternError, Shape, enumerate_patterns


class WeightError(ValueError):
    pass


def sizes(shape: Shape) -> Tuple[int, int]:
    """(m, n): total size of the c_i = 1 and c_i = 0 blocks."""
    m = sum(k for k, c in zip(shape.n, shape.c) if c == 1)
    n = sum(k for k, c in zip(shape.n, shape.c) if c == 0)
    return m, n


def rank(shape: Shape, r: int) -> int:
    return sum(shape.n) + r


def blocks(shape: Shape, r: int) -> List[range]:
    """0-based coordinate ranges of the l+1 blocks."""
    out, start = [], 0
    for k in list(shape.n) + [r]:
        out.append(range(start, start + k))
        start += k
    return out


def parity(shape: Shape, j: int, r: int) -> int:
    """p_j for 1 <= j <= m+n+r."""
    if not 1 <= j <= rank(shape, r):
        raise WeightError(f"position {j} outside 1..{rank(shape, r)}")
    start = 0
    for i, k in enumerate(shape.n):
        if j <= start + k:
            return shape.c[i]
        start += k
    return shape.epsilon


def parities(shape: Shape, r: int) -> Tuple[int, ...]:
    return tuple(parity(shape, j, r) for j in range(1, rank(shape, r) + 1))


@dataclass(frozen=True)
class IntegralWeight:
    shape: Shape
    level: int
    delta: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "delta", tuple(int(x) for x in self.delta))
        if len(self.delta) != rank(self.shape, self.level):
            raise WeightError(f"expected {rank(self.shape, self.level)} coordinates, got {len(self.delta)}")

    @classmethod
    def zero(cls, shape: Shape, r: int) -> "IntegralWeight":
        return cls(shape, r, (0,) * rank(shape, r))

    def __add__(self, other: "IntegralWeight") -> "IntegralWeight":
        if (self.shape, self.level) != (other.shape, other.level):
            raise WeightError("weights live in different lattices")
        return IntegralWeight(self.shape, self.level, tuple(a + b for a, b in zip(self.delta, other.delta)))

    def bump(self, k: int, by: int) -> "IntegralWeight":
        d = list(self.delta)
        d[k] += by
        return IntegralWeight(self.shape, self.level, d)

    def embed(self, s: int) -> "IntegralWeight":
        """The image under X_r in X_s (new coordinates zero)."""
        if s < self.level:
            raise WeightError("cannot embed into a smaller lattice")
        return IntegralWeight(self.shape, s, self.delta + (0,) * (s - self.level))

    def restrict(self, r: int) -> Optional["IntegralWeight"]:
        """The preimage in X_r, or None when a dropped coordinate is non-zero."""
        extra = self.delta[rank(self.shape, r):]
        if any(extra):
            return None
        return IntegralWeight(self.shape, r, self.delta[: rank(self.shape, r)])

    def to_json(self) -> dict:
        return {"level": self.level, "delta": list(self.delta)}

    @classmethod
    def from_json(cls, data: dict, shape: Shape) -> "IntegralWeight":
        return cls(shape, int(data["level"]), tuple(int(x) for x in data["delta"]))


def form(shape: Shape, r: int, a: Sequence, b: Sequence):
    """(a, b) = sum (-1)^{p_i} a_i b_i."""
    ps = parities(shape, r)
    return sum((-1) ** p * x * y for p, x, y in zip(ps, a, b))


@lru_cache(maxsize=None)
def rho_rational(shape: Shape, r: int) -> Tuple[Fraction, ...]:
    """rho_r with exact rational arithmetic."""
    ps = parities(shape, r)
    N = len(ps)
    m, n = sizes(shape)
    half = Fraction(1, 2)
    rho = [Fraction(0)] * N
    for i in range(N):
        for j in range(i + 1, N):
            sign = 1 if ps[i] == ps[j] else -1
            rho[i] += sign * half
            rho[j] -= sign * half
    shift = Fraction(n - m + 1 - (-1) ** shape.epsilon * r, 2)
    return tuple(x + shift * (-1) ** p for x, p in zip(rho, ps))


@lru_cache(maxsize=None)
def _rho_int(shape: Shape, r: int) -> Tuple[int, ...]:
    out = []
    for x in rho_rational(shape, r):
        if x.denominator != 1:
            raise WeightError(f"rho_{r} has a non-integral coordinate {x}")
        out.append(int(x))
    return tuple(out)


def rho(shape: Shape, r: int) -> IntegralWeight:
    return IntegralWeight(shape, r, _rho_int(shape, r))


def positions(lam: IntegralWeight) -> Tuple[int, ...]:
    """(lambda + rho_r, delta_k) for every coordinate k (0-based)."""
    ps = parities(lam.shape, lam.level)
    rh = _rho_int(lam.shape, lam.level)
    return tuple((-1) ** p * (x + y) for p, x, y in zip(ps, lam.delta, rh))


def _boundaries(shape: Shape) -> set:
    out, acc = set(), 0
    for k in shape.n:
        acc += k
        out.add(acc)
    return out


def in_X_plus(lam: IntegralWeight) -> bool:
    ps = parities(lam.shape, lam.level)
    pos = positions(lam)
    exempt = _boundaries(lam.shape)
    for j in range(1, len(pos)):
        if j in exempt:
            continue
        if (-1) ** ps[j - 1] * (pos[j - 1] - pos[j]) <= 0:
            return False
    return True


def in_X_plusplus(lam: IntegralWeight) -> bool:
    if not in_X_plus(lam):
        return False
    eps = lam.shape.epsilon
    pairing = (-1) ** eps * lam.delta[-1]  # (lambda, delta_N); p_N = epsilon
    return (-1) ** eps * pairing >= 0


def to_pattern(lam: IntegralWeight) -> Pattern:
    """The 01-matrix of a weight in X_r^{++}, as an element of the limit index set."""
    if not in_X_plus(lam):
        raise WeightError(f"{lam} is not in X_{lam.level}^+ (marker positions collide or are misordered)")
    if not in_X_plusplus(lam):
        raise WeightError(f"{lam} is not in X_{lam.level}^++ (tail condition fails)")
    shape, r = lam.shape, lam.level
    pos = positions(lam)
    bl = blocks(shape, r)
    rows = []
    for i in range(shape.l):
        rows.append(frozenset(pos[k] for k in bl[i]))
    last = set(pos[k] for k in bl[-1])
    if len(last) != r:
        raise WeightError("last-row positions collide")
    # the rank-r finite wedge, continued by the embedding: eps = 0 adds 1s
    # below 1-r, eps = 1 adds 0s above r
    marker = 1 - shape.epsilon
    lo = min(min(last), 1 - r) - 1
    hi = max(max(last), r) + 1
    exc = set()
    for j in range(lo, hi + 1):
        if j in last:
            e = marker
        elif shape.epsilon == 0:
            e = 1 if j < 1 - r else 0
        else:
            e = 0 if j > r else 1
        if e != (1 if j <= 0 else 0):
            exc.add(j)
    rows.append(frozenset(exc))
    return Pattern(shape, rows)


def dictionary_level(p: Pattern) -> int:
    """Smallest r at which p is the 01-matrix of some lambda in X_r^{++}."""
    last = p.rows[-1]
    if p.shape.epsilon == 0:
        holes = [j for j in last if j <= 0]
        return max([1] + [1 - j for j in holes])
    particles = [j for j in last if j > 0]
    return max([1] + particles)


def from_pattern(p: Pattern, r: Optional[int] = None) -> IntegralWeight:
    """Invert the dictionary at level r (default: the smallest possible)."""
    shape = p.shape
    if r is None:
        r = dictionary_level(p)
    if r < dictionary_level(p):
        raise WeightError(f"{p!r} is not in X_{r}^++")
    ps = parities(shape, r)
    rh = _rho_int(shape, r)
    bl = blocks(shape, r)
    delta = [0] * rank(shape, r)
    row_positions: List[List[int]] = [sorted(p.rows[i]) for i in range(shape.l)]
    if shape.epsilon == 0:
        row_positions.append(sorted(j for j in range(1 - r, _upper(p) + 1) if p.entry(shape.l, j) == 1))
    else:
        row_positions.append(sorted(j for j in range(_lower(p), r + 1) if p.entry(shape.l, j) == 0))
    for i, block in enumerate(bl):
        c = shape.background(i)
        # X^+ wants positions strictly decreasing along an even block, increasing along an odd one
        pos = row_positions[i] if c == 1 else row_positions[i][::-1]
        if len(pos) != len(block):
            raise WeightError(f"row {i + 1} has {len(pos)} markers for {len(block)} coordinates")
        for k, x in zip(block, pos):
            delta[k] = (-1) ** ps[k] * x - rh[k]
    return IntegralWeight(shape, r, delta)


def _upper(p: Pattern) -> int:
    return max([0] + [j for j in p.rows[-1]])


def _lower(p: Pattern) -> int:
    return min([1] + [j for j in p.rows[-1]])


def r_lambda(p: Pattern) -> int:
    """Minimal r with lambda in X_r^{++} and every position in [1-r, r]."""
    r = 1
    while True:
        if r >= dictionary_level(p):
            lam = from_pattern(p, r)
            if in_X_plusplus(lam) and all(1 - r <= x <= r for x in positions(lam)):
                return r
        r += 1


# -- transpositions and Verma classes -----------------------------------------------------


def transpose_t(i: int, j: int, p: Pattern, level: Optional[int] = None) -> Optional[Pattern]:
    """t^i_j: swap columns j, j+1 of row i (1-based); None when trivial or outside X_level^{++}."""
    q = p.swap(i - 1, j)
    if q is None:
        return None
    if level is not None and dictionary_level(q) > level:
        return None
    return q


class VermaVector:
    """Integer combination of parabolic Verma classes [Delta(lambda)], keyed by pattern."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[Pattern, int]] = None):
        self._terms = {p: int(a) for p, a in (terms or {}).items() if a}

    @classmethod
    def of(cls, lam: IntegralWeight, coeff: int = 1) -> "VermaVector":
        return cls({to_pattern(lam): coeff})

    @property
    def terms(self) -> Dict[Pattern, int]:
        return dict(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, VermaVector):
            return self._terms == other._terms
        if isinstance(other, dict):
            return self._terms == {p: a for p, a in other.items() if a}
        return NotImplemented

    def __add__(self, other: "VermaVector") -> "VermaVector":
        acc = dict(self._terms)
        for p, a in other._terms.items():
            acc[p] = acc.get(p, 0) + a
        return VermaVector(acc)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def to_json(self) -> list:
        import json

        out = [{"pattern": p.to_json(), "coeff": a} for p, a in self._terms.items()]
        return sorted(out, key=lambda d: json.dumps(d["pattern"], sort_keys=True, separators=(",", ":")))

    @classmethod
    def from_json(cls, data: list, shape: Optional[Shape] = None) -> "VermaVector":
        acc: Dict[Pattern, int] = {}
        for term in data:
            p = Pattern.from_json(term["pattern"], shape)
            acc[p] = acc.get(p, 0) + int(term["coeff"])
        return cls(acc)

    def __repr__(self) -> str:
        return "VermaVector(" + ", ".join(f"{a}*{p!r}" for p, a in sorted(self._terms.items())) + ")"


def _translate(lam: IntegralWeight, j: int, raise_: bool) -> List[IntegralWeight]:
    """Weights t^i_j(lambda) over rows with (1,0) (F) or (0,1) (E) at columns j, j+1.

    A row with background c has its markers (value 1-c) at the block's
    positions.  The (1,0) -> (0,1) swap moves a marker j -> j+1 when c = 0
    and j+1 -> j when c = 1; in both cases lambda_k changes by +1.
    """
    ps = parities(lam.shape, lam.level)
    pos = positions(lam)
    out = []
    for i, block in enumerate(blocks(lam.shape, lam.level)):
        c = lam.shape.background(i)
        occupied = {pos[k]: k for k in block}
        if not raise_:
            src, dst = (j, j + 1) if c == 0 else (j + 1, j)
        else:
            src, dst = (j + 1, j) if c == 0 else (j, j + 1)
        if src in occupied and dst not in occupied:
            k = occupied[src]
            out.append(lam.bump(k, (-1) ** ps[k] * (dst - src)))
    return out


def _class_action(j: int, v: VermaVector, raise_: bool, level: Optional[int]) -> VermaVector:
    acc: Dict[Pattern, int] = {}
    for p, a in v._terms.items():
        r = max(abs(j) + 1, dictionary_level(p)) if level is None else level
        if r <= abs(j):
            raise WeightError(f"class action of index {j} needs level > {abs(j)}")
        lam = from_pattern(p, r)
        for mu in _translate(lam, j, raise_):
            if not in_X_plusplus(mu):
                continue
            q = to_pattern(mu)
            acc[q] = acc.get(q, 0) + a
    return VermaVector(acc)


def F_class(j: int, v: VermaVector, level: Optional[int] = None) -> VermaVector:
    """[F_j Delta(lambda)] = sum_i [Delta(t^i_j lambda)] over rows with (1,0) at (j, j+1)."""
    return _class_action(j, v, False, level)


def E_class(j: int, v: VermaVector, level: Optional[int] = None) -> VermaVector:
    return _class_action(j, v, True, level)


def truncate_class(v: VermaVector, r: int) -> VermaVector:
    """Keep [Delta(lambda)] when lambda lies in X_r^{++}, kill it otherwise."""
    out = {}
    for p, a in v._terms.items():
        s = max(r, dictionary_level(p))
        lam = from_pattern(p, s).restrict(r)
        if lam is not None and in_X_plusplus(lam):
            out[p] = a
    return VermaVector(out)


def tpc2_check(shape: Shape, r: int, j: int, f_action=None, e_action=None,
               patterns=None) -> Report:
    """Check that the dictionary intertwines the class formulas with the q = 1 action."""
    if r <= abs(j):
        raise WeightError(f"tpc2_check needs r > |j| (r={r}, j={j})")
    f_action = f_action or f_act
    e_action = e_action or e_act
    report = Report(name=f"tpc2(r={r},j={j})")
    for p in (enumerate_patterns(shape, r) if patterns is None else patterns):
        lam = from_pattern(p, r)
        vv = VermaVector.of(lam)
        for gen, cls_op, q_op in (("f", F_class, f_action), ("e", E_class, e_action)):
            via_weights = cls_op(j, vv, level=r)
            via_toggles = specialize_q1(q_op(j, FockVector.basis(p)))
            report.checks += 1
            if via_weights != via_toggles:
                report.fail(gen=gen, j=j, pattern=p.to_json(), weight=lam.to_json(),
                            class_side=via_weights.to_json(),
                            fock_side=VermaVector(via_toggles).to_json())
    return report


def check_rho(shape: Shape, r: int) -> Report:
    """The two pairing identities of rho_r and restriction from rho_{r+1}."""
    report = Report(name=f"rho(r={r})")
    ps = parities(shape, r)
    rh = rho_rational(shape, r)
    N = len(ps)
    for i in range(N - 1):
        want = (-1) ** ps[i] if ps[i] == ps[i + 1] else 0
        diff = [0] * N
        diff[i], diff[i + 1] = 1, -1
        got = form(shape, r, rh, diff)
        report.check(got == want, identity="simple", i=i + 1, got=str(got), want=want)
    last = [0] * N
    last[-1] = 1
    got = form(shape, r, rh, last)
    want = 1 - r if shape.epsilon == 0 else r
    report.check(got == want, identity="last", got=str(got), want=want)
    above = rho_rational(shape, r + 1)
    report.check(above[:N] == rh, identity="restriction", s=r + 1)
    report.check(all(x.denominator == 1 for x in rh), identity="integral")
    return report


def check_truncation(shape: Shape, r: int, j: int) -> Report:
    """truncate_r commutes with F_j and E_j on level-(r+1) inputs supported in X_r^{++}."""
    if r <= abs(j):
        raise WeightError(f"truncation check needs r > |j| (r={r}, j={j})")
    report = Report(name=f"truncation(r={r},j={j})")
    for p in enumerate_patterns(shape, r + 1):
        v = VermaVector({p: 1})
        if not truncate_class(v, r):
            continue
        for gen, op in (("F", F_class), ("E", E_class)):
            lhs = truncate_class(op(j, v, level=r + 1), r)
            rhs = op(j, truncate_class(v, r), level=r)
            report.check(lhs == rhs, gen=gen, j=j, pattern=p.to_json(),
                         truncated_after=lhs.to_json(), truncated_before=rhs.to_json())
    return report
