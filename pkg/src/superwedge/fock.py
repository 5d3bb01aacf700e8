"""Quantum wedge modules on pattern bases.

A :class:`FockVector` is a finite Z[q,q^-1]-combination of patterns.  The
Chevalley generators act by column toggles:

* f_j moves a 1 from column j to column j+1 in one row, (1,0) -> (0,1),
* e_j moves it back, (0,1) -> (1,0),

uniformly in the row background c_i.  Coefficients come from the coproduct
Delta(f) = f (x) k^-1 + 1 (x) f and Delta(e) = e (x) 1 + k (x) e applied
across the rows, so f on row t picks up q^{-<wt(later rows), h_j>} and e
picks up q^{+<wt(earlier rows), h_j>}.  The pairing of a row weight with
h_j only sees columns j and j+1 and equals entry_j - entry_{j+1} whatever
the background, so it is read straight off the pattern.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .indexset import Pattern, PatternError, Shape, block_key, enumerate_patterns, kappa, weight_at_level
from .lattice import cartan_entry, positive_cone_decompose
from .laurent import ONE, ZERO, Laurent, qfactorial, qint
from .report import Report


class FockVector:
    """Finite combination sum_lambda a_lambda v_lambda with Laurent coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[Pattern, Laurent]] = None):
        clean = {}
        if terms:
            for p, a in terms.items():
                a = Laurent.coerce(a)
                if a:
                    clean[p] = a
        self._terms = clean

    @classmethod
    def basis(cls, p: Pattern, coeff=ONE) -> "FockVector":
        return cls({p: Laurent.coerce(coeff)})

    @property
    def terms(self) -> Dict[Pattern, Laurent]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Pattern, Laurent]]:
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def __iter__(self) -> Iterator[Pattern]:
        return iter(sorted(self._terms, key=Pattern.sort_key))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, p: Pattern) -> Laurent:
        return self._terms.get(p, ZERO)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "FockVector") -> "FockVector":
        acc = dict(self._terms)
        for p, a in other._terms.items():
            acc[p] = acc.get(p, ZERO) + a
        return FockVector(acc)

    def __neg__(self) -> "FockVector":
        return FockVector({p: -a for p, a in self._terms.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, a) -> "FockVector":
        a = Laurent.coerce(a)
        return FockVector({p: a * b for p, b in self._terms.items()})

    __rmul__ = scale

    def to_json(self) -> list:
        out = [{"pattern": p.to_json(), "coeff": a.to_json()} for p, a in self._terms.items()]
        return sorted(out, key=lambda d: _pattern_sort_string(d["pattern"]))

    @classmethod
    def from_json(cls, data: list, shape: Optional[Shape] = None) -> "FockVector":
        acc: Dict[Pattern, Laurent] = {}
        for term in data:
            p = Pattern.from_json(term["pattern"], shape)
            acc[p] = acc.get(p, ZERO) + Laurent.from_json(term["coeff"])
        return cls(acc)

    def __repr__(self) -> str:
        if not self._terms:
            return "FockVector(0)"
        return "FockVector(" + " + ".join(f"({a})*{p!r}" for p, a in self.items()) + ")"


def _pattern_sort_string(d: dict) -> str:
    import json

    return json.dumps(d, sort_keys=True, separators=(",", ":"))


ClassicalVector = Dict[Pattern, int]


def _check_generator_level(p: Pattern, j: int, level: Optional[int]) -> None:
    if level is None:
        return
    if not (1 - level <= j <= level - 1):
        raise PatternError(f"generator index {j} is outside I_{level}")
    if p.native_level > level:
        raise PatternError(f"{p!r} does not live at level {level}")


def _row_pairing(p: Pattern, i: int, j: int) -> int:
    return p.entry(i, j) - p.entry(i, j + 1)


def weight_pairing(p: Pattern, j: int) -> int:
    """<|lambda|, h_j>, summed over all rows."""
    return sum(_row_pairing(p, i, j) for i in range(p.shape.rows))


def f_basis(p: Pattern, j: int) -> Dict[Pattern, Laurent]:
    rows = p.shape.rows
    out: Dict[Pattern, Laurent] = {}
    tail = 0
    # walk from the last row up so the trailing-weight twist accumulates
    for t in range(rows - 1, -1, -1):
        if p.entry(t, j) == 1 and p.entry(t, j + 1) == 0:
            out[p.swap(t, j)] = Laurent.monomial(-tail)
        tail += _row_pairing(p, t, j)
    return out


def e_basis(p: Pattern, j: int) -> Dict[Pattern, Laurent]:
    rows = p.shape.rows
    out: Dict[Pattern, Laurent] = {}
    head = 0
    for t in range(rows):
        if p.entry(t, j) == 0 and p.entry(t, j + 1) == 1:
            out[p.swap(t, j)] = Laurent.monomial(head)
        head += _row_pairing(p, t, j)
    return out


def _apply(basis_op: Callable[[Pattern, int], Dict[Pattern, Laurent]], j: int, v: FockVector,
           level: Optional[int]) -> FockVector:
    acc: Dict[Pattern, Laurent] = {}
    for p, a in v._terms.items():
        _check_generator_level(p, j, level)
        for p2, b in basis_op(p, j).items():
            acc[p2] = acc.get(p2, ZERO) + a * b
    return FockVector(acc)


def f_act(j: int, v: FockVector, level: Optional[int] = None) -> FockVector:
    """Action of f_j; ``level`` restricts to the sl_{I_level}-submodule and checks membership."""
    return _apply(f_basis, j, v, level)


def e_act(j: int, v: FockVector, level: Optional[int] = None) -> FockVector:
    return _apply(e_basis, j, v, level)


def k_act(j: int, v: FockVector, inverse: bool = False, level: Optional[int] = None) -> FockVector:
    sign = -1 if inverse else 1
    acc = {}
    for p, a in v._terms.items():
        _check_generator_level(p, j, level)
        acc[p] = a.shift(sign * weight_pairing(p, j))
    return FockVector(acc)


def divided_power(gen: str, j: int, p: int, v: FockVector, level: Optional[int] = None) -> FockVector:
    """gen_j^p v / [p]!, with the division asserted exact."""
    if p < 1:
        raise ValueError("divided powers need p >= 1")
    op = {"e": e_act, "f": f_act}[gen]
    w = v
    for _ in range(p):
        w = op(j, w, level)
    denom = qfactorial(p)
    return FockVector({pat: a.exact_div(denom) for pat, a in w._terms.items()})


def specialize_q1(v: FockVector) -> ClassicalVector:
    out = {}
    for p, a in v._terms.items():
        c = a.at_one()
        if c:
            out[p] = c
    return out


# -- vacuum reduction ---------------------------------------------------------------------


def vacuum_reduction_path(shape: Shape, r: int, max_states: int = 200000) -> List[Tuple[int, int]]:
    """Divided-power word carrying v_{kappa_{r+1}} to exactly v_{kappa_r}.

    Returns [(p_1, s_1), ..., (p_a, s_a)] meaning f_{s_1}^{(p_1)} ... f_{s_a}^{(p_a)},
    so the last pair acts first.  Breadth-first over vectors, using moves
    f_s^{(p)} with s in I_{r+1} that keep the remaining weight difference
    in the positive root cone.  The result is re-applied before returning.
    """
    if r < shape.r0:
        raise PatternError(f"vacuum reduction needs r >= r_0 = {shape.r0}")
    s_level = r + 1
    start = FockVector.basis(kappa(shape, s_level))
    target_pattern = kappa(shape, r)
    target = FockVector.basis(target_pattern)
    target_wt = weight_at_level(target_pattern, s_level)

    def remaining(vec: FockVector):
        p = next(iter(vec))
        return positive_cone_decompose(weight_at_level(p, s_level) - target_wt)

    queue = deque([(start, ())])
    seen = {start}
    while queue:
        vec, word = queue.popleft()
        if vec == target:
            path = list(reversed(word))
            if apply_path(path, start, s_level) != target:
                raise RuntimeError("vacuum path failed re-verification")
            return path
        rem = remaining(vec)
        for s, c in rem.coords:
            for p in range(c, 0, -1):
                nxt = divided_power("f", s, p, vec, s_level)
                if not nxt or nxt in seen:
                    continue
                r2 = remaining(nxt)
                if r2 is None or not r2.is_nonnegative():
                    continue
                seen.add(nxt)
                if len(seen) > max_states:
                    raise RuntimeError("vacuum path search exceeded its state budget")
                queue.append((nxt, word + ((p, s),)))
    raise RuntimeError(f"no divided-power path from kappa_{r + 1} to kappa_{r}")


def apply_path(path: Sequence[Tuple[int, int]], v: FockVector, level: Optional[int] = None) -> FockVector:
    """Apply f_{s_1}^{(p_1)} ... f_{s_a}^{(p_a)} to v (rightmost factor first)."""
    for p, s in reversed(path):
        v = divided_power("f", s, p, v, level)
    return v


# -- relation verifier --------------------------------------------------------------------


@dataclass
class Actions:
    """The operators a verifier exercises; swap entries to mutation-test a harness."""

    e: Callable = e_act
    f: Callable = f_act
    k: Callable = k_act


def _vec_json(v: FockVector) -> list:
    return v.to_json()


def _check_basis_vector(p: Pattern, r: int, js: Sequence[int], acts: Actions, embed_levels: Sequence[int],
                        report: Report) -> None:
    v = FockVector.basis(p)
    E = lambda j, w: acts.e(j, w, level=r)
    F = lambda j, w: acts.f(j, w, level=r)
    K = lambda j, w, inv=False: acts.k(j, w, inverse=inv, level=r)
    two = qint(2)

    def check(ok: bool, family: str, **info):
        report.checks += 1
        if not ok:
            report.fail(family=family, pattern=p.to_json(), level=r, **info)

    for i in js:
        for j in js:
            a = cartan_entry(i, j)
            # (a) k_i e_j k_i^-1 = q^{a_ij} e_j, and the f analogue with q^{-a_ij}
            lhs = K(i, E(j, K(i, v, True)))
            check(lhs == E(j, v).scale(Laurent.monomial(a)), "k-conjugation-e", i=i, j=j)
            lhs = K(i, F(j, K(i, v, True)))
            check(lhs == F(j, v).scale(Laurent.monomial(-a)), "k-conjugation-f", i=i, j=j)
            # (b) [e_i, f_j] = delta_ij [<wt, h_i>]
            comm = E(i, F(j, v)) - F(j, E(i, v))
            expected = v.scale(qint(weight_pairing(p, i))) if i == j else FockVector()
            check(comm == expected, "commutator", i=i, j=j, got=_vec_json(comm), expected=_vec_json(expected))
            # (c) Serre and far commutation
            if abs(i - j) == 1:
                for name, G in (("serre-e", E), ("serre-f", F)):
                    s = G(i, G(i, G(j, v))) - G(i, G(j, G(i, v))).scale(two) + G(j, G(i, G(i, v)))
                    check(not s, name, i=i, j=j, got=_vec_json(s))
            elif abs(i - j) >= 2:
                for name, G in (("commute-e", E), ("commute-f", F)):
                    s = G(i, G(j, v)) - G(j, G(i, v))
                    check(not s, name, i=i, j=j, got=_vec_json(s))
    # (d) the level-r action is the restriction of the level-s action
    for j in js:
        for name, op in (("e", acts.e), ("f", acts.f)):
            base = op(j, v, level=r)
            for term in base:
                check(term.native_level <= r, "submodule", gen=name, j=j)
            for s in embed_levels:
                check(op(j, v, level=s) == base, "embedding", gen=name, j=j, s=s)


def verify_relations(shape: Shape, r: int, js: Optional[Sequence[int]] = None,
                     acts: Optional[Actions] = None, embed_levels: Optional[Sequence[int]] = None,
                     patterns: Optional[Iterable[Pattern]] = None) -> Report:
    """Exhaustively check the quantum group relations on the level-r basis."""
    if r < shape.r0:
        raise PatternError(f"verification needs r >= r_0 = {shape.r0}")
    js = list(range(1 - r, r)) if js is None else list(js)
    for j in js:
        if not (1 - r <= j <= r - 1):
            raise PatternError(f"j={j} outside I_{r}")
    acts = acts or Actions()
    embed_levels = [r + 1] if embed_levels is None else list(embed_levels)
    report = Report(name=f"relations(r={r})")
    for p in (enumerate_patterns(shape, r) if patterns is None else patterns):
        _check_basis_vector(p, r, js, acts, embed_levels, report)
    return report


def check_vacuum(shape: Shape, r: int) -> Report:
    report = Report(name=f"vacuum(r={r})")
    try:
        path = vacuum_reduction_path(shape, r)
    except RuntimeError as exc:
        report.check(False, error=str(exc))
        return report
    got = apply_path(path, FockVector.basis(kappa(shape, r + 1)), r + 1)
    report.check(got == FockVector.basis(kappa(shape, r)), image=_vec_json(got))
    report.details = {"path": [list(t) for t in path]}
    return report
