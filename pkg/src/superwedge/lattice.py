"""Weight and root lattices of sl over the index interval I_r.

Weights are kept in epsilon-coordinates: an :class:`EpsWeight` is a
finite-support integer vector indexed by Z.  At a finite level r the
coordinates live on I_r^+ = {1-r, ..., r} and two vectors are equal when
they differ by a multiple of the all-ones vector on I_r^+ (the epsilons
sum to zero in P_r).  At the infinite level equality is exact.

The pairing uses the orthonormal convention eps_i . eps_j = delta_ij, so
eps_j . alpha_i = delta_ji - delta_{j,i+1} and alpha_i . alpha_i = 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

INF = math.inf
Level = Union[int, float]


class LatticeError(ValueError):
    pass


def check_level(r: Level) -> Level:
    if r == INF:
        return INF
    if not isinstance(r, int) or r < 1:
        raise LatticeError(f"level must be a positive integer or infinity, got {r!r}")
    return r


def weight_window(r: Level) -> range:
    """I_r^+ as a range (finite r only)."""
    return range(1 - r, r + 1)


def root_window(r: Level) -> range:
    """I_r as a range (finite r only)."""
    return range(1 - r, r)


def in_weight_window(i: int, r: Level) -> bool:
    return r == INF or 1 - r <= i <= r


def in_root_window(i: int, r: Level) -> bool:
    return r == INF or 1 - r <= i <= r - 1


def _clean(coords: Union[Mapping[int, int], Iterable[Tuple[int, int]]]) -> Tuple[Tuple[int, int], ...]:
    acc: Dict[int, int] = {}
    items = coords.items() if isinstance(coords, Mapping) else coords
    for i, c in items:
        acc[int(i)] = acc.get(int(i), 0) + int(c)
    return tuple(sorted((i, c) for i, c in acc.items() if c != 0))


def _level_json(r: Level):
    return "inf" if r == INF else r


def _level_from_json(v) -> Level:
    return INF if v in ("inf", None) else int(v)


@dataclass(frozen=True)
class EpsWeight:
    """Integer combination of the eps_i at a given level."""

    coords: Tuple[Tuple[int, int], ...]
    level: Level = INF
    _key: Tuple = field(default=(), init=False, repr=False, compare=False)

    def __init__(self, coords=(), level: Level = INF):
        level = check_level(level)
        cleaned = _clean(coords)
        for i, _ in cleaned:
            if not in_weight_window(i, level):
                raise LatticeError(f"index {i} outside I_{level}^+")
        object.__setattr__(self, "coords", cleaned)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "_key", self._normal_form())

    def _normal_form(self) -> Tuple:
        if self.level == INF or not self.coords:
            return (self.level, self.coords)
        # subtract the coordinate at the top index r to pick a representative
        d = dict(self.coords)
        top = d.get(self.level, 0)
        return (self.level, _clean((i, d.get(i, 0) - top) for i in weight_window(self.level)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, EpsWeight):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __getitem__(self, i: int) -> int:
        for j, c in self.coords:
            if j == i:
                return c
        return 0

    def as_dict(self) -> Dict[int, int]:
        return dict(self.coords)

    def _same_level(self, other: "EpsWeight") -> None:
        if self.level != other.level:
            raise LatticeError(f"level mismatch: {self.level} vs {other.level}")

    def __add__(self, other: "EpsWeight") -> "EpsWeight":
        self._same_level(other)
        return EpsWeight(self.coords + other.coords, self.level)

    def __neg__(self) -> "EpsWeight":
        return EpsWeight(((i, -c) for i, c in self.coords), self.level)

    def __sub__(self, other: "EpsWeight") -> "EpsWeight":
        return self + (-other)

    def __rmul__(self, k: int) -> "EpsWeight":
        return EpsWeight(((i, k * c) for i, c in self.coords), self.level)

    def at_level(self, s: Level) -> "EpsWeight":
        """Re-tag the same coordinates at another level (no embedding shift)."""
        return EpsWeight(self.coords, s)

    def total(self) -> int:
        return sum(c for _, c in self.coords)

    def dot(self, other: "EpsWeight") -> int:
        """Orthonormal form on raw coordinates; not all-ones invariant."""
        d = dict(other.coords)
        return sum(c * d.get(i, 0) for i, c in self.coords)

    def to_json(self) -> dict:
        return {"level": _level_json(self.level), "coords": {str(i): c for i, c in self.coords}}

    @classmethod
    def from_json(cls, data: dict) -> "EpsWeight":
        return cls(((int(i), int(c)) for i, c in data["coords"].items()), _level_from_json(data["level"]))

    def __repr__(self) -> str:
        if not self.coords:
            return f"EpsWeight(0, level={self.level})"
        body = " + ".join(f"{c}e{i}" for i, c in self.coords)
        return f"EpsWeight({body}, level={self.level})"


@dataclass(frozen=True)
class RootCoeffs:
    """Integer combination of simple roots alpha_i."""

    coords: Tuple[Tuple[int, int], ...]
    level: Level = INF

    def __init__(self, coords=(), level: Level = INF):
        level = check_level(level)
        cleaned = _clean(coords)
        for i, _ in cleaned:
            if not in_root_window(i, level):
                raise LatticeError(f"simple root index {i} outside I_{level}")
        object.__setattr__(self, "coords", cleaned)
        object.__setattr__(self, "level", level)

    def __getitem__(self, i: int) -> int:
        return dict(self.coords).get(i, 0)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for _, c in self.coords)

    def height(self) -> int:
        return sum(c for _, c in self.coords)

    def to_eps(self) -> EpsWeight:
        acc: Dict[int, int] = {}
        for i, c in self.coords:
            acc[i] = acc.get(i, 0) + c
            acc[i + 1] = acc.get(i + 1, 0) - c
        return EpsWeight(acc, self.level)

    def to_json(self) -> dict:
        return {"level": _level_json(self.level), "coords": {str(i): c for i, c in self.coords}}

    @classmethod
    def from_json(cls, data: dict) -> "RootCoeffs":
        return cls(((int(i), int(c)) for i, c in data["coords"].items()), _level_from_json(data["level"]))


def eps(i: int, r: Level = INF) -> EpsWeight:
    if not in_weight_window(i, r):
        raise LatticeError(f"eps_{i} is not defined at level {r}")
    return EpsWeight({i: 1}, r)


def simple_root(i: int, r: Level = INF) -> EpsWeight:
    """alpha_i = eps_i - eps_{i+1}."""
    if not in_root_window(i, r):
        raise LatticeError(f"alpha_{i} is not defined at level {r}")
    return EpsWeight({i: 1, i + 1: -1}, r)


def positive_cone_decompose(d: EpsWeight) -> Optional[RootCoeffs]:
    """Write ``d`` as an integer combination of simple roots, if possible.

    The coefficient of alpha_i is the prefix sum of eps-coordinates up to
    i.  At finite level the all-ones ambiguity is first removed; this is
    possible iff the coordinate total is divisible by 2r.
    """
    coords = dict(d.coords)
    if d.level == INF:
        if d.total() != 0:
            return None
        lo = min(coords, default=0)
        hi = max(coords, default=0)
        span = range(lo, hi)
        shift = 0
    else:
        r = d.level
        total = d.total()
        if total % (2 * r):
            return None
        shift = total // (2 * r)
        span = root_window(r)
        lo = 1 - r
    out = {}
    running = 0
    for i in range(lo, span.stop):
        running += coords.get(i, 0) - shift
        if i in span and running:
            out[i] = running
    return RootCoeffs(out, d.level)


def dominance_leq(beta: EpsWeight, gamma: EpsWeight) -> bool:
    """beta <= gamma iff gamma - beta is a non-negative sum of simple roots."""
    if beta.level != gamma.level:
        raise LatticeError(f"level mismatch: {beta.level} vs {gamma.level}")
    c = positive_cone_decompose(gamma - beta)
    return c is not None and c.is_nonnegative()


def pair_with_coroot(w: EpsWeight, i: int) -> int:
    """w . alpha_i = w_i - w_{i+1}."""
    if not in_root_window(i, w.level):
        raise LatticeError(f"alpha_{i} is not defined at level {w.level}")
    return w[i] - w[i + 1]


def cartan_entry(i: int, j: int) -> int:
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


def root_norm(c: RootCoeffs) -> int:
    """beta . beta for beta = sum c_i alpha_i."""
    items = c.coords
    return sum(a * b * cartan_entry(i, j) for i, a in items for j, b in items)


def q_norm_difference(kappa: EpsWeight, lam: EpsWeight) -> int:
    """kappa.kappa - lam.lam computed through beta = kappa - lam in the root lattice.

    Equals 2 sum_i c_i (kappa . alpha_i) - beta . beta, which only sees
    pairings with simple roots and is therefore all-ones invariant.
    """
    c = positive_cone_decompose(kappa - lam)
    if c is None:
        raise LatticeError("kappa - lambda is not in the root lattice")
    return 2 * sum(ci * pair_with_coroot(kappa, i) for i, ci in c.coords) - root_norm(c)
