"""01-matrix index sets for tensor products of wedges and their direct limit.

A :class:`Pattern` is an element of the limit index set: an (l+1)-row
01-matrix with columns indexed by Z.  Rows 1..l have constant background
c_i and finitely many markers (entries != c_i).  The last row is a
semi-infinite wedge: 1 far to the left, 0 far to the right.  It is stored
relative to the fixed cut at 0 (1 at positions <= 0, 0 at positions > 0);
its exceptions are then "holes" at j <= 0 and "particles" at j > 0, and the
two always come in equal numbers.  That representation does not depend on
epsilon, which is what makes super duality an identity map on patterns.

Level r views a pattern through the window I_r^+ = {1-r, ..., r}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .lattice import EpsWeight, LatticeError, dominance_leq, q_norm_difference
from .report import Report


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class Shape:
    """The fixed data (n_1..n_l, c_1..c_l, epsilon)."""

    n: Tuple[int, ...]
    c: Tuple[int, ...]
    epsilon: int

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(x) for x in self.n))
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        if not self.n:
            raise PatternError("shape needs at least one finite wedge row")
        if len(self.n) != len(self.c):
            raise PatternError("n and c must have the same length")
        if any(x < 1 for x in self.n):
            raise PatternError("all n_i must be positive")
        if any(x not in (0, 1) for x in self.c) or self.epsilon not in (0, 1):
            raise PatternError("c_i and epsilon must be 0 or 1")

    @property
    def l(self) -> int:
        return len(self.n)

    @property
    def rows(self) -> int:
        return len(self.n) + 1

    @property
    def r0(self) -> int:
        return max(self.n)

    def background(self, i: int) -> int:
        """c_i, with c_{l+1} = epsilon (0-based row index)."""
        return self.c[i] if i < self.l else self.epsilon

    def with_epsilon(self, epsilon: int) -> "Shape":
        return Shape(self.n, self.c, epsilon)

    def to_json(self) -> dict:
        return {"l": self.l, "n": list(self.n), "c": list(self.c), "epsilon": self.epsilon}

    @classmethod
    def from_json(cls, data: dict) -> "Shape":
        shape = cls(tuple(data["n"]), tuple(data["c"]), int(data.get("epsilon", 0)))
        if "l" in data and int(data["l"]) != shape.l:
            raise PatternError("l does not match len(n)")
        return shape


def _last_row_background(j: int) -> int:
    return 1 if j <= 0 else 0


class Pattern:
    """An element of the limit index set, stored as exception sets per row."""

    __slots__ = ("shape", "rows", "_hash", "__dict__")

    def __init__(self, shape: Shape, rows: Sequence[FrozenSet[int]]):
        if len(rows) != shape.rows:
            raise PatternError(f"expected {shape.rows} rows, got {len(rows)}")
        rows = tuple(frozenset(int(j) for j in row) for row in rows)
        for i in range(shape.l):
            if len(rows[i]) != shape.n[i]:
                raise PatternError(f"row {i + 1} has {len(rows[i])} markers, expected {shape.n[i]}")
        last = rows[-1]
        holes = sum(1 for j in last if j <= 0)
        if holes != len(last) - holes:
            raise PatternError("last row must have as many holes at j<=0 as particles at j>0")
        self.shape = shape
        self.rows = rows
        self._hash = hash((shape, rows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Pattern):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def entry(self, i: int, j: int) -> int:
        """The 01-entry in (0-based) row i, column j."""
        if i < self.shape.l:
            c = self.shape.c[i]
            return 1 - c if j in self.rows[i] else c
        bg = _last_row_background(j)
        return 1 - bg if j in self.rows[i] else bg

    @cached_property
    def native_level(self) -> int:
        """Smallest r with every exception inside I_r^+."""
        r = 1
        for row in self.rows:
            for j in row:
                r = max(r, j, 1 - j)
        return r

    def sort_key(self) -> Tuple:
        return tuple(tuple(sorted(row)) for row in self.rows)

    def __lt__(self, other: "Pattern") -> bool:
        return self.sort_key() < other.sort_key()

    def with_shape(self, shape: Shape) -> "Pattern":
        return Pattern(shape, self.rows)

    def swap(self, i: int, j: int) -> Optional["Pattern"]:
        """Swap columns j, j+1 of row i; None if the entries agree."""
        if self.entry(i, j) == self.entry(i, j + 1):
            return None
        rows = list(self.rows)
        rows[i] = rows[i] ^ {j, j + 1}
        return Pattern(self.shape, rows)

    def to_json(self) -> dict:
        s = self.native_level
        return {"shape": self.shape.to_json(), "level": s, "rows": [list(r) for r in window(self, s)]}

    @classmethod
    def from_json(cls, data: dict, shape: Optional[Shape] = None) -> "Pattern":
        if shape is None:
            shape = Shape.from_json(data["shape"])
        return make_pattern(shape, int(data["level"]), data["rows"])

    def __repr__(self) -> str:
        s = self.native_level
        rows = ["".join(map(str, r)) for r in window(self, s)]
        return f"Pattern({'|'.join(rows)} @ {1 - s}..{s})"


# -- construction and windows -------------------------------------------------------------


def make_pattern(shape: Shape, r: int, rows: Sequence[Sequence[int]]) -> Pattern:
    """Build a pattern from its explicit rows over I_r^+ = (1-r, ..., r)."""
    if not isinstance(r, int) or r < 1:
        raise PatternError(f"level must be a positive integer, got {r!r}")
    if len(rows) != shape.rows:
        raise PatternError(f"expected {shape.rows} rows, got {len(rows)}")
    cols = range(1 - r, r + 1)
    out: List[FrozenSet[int]] = []
    for i, row in enumerate(rows):
        row = [int(x) for x in row]
        if len(row) != 2 * r:
            raise PatternError(f"row {i + 1} has length {len(row)}, expected {2 * r}")
        if any(x not in (0, 1) for x in row):
            raise PatternError(f"row {i + 1} is not a 01-tuple")
        c = shape.background(i)
        markers = sum(1 for x in row if x != c)
        expected = shape.n[i] if i < shape.l else r
        if markers != expected:
            raise PatternError(f"row {i + 1} has {markers} entries != {c}, expected {expected}")
        if i < shape.l:
            out.append(frozenset(j for j, x in zip(cols, row) if x != c))
        else:
            out.append(frozenset(j for j, x in zip(cols, row) if x != _last_row_background(j)))
    return Pattern(shape, out)


def window(p: Pattern, s: int) -> Tuple[Tuple[int, ...], ...]:
    """Explicit rows of p viewed in the level-s index set."""
    if s < p.native_level:
        raise PatternError(f"level {s} is below the native level {p.native_level}")
    cols = range(1 - s, s + 1)
    return tuple(tuple(p.entry(i, j) for j in cols) for i in range(p.shape.rows))


def _check_level(p: Pattern, s: int) -> None:
    if s < p.native_level:
        raise PatternError(f"level {s} is below the native level {p.native_level}")


# -- weights ------------------------------------------------------------------------------


def row_weight(p: Pattern, i: int, s: int) -> EpsWeight:
    """|lambda^i|_s: sum of (-1)^{c_i} eps_j over markers j in the level-s window."""
    _check_level(p, s)
    c = p.shape.background(i)
    sign = -1 if c else 1
    return EpsWeight({j: sign for j in range(1 - s, s + 1) if p.entry(i, j) != c}, s)


def weight_at_level(p: Pattern, s: int) -> EpsWeight:
    """|lambda|_s, the weight of v_lambda inside the level-s module."""
    total = EpsWeight((), s)
    for i in range(p.shape.rows):
        total = total + row_weight(p, i, s)
    return total


def prefix_weights(p: Pattern, s: int) -> List[EpsWeight]:
    out = []
    total = EpsWeight((), s)
    for i in range(p.shape.rows):
        total = total + row_weight(p, i, s)
        out.append(total)
    return out


def poset_leq(lam: Pattern, mu: Pattern, s: Optional[int] = None) -> bool:
    """lam <= mu: equal weight and every row-prefix weight of lam dominates mu's."""
    if s is None:
        s = max(lam.native_level, mu.native_level)
    _check_level(lam, s)
    _check_level(mu, s)
    pl = prefix_weights(lam, s)
    pm = prefix_weights(mu, s)
    if pl[-1] != pm[-1]:
        return False
    return all(dominance_leq(b, a) for a, b in zip(pl, pm))


# -- blocks -------------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockKey:
    """Level-free block invariant: the signed deviation of a pattern from the
    cut-at-0 vacuum, as an exact eps-vector.

    |lambda|_s agrees, modulo all-ones, with this vector plus the fixed
    vacuum weight eps_{1-s} + ... + eps_0, and the coordinate total is the
    same for every pattern of a shape, so equal keys <=> equal weights at
    any common level.
    """

    coords: Tuple[Tuple[int, int], ...]

    def weight_at(self, s: int) -> EpsWeight:
        vac = {j: 1 for j in range(1 - s, 1)}
        for j, c in self.coords:
            vac[j] = vac.get(j, 0) + c
        return EpsWeight(vac, s)

    def to_json(self) -> dict:
        return {"deviation": {str(j): c for j, c in self.coords}}


def block_key(p: Pattern) -> BlockKey:
    acc: Dict[int, int] = {}
    for i in range(p.shape.l):
        sign = -1 if p.shape.c[i] else 1
        for j in p.rows[i]:
            acc[j] = acc.get(j, 0) + sign
    for j in p.rows[-1]:
        acc[j] = acc.get(j, 0) + (-1 if j <= 0 else 1)
    return BlockKey(tuple(sorted((j, c) for j, c in acc.items() if c)))


def same_block(lam: Pattern, mu: Pattern, s: Optional[int] = None) -> bool:
    """lam ~ mu by direct comparison of weights at a common level."""
    if s is None:
        s = max(lam.native_level, mu.native_level)
    return weight_at_level(lam, s) == weight_at_level(mu, s)


# -- distinguished elements and ideals ----------------------------------------------------


def kappa(shape: Shape, r: int) -> Pattern:
    """The maximal element of the level-r index set: 1s packed to the left."""
    if r < shape.r0:
        raise PatternError(f"kappa_r needs r >= r_0 = {shape.r0}, got {r}")
    rows = []
    for i in range(shape.l):
        ones = shape.n[i] if shape.c[i] == 0 else 2 * r - shape.n[i]
        rows.append([1] * ones + [0] * (2 * r - ones))
    rows.append([1] * r + [0] * r)
    return make_pattern(shape, r, rows)


def _vacuum_entry(shape: Shape, i: int, j: int, r: int) -> int:
    """Entry of the level-r vacuum background outside I_r^+."""
    if i < shape.l:
        return shape.c[i]
    return 1 if j < 1 - r else 0


def ideal_sums(p: Pattern, r: int, s: Optional[int] = None):
    """The two families of prefix sums defining the truncation ideals.

    Entries are counted as deviations lambda^i_j - b^i_j from the level-r
    vacuum background b, which for the finite rows is the usual signed
    marker count (-1)^{c_i}[lambda^i_j != c_i].  Returns (left, right)
    where left[k][h] is taken over j <= h < 1-r and right[k][h] over
    j >= h > r, for prefixes of k+1 rows, using columns in I_s^+.
    """
    if s is None:
        s = max(r, p.native_level)
    if s < r:
        raise PatternError("evaluation level s must be >= r")
    _check_level(p, s)
    shape = p.shape
    left: List[Dict[int, int]] = []
    right: List[Dict[int, int]] = []
    run_left = {h: 0 for h in range(1 - s, 1 - r)}
    run_right = {h: 0 for h in range(r + 1, s + 1)}
    for i in range(shape.rows):
        acc = 0
        for h in range(1 - s, 1 - r):
            acc += p.entry(i, h) - _vacuum_entry(shape, i, h, r)
            run_left[h] += acc
        acc = 0
        for h in range(s, r, -1):
            acc += p.entry(i, h) - _vacuum_entry(shape, i, h, r)
            run_right[h] += acc
        left.append(dict(run_left))
        right.append(dict(run_right))
    return left, right


def in_ideal(p: Pattern, r: int, strict: bool = False, s: Optional[int] = None) -> bool:
    """Membership of p in Xi^<=_r (strict=False) or Xi^<_r (strict=True)."""
    if r < p.shape.r0:
        raise PatternError(f"ideals need r >= r_0 = {p.shape.r0}")
    left, right = ideal_sums(p, r, s)
    weak = all(v >= 0 for row in left for v in row.values()) and all(
        v <= 0 for row in right for v in row.values()
    )
    if not strict or not weak:
        return weak
    return any(v > 0 for row in left for v in row.values()) or any(v < 0 for row in right for v in row.values())


def defect(p: Pattern, r: Optional[int] = None) -> int:
    """(|kappa_r|.|kappa_r| - |lambda|_r.|lambda|_r) / 2 at an admissible level r."""
    if r is None:
        r = max(p.native_level, p.shape.r0)
    _check_level(p, r)
    k = weight_at_level(kappa(p.shape, r), r)
    try:
        twice = q_norm_difference(k, weight_at_level(p, r))
    except LatticeError as exc:
        raise PatternError(f"{p!r} is not in the block lattice of kappa_{r}") from exc
    if twice % 2:
        raise PatternError("odd norm difference; corrupted pattern")
    return twice // 2


# -- enumeration --------------------------------------------------------------------------


def enumerate_patterns(shape: Shape, r: int, block: Optional[BlockKey] = None) -> Iterator[Pattern]:
    """All elements of the level-r index set, lexicographic on explicit window rows."""
    if r < shape.r0:
        raise PatternError(f"enumeration needs r >= r_0 = {shape.r0}")
    width = 2 * r
    per_row: List[List[Tuple[int, ...]]] = []
    for i in range(shape.rows):
        c = shape.background(i)
        k = shape.n[i] if i < shape.l else r
        choices = []
        for pos in itertools.combinations(range(width), k):
            row = [c] * width
            for t in pos:
                row[t] = 1 - c
            choices.append(tuple(row))
        choices.sort()
        per_row.append(choices)
    for rows in itertools.product(*per_row):
        p = make_pattern(shape, r, rows)
        if block is None or block_key(p) == block:
            yield p


# -- structural self-checks ------------------------------------------------------------------


def check_ideal_identity(shape: Shape, r: int, s: int) -> Report:
    """Xi^<= minus Xi^< at level s is the image of level r; both tests are s-stable and down-closed."""
    if not shape.r0 <= r < s:
        raise PatternError("need r_0 <= r < s")
    report = Report(name=f"ideal(r={r},s={s})")
    sample = list(enumerate_patterns(shape, s))
    weak = {p: in_ideal(p, r, s=s) for p in sample}
    strict = {p: in_ideal(p, r, strict=True, s=s) for p in sample}
    base = set(enumerate_patterns(shape, r))
    layer = {p for p in sample if weak[p] and not strict[p]}
    report.check(layer == base, family="identity", extra=sorted(p.to_json()["rows"] for p in layer - base),
                 missing=sorted(p.to_json()["rows"] for p in base - layer))
    for p in sample:
        report.check(not strict[p] or weak[p], family="nested", pattern=p.to_json())
        for t in range(p.native_level, s + 1):
            if t < r:
                continue
            ok = in_ideal(p, r, s=t) == weak[p] and in_ideal(p, r, strict=True, s=t) == strict[p]
            report.check(ok, family="s-independence", pattern=p.to_json(), s=t)
    by_block: Dict[BlockKey, List[Pattern]] = {}
    for p in sample:
        by_block.setdefault(block_key(p), []).append(p)
    for members in by_block.values():
        for hi in members:
            for lo in members:
                if poset_leq(lo, hi, s):
                    ok = (not weak[hi] or weak[lo]) and (not strict[hi] or strict[lo])
                    report.check(ok, family="down-closed", lower=lo.to_json(), upper=hi.to_json())
    return report


def check_defect(shape: Shape, r: int) -> Report:
    """defect is the same at levels r and r+1, vanishes on kappa_r and is never negative."""
    report = Report(name=f"defect(r={r})")
    report.check(defect(kappa(shape, r), r) == 0, family="kappa")
    for p in enumerate_patterns(shape, r):
        d = defect(p, r)
        report.check(d == defect(p, r + 1), family="level", pattern=p.to_json())
        report.check(d >= 0, family="sign", pattern=p.to_json(), defect=d)
    return report
