"""Integer Laurent polynomials in a single variable q.

These are the scalars of the quantum wedge modules.  Every coefficient
produced by the Chevalley action lives in Z[q, q^-1], so no rational
function field is needed; division is only ever performed when it is
exact (quantum factorials in divided powers).
"""

from __future__ import annotations

from typing import Dict, Iterable, Tuple, Union

Scalar = Union["Laurent", int]


class Laurent:
    """Immutable element of Z[q, q^-1] stored as sorted (exponent, coeff) pairs."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Dict[int, int], Iterable[Tuple[int, int]], None] = None):
        acc: Dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "Laurent":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "Laurent":
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, x: Scalar) -> "Laurent":
        if isinstance(x, Laurent):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Laurent")

    @property
    def terms(self) -> Tuple[Tuple[int, int], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_degree(self) -> int:
        return self._terms[0][0]

    def max_degree(self) -> int:
        return self._terms[-1][0]

    def at_one(self) -> int:
        """Specialize q = 1."""
        return sum(c for _, c in self._terms)

    def bar(self) -> "Laurent":
        """The substitution q -> q^-1."""
        return Laurent({-e: c for e, c in self._terms})

    def shift(self, k: int) -> "Laurent":
        """Multiply by q^k."""
        return Laurent({e + k: c for e, c in self._terms})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Laurent.const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other: Scalar) -> "Laurent":
        other = Laurent.coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return Laurent(acc)

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        return Laurent({e: -c for e, c in self._terms})

    def __sub__(self, other: Scalar) -> "Laurent":
        return self + (-Laurent.coerce(other))

    def __rsub__(self, other: Scalar) -> "Laurent":
        return Laurent.coerce(other) - self

    def __mul__(self, other: Scalar) -> "Laurent":
        other = Laurent.coerce(other)
        acc: Dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return Laurent(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("negative powers need a unit, +-q^k")
            e, c = self._terms[0]
            return Laurent.monomial(e * n, c if n % 2 else 1)
        result = Laurent.const(1)
        for _ in range(n):
            result = result * self
        return result

    def divmod(self, other: "Laurent") -> Tuple["Laurent", "Laurent"]:
        """Long division by a Laurent polynomial with unit leading coefficient.

        Both operands are shifted to honest polynomials with non-zero
        constant term, divided there, and shifted back.  The remainder is
        zero exactly when ``other`` divides ``self`` in Z[q, q^-1].
        """
        other = Laurent.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return ZERO, ZERO
        lead_e, lead_c = other._terms[-1]
        if lead_c not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        a0, b0 = self.min_degree(), other.min_degree()
        rem = dict((e - a0, c) for e, c in self._terms)
        div = [(e - b0, c) for e, c in other._terms]
        top = lead_e - b0
        quotient: Dict[int, int] = {}
        while rem:
            e = max(rem)
            if e < top:
                break
            factor = rem[e] * lead_c
            quotient[e - top] = factor
            for de, dc in div:
                k = de + e - top
                rem[k] = rem.get(k, 0) - factor * dc
                if rem[k] == 0:
                    del rem[k]
        q = Laurent({e + a0 - b0: c for e, c in quotient.items()})
        r = Laurent({e + a0: c for e, c in rem.items()})
        return q, r

    def exact_div(self, other: Scalar) -> "Laurent":
        q, r = self.divmod(Laurent.coerce(other))
        if r:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def to_json(self):
        return [[e, c] for e, c in self._terms]

    @classmethod
    def from_json(cls, data) -> "Laurent":
        return cls((int(e), int(c)) for e, c in data)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            if e == 0:
                parts.append(str(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                parts.append(mono if c == 1 else ("-" + mono if c == -1 else f"{c}*{mono}"))
        return " + ".join(parts).replace("+ -", "- ")


ZERO = Laurent()
ONE = Laurent.const(1)
Q = Laurent.monomial(1)


def qint(n: int) -> Laurent:
    """Balanced quantum integer [n] = (q^n - q^-n)/(q - q^-1)."""
    if n == 0:
        return ZERO
    if n < 0:
        return -qint(-n)
    return Laurent({n - 1 - 2 * k: 1 for k in range(n)})


def qfactorial(n: int) -> Laurent:
    result = ONE
    for k in range(1, n + 1):
        result = result * qint(k)
    return result
