"""Truncated trivariate series in q, z, u with exact integer coefficients.

A :class:`Series3` stores a sparse map ``(q, z, u) -> int`` together with the
truncation bound ``q_max``.  Terms with ``q > q_max`` are never stored and zero
coefficients are dropped, so two series compare equal exactly when their
coefficients agree.  Binary operations refuse operands with different bounds.

:class:`LaurentPoly` is a one-variable q-polynomial that may carry negative
exponents.  It is only used while evaluating closed formulas whose individual
summands are Laurent; callers convert back with :meth:`LaurentPoly.to_series`,
which rejects negative exponents.
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Iterable, Iterator, Mapping

__all__ = [
    "INF",
    "TruncationMismatch",
    "NotAUnit",
    "Series3",
    "LaurentPoly",
    "add",
    "mul",
    "invert_unit",
    "pochhammer_inverse",
]

INF = math.inf


class TruncationMismatch(ValueError):
    pass


class NotAUnit(ValueError):
    pass


Degree = tuple  # (q, z, u)


class Series3:
    """Immutable truncated series ``sum c[q,z,u] q^q z^z u^u``."""

    __slots__ = ("_q_max", "_terms", "_hash")

    def __init__(self, q_max: int, terms: Mapping[Degree, int] | Iterable = ()):
        if q_max < 0:
            raise ValueError("q_max must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for (q, z, u), c in items:
            if q < 0:
                raise ValueError(f"negative q-degree {q} in Series3")
            if z % 2:
                raise ValueError(f"odd z-degree {z}")
            if q > q_max or not c:
                continue
            clean[(q, z, u)] = clean.get((q, z, u), 0) + int(c)
        self._terms = {d: c for d, c in clean.items() if c}
        self._q_max = q_max
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, q_max: int) -> "Series3":
        return cls(q_max)

    @classmethod
    def one(cls, q_max: int) -> "Series3":
        return cls(q_max, {(0, 0, 0): 1})

    @classmethod
    def monomial(cls, q_max: int, q: int = 0, z: int = 0, u: int = 0, coeff: int = 1) -> "Series3":
        return cls(q_max, {(q, z, u): coeff})

    @classmethod
    def from_q_coeffs(cls, q_max: int, coeffs: Iterable[int]) -> "Series3":
        """Series in q alone from a coefficient list ``[c0, c1, ...]``."""
        return cls(q_max, {(n, 0, 0): c for n, c in enumerate(coeffs)})

    # -- access -----------------------------------------------------------

    @property
    def q_max(self) -> int:
        return self._q_max

    @property
    def terms(self) -> Mapping[Degree, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Degree, int]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, q: int, z: int = 0, u: int = 0) -> int:
        return self._terms.get((q, z, u), 0)

    def __getitem__(self, degree: Degree) -> int:
        return self._terms.get(tuple(degree), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def q_coeffs(self) -> list[int]:
        """Coefficients with z and u set to 1, indexed by q."""
        out = [0] * (self._q_max + 1)
        for (q, _, _), c in self._terms.items():
            out[q] += c
        return out

    # -- structural maps --------------------------------------------------

    def restrict(self, q_max: int) -> "Series3":
        if q_max > self._q_max:
            raise TruncationMismatch(f"cannot extend a series known to q^{self._q_max} up to q^{q_max}")
        return Series3(q_max, self._terms)

    def at_u_one(self) -> "Series3":
        """Specialize u = 1 (the ordinary (q, z)-character)."""
        acc = defaultdict(int)
        for (q, z, _), c in self._terms.items():
            acc[(q, z, 0)] += c
        return Series3(self._q_max, acc)

    def z_reflect(self) -> "Series3":
        return Series3(self._q_max, {(q, -z, u): c for (q, z, u), c in self._terms.items()})

    def shift(self, q: int = 0, z: int = 0, u: int = 0) -> "Series3":
        return Series3(self._q_max, {(a + q, b + z, c + u): v for (a, b, c), v in self._terms.items()})

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Series3") -> None:
        if not isinstance(other, Series3):
            raise TypeError(f"expected Series3, got {type(other).__name__}")
        if other._q_max != self._q_max:
            raise TruncationMismatch(f"q_max {self._q_max} != {other._q_max}")

    def __add__(self, other: "Series3") -> "Series3":
        self._check(other)
        acc = dict(self._terms)
        for d, c in other._terms.items():
            acc[d] = acc.get(d, 0) + c
        return Series3(self._q_max, acc)

    def __neg__(self) -> "Series3":
        return Series3(self._q_max, {d: -c for d, c in self._terms.items()})

    def __sub__(self, other: "Series3") -> "Series3":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Series3(self._q_max, {d: c * other for d, c in self._terms.items()})
        self._check(other)
        n = self._q_max
        # bucket the right operand by q so the truncation cut is a slice
        by_q = defaultdict(list)
        for (q, z, u), c in other._terms.items():
            by_q[q].append((z, u, c))
        acc = defaultdict(int)
        for (q1, z1, u1), c1 in self._terms.items():
            for q2 in range(n - q1 + 1):
                for z2, u2, c2 in by_q.get(q2, ()):
                    acc[(q1 + q2, z1 + z2, u1 + u2)] += c1 * c2
        return Series3(n, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Series3":
        if e < 0:
            return invert_unit(self) ** (-e)
        out = Series3.one(self._q_max)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series3):
            return NotImplemented
        return self._q_max == other._q_max and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._q_max, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Series3(q_max={self._q_max}, {self.pretty()})"

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (q, z, u), c in self.items():
            mono = "".join(
                s for s in (
                    f"q^{q}" if q else "",
                    f"z^{z}" if z else "",
                    f"u^{u}" if u else "",
                ) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    # -- serialization ----------------------------------------------------

    def to_records(self) -> list[dict]:
        """Canonical form: records sorted by (q, z, u), coefficients as decimal strings."""
        return [{"q": q, "z": z, "u": u, "c": str(c)} for (q, z, u), c in self.items()]

    @classmethod
    def from_records(cls, q_max: int, records: Iterable[Mapping]) -> "Series3":
        acc = defaultdict(int)
        for r in records:
            acc[(int(r["q"]), int(r["z"]), int(r["u"]))] += int(r["c"])
        return cls(q_max, acc)

    def first_difference(self, other: "Series3"):
        """Smallest degree where the two series differ, or None."""
        self._check(other)
        keys = sorted(set(self._terms) | set(other._terms))
        for d in keys:
            if self._terms.get(d, 0) != other._terms.get(d, 0):
                return d
        return None


def add(a: Series3, b: Series3) -> Series3:
    return a + b


def mul(a: Series3, b: Series3) -> Series3:
    return a * b


def invert_unit(a: Series3) -> Series3:
    """Multiplicative inverse of a series whose q^0 part is the constant +-1."""
    const = {(z, u): c for (q, z, u), c in a.terms.items() if q == 0}
    if set(const) != {(0, 0)} or const[(0, 0)] not in (1, -1):
        raise NotAUnit(f"constant part {const!r} is not +-1")
    c0 = const[(0, 0)]
    n = a.q_max
    slices = [defaultdict(int) for _ in range(n + 1)]
    for (q, z, u), c in a.terms.items():
        slices[q][(z, u)] += c
    # b_0 = c0, b_m = -c0 * sum_{j=1..m} a_j b_{m-j}
    inv = [dict() for _ in range(n + 1)]
    inv[0] = {(0, 0): c0}
    for m in range(1, n + 1):
        acc = defaultdict(int)
        for j in range(1, m + 1):
            if not slices[j]:
                continue
            for (z1, u1), c1 in slices[j].items():
                for (z2, u2), c2 in inv[m - j].items():
                    acc[(z1 + z2, u1 + u2)] -= c0 * c1 * c2
        inv[m] = {k: v for k, v in acc.items() if v}
    return Series3(n, {(q, z, u): c for q in range(n + 1) for (z, u), c in inv[q].items()})


def _pochhammer_coeffs(n: int, q_max: int) -> list[int]:
    """q-coefficients of prod_{j=1..n} (1 - q^j), truncated."""
    poly = [0] * (q_max + 1)
    poly[0] = 1
    for j in range(1, n + 1):
        if j > q_max:
            break
        for d in range(q_max, j - 1, -1):
            poly[d] -= poly[d - j]
    return poly


def pochhammer_inverse(n, q_max: int) -> Series3:
    """``1/(q)_n``; pass ``n = INF`` for ``1/(q)_infinity`` (product up to q_max)."""
    if n == INF:
        n = q_max
    if n < 0:
        raise ValueError("n must be non-negative")
    return invert_unit(Series3.from_q_coeffs(q_max, _pochhammer_coeffs(int(n), q_max)))


class LaurentPoly:
    """Finite integer combination of powers of q, exponents of either sign."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def from_list(cls, coeffs: Iterable[int]) -> "LaurentPoly":
        return cls(dict(enumerate(coeffs)))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc = dict(self.coeffs)
        for e, c in other.coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        acc = defaultdict(int)
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                acc[e1 + e2] += c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self.coeffs.items()))})"

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def shift(self, e: int) -> "LaurentPoly":
        return LaurentPoly({k + e: c for k, c in self.coeffs.items()})

    @property
    def min_degree(self):
        return min(self.coeffs) if self.coeffs else None

    @property
    def max_degree(self):
        return max(self.coeffs) if self.coeffs else None

    def to_list(self) -> list[int]:
        if not self.coeffs:
            return []
        if self.min_degree < 0:
            raise ValueError("Laurent polynomial has negative exponents")
        out = [0] * (self.max_degree + 1)
        for e, c in self.coeffs.items():
            out[e] = c
        return out

    def to_series(self, q_max: int, z: int = 0, u: int = 0) -> Series3:
        if self.coeffs and self.min_degree < 0:
            raise ValueError(f"negative q-exponent {self.min_degree} survives in a character term")
        return Series3(q_max, {(e, z, u): c for e, c in self.coeffs.items()})
