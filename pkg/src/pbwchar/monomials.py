"""Ordered monomials in f_{-i}, h_{-i}, e_{-i} and the ehf / ehf' difference conditions.

An ordered monomial ``... f_{-n}^{a_n} h_{-n}^{b_n} e_{-n}^{c_n} ... f_{-1}^{a_1} h_{-1}^{b_1} e_{-1}^{c_1}``
is stored as the tuple of exponent triples ``((a_1, b_1, c_1), (a_2, b_2, c_2), ...)``
with trailing zero triples removed.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator

from .series import Series3

__all__ = [
    "OrderedMonomial",
    "Profile",
    "EHF",
    "EHF_PRIME",
    "NotAdmissible",
    "is_admissible",
    "violated_conditions",
    "enumerate_monomials",
    "character_of",
    "lex_compare",
    "lex_key",
    "mirror_key",
    "phi_forward",
    "phi_inverse",
]


class NotAdmissible(ValueError):
    pass


@dataclass(frozen=True)
class OrderedMonomial:
    exps: tuple = ()

    def __post_init__(self):
        exps = tuple(tuple(int(x) for x in t) for t in self.exps)
        if any(len(t) != 3 or min(t) < 0 for t in exps):
            raise ValueError(f"bad exponent triples {self.exps!r}")
        while exps and exps[-1] == (0, 0, 0):
            exps = exps[:-1]
        object.__setattr__(self, "exps", exps)

    @classmethod
    def from_maps(cls, a=None, b=None, c=None) -> "OrderedMonomial":
        a, b, c = a or {}, b or {}, c or {}
        n = max([0, *a, *b, *c])
        if any(i < 1 for i in [*a, *b, *c]):
            raise ValueError("indices start at 1")
        return cls(tuple((a.get(i, 0), b.get(i, 0), c.get(i, 0)) for i in range(1, n + 1)))

    @property
    def support(self) -> int:
        return len(self.exps)

    def a(self, i: int) -> int:
        return self.exps[i - 1][0] if 1 <= i <= len(self.exps) else 0

    def b(self, i: int) -> int:
        return self.exps[i - 1][1] if 1 <= i <= len(self.exps) else 0

    def c(self, i: int) -> int:
        return self.exps[i - 1][2] if 1 <= i <= len(self.exps) else 0

    @property
    def degree(self) -> int:
        """Total number of factors."""
        return sum(sum(t) for t in self.exps)

    @property
    def tridegree(self) -> tuple[int, int, int]:
        q = sum(i * sum(t) for i, t in enumerate(self.exps, 1))
        z = 2 * sum(t[2] - t[0] for t in self.exps)
        return q, z, self.degree

    def replace(self, i: int, a=None, b=None, c=None) -> "OrderedMonomial":
        exps = list(self.exps) + [(0, 0, 0)] * max(0, i - len(self.exps))
        old = exps[i - 1]
        exps[i - 1] = (
            old[0] if a is None else a,
            old[1] if b is None else b,
            old[2] if c is None else c,
        )
        return OrderedMonomial(tuple(exps))

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for i, t in enumerate(self.exps, 1):
            for letter, e in zip("fhe", t):
                if e:
                    parts.append(f"{letter}[-{i}]^{e}")
        return " ".join(parts)


@dataclass(frozen=True)
class Profile:
    variant: str  # "ehf" or "ehf-prime"
    level: int = 1

    def __post_init__(self):
        if self.variant not in ("ehf", "ehf-prime"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.level < 1:
            raise ValueError("level must be >= 1")
        if self.variant == "ehf-prime" and self.level != 1:
            raise ValueError("the ehf' conditions are only defined at level 1")


def EHF(k: int) -> Profile:
    return Profile("ehf", k)


EHF_PRIME = Profile("ehf-prime", 1)


def _conditions_at(m: OrderedMonomial, p: Profile, i: int):
    """Yield (name, value, bound) for every condition indexed by i."""
    a, b, c = m.a, m.b, m.c
    k = p.level
    if p.variant == "ehf":
        yield "a", a(i) + a(i + 1) + b(i + 1), k
        yield "b", a(i) + b(i + 1) + c(i + 1), k
        yield "c", a(i) + b(i) + c(i + 1), k
        yield "d", b(i) + c(i) + c(i + 1), k
    else:
        yield "a'", a(i) + a(i + 1) + b(i + 1), 1
        yield "b'", a(i) + b(i) + b(i + 1), 1
        yield "c'", b(i) + b(i + 1) + c(i + 1), 1
        yield "d'", b(i) + c(i) + c(i + 1), 1
        yield "N", b(i) + a(i + 1) + c(i + 2), 2


def violated_conditions(m: OrderedMonomial, p: Profile) -> list[tuple[str, int]]:
    """All (condition, index) pairs that fail; index runs to one past the support."""
    return [
        (name, i)
        for i in range(1, m.support + 2)
        for name, value, bound in _conditions_at(m, p, i)
        if value > bound
    ]


def is_admissible(m: OrderedMonomial, p: Profile) -> bool:
    for i in range(1, m.support + 2):
        for _, value, bound in _conditions_at(m, p, i):
            if value > bound:
                return False
    return True


def _triples(budget: int, cap: int):
    for a in range(min(budget, cap) + 1):
        for b in range(min(budget - a, cap) + 1):
            for c in range(min(budget - a - b, cap) + 1):
                yield (a, b, c)


def _closed_ok(exps: list, p: Profile, i: int) -> bool:
    """Check the conditions whose indices are fully determined once index i is fixed."""
    m = OrderedMonomial.__new__(OrderedMonomial)
    object.__setattr__(m, "exps", tuple(exps))
    for j in (i - 1, i - 2) if p.variant == "ehf-prime" else (i - 1,):
        if j < 1:
            continue
        for name, value, bound in _conditions_at(m, p, j):
            if name == "N" and j != i - 2:
                continue
            if value > bound:
                return False
    return True


def enumerate_monomials(p: Profile, q_max: int) -> Iterator[OrderedMonomial]:
    """All admissible monomials with q-degree <= q_max, by q-degree then ascending lex order."""
    if q_max < 0:
        raise ValueError("q_max must be non-negative")
    found = []
    cap = p.level

    def dfs(i: int, budget: int, exps: list):
        if i > budget:
            m = OrderedMonomial(tuple(exps))
            if is_admissible(m, p):
                found.append(m)
            return
        for t in _triples(budget // i, cap):
            exps.append(t)
            if _closed_ok(exps, p, i):
                dfs(i + 1, budget - i * sum(t), exps)
            exps.pop()

    dfs(1, q_max, [])
    found.sort(key=lambda m: (m.tridegree[0], lex_key(m, q_max)))
    return iter(found)


def character_of(p: Profile, q_max: int) -> Series3:
    acc = {}
    for m in enumerate_monomials(p, q_max):
        d = m.tridegree
        acc[d] = acc.get(d, 0) + 1
    return Series3(q_max, acc)


def lex_key(m: OrderedMonomial, width: int | None = None) -> tuple:
    """Sort key realising the ordering of :func:`lex_compare` (larger key = larger monomial).

    Monomials are compared first by total degree; ties go to the monomial with the
    smaller c_1, then smaller b_1, smaller a_1, smaller c_2, and so on.
    ``width`` pads the key so keys of different supports line up.
    """
    n = max(m.support, width or 0)
    key = [m.degree]
    for i in range(1, n + 1):
        key += [-m.c(i), -m.b(i), -m.a(i)]
    return tuple(key)


def lex_compare(m1: OrderedMonomial, m2: OrderedMonomial) -> int:
    """Return 1 if m1 > m2, -1 if m1 < m2, 0 if equal."""
    width = max(m1.support, m2.support)
    k1, k2 = lex_key(m1, width), lex_key(m2, width)
    return (k1 > k2) - (k1 < k2)


lex_sort_key = functools.cmp_to_key(lex_compare)


def mirror_key(m: OrderedMonomial, width: int) -> tuple:
    """Degree first, then the written word read from its left end.

    Exponents are compared a_n, b_n, c_n, a_{n-1}, ... starting at index ``width``,
    smaller exponent ranking higher.  ``width`` must cover the support.
    """
    if width < m.support:
        raise ValueError("width smaller than support")
    key = [m.degree]
    for i in range(width, 0, -1):
        key += [-m.a(i), -m.b(i), -m.c(i)]
    return tuple(key)


def _swap_step(m: OrderedMonomial, j: int, forward: bool) -> OrderedMonomial:
    if forward:
        m = m.replace(j, a=1, b=0)
        return m.replace(j + 1, b=0, c=1)
    m = m.replace(j, a=0, b=1)
    return m.replace(j + 1, b=1, c=0)


def phi_forward(m: OrderedMonomial) -> OrderedMonomial:
    """Bijection from ehf-monomials (level 1) onto ehf'-monomials preserving (q, z, u)."""
    if not is_admissible(m, EHF(1)):
        raise NotAdmissible(f"{m} is not an ehf-monomial at level 1")
    while True:
        j = next(
            (
                i
                for i in range(1, m.support + 1)
                if m.a(i) + m.b(i) + m.b(i + 1) > 1 or m.b(i) + m.b(i + 1) + m.c(i + 1) > 1
            ),
            None,
        )
        if j is None:
            return m
        # a level-1 ehf violation of (b') or (c') can only be an h_{-j} h_{-j-1} pair
        assert (m.a(j), m.b(j), m.b(j + 1), m.c(j + 1)) == (0, 1, 1, 0), (str(m), j)
        m = _swap_step(m, j, forward=True)


def phi_inverse(m: OrderedMonomial) -> OrderedMonomial:
    if not is_admissible(m, EHF_PRIME):
        raise NotAdmissible(f"{m} is not an ehf'-monomial")
    while True:
        j = next(
            (
                i
                for i in range(1, m.support + 1)
                if m.a(i) + m.b(i) + m.c(i + 1) > 1 or m.a(i) + m.b(i + 1) + m.c(i + 1) > 1
            ),
            None,
        )
        if j is None:
            return m
        assert (m.a(j), m.b(j), m.b(j + 1), m.c(j + 1)) == (1, 0, 0, 1), (str(m), j)
        m = _swap_step(m, j, forward=False)
