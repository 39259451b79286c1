"""sl2 adjoint machinery.

* Polynomials in commuting symbols e, h, f with the lowering derivation
  D(e) = -h, D(h) = 2f, D(f) = 0 (the adjoint action of f).  The orbit of
  e^{k+1} under D spans the (2k+3)-dimensional irreducible module whose
  affinization gives the defining relations of the algebra A_k.
* The one-parameter family of sl2 triples inside 4x4 traceless matrices that
  degenerates to the abelian span of E_{1,4}, E_{2,4}, E_{2,3}.  The parameter
  is s = sqrt(1 - eps), so every entry is rational in s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

__all__ = [
    "AdjointPolynomial",
    "lower_relation",
    "lowering_orbit",
    "DegenTriple",
    "degeneration_matrices",
    "degeneration_limits",
    "bracket",
    "unit_matrix",
]


class AdjointPolynomial:
    """Integer combination of monomials e^a h^b f^c, keyed by (a, b, c)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {tuple(k): int(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def power(cls, a=0, b=0, c=0, coeff=1) -> "AdjointPolynomial":
        return cls({(a, b, c): coeff})

    def __add__(self, other):
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return AdjointPolynomial(acc)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, int):
            return AdjointPolynomial({k: v * other for k, v in self.terms.items()})
        acc = {}
        for (a1, b1, c1), v1 in self.terms.items():
            for (a2, b2, c2), v2 in other.terms.items():
                k = (a1 + a2, b1 + b2, c1 + c2)
                acc[k] = acc.get(k, 0) + v1 * v2
        return AdjointPolynomial(acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, AdjointPolynomial) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b, c), v in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"{s}^{e}" if e > 1 else s for s, e in zip("ehf", (a, b, c)) if e) or "1"
            parts.append(f"{v}*{mono}")
        return " + ".join(parts)

    @property
    def degrees(self) -> set:
        return {sum(k) for k in self.terms}

    @property
    def weight(self):
        """sl2 weight 2(a - c) if homogeneous, else None."""
        ws = {2 * (a - c) for a, _, c in self.terms}
        return ws.pop() if len(ws) == 1 else None

    def primitive(self) -> "AdjointPolynomial":
        """Divide out the content; sign fixed so the term with the most e's is positive."""
        if not self.terms:
            return self
        g = reduce(math.gcd, self.terms.values(), 0)
        lead = max(self.terms)
        if self.terms[lead] < 0:
            g = -g
        return AdjointPolynomial({k: v // g for k, v in self.terms.items()})


def lower_relation(p: AdjointPolynomial) -> AdjointPolynomial:
    acc = {}
    for (a, b, c), v in p.terms.items():
        if a:  # a e^{a-1} * (-h)
            k = (a - 1, b + 1, c)
            acc[k] = acc.get(k, 0) - a * v
        if b:  # b h^{b-1} * 2f
            k = (a, b - 1, c + 1)
            acc[k] = acc.get(k, 0) + 2 * b * v
    return AdjointPolynomial(acc)


def lowering_orbit(k: int) -> list[AdjointPolynomial]:
    """[e^{k+1}, D e^{k+1}, ..., D^{2k+2} e^{k+1}], each made primitive."""
    if k < 1:
        raise ValueError("level must be >= 1")
    orbit = []
    p = AdjointPolynomial.power(a=k + 1)
    for _ in range(2 * k + 3):
        if not p:
            raise ArithmeticError("orbit vanished early")
        orbit.append(p.primitive())
        p = lower_relation(p)
    if p:
        raise ArithmeticError(f"D^{2 * k + 3}(e^{k + 1}) = {p} is nonzero")
    return orbit


# -- the degenerating family -------------------------------------------------

Matrix = tuple  # 4x4 tuple of tuples of Fraction


def _mat(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _mm(A, B) -> Matrix:
    n = len(A)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _lin(a, A, b, B) -> Matrix:
    return tuple(tuple(a * x + b * y for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def bracket(A, B) -> Matrix:
    return _lin(1, _mm(A, B), -1, _mm(B, A))


def unit_matrix(i: int, j: int, n: int = 4) -> Matrix:
    """E_{i,j} with 1-based indices."""
    return _mat([[int((r, c) == (i, j)) for c in range(1, n + 1)] for r in range(1, n + 1)])


def _pattern(x, y, z, s) -> Matrix:
    eps = 1 - s * s
    return _mat([
        [x, y, -x * eps / s, -y * eps / (s * s)],
        [z, -x, -z * eps / s, x * eps / (s * s)],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
    ])


@dataclass(frozen=True)
class DegenTriple:
    s: Fraction
    E: Matrix
    H: Matrix
    F: Matrix

    @property
    def eps(self) -> Fraction:
        return 1 - self.s * self.s

    def relations_hold(self) -> bool:
        E, H, F = self.E, self.H, self.F
        return (
            bracket(H, E) == _lin(2, E, 0, E)
            and bracket(H, F) == _lin(-2, F, 0, F)
            and bracket(E, F) == H
        )

    def shape_ok(self) -> bool:
        return all(
            M[2] == M[3] == (0, 0, 0, 0) and sum(M[i][i] for i in range(4)) == 0
            for M in (self.E, self.H, self.F)
        )

    def scaled(self) -> tuple[Matrix, Matrix, Matrix]:
        """((eps-1) E, (1-eps) H, sqrt(1-eps) F)."""
        s = self.s
        return (
            _lin(-s * s, self.E, 0, self.E),
            _lin(s * s, self.H, 0, self.H),
            _lin(s, self.F, 0, self.F),
        )


def degeneration_matrices(s) -> DegenTriple:
    s = Fraction(s)
    if not 0 < s <= 1:
        raise ValueError(f"s = {s} outside (0, 1]")
    return DegenTriple(s, _pattern(0, 1, 0, s), _pattern(1, 0, 0, s), _pattern(0, 0, 1, s))


LIMIT_TARGETS = (unit_matrix(1, 4), unit_matrix(2, 4), _lin(-1, unit_matrix(2, 3), 0, unit_matrix(2, 3)))


def _dist(A, B) -> Fraction:
    return max(abs(x - y) for ra, rb in zip(A, B) for x, y in zip(ra, rb))


def degeneration_limits(s_sequence) -> dict:
    """Entrywise max-distances of the scaled triple to E_{1,4}, E_{2,4}, -E_{2,3}.

    ``monotone`` is true when each of the three distance sequences strictly
    decreases along ``s_sequence``.
    """
    rows = []
    for s in s_sequence:
        T = degeneration_matrices(s)
        rows.append({
            "s": T.s,
            "residuals": tuple(_dist(M, target) for M, target in zip(T.scaled(), LIMIT_TARGETS)),
            "relations": T.relations_hold(),
        })
    monotone = all(
        all(b["residuals"][i] < a["residuals"][i] for i in range(3))
        for a, b in zip(rows, rows[1:])
    )
    return {"rows": rows, "monotone": monotone}
