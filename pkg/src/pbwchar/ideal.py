"""Graded dimensions of polynomial quotients A_k, B_k, C_k by exact linear algebra.

Variables are Fourier modes of abelian currents.  A variable is the triple
``(letter, layer, n)`` with ``letter`` in ``"ehf"``, ``layer >= 1`` and ``n >= layer``
its q-degree (the mode x_{-n}).  It carries z-weight +2 layer / 0 / -2 layer
for e / h / f and u-weight ``layer``.  A monomial is a sorted tuple of variables.

The current of layer l is ``x^[l](z) = sum_{n >= l} x_{-n} z^{n-l}``; its r-th
derivative multiplies the mode x_{-n} by the falling factorial (n-l)(n-l-1)...(n-l-r+1).
A relation family is a product of currents (or an integer combination of such
products); its z-coefficients, multiplied by every monomial, span the graded
pieces of the ideal.
"""

from __future__ import annotations

import io
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .linalg import Echelon
from .monomials import OrderedMonomial, lex_key, mirror_key
from .series import Series3
from .sl2 import lowering_orbit

__all__ = [
    "Current",
    "Family",
    "RelationSpec",
    "relations_A",
    "relations_B",
    "relations_C",
    "monomial_basis",
    "expand_rows",
    "graded_dimension",
    "dimension_table",
    "quotient_character",
    "standard_monomials",
    "table_to_csv",
    "to_ordered",
]

Z_SIGN = {"e": 1, "h": 0, "f": -1}


@dataclass(frozen=True, order=True)
class Current:
    letter: str
    layer: int = 1
    deriv: int = 0

    def __str__(self):
        return f"{self.letter}[{self.layer}]" + "'" * self.deriv


@dataclass(frozen=True)
class Family:
    """Integer combination ``sum coeff * prod(currents)`` of current products."""

    terms: tuple  # ((coeff, (Current, ...)), ...)
    label: str = ""

    @property
    def z_weight(self) -> int:
        ws = {sum(2 * c.layer * Z_SIGN[c.letter] for c in cs) for _, cs in self.terms}
        assert len(ws) == 1, f"family {self.label} is not z-homogeneous"
        return ws.pop()

    @property
    def u_weight(self) -> int:
        ws = {sum(c.layer for c in cs) for _, cs in self.terms}
        assert len(ws) == 1, f"family {self.label} is not u-homogeneous"
        return ws.pop()

    @property
    def min_q(self) -> int:
        """Lowest q-degree with a possibly nonzero coefficient."""
        return min(sum(c.layer + c.deriv for c in cs) for _, cs in self.terms)

    def __str__(self):
        return self.label or repr(self.terms)


@dataclass(frozen=True)
class RelationSpec:
    name: str
    level: int
    layers: tuple
    families: tuple

    @property
    def layer_one(self) -> bool:
        return self.layers == (1,)

    def variables(self, q_max: int) -> list[tuple]:
        return [(x, l, n) for l in self.layers for n in range(l, q_max + 1) for x in "fhe"]


def _poly_label(terms) -> str:
    out = []
    for coeff, cs in terms:
        counts = defaultdict(int)
        for c in cs:
            counts[c.letter] += 1
        mono = "*".join(f"{x}^{counts[x]}" if counts[x] > 1 else x for x in "ehf" if counts[x])
        out.append(mono if coeff == 1 else "-" + mono if coeff == -1 else f"{coeff}*{mono}")
    return " + ".join(out).replace("+ -", "- ")


def relations_B(k: int) -> RelationSpec:
    """e^i h^{k+1-i} (1 <= i <= k+1) and h^i f^{k+1-i} (0 <= i <= k+1), highest e-power first."""
    if k < 1:
        raise ValueError("level must be >= 1")
    e, h, f = Current("e"), Current("h"), Current("f")
    fams = []
    for i in range(k + 1, 0, -1):
        cs = (e,) * i + (h,) * (k + 1 - i)
        fams.append(Family(((1, cs),), _poly_label([(1, cs)])))
    for i in range(k + 1, -1, -1):
        cs = (h,) * i + (f,) * (k + 1 - i)
        fams.append(Family(((1, cs),), _poly_label([(1, cs)])))
    return RelationSpec(f"B_{k}", k, (1,), tuple(fams))


def relations_A(k: int) -> RelationSpec:
    """Affinized lowering orbit of e^{k+1}."""
    if k < 1:
        raise ValueError("level must be >= 1")
    fams = []
    for p in lowering_orbit(k):
        terms = tuple(
            (v, (Current("e"),) * a + (Current("h"),) * b + (Current("f"),) * c)
            for (a, b, c), v in sorted(p.terms.items(), reverse=True)
        )
        fams.append(Family(terms, _poly_label(terms)))
    return RelationSpec(f"A_{k}", k, (1,), tuple(fams))


def _c_label(x, l, a, y, m, b) -> str:
    return f"{x}[{l}]{chr(39) * a}*{y}[{m}]{chr(39) * b}" if a <= 3 and b <= 3 else f"{x}[{l}]^({a})*{y}[{m}]^({b})"


def relations_C(k: int) -> RelationSpec:
    """Quadratic relations among the layered currents x^[l], 1 <= l <= k."""
    if k < 1:
        raise ValueError("level must be >= 1")
    fams = []
    layers = range(1, k + 1)
    for x in "ehf":
        for l in layers:
            for m in range(l, k + 1):
                for s in range(2 * min(l, m)):
                    for a in range(s + 1):
                        b = s - a
                        if l == m and a > b:
                            continue
                        fams.append(Family(((1, (Current(x, l, a), Current(x, m, b))),), _c_label(x, l, a, x, m, b)))
    for x, y in (("e", "h"), ("h", "f")):
        for l in layers:
            for m in layers:
                for s in range(max(0, l + m - k)):
                    for a in range(s + 1):
                        fams.append(Family(((1, (Current(x, l, a), Current(y, m, s - a))),), _c_label(x, l, a, y, m, s - a)))
    return RelationSpec(f"C_{k}", k, tuple(layers), tuple(fams))


# -- monomials -----------------------------------------------------------------


def mono_degree(mono) -> tuple[int, int, int]:
    q = sum(n for _, _, n in mono)
    z = sum(2 * l * Z_SIGN[x] for x, l, _ in mono)
    u = sum(l for _, l, _ in mono)
    return q, z, u


def to_ordered(mono) -> OrderedMonomial:
    """Layer-1 oracle monomial -> OrderedMonomial (f -> a, h -> b, e -> c)."""
    a, b, c = defaultdict(int), defaultdict(int), defaultdict(int)
    for x, l, n in mono:
        if l != 1:
            raise ValueError("only layer-1 monomials have an ordered form")
        {"f": a, "h": b, "e": c}[x][n] += 1
    return OrderedMonomial.from_maps(dict(a), dict(b), dict(c))


def from_ordered(m: OrderedMonomial) -> tuple:
    out = []
    for i, t in enumerate(m.exps, 1):
        for x, e in zip("fhe", t):
            out += [(x, 1, i)] * e
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _monomials_of_q(layers: tuple, q: int) -> dict:
    """All monomials of q-degree q, grouped by (z, u)."""
    variables = [(x, l, n) for l in layers for n in range(l, q + 1) for x in "fhe"]
    variables.sort()
    out = defaultdict(list)

    def rec(start, budget, acc):
        if budget == 0:
            mono = tuple(acc)
            out[mono_degree(mono)[1:]].append(mono)
            return
        for j in range(start, len(variables)):
            v = variables[j]
            if v[2] <= budget:
                acc.append(v)
                rec(j, budget - v[2], acc)
                acc.pop()

    rec(0, q, [])
    return dict(out)


ORDERS = ("lex", "mirror")


def monomial_basis(spec: RelationSpec, d, order: str = "lex") -> list[tuple]:
    """Monomials of tri-degree d, ascending in the column order used for elimination.

    ``order`` picks the term order on layer-1 monomials: ``"lex"`` is
    :func:`~pbwchar.monomials.lex_key`, ``"mirror"`` is :func:`~pbwchar.monomials.mirror_key`.
    Layered specs always use the plain tuple order.
    """
    q, z, u = d
    if q < 0:
        return []
    if order not in ORDERS:
        raise ValueError(f"unknown order {order!r}")
    basis = list(_monomials_of_q(spec.layers, q).get((z, u), ()))
    basis.sort(key=lambda m: _order_key(spec, m, order))
    return basis


def _order_key(spec: RelationSpec, mono, order: str):
    if not spec.layer_one:
        return tuple(sorted(mono))
    m = to_ordered(mono)
    q = mono_degree(mono)[0]
    return lex_key(m, q) if order == "lex" else mirror_key(m, q)


def _falling(n: int, r: int) -> int:
    out = 1
    for j in range(r):
        out *= n - j
    return out


@lru_cache(maxsize=None)
def _family_coefficient(fam: Family, q: int) -> tuple:
    """The q-degree piece of a family as ((monomial, coeff), ...)."""
    acc = defaultdict(int)
    for coeff, cs in fam.terms:
        r = len(cs)

        def rec(j, budget, weight, acc_vars):
            if j == r:
                if budget == 0:
                    acc[tuple(sorted(acc_vars))] += weight
                return
            c = cs[j]
            rest_min = sum(cc.layer for cc in cs[j + 1:])
            for n in range(c.layer, budget - rest_min + 1):
                w = _falling(n - c.layer, c.deriv)
                if w:
                    acc_vars.append((c.letter, c.layer, n))
                    rec(j + 1, budget - n, weight * w, acc_vars)
                    acc_vars.pop()

        rec(0, q, coeff, [])
    items = tuple(sorted((m, v) for m, v in acc.items() if v))
    zu = {mono_degree(m)[1:] for m, _ in items}
    assert len(zu) <= 1, f"inhomogeneous coefficient of {fam}"
    return items


def _sparse_rows(spec: RelationSpec, d):
    q, z, u = d
    for fam in spec.families:
        zf, uf = fam.z_weight, fam.u_weight
        for qf in range(fam.min_q, q + 1):
            poly = _family_coefficient(fam, qf)
            if not poly:
                continue
            shifts = _monomials_of_q(spec.layers, q - qf).get((z - zf, u - uf), ())
            for s in shifts:
                row = defaultdict(int)
                for m, v in poly:
                    row[tuple(sorted(m + s))] += v
                yield {m: v for m, v in row.items() if v}


def expand_rows(spec: RelationSpec, d, basis=None) -> list[list[int]]:
    """Rows spanning the ideal slice at tri-degree d, as integer vectors over ``basis``."""
    if basis is None:
        basis = monomial_basis(spec, d)
    col = {m: j for j, m in enumerate(basis)}
    out = []
    for row in _sparse_rows(spec, d):
        vec = [0] * len(basis)
        for m, v in row.items():
            if mono_degree(m) != tuple(d):
                raise AssertionError(f"row term {m} is not of degree {d}")
            vec[col[m]] = v
        out.append(vec)
    return out


@lru_cache(maxsize=None)
def _slice(spec: RelationSpec, d, order: str = "lex"):
    """(basis, n_rows, echelon) for one tri-degree."""
    basis = monomial_basis(spec, d, order)
    col = {m: j for j, m in enumerate(basis)}
    ech = Echelon()
    n_rows = 0
    for row in _sparse_rows(spec, d):
        n_rows += 1
        ech.add({col[m]: v for m, v in row.items()})
    return basis, n_rows, ech


def graded_dimension(spec: RelationSpec, d) -> int:
    basis, _, ech = _slice(spec, tuple(d))
    return len(basis) - ech.rank


def standard_monomials(spec: RelationSpec, d, order: str = "lex") -> set:
    """Monomials that are not leading terms of the ideal slice at d.

    Leading means largest in the chosen term order (see :func:`monomial_basis`).
    Layer-1 results are returned as OrderedMonomial, otherwise as raw monomials.
    """
    basis, _, ech = _slice(spec, tuple(d), order)
    std = [m for j, m in enumerate(basis) if j not in ech.pivots]
    assert len(std) == len(basis) - ech.rank
    if spec.layer_one:
        return {to_ordered(m) for m in std}
    return set(std)


def _degrees(spec: RelationSpec, q_max: int):
    for q in range(q_max + 1):
        for z, u in sorted(_monomials_of_q(spec.layers, q)):
            yield q, z, u


def dimension_table(spec: RelationSpec, q_max: int) -> list[tuple]:
    """Rows (q, z, u, n_monomials, n_rows, rank, dim) sorted by (q, z, u)."""
    out = []
    for d in _degrees(spec, q_max):
        basis, n_rows, ech = _slice(spec, d)
        out.append((*d, len(basis), n_rows, ech.rank, len(basis) - ech.rank))
    return out


def quotient_character(spec: RelationSpec, q_max: int) -> Series3:
    return Series3(q_max, {(q, z, u): dim for q, z, u, _, _, _, dim in dimension_table(spec, q_max)})


def table_to_csv(rows) -> str:
    buf = io.StringIO()
    buf.write("q,z,u,n_monomials,n_rows,rank,dim\n")
    for r in rows:
        buf.write(",".join(str(x) for x in r) + "\n")
    return buf.getvalue()
