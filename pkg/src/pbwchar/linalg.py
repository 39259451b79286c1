"""Fraction-free sparse row echelon form over the integers.

Rows are dicts ``column -> int``.  Columns are integers; the largest column of a
reduced row is its pivot, so sorting the monomial basis by a term order and
numbering columns in ascending order makes pivots the leading monomials.
Elimination keeps rows integral (cross-multiplication followed by removal of
the content), so the rank is the exact rank over Q.
"""

from __future__ import annotations

import math
from functools import reduce

__all__ = ["Echelon", "rank"]


def _primitive(row: dict) -> dict:
    g = reduce(math.gcd, row.values())
    if g == 1:
        return row
    return {c: v // g for c, v in row.items()}


class Echelon:
    """Incrementally built echelon basis keyed by pivot column."""

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    def reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = max(row)
            p = self.pivots.get(lead)
            if p is None:
                return row
            a, b = p[lead], row[lead]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * v for c, v in row.items()}
            for c, v in p.items():
                x = new.get(c, 0) - b * v
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            row = _primitive(new) if new else new
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; return True when it raised the rank."""
        r = self.reduce(row)
        if not r:
            return False
        r = _primitive(r)
        self.pivots[max(r)] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def pivot_columns(self) -> set[int]:
        return set(self.pivots)


def rank(rows) -> int:
    """Exact rank of an integer matrix given as dense lists or sparse dicts."""
    ech = Echelon()
    for r in rows:
        if not isinstance(r, dict):
            r = {j: v for j, v in enumerate(r) if v}
        ech.add(r)
    return ech.rank
