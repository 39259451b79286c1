"""Closed-form evaluators for the graded characters.

Every evaluator returns a :class:`~pbwchar.series.Series3` truncated at ``q_max``.
Infinite sums over particle numbers are cut using positive-definiteness of the
quadratic form in the exponent.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .series import INF, LaurentPoly, Series3, _pochhammer_coeffs, pochhammer_inverse

__all__ = [
    "NotPositiveDefinite",
    "GramMatrix",
    "gaussian_binomial",
    "supernomial",
    "fused_character_level1",
    "fermionic_level1",
    "fermionic_level_k",
    "bosonic_level1",
    "principal_char",
    "gram_matrix_Qk",
    "level_k_matrices",
    "leading_minors",
]


class NotPositiveDefinite(ValueError):
    pass


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (coefficient lists, low degree first)."""
    if den[0] not in (1, -1):
        raise ValueError("divisor must have unit constant term")
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out)):
        c = num[i] * den[0]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("division is not exact")
    return out


@lru_cache(maxsize=None)
def _poch_poly(n: int) -> tuple[int, ...]:
    """Full polynomial (q)_n = prod_{j<=n} (1 - q^j)."""
    return tuple(_pochhammer_coeffs(n, n * (n + 1) // 2))


@lru_cache(maxsize=None)
def _gauss(n: int, m: int) -> tuple[int, ...]:
    if m < 0 or m > n or n < 0:
        return ()
    num = list(_poch_poly(n))
    den = LaurentPoly.from_list(_poch_poly(m)) * LaurentPoly.from_list(_poch_poly(n - m))
    return tuple(_exact_div(num, den.to_list()))


def gaussian_binomial(n: int, m: int) -> LaurentPoly:
    """The q-binomial [n, m]; zero outside 0 <= m <= n."""
    return LaurentPoly.from_list(_gauss(n, m))


def supernomial(m: int, l: int) -> LaurentPoly:
    """S_{m,l}(q) = sum_nu q^{(nu+l-m)(nu+l) + nu(nu-m)} [m, nu] [nu, m-l-nu].

    Summands may carry negative powers of q; nu runs over all values where both
    binomials are nonzero.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if abs(l) > m:
        raise ValueError(f"|l| = {abs(l)} exceeds m = {m}")
    total = LaurentPoly()
    for nu in range(0, m + 1):
        b1 = gaussian_binomial(m, nu)
        b2 = gaussian_binomial(nu, m - l - nu)
        if not b1 or not b2:
            continue
        e = (nu + l - m) * (nu + l) + nu * (nu - m)
        total = total + (b1 * b2).shift(e)
    return total


def fused_character_level1(q_max: int) -> Series3:
    """Level-1 character packaged by PBW degree m through supernomials."""
    total = Series3.zero(q_max)
    for m in range(q_max + 1):
        inv = pochhammer_inverse(m, q_max)
        for l in range(-m, m + 1):
            term = supernomial(m, l).shift(m * m)
            if term.min_degree is not None and term.min_degree < 0:
                raise ArithmeticError(f"negative exponent survives at m={m}, l={l}")
            if term.min_degree is None or term.min_degree > q_max:
                continue
            total = total + term.to_series(q_max, z=2 * l, u=m) * inv
    return total


def _accumulate(acc: dict, q_max: int, energy: int, z: int, u: int, counts) -> None:
    """acc += u^u z^z q^energy / prod_i (q)_{counts_i}."""
    poly = [0] * (q_max - energy + 1)
    poly[0] = 1
    for n in counts:
        if n:
            poly = _mul_trunc(poly, _inv_poch(n, q_max - energy))
    for d, c in enumerate(poly):
        if c:
            acc[(energy + d, z, u)] += c


def _mul_trunc(a: list[int], b: list[int]) -> list[int]:
    n = len(a)
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j in range(n - i):
                out[i + j] += x * b[j]
    return out


@lru_cache(maxsize=None)
def _inv_poch(n: int, q_max: int) -> tuple[int, ...]:
    return tuple(pochhammer_inverse(n, q_max).q_coeffs())


def fermionic_level1(q_max: int) -> Series3:
    """Sum over (n+, n0, n-) of u^{n+ + n0 + n-} z^{2(n+ - n-)} q^{quad} / ((q)_{n+}(q)_{n0}(q)_{n-})."""
    acc = defaultdict(int)
    bound = math.isqrt(q_max)
    for p, o, m in itertools.product(range(bound + 1), repeat=3):
        energy = p * p + o * o + m * m + p * o + o * m
        if energy > q_max:
            continue
        _accumulate(acc, q_max, energy, 2 * (p - m), p + o + m, (p, o, m))
    return Series3(q_max, acc)


def level_k_matrices(k: int) -> tuple[list[list[int]], list[list[int]]]:
    """A_{ij} = 2 min(i, j), B_{ij} = max(0, i + j - k) for 1 <= i, j <= k."""
    if k < 1:
        raise ValueError("level must be >= 1")
    A = [[2 * min(i, j) for j in range(1, k + 1)] for i in range(1, k + 1)]
    B = [[max(0, i + j - k) for j in range(1, k + 1)] for i in range(1, k + 1)]
    return A, B


def _quad(x, M, y) -> int:
    return sum(x[i] * M[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if x[i] and y[j])


def _layer_vectors(k: int, q_max: int):
    """Vectors n in Z^k_{>=0} with (1/2) n A n <= q_max.

    (1/2) n A n >= sum_i i n_i^2 since every entry of A is non-negative.
    """
    A, _ = level_k_matrices(k)

    def rec(i, vec, partial):
        if i == k:
            yield tuple(vec)
            return
        n = 0
        while True:
            vec.append(n)
            e = _quad(vec, A[: i + 1], vec) // 2 if n else partial
            if e > q_max:
                vec.pop()
                break
            yield from rec(i + 1, vec, e)
            vec.pop()
            n += 1

    yield from rec(0, [], 0)


def fermionic_level_k(k: int, q_max: int) -> Series3:
    """Level-k fermionic sum over three layer vectors n+, n0, n- in Z^k_{>=0}."""
    A, B = level_k_matrices(k)
    vecs = [(v, _quad(v, A, v) // 2, sum(i * x for i, x in enumerate(v, 1))) for v in _layer_vectors(k, q_max)]
    acc = defaultdict(int)
    for vp, ep, sp in vecs:
        for v0, e0, s0 in vecs:
            cross = ep + e0 + _quad(vp, B, v0)
            if cross > q_max:
                continue
            for vm, em, sm in vecs:
                energy = cross + em + _quad(v0, B, vm)
                if energy > q_max:
                    continue
                _accumulate(acc, q_max, energy, 2 * (sp - sm), sp + s0 + sm, vp + v0 + vm)
    return Series3(q_max, acc)


def bosonic_level1(q_max: int) -> Series3:
    """(1/(q)_inf) sum_{n in Z} z^{2n} q^{n^2}; no u-grading."""
    theta = Series3(q_max, {(n * n, 2 * n, 0): 1 for n in range(-math.isqrt(q_max), math.isqrt(q_max) + 1)})
    return theta * pochhammer_inverse(INF, q_max)


def leading_minors(M) -> list[Fraction]:
    """Leading principal minors, computed exactly."""
    return [_det([row[: j + 1] for row in M[: j + 1]]) for j in range(len(M))]


def _det(M) -> Fraction:
    n = len(M)
    a = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i]), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            det = -det
        det *= a[i][i]
        for r in range(i + 1, n):
            f = a[r][i] / a[i][i]
            if f:
                for c in range(i, n):
                    a[r][c] -= f * a[i][c]
    return det


def _inverse(M) -> list[list[Fraction]]:
    n = len(M)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for i in range(n):
        piv = next(r for r in range(i, n) if a[r][i])
        a[i], a[piv] = a[piv], a[i]
        p = a[i][i]
        a[i] = [x / p for x in a[i]]
        for r in range(n):
            if r != i and a[r][i]:
                f = a[r][i]
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple
    z_weights: tuple
    u_weights: tuple

    def __post_init__(self):
        M = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", M)
        object.__setattr__(self, "z_weights", tuple(self.z_weights))
        object.__setattr__(self, "u_weights", tuple(self.u_weights))
        n = len(M)
        if any(len(row) != n for row in M):
            raise ValueError("Gram matrix must be square")
        if len(self.z_weights) != n or len(self.u_weights) != n:
            raise ValueError("one z- and u-weight per generator")
        if any(M[i][j] != M[j][i] for i in range(n) for j in range(n)):
            raise ValueError("Gram matrix must be symmetric")
        if any(M[i][i] <= 0 or M[i][i] % 2 for i in range(n)):
            raise ValueError("diagonal entries must be positive even integers")
        if any(w % 2 for w in self.z_weights):
            raise ValueError("z-weights must be even")
        if any(w <= 0 for w in self.u_weights):
            raise ValueError("u-weights must be positive")

    @property
    def size(self) -> int:
        return len(self.entries)

    def is_positive_definite(self) -> bool:
        return all(m > 0 for m in leading_minors(self.entries))


def _particle_vectors(M, q_max: int):
    """All n >= 0 with n M n / 2 <= q_max.

    The largest real n_i on that ellipsoid is sqrt(2 q_max (M^-1)_{ii}), which bounds
    every coordinate; partial sums prune the search when M has no negative entry.
    """
    n = len(M)
    inv = _inverse(M)
    bounds = [math.isqrt(math.floor(2 * q_max * inv[i][i])) for i in range(n)]
    monotone = all(x >= 0 for row in M for x in row)

    def rec(i, vec):
        if i == n:
            if _quad(vec, M, vec) <= 2 * q_max:
                yield tuple(vec)
            return
        for x in range(bounds[i] + 1):
            vec.append(x)
            if monotone and _quad(vec, [row[: i + 1] for row in M[: i + 1]], vec) > 2 * q_max:
                vec.pop()
                break
            yield from rec(i + 1, vec)
            vec.pop()

    yield from rec(0, [])


def principal_char(G: GramMatrix, q_max: int) -> Series3:
    """Principal-subspace character sum_n u^{uw.n} z^{zw.n} q^{n M n / 2} / (q)_n."""
    if not G.is_positive_definite():
        raise NotPositiveDefinite("Gram matrix is not positive-definite")
    M = [list(r) for r in G.entries]
    acc = defaultdict(int)
    for vec in _particle_vectors(M, q_max):
        energy = _quad(vec, M, vec) // 2
        z = sum(w * x for w, x in zip(G.z_weights, vec))
        u = sum(w * x for w, x in zip(G.u_weights, vec))
        _accumulate(acc, q_max, energy, z, u, vec)
    return Series3(q_max, acc)


def gram_matrix_Qk(k: int) -> GramMatrix:
    """Gram matrix of the generators e^[l], h^[l], f^[l] (l = 1..k), ordered e-layers, h-layers, f-layers.

    Same-letter blocks are A, the e-h and h-f blocks are B and the e-f block is zero.
    """
    A, B = level_k_matrices(k)
    Z = [[0] * k for _ in range(k)]
    blocks = [[A, B, Z], [B, A, B], [Z, B, A]]
    M = [sum((blocks[I][J][i] for J in range(3)), []) for I in range(3) for i in range(k)]
    layers = list(range(1, k + 1))
    z_weights = [2 * l for l in layers] + [0] * k + [-2 * l for l in layers]
    return GramMatrix(M, z_weights, layers * 3)
