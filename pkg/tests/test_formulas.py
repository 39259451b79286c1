import pytest

from pbwchar.formulas import (
    GramMatrix,
    NotPositiveDefinite,
    bosonic_level1,
    fermionic_level1,
    fermionic_level_k,
    fused_character_level1,
    gaussian_binomial,
    gram_matrix_Qk,
    level_k_matrices,
    principal_char,
    supernomial,
)
from pbwchar.monomials import EHF, EHF_PRIME, character_of
from pbwchar.series import LaurentPoly, Series3

from oracles import gaussian_by_subsets, partition_count


def test_gaussian_examples():
    assert gaussian_binomial(2, 1) == LaurentPoly.from_list([1, 1])
    assert gaussian_binomial(7, 0) == LaurentPoly.from_list([1])
    assert gaussian_binomial(3, 5) == LaurentPoly({})
    assert gaussian_binomial(4, 2).to_list() == [1, 1, 2, 1, 1]


def test_gaussian_vs_subset_oracle():
    for n in range(11):
        for m in range(n + 1):
            assert gaussian_binomial(n, m).to_list() == gaussian_by_subsets(n, m)


def test_gaussian_symmetry_and_pascal():
    q = LaurentPoly.monomial(1)
    for n in range(1, 13):
        for m in range(n + 1):
            g = gaussian_binomial(n, m)
            assert g == gaussian_binomial(n, n - m)
            assert g == gaussian_binomial(n - 1, m - 1) + LaurentPoly.monomial(m) * gaussian_binomial(n - 1, m)
            assert g == LaurentPoly.monomial(n - m) * gaussian_binomial(n - 1, m - 1) + gaussian_binomial(n - 1, m)
    assert q * q == LaurentPoly.monomial(2)


def test_supernomial_examples():
    assert supernomial(0, 0) == LaurentPoly.from_list([1])
    assert supernomial(1, 1) == LaurentPoly.from_list([1])
    s20 = supernomial(2, 0)
    assert s20.min_degree == -2
    assert s20 == LaurentPoly({-2: 1, -1: 1, 0: 1})
    with pytest.raises(ValueError):
        supernomial(2, 3)


def test_supernomial_symmetry():
    for m in range(6):
        for l in range(m + 1):
            assert supernomial(m, l) == supernomial(m, -l)


def test_level1_small():
    one_q = Series3(1, {(0, 0, 0): 1, (1, -2, 1): 1, (1, 0, 1): 1, (1, 2, 1): 1})
    assert fermionic_level1(1) == one_q
    assert fused_character_level1(0) == Series3.one(0)
    assert fused_character_level1(2).coefficient(2, 0, 2) == 1
    assert sum(fermionic_level1(2).at_u_one().q_coeffs()[2:3]) == 4


def test_bosonic_examples():
    expected = Series3(
        3,
        {
            (0, 0, 0): 1,
            (1, -2, 0): 1, (1, 0, 0): 1, (1, 2, 0): 1,
            (2, -2, 0): 1, (2, 0, 0): 2, (2, 2, 0): 1,
            (3, -2, 0): 2, (3, 0, 0): 3, (3, 2, 0): 2,
        },
    )
    assert bosonic_level1(3) == expected
    assert bosonic_level1(0) == Series3.one(0)


def test_bosonic_z0_column_is_partitions():
    b = bosonic_level1(10)
    assert [b.coefficient(n, 0, 0) for n in range(11)] == [partition_count(n) for n in range(11)]


def test_fermionic_at_u1_equals_bosonic():
    assert fermionic_level1(8).at_u_one() == bosonic_level1(8)


def test_level1_routes_agree():
    f = fermionic_level1(7)
    assert fused_character_level1(7) == f
    assert fermionic_level_k(1, 7) == f
    assert character_of(EHF(1), 7) == f
    assert character_of(EHF_PRIME, 7) == f


def test_level_k_matrices():
    assert level_k_matrices(1) == ([[2]], [[1]])
    assert level_k_matrices(2) == ([[2, 2], [2, 4]], [[0, 1], [1, 2]])


@pytest.mark.parametrize("k,q_max", [(2, 6), (3, 5), (4, 5)])
def test_level_k_matches_enumeration(k, q_max):
    assert fermionic_level_k(k, q_max) == character_of(EHF(k), q_max)


def test_gram_k1():
    g = gram_matrix_Qk(1)
    assert [list(r) for r in g.entries] == [[2, 1, 0], [1, 2, 1], [0, 1, 2]]
    assert list(g.z_weights) == [2, 0, -2]
    assert list(g.u_weights) == [1, 1, 1]
    assert g.is_positive_definite()


def test_gram_k2():
    g = gram_matrix_Qk(2)
    assert [list(r) for r in g.entries] == [
        [2, 2, 0, 1, 0, 0],
        [2, 4, 1, 2, 0, 0],
        [0, 1, 2, 2, 0, 1],
        [1, 2, 2, 4, 1, 2],
        [0, 0, 0, 1, 2, 2],
        [0, 0, 1, 2, 2, 4],
    ]
    assert list(g.z_weights) == [2, 4, 0, 0, -2, -4]
    assert list(g.u_weights) == [1, 2, 1, 2, 1, 2]


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_gram_positive_definite(k):
    assert gram_matrix_Qk(k).is_positive_definite()


def test_principal_char_level1():
    assert principal_char(gram_matrix_Qk(1), 8) == fermionic_level1(8)
    assert principal_char(gram_matrix_Qk(1), 0) == Series3.one(0)


@pytest.mark.parametrize("k,q_max", [(2, 6), (3, 5)])
def test_principal_char_level_k(k, q_max):
    assert principal_char(gram_matrix_Qk(k), q_max) == fermionic_level_k(k, q_max)


def test_principal_char_negative_entries():
    # A_2 root lattice with one negative pairing; independent count by hand
    g = GramMatrix(((2, -1), (-1, 2)), (0, 0), (1, 1))
    s = principal_char(g, 2)
    # n=(0,0):1; (1,0),(0,1): q/(1-q) each; (1,1): q^1/(1-q)^2
    assert s.q_coeffs() == [1, 3, 4]


def test_not_positive_definite():
    g = GramMatrix(((2, 2), (2, 2)), (0, 0), (1, 1))
    assert not g.is_positive_definite()
    with pytest.raises(NotPositiveDefinite):
        principal_char(g, 3)


def test_gram_validation():
    with pytest.raises(ValueError):
        GramMatrix(((2, 1), (0, 2)), (0, 0), (1, 1))
    with pytest.raises(ValueError):
        GramMatrix(((3,),), (0,), (1,))


LEVEL1 = [
    lambda q: character_of(EHF(1), q),
    lambda q: character_of(EHF_PRIME, q),
    fermionic_level1,
    fused_character_level1,
    bosonic_level1,
]


@pytest.mark.parametrize("route", LEVEL1)
def test_z_symmetry_and_degree_invariants(route):
    s = route(7)
    assert s.z_reflect() == s
    for (q, z, u), c in s.terms.items():
        assert c > 0
        if route is not bosonic_level1:
            assert u <= q and abs(z) <= 2 * u
