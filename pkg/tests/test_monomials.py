import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pbwchar.monomials import (
    EHF,
    EHF_PRIME,
    NotAdmissible,
    OrderedMonomial,
    Profile,
    character_of,
    enumerate_monomials,
    is_admissible,
    lex_compare,
    phi_forward,
    phi_inverse,
    violated_conditions,
)
from pbwchar.series import Series3

from oracles import brute_character, ehf_ok, ehf_prime_ok

M = OrderedMonomial.from_maps

# counts by q-grade from the exhaustive oracle
FROZEN_COUNTS = {
    1: [1, 3, 4, 7, 13, 19, 29],
    2: [1, 3, 9, 15, 30, 54, 94],
    3: [1, 3, 9, 22, 42, 81, 151],
}


def test_admissibility_examples():
    assert is_admissible(M(a={1: 1}, c={1: 1}), EHF(1))
    assert not is_admissible(M(b={1: 2}), EHF(1))
    assert ("c", 1) in violated_conditions(M(b={1: 2}), EHF(1))
    for p in (EHF(1), EHF(3), EHF_PRIME):
        assert is_admissible(M(), p)
    hh = M(b={1: 1, 2: 1})
    assert is_admissible(hh, EHF(1))
    assert not is_admissible(hh, EHF_PRIME)
    assert ("b'", 1) in violated_conditions(hh, EHF_PRIME)


def test_hexagon_condition():
    # b_1 + a_2 + c_3 = 3 > 2
    m = M(b={1: 1}, a={2: 1}, c={3: 1})
    assert ("N", 1) in violated_conditions(m, EHF_PRIME)


def test_profile_validation():
    with pytest.raises(ValueError):
        Profile("ehf-prime", 2)
    with pytest.raises(ValueError):
        EHF(0)


def test_enumerate_q1():
    ms = list(enumerate_monomials(EHF(1), 1))
    assert set(ms) == {M(), M(a={1: 1}), M(b={1: 1}), M(c={1: 1})}


def test_enumerate_q3_set():
    q3 = {m for m in enumerate_monomials(EHF(1), 3) if m.tridegree[0] == 3}
    expected = {
        M(a={3: 1}), M(b={3: 1}), M(c={3: 1}),
        M(b={1: 1}, a={2: 1}), M(b={1: 1, 2: 1}),
        M(c={1: 1}, a={2: 1}), M(c={1: 1}, b={2: 1}),
    }
    assert q3 == expected


def test_ehf_prime_q2_set():
    q2 = {m for m in enumerate_monomials(EHF_PRIME, 2) if m.tridegree[0] == 2}
    assert q2 == {M(a={2: 1}), M(b={2: 1}), M(c={2: 1}), M(a={1: 1}, c={1: 1})}


@pytest.mark.parametrize("k", [1, 2, 3])
def test_enumeration_counts_frozen(k):
    counts = [0] * 7
    for m in enumerate_monomials(EHF(k), 6):
        counts[m.tridegree[0]] += 1
    assert counts == FROZEN_COUNTS[k]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_character_matches_brute_force(k):
    assert character_of(EHF(k), 5).terms == brute_character(5, lambda e: ehf_ok(e, k))


def test_ehf_prime_matches_brute_force():
    assert character_of(EHF_PRIME, 6).terms == brute_character(6, ehf_prime_ok)


@pytest.mark.parametrize("p", [EHF(1), EHF(2), EHF(4), EHF_PRIME])
def test_q1_count_is_three(p):
    assert sum(1 for m in enumerate_monomials(p, 1) if m.tridegree[0] == 1) == 3


def test_character_q2():
    expected = Series3(
        2,
        {
            (0, 0, 0): 1,
            (1, -2, 1): 1, (1, 0, 1): 1, (1, 2, 1): 1,
            (2, -2, 1): 1, (2, 0, 1): 1, (2, 2, 1): 1, (2, 0, 2): 1,
        },
    )
    assert character_of(EHF(1), 2) == expected
    assert character_of(EHF(5), 0) == Series3.one(0)


def test_enumeration_order_is_deterministic():
    ms = list(enumerate_monomials(EHF(2), 5))
    assert ms == list(enumerate_monomials(EHF(2), 5))
    for x, y in zip(ms, ms[1:]):
        qx, qy = x.tridegree[0], y.tridegree[0]
        assert qx < qy or (qx == qy and lex_compare(x, y) < 0)


def test_text_form():
    assert str(M(a={1: 1}, c={1: 1})) == "f[-1]^1 e[-1]^1"
    assert str(M(b={1: 1}, a={2: 2})) == "h[-1]^1 f[-2]^2"
    assert str(M()) == "1"


# -- ordering -----------------------------------------------------------------


def test_lex_examples():
    assert lex_compare(M(c={1: 3}), M(a={1: 1}, b={2: 1})) == 1
    assert lex_compare(M(a={1: 1}, b={1: 1}), M(c={1: 1}, b={1: 1})) == 1
    m = M(a={2: 1}, c={1: 1})
    assert lex_compare(m, m) == 0


monomial = st.lists(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), max_size=4
).map(lambda t: OrderedMonomial(tuple(t)))


@settings(max_examples=200, deadline=None)
@given(monomial, monomial, monomial)
def test_lex_is_total_order(x, y, z):
    assert lex_compare(x, y) == -lex_compare(y, x)
    assert (lex_compare(x, y) == 0) == (x == y)
    if lex_compare(x, y) >= 0 and lex_compare(y, z) >= 0:
        assert lex_compare(x, z) >= 0


# -- bijection ----------------------------------------------------------------


def test_phi_examples():
    hh = M(b={1: 1, 2: 1})
    fe = M(a={1: 1}, c={2: 1})
    assert phi_forward(hh) == fe
    assert fe.tridegree == hh.tridegree == (3, 0, 2)
    assert phi_inverse(fe) == hh
    fixed = M(a={1: 1}, c={1: 1})
    assert phi_forward(fixed) == fixed
    assert phi_forward(M()) == M()


def test_phi_errors():
    with pytest.raises(NotAdmissible):
        phi_forward(M(b={1: 2}))
    with pytest.raises(NotAdmissible):
        phi_inverse(M(b={1: 1, 2: 1}))


def test_phi_termination_measure():
    """Each rewriting step removes exactly two h factors."""
    from pbwchar.monomials import _swap_step

    for m in enumerate_monomials(EHF(1), 9):
        cur = m
        while not is_admissible(cur, EHF_PRIME):
            j = next(
                i
                for i in range(1, cur.support + 1)
                if cur.a(i) + cur.b(i) + cur.b(i + 1) > 1 or cur.b(i) + cur.b(i + 1) + cur.c(i + 1) > 1
            )
            nxt = _swap_step(cur, j, forward=True)
            assert sum(t[1] for t in nxt.exps) == sum(t[1] for t in cur.exps) - 2
            cur = nxt
        assert cur == phi_forward(m)


def test_phi_exhaustive_q10():
    src = list(enumerate_monomials(EHF(1), 10))
    image = [phi_forward(m) for m in src]
    assert len(set(image)) == len(src)
    for m, p in zip(src, image):
        assert is_admissible(p, EHF_PRIME)
        assert p.tridegree == m.tridegree
        assert phi_inverse(p) == m
    assert set(image) == set(enumerate_monomials(EHF_PRIME, 10))


def test_phi_identity_on_common_monomials():
    both = set(enumerate_monomials(EHF(1), 7)) & set(enumerate_monomials(EHF_PRIME, 7))
    assert both
    for m in both:
        assert phi_forward(m) == m
        assert phi_inverse(m) == m
