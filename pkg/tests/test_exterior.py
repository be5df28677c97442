import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fermionic.exterior import (Element, EnumerationLimitError, Monomial, RankMismatchError,
                                all_monomials, bidegree_basis, casimir, casimir_power,
                                duality_pairing_matrix, from_json, multiply, parse_text,
                                paired_basis_monomial, theta, to_json, to_text, v_basis_monomial,
                                word_element, xi)
from fermionic.linalg import rank
from fermionic.lefschetz import apply_casimir

from conftest import bubble_sign_product, random_element, random_key


def test_square_of_generator_vanishes():
    assert theta(1, 3) * theta(1, 3) == Element.zero(3)
    assert xi(2, 3) * xi(2, 3) == Element.zero(3)


def test_anticommutation():
    assert theta(2, 2) * theta(1, 2) == -(theta(1, 2) * theta(2, 2))
    assert theta(2, 2) * theta(1, 2) == word_element(2, [("t", 1), ("t", 2)], -1)
    assert theta(1, 2) * xi(2, 2) == -(xi(2, 2) * theta(1, 2))


def test_casimir_square_n2():
    # (t1 x1 + t2 x2)^2 = t1 x1 t2 x2 + t2 x2 t1 x1 = 2 t1 x1 t2 x2 = -2 t1 t2 x1 x2
    expected = Element(2, {(0b11, 0b11): -2})
    assert casimir(2) * casimir(2) == expected
    oracle = bubble_sign_product(2, (1, 1), (2, 2)) * 2
    assert expected == oracle


def test_casimir_terms():
    assert casimir(1) == theta(1, 1) * xi(1, 1)
    d3 = casimir(3)
    assert d3 == sum((theta(k, 3) * xi(k, 3) for k in range(1, 4)), Element.zero(3))
    assert len(d3) == 3 and d3.bidegrees() == {(1, 1)}


def test_casimir_is_central(rng):
    n = 5
    d = casimir(n)
    for _ in range(100):
        m = Element(n, {random_key(rng, n): 1})
        assert d * m == m * d


@pytest.mark.parametrize("n", range(1, 6))
def test_casimir_power_nonzero_exactly_up_to_n(n):
    for k in range(n + 1):
        p = casimir_power(n, k)
        assert p and p.bidegrees() == {(k, k)}
    assert not casimir_power(n, n + 1)


def test_casimir_power_examples():
    assert casimir_power(3, 4) == Element.zero(3)
    top = casimir_power(3, 3)
    assert top.bidegrees() == {(3, 3)}
    assert casimir_power(5, 0) == Element.one(5)


def test_v_basis_examples():
    assert v_basis_monomial({1}, set(), 1) == theta(1, 1)
    assert v_basis_monomial({1}, {1}, 1) == -(theta(1, 1) * xi(1, 1))
    assert paired_basis_monomial({1}, {1}, 1) == theta(1, 1) * xi(1, 1)


def test_casimir_on_v_basis_picks_up_a_sign():
    # theta_2 xi_2 theta_1 = -(xi_2 theta_2) theta_1
    lhs = casimir(2) * v_basis_monomial({1}, set(), 2)
    assert lhs == -v_basis_monomial({1, 2}, {2}, 2)
    assert lhs == paired_basis_monomial({1, 2}, {2}, 2)


def _sets(n, mask):
    return {k + 1 for k in range(n) if mask >> k & 1}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_paired_basis_transition_is_sign_free(n):
    d = casimir(n)
    for A in range(1 << n):
        for B in range(1 << n):
            lhs = d * paired_basis_monomial(_sets(n, A), _sets(n, B), n)
            rhs = Element.zero(n)
            for (C, D), c in apply_casimir(n, {(A, B): 1}).items():
                rhs = rhs + paired_basis_monomial(_sets(n, C), _sets(n, D), n).scale(c)
            assert lhs == rhs
            v = v_basis_monomial(_sets(n, A), _sets(n, B), n)
            w = paired_basis_monomial(_sets(n, A), _sets(n, B), n)
            assert v == w.scale((-1) ** bin(A & B).count("1"))


def test_v_basis_rejects_bad_indices():
    with pytest.raises(ValueError):
        v_basis_monomial({4}, set(), 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_sign_oracle_agreement(rng, n):
    for _ in range(1000):
        a, b = random_key(rng, n), random_key(rng, n)
        assert Element(n, {a: 1}) * Element(n, {b: 1}) == bubble_sign_product(n, a, b)


def test_rank_mismatch():
    with pytest.raises(RankMismatchError):
        multiply(theta(1, 2), theta(1, 3))


def test_associativity(rng):
    for n in (2, 3, 4):
        for _ in range(50):
            a, b, c = (random_element(rng, n) for _ in range(3))
            assert (a * b) * c == a * (b * c)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(0, (1 << n) - 1), st.integers(0, (1 << n) - 1),
    st.integers(0, (1 << n) - 1), st.integers(0, (1 << n) - 1))))
def test_bidegree_additivity(args):
    n, a1, b1, a2, b2 = args
    m1, m2 = Monomial(n, a1, b1), Monomial(n, a2, b2)
    prod = Element.monomial(m1) * Element.monomial(m2)
    if prod:
        (d,), = [prod.bidegrees()]
        assert d == (m1.bidegree[0] + m2.bidegree[0], m1.bidegree[1] + m2.bidegree[1])


@pytest.mark.parametrize("n", range(1, 6))
def test_delta_commutes_with_generators(n):
    d = casimir(n)
    for k in range(1, n + 1):
        assert d * theta(k, n) == theta(k, n) * d
        assert d * xi(k, n) == xi(k, n) * d


@pytest.mark.parametrize("n", range(1, 6))
def test_poincare_pairing_full_rank(n):
    for i in range(n + 1):
        for j in range(n + 1):
            P = duality_pairing_matrix(n, i, j)
            assert P.rows == P.cols == len(bidegree_basis(n, i, j))
            assert rank(P) == P.rows


def test_addition_with_negation_is_empty(rng):
    f = random_element(rng, 4, terms=6)
    assert (f + (-f)).is_zero()
    assert len(f - f) == 0


def test_monomial_validation():
    with pytest.raises(ValueError):
        Monomial.from_sets(3, (4,), ())
    m = Monomial.from_sets(4, (3, 1), (2,))
    assert m.theta_support == (1, 3) and m.xi_support == (2,)
    assert m.bidegree == (2, 1) and m.degree == 3


def test_enumeration_cap():
    with pytest.raises(EnumerationLimitError):
        next(all_monomials(13))
    assert sum(1 for _ in all_monomials(3)) == 64


# ------------------------------------------------------------------ serialization

def test_text_roundtrip(rng):
    for n in (1, 3, 5):
        for _ in range(30):
            f = random_element(rng, n, terms=4).scale(Fraction(rng.randint(1, 5), rng.randint(1, 4)))
            assert parse_text(to_text(f), n) == f


def test_text_format():
    f = Element(2, {(0b11, 0b11): -2}) + theta(1, 2)
    assert to_text(f) == "1*t1 - 2*t1 t2 x1 x2"
    assert to_text(Element.zero(3)) == "0"
    assert to_text(Element.one(2).scale(Fraction(3, 2))) == "3/2*1"


def test_text_parser_recanonicalizes():
    assert parse_text("-2*t1 t2 x1 x2 + 1*t3", 3) == Element(3, {(0b11, 0b11): -2, (0b100, 0): 1})
    assert parse_text("1*x1 t1", 1) == -(theta(1, 1) * xi(1, 1))
    assert parse_text("x2 t2 x1 t1", 2) == parse_text("t1 x1 t2 x2", 2)
    assert parse_text("t1 t1", 2) == Element.zero(2)
    assert parse_text("3 - 1/2*t2", 2) == Element.one(2).scale(3) - theta(2, 2).scale(Fraction(1, 2))


def test_json_roundtrip(rng):
    for _ in range(30):
        f = random_element(rng, 4, terms=5).scale(Fraction(2, 3))
        data = json.loads(to_json(f))
        assert data["n"] == 4 and all(set(t) == {"theta", "xi", "coeff"} for t in data["terms"])
        assert from_json(to_json(f)) == f


def test_json_accepts_any_generator_order():
    data = {"n": 3, "terms": [{"theta": [2, 1], "xi": [], "coeff": "1/2"}]}
    assert from_json(data) == (theta(1, 3) * theta(2, 3)).scale(Fraction(-1, 2))
    assert from_json(json.dumps(data)) == from_json(data)
