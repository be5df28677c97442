from fractions import Fraction
from math import comb

import pytest

from fermionic.characters import cycle_types, quotient_character
from fermionic.coinvariants import (ModelKind, bidegrees, catalan, closed_form_hilbert,
                                    dimension_check, hilbert_series,
                                    ideal_piece_basis, invariant_dimension, narayana,
                                    narayana_boundary, permutation, primed_basis_check,
                                    primed_generator, primed_transition_matrix, primed_weight,
                                    quotient_character_oracle, quotient_dimension, reflection)
from fermionic.exterior import xi
from fermionic.linalg import ExactMatrix, determinant, rank
from fermionic.paths import Family, Path, enumerate_paths
from fermionic.qt import QTPolynomial

q, t = QTPolynomial.q(), QTPolynomial.t()


def test_models():
    assert reflection(3).kind is ModelKind.REFLECTION
    assert len(reflection(3).generators) == 1
    assert len(permutation(3).generators) == 3
    with pytest.raises(ValueError):
        reflection(0)


def test_ideal_piece_examples():
    assert ideal_piece_basis(reflection(2), (1, 1)) == ExactMatrix([[1, 0, 0, 1]])
    assert rank(ideal_piece_basis(reflection(2), (2, 2))) == 1
    assert ideal_piece_basis(permutation(2), (1, 0)) == ExactMatrix([[1, 1]])
    assert ideal_piece_basis(reflection(2), (0, 0)).rows == 0


def test_bidegree_out_of_range():
    with pytest.raises(ValueError):
        quotient_dimension(reflection(2), (3, 0))


def test_dimension_examples():
    assert quotient_dimension(reflection(2), (1, 1)) == 3
    assert quotient_dimension(permutation(3), (1, 1)) == 3
    for n in (2, 3, 4):
        for i, j in bidegrees(n):
            if i + j > n:
                assert quotient_dimension(reflection(n), (i, j)) == 0


def test_hilbert_examples():
    assert hilbert_series(reflection(1)) == 1 + q + t
    assert hilbert_series(reflection(2)) == 1 + 2 * q + 2 * t + q * q + 3 * q * t + t * t
    assert hilbert_series(permutation(2)) == 1 + q + t


@pytest.mark.parametrize("n", range(1, 6))
def test_oracle_equals_closed_form(n):
    for m in (reflection(n), permutation(n)):
        assert dimension_check(m, oracle=True).passed
        H = hilbert_series(m)
        assert H == closed_form_hilbert(m)
        assert H == H.swap()
    assert hilbert_series(reflection(n))(1, 1) == comb(2 * n + 1, n)
    assert hilbert_series(permutation(n))(1, 1) == comb(2 * n - 1, n)


@pytest.mark.parametrize("n", range(1, 13))
def test_closed_form_totals(n):
    assert closed_form_hilbert(reflection(n))(1, 1) == comb(2 * n + 1, n)
    assert closed_form_hilbert(permutation(n))(1, 1) == comb(2 * n - 1, n)


def test_narayana_examples():
    assert narayana_boundary(2) == [1, 3, 1]
    assert narayana_boundary(1) == [1, 1]
    assert narayana_boundary(4) == [1, 10, 20, 10, 1]
    assert sum(narayana_boundary(4)) == catalan(5) == 42
    assert narayana_boundary(3, oracle=True) == [1, 6, 6, 1]


@pytest.mark.parametrize("n", range(1, 6))
def test_narayana_boundary_oracle(n):
    assert narayana_boundary(n, oracle=True) == [narayana(n + 1, k + 1) for k in range(n + 1)]
    perm = narayana_boundary(n, ModelKind.PERMUTATION, oracle=True)
    assert perm == [narayana(n, k) for k in range(1, n + 1)]
    assert sum(perm) == catalan(n)


def test_invariant_dimension():
    assert invariant_dimension(3, (0, 0)) == 1
    assert invariant_dimension(3, (1, 0)) == 1
    assert invariant_dimension(3, (1, 1)) == 2


def test_primed_generators():
    assert primed_generator(1, 3) == xi(1, 3) + xi(2, 3) + xi(3, 3)
    assert primed_generator(2, 3) == xi(2, 3).scale(2) + xi(3, 3)
    with pytest.raises(ValueError):
        primed_generator(4, 3)


def test_primed_n2():
    strict = sorted(str(p) for p in enumerate_paths(2, Family.STRICTLY_POSITIVE))
    assert strict == ["U Ht", "U Hx", "U U"]
    assert primed_weight(Path.parse("U Hx")) == primed_generator(2, 2)
    report = primed_basis_check(2)
    assert report.passed and report.extra["total"] == 3


@pytest.mark.parametrize("n", range(2, 9))
def test_transition_determinant(n):
    assert determinant(primed_transition_matrix(n)) == n


@pytest.mark.parametrize("n", range(1, 5))
def test_primed_basis(n):
    assert primed_basis_check(n).passed


@pytest.mark.parametrize("n", [2, 3, 4])
def test_quotient_character_oracle(n):
    for ct in cycle_types(n):
        w = []
        start = 1
        for part in ct.parts:
            cyc = list(range(start, start + part))
            w += cyc[1:] + cyc[:1]
            start += part
        for d in bidegrees(n):
            assert quotient_character_oracle(n, d, tuple(w)) == quotient_character(n, d, ct.parts)


def test_quotient_character_identity_is_dimension():
    assert quotient_character_oracle(3, (1, 1), (1, 2, 3)) == Fraction(3)
