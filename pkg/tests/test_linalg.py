from fractions import Fraction
from itertools import permutations

import pytest

from fermionic.linalg import (ExactMatrix, determinant, is_invertible, pivot_columns, rank,
                              rank_of_rows, rref)

M4_13 = [[1, 1, 1, 0], [1, 1, 0, 1], [1, 0, 1, 1], [0, 1, 1, 1]]


def leibniz_det(rows):
    n = len(rows)
    total = Fraction(0)
    for p in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])
        term = Fraction(-1 if inv % 2 else 1)
        for r in range(n):
            term *= rows[r][p[r]]
        total += term
    return total


def random_matrix(rng, r, c, density=0.6):
    return ExactMatrix([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) if rng.random() < density else 0
                         for _ in range(c)] for _ in range(r)], ncols=c)


def test_rank_examples():
    assert rank(ExactMatrix.identity(5)) == 5
    assert rank(ExactMatrix.zeros(3, 4)) == 0
    assert rank(ExactMatrix(M4_13)) == 4
    assert rank(ExactMatrix([[1, 2], [2, 4]])) == 1


def test_singular_example_has_zero_determinant():
    assert determinant(ExactMatrix([[1, 2], [2, 4]])) == 0
    assert not is_invertible(ExactMatrix([[1, 2], [2, 4]]))


def test_determinant_examples():
    assert determinant(ExactMatrix.identity(3)) == 1
    # regression constant, agrees with the cofactor oracle
    assert determinant(ExactMatrix(M4_13)) == -3
    assert leibniz_det(M4_13) == -3
    assert determinant(ExactMatrix([[Fraction(1, 2), 1], [1, 3]])) == Fraction(1, 2)


def test_determinant_against_leibniz(rng):
    for _ in range(60):
        k = rng.randint(1, 5)
        M = random_matrix(rng, k, k)
        assert determinant(M) == leibniz_det(M.tolist())


def test_pivot_examples():
    assert pivot_columns(ExactMatrix([[1, 1], [0, 1]])) == [0, 1]
    assert rank(ExactMatrix([[0, 1], [0, 2]])) == 1
    assert pivot_columns(ExactMatrix([[0, 1], [0, 2]])) == [1]


def test_column_order_changes_pivots():
    M = ExactMatrix([[1, 1, 0]])
    assert pivot_columns(M) == [0]
    assert pivot_columns(M, [1, 0, 2]) == [1]


def test_rref_example():
    R, piv = rref(ExactMatrix([[2, 4, 2], [1, 3, 2]]))
    assert piv == [0, 1]
    assert R == ExactMatrix([[1, 0, -1], [0, 1, 1]])


def test_rref_keeps_row_count():
    R, piv = rref(ExactMatrix([[1, 2], [2, 4], [3, 6]]))
    assert piv == [0]
    assert R.shape == (3, 2)
    assert R.row(1) == (0, 0)


def test_invalid_column_order():
    with pytest.raises(ValueError):
        pivot_columns(ExactMatrix.identity(2), [0, 0])
    with pytest.raises(ValueError):
        rref(ExactMatrix.identity(2), [0, 1, 2])


def test_rank_equals_transpose_rank(rng):
    for _ in range(100):
        M = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7), density=0.4)
        assert rank(M) == rank(M.T)


def test_rref_is_idempotent(rng):
    for _ in range(60):
        M = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6), density=0.5)
        order = list(range(M.cols))
        rng.shuffle(order)
        R, piv = rref(M, order)
        R2, piv2 = rref(R, order)
        assert R2 == R and piv2 == piv
        assert len(piv) == rank(M)


def test_rref_rows_span_the_row_space(rng):
    for _ in range(40):
        M = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        R, _ = rref(M)
        assert rank(M.vstack(R)) == rank(M) == rank(R)


def test_determinant_nonzero_iff_full_rank(rng):
    for _ in range(100):
        k = rng.randint(1, 6)
        M = random_matrix(rng, k, k, density=0.35)
        assert (determinant(M) != 0) == (rank(M) == k) == is_invertible(M)


def test_rank_of_rows_matches_rank(rng):
    for _ in range(30):
        M = random_matrix(rng, 4, 5)
        assert rank_of_rows(M.tolist(), 5) == rank(M)


def test_matmul_and_identity(rng):
    M = random_matrix(rng, 3, 4)
    assert ExactMatrix.identity(3) @ M == M
    assert M @ ExactMatrix.identity(4) == M
    assert (M @ M.T).T == M @ M.T


def test_csv_roundtrip(rng):
    M = random_matrix(rng, 3, 4)
    text = M.to_csv()
    assert ExactMatrix.from_csv(text) == M
    assert "/" in ExactMatrix([[Fraction(1, 3)]]).to_csv()


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])


def test_determinant_needs_square():
    with pytest.raises(ValueError):
        determinant(ExactMatrix.zeros(2, 3))
