"""The two fermionic diagonal coinvariant quotients, one bidegree at a time.

``reflection(n)`` is the exterior algebra modulo the principal ideal of the Casimir
element (the rank-n model, valid for any irreducible reflection group of rank n).
``permutation(n)`` divides instead by the three generators of the symmetric-group
invariants of the n-dimensional permutation representation.

All generators are bihomogeneous, so the ideal splits into bidegree slices; the slice in
bidegree (i, j) is spanned by g * m for generators g and monomials m of complementary
bidegree (left multiples suffice because g * m = +-m * g).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import characters
from .exterior import (Element, bidegree_basis, casimir, coordinates, monomial_product,
                       permute, xi)
from .linalg import ExactMatrix, determinant, rank_of_rows
from .paths import Family, enumerate_paths, Step
from .qt import QTPolynomial
from .report import Report


class ModelKind(str, Enum):
    REFLECTION = "reflection"
    PERMUTATION = "permutation"


@dataclass(frozen=True)
class QuotientModel:
    kind: ModelKind
    n: int
    generators: tuple

    def __repr__(self):
        return f"QuotientModel({self.kind.value}, n={self.n})"


@lru_cache(maxsize=None)
def reflection(n) -> QuotientModel:
    if n < 1:
        raise ValueError("n must be positive")
    return QuotientModel(ModelKind.REFLECTION, n, (casimir(n),))


@lru_cache(maxsize=None)
def permutation(n) -> QuotientModel:
    if n < 1:
        raise ValueError("n must be positive")
    theta_sum = Element(n, {(1 << k, 0): 1 for k in range(n)})
    xi_sum = Element(n, {(0, 1 << k): 1 for k in range(n)})
    return QuotientModel(ModelKind.PERMUTATION, n, (theta_sum, xi_sum, casimir(n)))


def model(kind, n) -> QuotientModel:
    return reflection(n) if ModelKind(kind) is ModelKind.REFLECTION else permutation(n)


def _check_bidegree(m, d):
    i, j = d
    if not (0 <= i <= m.n and 0 <= j <= m.n):
        raise ValueError(f"bidegree {d} out of range for n={m.n}")


def _ideal_rows(m: QuotientModel, d):
    i, j = d
    basis = bidegree_basis(m.n, i, j)
    index = {k: p for p, k in enumerate(basis)}
    rows = []
    for g in m.generators:
        (gi, gj), = g.bidegrees()
        if gi > i or gj > j:
            continue
        for key in bidegree_basis(m.n, i - gi, j - gj):
            row = [0] * len(basis)
            for gk, c in g.items():
                prod = monomial_product(gk, key)
                if prod is not None:
                    row[index[prod[1]]] += prod[0] * c
            if any(row):
                rows.append(row)
    return rows, basis


def ideal_piece_basis(m: QuotientModel, d) -> ExactMatrix:
    """Rows spanning the bidegree-d slice of the ideal, in the monomial basis of d."""
    _check_bidegree(m, d)
    rows, basis = _ideal_rows(m, d)
    return ExactMatrix(rows, ncols=len(basis))


@lru_cache(maxsize=None)
def quotient_dimension(m: QuotientModel, d) -> int:
    _check_bidegree(m, d)
    rows, basis = _ideal_rows(m, tuple(d))
    return len(basis) - (rank_of_rows(rows, len(basis)) if rows else 0)


def _rank_n_piece(n, i, j):
    if i < 0 or j < 0 or i + j > n:
        return 0
    return comb(n, i) * comb(n, j) - (comb(n, i - 1) * comb(n, j - 1) if i and j else 0)


def closed_form_dimension(m: QuotientModel, d) -> int:
    """Piece dimensions from the hook/exterior-power formula.

    The permutation model in rank n agrees with the reflection model in rank n - 1:
    its pieces are hook Kronecker differences whose dimensions use binomials in n - 1.
    """
    i, j = d
    if m.kind is ModelKind.REFLECTION:
        return _rank_n_piece(m.n, i, j)
    return _rank_n_piece(m.n - 1, i, j)


def bidegrees(n):
    return [(i, j) for i in range(n + 1) for j in range(n + 1)]


def hilbert_series(m: QuotientModel) -> QTPolynomial:
    """Hilbert series from exact ranks of the ideal slices."""
    return QTPolynomial({d: quotient_dimension(m, d) for d in bidegrees(m.n)})


def closed_form_hilbert(m: QuotientModel) -> QTPolynomial:
    return QTPolynomial({d: closed_form_dimension(m, d) for d in bidegrees(m.n)})


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def narayana(n, k):
    if n <= 0 or not 1 <= k <= n:
        return 0
    return comb(n, k) * comb(n, k - 1) // n


def narayana_boundary(n, kind=ModelKind.REFLECTION, oracle=False) -> list[int]:
    """Dimensions along the top anti-diagonal.

    Reflection model: pieces (k, n - k) for k = 0..n.  Permutation model: pieces
    (k - 1, n - k) for k = 1..n.
    """
    m = model(kind, n)
    dim = quotient_dimension if oracle else closed_form_dimension
    if m.kind is ModelKind.REFLECTION:
        return [dim(m, (k, n - k)) for k in range(n + 1)]
    return [dim(m, (k - 1, n - k)) for k in range(1, n + 1)]


def dims_table(m: QuotientModel, oracle=True) -> list[dict]:
    rows = []
    for d in bidegrees(m.n):
        closed = closed_form_dimension(m, d)
        row = {"i": d[0], "j": d[1], "closed": closed}
        if oracle:
            got = quotient_dimension(m, d)
            row.update(oracle=got, match=got == closed)
        rows.append(row)
    return rows


def dimension_check(m: QuotientModel, oracle=True) -> Report:
    n = m.n
    report = Report("dims", {"model": m.kind.value, "n": n, "oracle": oracle})
    report.rows = dims_table(m, oracle)
    for row in report.rows:
        if oracle and not row["match"]:
            report.fail(row)
    total = sum(r["closed"] for r in report.rows)
    expected = comb(2 * n + 1, n) if m.kind is ModelKind.REFLECTION else comb(2 * n - 1, n)
    report.extra["total"] = total
    if oracle:
        report.extra["oracle_total"] = sum(r["oracle"] for r in report.rows)
        if report.extra["oracle_total"] != expected:
            report.fail({"oracle_total": report.extra["oracle_total"], "expected": expected})
    if total != expected:
        report.fail({"total": total, "expected": expected})
    return report


def invariant_dimension(n, d) -> int:
    """Dimension of the S_n-invariants of bidegree d (diagonal permutation action), by Reynolds averaging."""
    return characters.inner_product(lambda w: characters.exterior_bidegree_character(n, d, w),
                                    lambda w: 1, n)


def quotient_character_oracle(n, d, w) -> Fraction:
    """Trace of a permutation on the (i, j) piece of the permutation quotient, by linear algebra.

    ``w`` is a permutation in one-line notation (tuple, w[k-1] = image of k).  The trace on
    the quotient is the trace on the whole piece minus the trace on the (stable) ideal slice.
    """
    m = permutation(n)
    i, j = d
    basis = bidegree_basis(n, i, j)
    total = Fraction(0)
    for key in basis:
        total += permute(Element(n, {key: 1}), w).coefficient(key)
    rows, _ = _ideal_rows(m, d)
    if not rows:
        return total
    from .linalg import rref
    R, piv = rref(ExactMatrix(rows, ncols=len(basis)))
    ideal = [R.row(k) for k in range(len(piv))]
    # the image of each ideal basis vector, written in that basis via its pivot coordinates
    trace_ideal = Fraction(0)
    for k, vec in enumerate(ideal):
        f = Element(n, {basis[c]: x for c, x in enumerate(vec) if x})
        image = coordinates(permute(f, w), basis)
        trace_ideal += image[piv[k]]
    return total - trace_ideal


# ------------------------------------------------------------ primed basis

def primed_generator(i, n) -> Element:
    """xi'_i = xi_i + (xi_2 + ... + xi_n)."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} not in 1..{n}")
    out = xi(i, n)
    for j in range(2, n + 1):
        out = out + xi(j, n)
    return out


def primed_weight(p) -> Element:
    n = p.n
    out = Element.one(n)
    for k, s in enumerate(p.steps, start=1):
        if s is Step.THETA:
            out = out * Element(n, {(1 << (k - 1), 0): 1})
        elif s is Step.XI:
            out = out * primed_generator(k, n)
        elif s is Step.DOWN:
            out = out * Element(n, {(1 << (k - 1), 0): 1}) * primed_generator(k, n)
    return out


def primed_transition_matrix(n) -> ExactMatrix:
    """Coefficients of xi_2', ..., xi_n' on xi_2, ..., xi_n (row i is xi'_i)."""
    rows = []
    for i in range(2, n + 1):
        g = primed_generator(i, n)
        rows.append([g.coefficient((0, 1 << (j - 1))) for j in range(2, n + 1)])
    return ExactMatrix(rows, ncols=n - 1)


def primed_basis_check(n) -> Report:
    """Primed path weights over strictly positive paths must project to a basis of each piece."""
    m = permutation(n)
    report = Report("primed-basis", {"n": n})
    by_bidegree: dict = {}
    for p in enumerate_paths(n, Family.STRICTLY_POSITIVE):
        by_bidegree.setdefault(p.bidegree, []).append(p)
    count = 0
    for d in bidegrees(n):
        paths = by_bidegree.get(d, [])
        rows, basis = _ideal_rows(m, d)
        ideal_rank = rank_of_rows(rows, len(basis)) if rows else 0
        vecs = [coordinates(primed_weight(p), basis) for p in paths]
        joint = rank_of_rows(rows + vecs, len(basis)) if rows or vecs else 0
        independent = joint == ideal_rank + len(vecs)
        spans = ideal_rank + len(vecs) == len(basis)
        count += len(vecs)
        report.rows.append({"i": d[0], "j": d[1], "paths": len(vecs), "independent": independent,
                            "spanning": spans})
        if not (independent and spans):
            report.fail({"i": d[0], "j": d[1], "paths": [str(p) for p in paths]})
    det = determinant(primed_transition_matrix(n)) if n >= 2 else Fraction(1)
    report.extra.update(total=count, expected=comb(2 * n - 1, n),
                        transition_determinant=str(det))
    if count != comb(2 * n - 1, n):
        report.fail({"total": count})
    if n >= 2 and det != n:
        report.fail({"transition_determinant": str(det)})
    return report
