"""Standard monomials of the reflection-model quotient, found by elimination.

Within a bidegree the ideal slice is a finite-dimensional subspace, so its leading
monomials (largest in the path order) are exactly the pivot columns of a row reduction
that scans columns from the largest monomial down.  Everything else is standard.
"""

from __future__ import annotations

from math import comb

from .coinvariants import ModelKind, QuotientModel, _check_bidegree, _ideal_rows, bidegrees, reflection
from .exterior import Monomial
from .linalg import ExactMatrix, pivot_columns
from .paths import Family, enumerate_paths, order_key, to_path
from .report import Report


def standard_monomials(m: QuotientModel, d) -> set:
    """Paths of the normal-form monomials in bidegree d."""
    if m.kind is not ModelKind.REFLECTION:
        raise ValueError("standard monomials are computed for the reflection model")
    _check_bidegree(m, d)
    rows, basis = _ideal_rows(m, tuple(d))
    paths = [to_path(Monomial(m.n, *k)) for k in basis]
    descending = sorted(range(len(basis)), key=lambda c: order_key(paths[c]), reverse=True)
    leading = set(pivot_columns(ExactMatrix(rows, ncols=len(basis)), descending)) if rows else set()
    return {paths[c] for c in range(len(basis)) if c not in leading}


def leading_monomials(m: QuotientModel, d) -> set:
    from .exterior import bidegree_basis

    every = {to_path(Monomial(m.n, *k)) for k in bidegree_basis(m.n, *d)}
    return every - standard_monomials(m, d)


def basis_theorem_check(n) -> Report:
    """Per bidegree, the standard monomials must be exactly the weights of nonnegative paths."""
    m = reflection(n)
    report = Report("standard-basis", {"n": n})
    predicted: dict = {}
    for p in enumerate_paths(n, Family.NONNEGATIVE):
        predicted.setdefault(p.bidegree, set()).add(p)
    total = 0
    for d in bidegrees(n):
        got = standard_monomials(m, d)
        want = predicted.get(d, set())
        ok = got == want
        total += len(got)
        report.rows.append({"i": d[0], "j": d[1], "standard": len(got), "paths": len(want),
                            "passed": ok})
        if not ok:
            report.fail({"i": d[0], "j": d[1],
                         "extra": sorted(str(p) for p in got - want),
                         "missing": sorted(str(p) for p in want - got)})
    report.extra.update(total=total, expected=comb(2 * n + 1, n))
    if total != comb(2 * n + 1, n):
        report.fail({"total": total})
    return report
