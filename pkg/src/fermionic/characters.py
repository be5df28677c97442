"""Symmetric group characters for the bigraded pieces of the permutation-model quotient.

Class functions are evaluated on cycle types.  Irreducible characters come from the
Murnaghan-Nakayama rule on beta-sets; inner products are class sums divided by n!.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .qt import QTPolynomial, qt_analog


def partitions(n: int, max_part=None) -> list[tuple[int, ...]]:
    """Partitions of n, weakly decreasing parts, in reverse-lex order ((n) first)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def conjugate(la):
    return tuple(sum(1 for p in la if p > k) for k in range(la[0])) if la else ()


def hook(n, k):
    """The hook (n - k, 1^k)."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"hook index {k} out of range for n={n}")
    return (n - k,) + (1,) * k


def centralizer_order(mu) -> int:
    z = 1
    for m in set(mu):
        a = mu.count(m)
        z *= m ** a * factorial(a)
    return z


@dataclass(frozen=True)
class CycleType:
    parts: tuple
    class_size: int

    @property
    def n(self):
        return sum(self.parts)

    @property
    def cycles(self):
        return len(self.parts)


def cycle_type(parts) -> CycleType:
    parts = tuple(sorted(parts, reverse=True))
    n = sum(parts)
    return CycleType(parts, factorial(n) // centralizer_order(parts))


@lru_cache(maxsize=None)
def cycle_types(n) -> tuple[CycleType, ...]:
    return tuple(cycle_type(mu) for mu in partitions(n))


def _as_parts(w):
    return w.parts if isinstance(w, CycleType) else tuple(sorted(w, reverse=True))


@lru_cache(maxsize=None)
def _mn(la: tuple, mu: tuple) -> int:
    if not mu:
        return 1 if not la else 0
    r, rest = mu[0], mu[1:]
    ell = len(la)
    beta = [la[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in occupied:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((occupied - {b}) | {nb}, reverse=True)
        new_la = tuple(x - (ell - 1 - i) for i, x in enumerate(new_beta))
        new_la = tuple(p for p in new_la if p > 0)
        total += (-1) ** height * _mn(new_la, rest)
    return total


def irreducible_character(la, w) -> int:
    """chi^la evaluated at the class ``w`` (CycleType or list of cycle lengths)."""
    mu = _as_parts(w)
    la = tuple(la)
    if sum(la) != sum(mu):
        raise ValueError("partition sizes differ")
    return _mn(la, mu)


def hook_character(n, k, w) -> int:
    return irreducible_character(hook(n, k), w)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def permutation_exterior_poly(parts: tuple) -> tuple[int, ...]:
    """Coefficients of det(1 + q P) = prod over cycles of length m of (1 - (-q)^m)."""
    poly = [1]
    for m in parts:
        f = [0] * (m + 1)
        f[0] = 1
        f[m] = -((-1) ** m)
        poly = _poly_mul(poly, f)
    return tuple(poly)


@lru_cache(maxsize=None)
def reflection_exterior_poly(parts: tuple) -> tuple[int, ...]:
    """Exterior-power traces on the reflection representation: the above divided by 1 + q."""
    p = list(permutation_exterior_poly(parts))
    out = []
    carry = 0
    for c in p[:-1]:
        carry = c - carry
        out.append(carry)
    if p[-1] - carry != 0:
        raise ArithmeticError("1 + q does not divide the exterior polynomial")
    return tuple(out)


def _coeff(poly, k):
    return poly[k] if 0 <= k < len(poly) else 0


def exterior_bidegree_character(n, d, w) -> int:
    """Trace of w on the bidegree-(i, j) piece for the permutation representation."""
    i, j = d
    poly = permutation_exterior_poly(_as_parts(w))
    return _coeff(poly, i) * _coeff(poly, j)


def reflection_bidegree_character(n, d, w) -> int:
    i, j = d
    poly = reflection_exterior_poly(_as_parts(w))
    return _coeff(poly, i) * _coeff(poly, j)


def quotient_character(n, d, w) -> int:
    """Class function of the (i, j) piece of the permutation-model quotient.

    Equal to the reflection-representation character of bidegree (i, j) minus that of
    (i - 1, j - 1), and zero once i + j >= n.
    """
    i, j = d
    if i < 0 or j < 0 or i + j >= n:
        return 0
    return reflection_bidegree_character(n, (i, j), w) - reflection_bidegree_character(n, (i - 1, j - 1), w)


def inner_product(f, g, n) -> int:
    """<f, g> for class functions given as callables on CycleType."""
    s = sum(c.class_size * f(c) * g(c) for c in cycle_types(n))
    q, r = divmod(s, factorial(n))
    if r:
        raise ArithmeticError("inner product is not an integer")
    return q


def kronecker_multiplicity(la, mu, nu) -> int:
    """Multiplicity of s_nu in the Kronecker product s_la * s_mu."""
    n = sum(la)
    if sum(mu) != n or sum(nu) != n:
        raise ValueError("partitions of different sizes")
    s = sum(c.class_size * irreducible_character(la, c) * irreducible_character(mu, c)
            * irreducible_character(nu, c) for c in cycle_types(n))
    return s // factorial(n)


def rosas_hook_kronecker(n, a, b, c) -> int:
    """Closed-form multiplicity of s_(n-c,1^c) in s_(n-a,1^a) * s_(n-b,1^b).

    Valid for 0 < a, b < n and 0 < c < n - 1 only.
    """
    if not (0 < a < n and 0 < b < n and 0 < c < n - 1):
        raise ValueError(f"parameters (n={n}, a={a}, b={b}, c={c}) outside the valid box")
    return int(abs(b - a) <= c) * int(c <= a + b <= 2 * n - c - 2)


def graded_multiplicity(n, la) -> QTPolynomial:
    """Sum over (i, j) of <character of the (i, j) quotient piece, chi^la> q^i t^j."""
    coeffs = {}
    for i in range(n):
        for j in range(n - i):
            m = inner_product(lambda w: quotient_character(n, (i, j), w),
                              lambda w: irreducible_character(la, w), n)
            if m:
                coeffs[(i, j)] = m
    return QTPolynomial(coeffs)


def graded_hook_multiplicity(n, k) -> QTPolynomial:
    return graded_multiplicity(n, hook(n, k))


def hook_multiplicity_closed_form(n, k) -> QTPolynomial:
    if not 0 <= k <= n - 1:
        raise ValueError(f"hook index {k} out of range for n={n}")
    if k == 0:
        return QTPolynomial.constant(1)
    if k == n - 1:
        return qt_analog(n)
    return qt_analog(k + 1) + QTPolynomial({(1, 1): 1}) * qt_analog(k)


def full_graded_frobenius(n) -> dict[tuple, QTPolynomial]:
    """Graded multiplicity of every irreducible, keyed by partition in reverse-lex order."""
    return {la: graded_multiplicity(n, la) for la in partitions(n)}


def dimension(la) -> int:
    return irreducible_character(la, (1,) * sum(la))
