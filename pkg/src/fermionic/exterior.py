"""Exterior algebra on two sets of anticommuting generators theta_1..theta_n, xi_1..xi_n.

Monomials are stored in the canonical form

    theta_{a_1} ... theta_{a_r} xi_{b_1} ... xi_{b_s},   a's and b's increasing,

always with coefficient +1.  Supports are bitmasks: bit ``k - 1`` stands for index ``k``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

MAX_ENUMERATION_N = 12


class RankMismatchError(ValueError):
    pass


class EnumerationLimitError(ValueError):
    pass


def check_enumeration_cap(n, override=False):
    """Refuse to enumerate all 4**n monomials past the desk-scale ceiling."""
    if n > MAX_ENUMERATION_N and not override:
        raise EnumerationLimitError(
            f"n={n} exceeds the enumeration cap {MAX_ENUMERATION_N}; pass override=True"
        )


def popcount(x: int) -> int:
    return x.bit_count()


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    k = 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def subsets(n: int, k: int) -> list[int]:
    """All k-subsets of {1..n} as bitmasks, in colex order (= increasing mask value)."""
    if k < 0 or k > n:
        return []
    return sorted(sum(1 << i for i in c) for c in combinations(range(n), k))


def _inversions(a: int, b: int) -> int:
    """Number of pairs (x in a, y in b) with x > y."""
    count = 0
    while b:
        low = b & -b
        count += popcount(a & ~((low << 1) - 1))
        b ^= low
    return count


def monomial_product(a: tuple[int, int], b: tuple[int, int]):
    """Product of two canonical monomials given as (theta_mask, xi_mask).

    Returns ``(sign, (theta_mask, xi_mask))`` or ``None`` when the product vanishes.
    """
    ta, xa = a
    tb, xb = b
    if ta & tb or xa & xb:
        return None
    # theta_A xi_B theta_C xi_D: move theta_C left past xi_B, then merge each block
    parity = popcount(xa) * popcount(tb) + _inversions(ta, tb) + _inversions(xa, xb)
    return (-1 if parity & 1 else 1), (ta | tb, xa | xb)


@dataclass(frozen=True)
class Monomial:
    n: int
    theta: int
    xi: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.n < 0 or self.theta & ~full or self.xi & ~full:
            raise ValueError(f"support out of range for n={self.n}")

    @classmethod
    def from_sets(cls, n, theta_support=(), xi_support=()):
        for i in (*theta_support, *xi_support):
            if not 1 <= i <= n:
                raise ValueError(f"index {i} not in 1..{n}")
        return cls(n, mask_of(theta_support), mask_of(xi_support))

    @property
    def key(self):
        return (self.theta, self.xi)

    @property
    def theta_support(self) -> tuple[int, ...]:
        return indices_of(self.theta)

    @property
    def xi_support(self) -> tuple[int, ...]:
        return indices_of(self.xi)

    @property
    def bidegree(self) -> tuple[int, int]:
        return popcount(self.theta), popcount(self.xi)

    @property
    def degree(self) -> int:
        return popcount(self.theta) + popcount(self.xi)

    def generators(self) -> list[tuple[str, int]]:
        return [("t", i) for i in self.theta_support] + [("x", i) for i in self.xi_support]

    def __str__(self):
        gens = self.generators()
        return " ".join(f"{c}{i}" for c, i in gens) if gens else "1"


def bidegree_basis(n: int, i: int, j: int) -> list[tuple[int, int]]:
    """Monomial keys of bidegree (i, j): theta support in colex order, then xi support."""
    return [(a, b) for a in subsets(n, i) for b in subsets(n, j)]


def all_monomials(n: int, override=False) -> Iterator[Monomial]:
    check_enumeration_cap(n, override)
    for a in range(1 << n):
        for b in range(1 << n):
            yield Monomial(n, a, b)


def _coerce(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Element:
    """A finite Q-linear combination of canonical monomials.  Immutable."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms=None):
        if n < 0:
            raise ValueError("rank must be nonnegative")
        self.n = n
        clean = {}
        if terms:
            for k, c in terms.items():
                if isinstance(k, Monomial):
                    if k.n != n:
                        raise RankMismatchError(f"monomial of rank {k.n} in element of rank {n}")
                    k = k.key
                c = _coerce(c)
                if c:
                    clean[k] = clean.get(k, 0) + c
                    if not clean[k]:
                        del clean[k]
        self._terms = clean

    @classmethod
    def _raw(cls, n, terms):
        # trusted constructor: keys canonical, coefficients nonzero Fractions
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls._raw(n, {(0, 0): Fraction(1)})

    @classmethod
    def monomial(cls, m: Monomial, coeff=1):
        return cls(m.n, {m.key: coeff})

    def items(self):
        return self._terms.items()

    def terms(self) -> dict[Monomial, Fraction]:
        return {Monomial(self.n, a, b): c for (a, b), c in self._terms.items()}

    def coefficient(self, m) -> Fraction:
        k = m.key if isinstance(m, Monomial) else m
        return self._terms.get(k, Fraction(0))

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(popcount(a), popcount(b)) for a, b in self._terms}

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Element(self.n, {(0, 0): other})
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def _check(self, other):
        if other.n != self.n:
            raise RankMismatchError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Element(self.n, {(0, 0): other})
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Element._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return Element.zero(self.n)
        return Element._raw(self.n, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Element.one(self.n)
        for _ in range(k):
            result = multiply(result, self)
        return result

    def __repr__(self):
        return f"Element({self.n}, {to_text(self)!r})"

    def __str__(self):
        return to_text(self)


def multiply(a: Element, b: Element) -> Element:
    if a.n != b.n:
        raise RankMismatchError(f"rank mismatch: {a.n} vs {b.n}")
    out: dict = {}
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            prod = monomial_product(ka, kb)
            if prod is None:
                continue
            sign, k = prod
            s = out.get(k, 0) + sign * ca * cb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return Element._raw(a.n, out)


def theta(i: int, n: int) -> Element:
    return Element.monomial(Monomial.from_sets(n, (i,), ()))


def xi(i: int, n: int) -> Element:
    return Element.monomial(Monomial.from_sets(n, (), (i,)))


def casimir(n: int) -> Element:
    """The invariant sum theta_1 xi_1 + ... + theta_n xi_n."""
    if n < 1:
        raise ValueError("n must be positive")
    return Element._raw(n, {(1 << k, 1 << k): Fraction(1) for k in range(n)})


def casimir_power(n: int, k: int) -> Element:
    if k < 0:
        raise ValueError("negative power")
    return casimir(n) ** k


def canonicalize(n: int, word) -> tuple[int, tuple[int, int]] | None:
    """Sort a word of generators ('t', i) / ('x', i) into canonical order.

    Returns (sign, key) or None if a generator repeats.  Works by bubble sort so that
    every adjacent swap contributes one sign flip.
    """
    word = list(word)
    for kind, i in word:
        if kind not in ("t", "x") or not 1 <= i <= n:
            raise ValueError(f"bad generator {kind}{i} for n={n}")
    rank = lambda g: (0 if g[0] == "t" else 1, g[1])
    sign = 1
    for end in range(len(word) - 1, 0, -1):
        for p in range(end):
            if rank(word[p]) > rank(word[p + 1]):
                word[p], word[p + 1] = word[p + 1], word[p]
                sign = -sign
    for p in range(len(word) - 1):
        if word[p] == word[p + 1]:
            return None
    t = mask_of(i for kind, i in word if kind == "t")
    x = mask_of(i for kind, i in word if kind == "x")
    return sign, (t, x)


def word_element(n: int, word, coeff=1) -> Element:
    res = canonicalize(n, word)
    if res is None:
        return Element.zero(n)
    sign, key = res
    return Element(n, {key: sign * _coerce(coeff)})


def _support_word(A, B, n, pair):
    A, B = set(A), set(B)
    for i in A | B:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} not in 1..{n}")
    word = []
    for c in sorted(A & B):
        word += pair(c)
    word += [("t", a) for a in sorted(A - B)]
    word += [("x", b) for b in sorted(B - A)]
    return word


def v_basis_monomial(A, B, n: int) -> Element:
    """xi_c theta_c (over c in A & B) * theta_{A - B} * xi_{B - A}, rewritten canonically."""
    return word_element(n, _support_word(A, B, n, lambda c: [("x", c), ("t", c)]))


def paired_basis_monomial(A, B, n: int) -> Element:
    """theta_c xi_c (over c in A & B) * theta_{A - B} * xi_{B - A}.

    Equals (-1)**|A & B| * v(A, B).  On this basis multiplication by the Casimir element
    is exactly sign-free: delta * w(A, B) = sum over c outside A | B of w(A + c, B + c).
    On v(A, B) the same rule holds only up to a factor -1 per application.
    """
    return word_element(n, _support_word(A, B, n, lambda c: [("t", c), ("x", c)]))


def permute(f: Element, w) -> Element:
    """Diagonal action w.theta_i = theta_{w(i)}, w.xi_i = xi_{w(i)}; ``w`` maps 1..n (tuple, w[i-1])."""
    n = f.n
    out = Element.zero(n)
    for (a, b), c in f.items():
        word = [("t", w[i - 1]) for i in indices_of(a)] + [("x", w[i - 1]) for i in indices_of(b)]
        out = out + word_element(n, word, c)
    return out


def duality_pairing_matrix(n: int, i: int, j: int):
    """Matrix of the pairing of bidegree (i, j) against (n - i, n - j) into the top piece."""
    from .linalg import ExactMatrix

    top = ((1 << n) - 1, (1 << n) - 1)
    rows = []
    for ka in bidegree_basis(n, i, j):
        row = []
        for kb in bidegree_basis(n, n - i, n - j):
            prod = monomial_product(ka, kb)
            row.append(0 if prod is None or prod[1] != top else prod[0])
        rows.append(row)
    return ExactMatrix(rows, ncols=len(bidegree_basis(n, n - i, n - j)))


def coordinates(f: Element, basis: list[tuple[int, int]]) -> list[Fraction]:
    index = {k: p for p, k in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for k, c in f.items():
        if k not in index:
            raise ValueError("element has terms outside the given basis")
        vec[index[k]] = c
    return vec


# ---------------------------------------------------------------- serialization

def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _sorted_keys(f: Element):
    # total degree, then bidegree, then supports; deterministic
    return sorted(f._terms, key=lambda k: (popcount(k[0]) + popcount(k[1]), -popcount(k[0]),
                                           indices_of(k[0]), indices_of(k[1])))


def to_text(f: Element) -> str:
    if not f:
        return "0"
    parts = []
    for k in _sorted_keys(f):
        c = f._terms[k]
        body = str(Monomial(f.n, *k))
        s = f"{_coeff_str(abs(c))}*{body}"
        if not parts:
            parts.append(s if c > 0 else "-" + s)
        else:
            parts.append(("+ " if c > 0 else "- ") + s)
    return " ".join(parts)


_GEN = re.compile(r"([tx])(\d+)")


def parse_text(s: str, n: int) -> Element:
    """Parse ``-2*t1 t2 x1 x2 + 1*t3``; generators may appear in any order."""
    s = s.strip()
    if s == "0" or not s:
        return Element.zero(n)
    # split on +/- that start a new term (not inside a fraction)
    pieces = re.split(r"\s*([+-])\s*", s)
    if pieces[0] == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    if len(pieces) % 2:
        raise ValueError(f"cannot parse element {s!r}")
    out = Element.zero(n)
    for sign, body in zip(pieces[::2], pieces[1::2]):
        body = body.strip()
        if "*" in body:
            coeff_s, gens_s = body.split("*", 1)
            coeff = Fraction(coeff_s.strip())
        elif _GEN.match(body):
            coeff, gens_s = Fraction(1), body
        else:
            coeff, gens_s = Fraction(body), "1"
        gens_s = gens_s.strip()
        word = []
        if gens_s != "1":
            for tok in gens_s.split():
                m = _GEN.fullmatch(tok)
                if not m:
                    raise ValueError(f"bad generator token {tok!r}")
                word.append((m.group(1), int(m.group(2))))
        if sign == "-":
            coeff = -coeff
        out = out + word_element(n, word, coeff)
    return out


def to_json(f: Element) -> str:
    terms = []
    for k in _sorted_keys(f):
        terms.append({"theta": list(indices_of(k[0])), "xi": list(indices_of(k[1])),
                      "coeff": _coeff_str(f._terms[k])})
    return json.dumps({"n": f.n, "terms": terms})


def from_json(s) -> Element:
    data = json.loads(s) if isinstance(s, str) else s
    n = int(data["n"])
    out = Element.zero(n)
    for t in data["terms"]:
        word = [("t", int(i)) for i in t.get("theta", [])] + [("x", int(i)) for i in t.get("xi", [])]
        out = out + word_element(n, word, Fraction(str(t["coeff"])))
    return out
