"""Decorated Motzkin-type paths and their identification with exterior monomials.

A path has n steps, each one of

    U   up-step (1, 1)                weight 1
    Ht  horizontal, theta-decorated   weight theta_i
    Hx  horizontal, xi-decorated      weight xi_i
    D   down-step (1, -1)             weight theta_i xi_i

so the weight of a path is a monomial and every monomial arises from exactly one path.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum, IntEnum
from itertools import product
from typing import Iterator, NamedTuple

from .exterior import Monomial, check_enumeration_cap, monomial_product
from .qt import QTPolynomial
from .report import Report


class Step(IntEnum):
    # value order is the lexicographic step order U < Ht < Hx < D
    UP = 0
    THETA = 1
    XI = 2
    DOWN = 3

    @property
    def rise(self):
        return 1 if self is Step.UP else -1 if self is Step.DOWN else 0

    @property
    def ascii(self):
        return _ASCII[self]


_ASCII = {Step.UP: "U", Step.THETA: "Ht", Step.XI: "Hx", Step.DOWN: "D"}
_FROM_ASCII = {"U": Step.UP, "Ht": Step.THETA, "Hx": Step.XI, "D": Step.DOWN,
               "Hθ": Step.THETA, "Tθ": Step.THETA, "Hξ": Step.XI, "Tξ": Step.XI}


class Family(str, Enum):
    ALL = "all"
    NONNEGATIVE = "nonneg"
    STRICTLY_POSITIVE = "strict"
    ENDS_ON_AXIS = "zero"


class PathStatistics(NamedTuple):
    depth: int
    total_deg: int
    theta_deg: int
    xi_deg: int


@dataclass(frozen=True)
class Path:
    steps: tuple

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(Step(s) for s in self.steps))

    @classmethod
    def parse(cls, s: str):
        s = s.strip()
        if not s:
            return cls(())
        return cls(tuple(_FROM_ASCII[tok] for tok in s.split()))

    @property
    def n(self):
        return len(self.steps)

    def heights(self) -> list[int]:
        h, out = 0, [0]
        for s in self.steps:
            h += s.rise
            out.append(h)
        return out

    @property
    def end_height(self):
        return sum(s.rise for s in self.steps)

    @property
    def depth(self):
        return min(self.heights())

    @property
    def degree(self):
        return self.n - self.end_height

    @property
    def theta_degree(self):
        return sum(1 for s in self.steps if s in (Step.THETA, Step.DOWN))

    @property
    def xi_degree(self):
        return sum(1 for s in self.steps if s in (Step.XI, Step.DOWN))

    @property
    def bidegree(self):
        return self.theta_degree, self.xi_degree

    def statistics(self) -> PathStatistics:
        return PathStatistics(self.depth, self.degree, self.theta_degree, self.xi_degree)

    def in_family(self, family: Family) -> bool:
        family = Family(family)
        if family is Family.ALL:
            return True
        hs = self.heights()
        if family is Family.NONNEGATIVE:
            return min(hs) == 0
        if family is Family.ENDS_ON_AXIS:
            return min(hs) == 0 and hs[-1] == 0
        return all(h > 0 for h in hs[1:])

    def __str__(self):
        return " ".join(s.ascii for s in self.steps)


def statistics(p: Path) -> PathStatistics:
    return p.statistics()


def to_path(m: Monomial) -> Path:
    steps = []
    for k in range(m.n):
        t, x = (m.theta >> k) & 1, (m.xi >> k) & 1
        steps.append(Step.DOWN if t and x else Step.THETA if t else Step.XI if x else Step.UP)
    return Path(tuple(steps))


def from_path(p: Path) -> Monomial:
    theta = xi = 0
    for k, s in enumerate(p.steps):
        if s in (Step.THETA, Step.DOWN):
            theta |= 1 << k
        if s in (Step.XI, Step.DOWN):
            xi |= 1 << k
    return Monomial(p.n, theta, xi)


weight = from_path


def enumerate_paths(n: int, family=Family.ALL, override=False) -> Iterator[Path]:
    """Yield each path of the family exactly once, in lexicographic step order."""
    family = Family(family)
    if family is Family.ALL:
        check_enumeration_cap(n, override)
        for steps in product(Step, repeat=n):
            yield Path(steps)
        return
    floor = 1 if family is Family.STRICTLY_POSITIVE else 0

    def rec(prefix, h):
        k = len(prefix)
        if k == n:
            if family is Family.ENDS_ON_AXIS and h != 0:
                return
            yield Path(tuple(prefix))
            return
        for s in Step:
            nh = h + s.rise
            if nh < floor:
                continue
            if family is Family.ENDS_ON_AXIS and nh > n - k - 1:
                continue
            prefix.append(s)
            yield from rec(prefix, nh)
            prefix.pop()

    if family is Family.STRICTLY_POSITIVE:
        if n == 0:
            yield Path(())
            return
        # the first step must leave the axis
        yield from rec([Step.UP], 1)
    else:
        yield from rec([], 0)


# ----------------------------------------------------------------- the order

def order_key(p: Path):
    """Sort key realising the path order: total degree up, then depth down, then lex."""
    return (p.degree, -p.depth, tuple(int(s) for s in p.steps))


def monomial_order_key(m: Monomial):
    return order_key(to_path(m))


def compare(p: Path, other: Path) -> int:
    """-1, 0 or 1 as ``p`` precedes, equals or follows ``other``."""
    if p.n != other.n:
        raise ValueError(f"length mismatch: {p.n} vs {other.n}")
    a, b = order_key(p), order_key(other)
    return (a > b) - (a < b)


def term_order_check(n, samples=None, seed=0, index_disjoint=False) -> Report:
    """Check that 1 is minimal and that multiplying by a monomial preserves the order.

    Multiplicativity is tested on triples (S, T, U) where U*S and U*T are both nonzero
    (no shared generators); with ``index_disjoint`` U must also avoid every index used by
    S or T.  Exhaustive when ``samples`` is None, otherwise ``samples`` random triples.
    """
    report = Report("term-order", {"n": n, "samples": samples, "index_disjoint": index_disjoint})
    one = Path((Step.UP,) * n)
    keys = [(a, b) for a in range(1 << n) for b in range(1 << n)]
    minimal = all(order_key(one) <= monomial_order_key(Monomial(n, *k)) for k in keys)
    report.rows.append({"axiom": "minimality", "passed": minimal})
    if not minimal:
        report.fail({"axiom": "minimality"})

    cache: dict = {}

    def key_of(k):
        if k not in cache:
            cache[k] = order_key(to_path(Monomial(n, *k)))
        return cache[k]

    full = (1 << n) - 1

    def triples():
        if samples is None:
            for s in keys:
                for t in keys:
                    for u in keys:
                        yield s, t, u
            return
        rng = random.Random(seed)
        for _ in range(samples):
            s, t = rng.choice(keys), rng.choice(keys)
            if index_disjoint:
                used = s[0] | s[1] | t[0] | t[1]
                free_t = free_x = full & ~used
            else:
                free_t, free_x = full & ~(s[0] | t[0]), full & ~(s[1] | t[1])
            yield s, t, (rng.getrandbits(n) & free_t, rng.getrandbits(n) & free_x)

    checked = violations = 0
    for s, t, u in triples():
        if s == t:
            continue
        if index_disjoint and (u[0] | u[1]) & (s[0] | s[1] | t[0] | t[1]):
            continue
        us, ut = monomial_product(u, s), monomial_product(u, t)
        if us is None or ut is None:
            continue
        if key_of(s) > key_of(t):
            s, t, us, ut = t, s, ut, us
        checked += 1
        if not key_of(us[1]) < key_of(ut[1]):
            violations += 1
            if report.passed:
                report.fail({
                    "smaller": str(to_path(Monomial(n, *s))),
                    "larger": str(to_path(Monomial(n, *t))),
                    "multiplier": str(to_path(Monomial(n, *u))),
                    "products": [str(to_path(Monomial(n, *us[1]))), str(to_path(Monomial(n, *ut[1])))],
                })
    report.rows.append({"axiom": "multiplicativity", "checked": checked,
                        "violations": violations, "passed": violations == 0})
    return report


# ------------------------------------------------------ generating functions

def path_generating(n: int, family=Family.NONNEGATIVE) -> QTPolynomial:
    """Sum of q^{theta degree} t^{xi degree} over the family."""
    counts: dict = {}
    for p in enumerate_paths(n, family):
        k = p.bidegree
        counts[k] = counts.get(k, 0) + 1
    return QTPolynomial(counts)


def recursion_check(n: int) -> Report:
    """Check P_{m+1} = (1 + q + t + qt) P_m - qt P'_m for 0 <= m < n.

    The same recursion is checked on the closed-form Hilbert series, where P'_m is
    replaced by the anti-diagonal slice (total degree m) of the rank-m series.
    """
    from .coinvariants import closed_form_hilbert, reflection

    q, t = QTPolynomial.q(), QTPolynomial.t()
    factor = 1 + q + t + q * t
    report = Report("path-recursion", {"n": n})
    for m in range(n):
        lhs = path_generating(m + 1)
        rhs = factor * path_generating(m) - q * t * path_generating(m, Family.ENDS_ON_AXIS)
        h_m = closed_form_hilbert(reflection(m)) if m else QTPolynomial.constant(1)
        algebraic = factor * h_m - q * t * h_m.total_degree_slice(m)
        ok_paths = lhs == rhs
        ok_alg = algebraic == closed_form_hilbert(reflection(m + 1))
        report.rows.append({"m": m, "paths": ok_paths, "algebraic": ok_alg})
        if not (ok_paths and ok_alg):
            report.fail({"m": m, "lhs": lhs.triples(), "rhs": rhs.triples(),
                         "algebraic": algebraic.triples()})
    return report
