"""Bivariate integer polynomials in q and t (Hilbert series, graded multiplicities)."""

from __future__ import annotations


class QTPolynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        for (a, b), v in (coeffs or {}).items():
            v = int(v)
            if v:
                c[(int(a), int(b))] = c.get((int(a), int(b)), 0) + v
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def constant(cls, v):
        return cls({(0, 0): v})

    @classmethod
    def q(cls):
        return cls({(1, 0): 1})

    @classmethod
    def t(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_triples(cls, triples):
        return cls({(a, b): c for a, b, c in triples})

    def coefficient(self, a, b) -> int:
        return self._c.get((a, b), 0)

    def items(self):
        return self._c.items()

    def triples(self) -> list[list[int]]:
        return [[a, b, c] for (a, b), c in sorted(self._c.items())]

    def __eq__(self, other):
        if isinstance(other, int):
            other = QTPolynomial.constant(other)
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other):
        if isinstance(other, int):
            other = QTPolynomial.constant(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return QTPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return QTPolynomial({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QTPolynomial({k: v * other for k, v in self._c.items()})
        out = {}
        for (a, b), u in self._c.items():
            for (c, d), v in other._c.items():
                out[(a + c, b + d)] = out.get((a + c, b + d), 0) + u * v
        return QTPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, q, t):
        return sum(c * q ** a * t ** b for (a, b), c in self._c.items())

    def swap(self):
        """Exchange the roles of q and t."""
        return QTPolynomial({(b, a): c for (a, b), c in self._c.items()})

    def total_degree_slice(self, d):
        return QTPolynomial({(a, b): c for (a, b), c in self._c.items() if a + b == d})

    def __repr__(self):
        return f"QTPolynomial({self})"

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for (a, b), c in sorted(self._c.items(), key=lambda kv: (kv[0][0] + kv[0][1], -kv[0][0])):
            mon = "*".join(s for s in (_pow("q", a), _pow("t", b)) if s)
            if not mon:
                body = str(abs(c))
            else:
                body = mon if abs(c) == 1 else f"{abs(c)}*{mon}"
            out.append(("-" if c < 0 else "+", body))
        head = ("-" if out[0][0] == "-" else "") + out[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in out[1:]])


def _pow(v, e):
    return "" if e == 0 else v if e == 1 else f"{v}^{e}"


def qt_analog(n: int) -> QTPolynomial:
    """[n]_{q,t} = q^{n-1} + q^{n-2} t + ... + t^{n-1}; zero for n <= 0."""
    return QTPolynomial({(n - 1 - k, k): 1 for k in range(n)}) if n > 0 else QTPolynomial()
