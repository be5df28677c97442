"""Boolean-lattice incidence matrices and multiplication by powers of the Casimir element.

Subsets are bitmasks listed in colex order everywhere.  Casimir-power matrices use the
basis w(A, B) = prod_{c in A&B} (theta_c xi_c) * theta_{A-B} * xi_{B-A}, on which
multiplication by the Casimir element has no signs:

    delta * w(A, B) = sum over c outside A | B of w(A + c, B + c).

With the xi_c theta_c pairing, v(A, B) = (-1)^|A&B| w(A, B), the matrix of delta**r picks
up a global factor (-1)**r; see ``delta_power_matrix_v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .exterior import indices_of, popcount, subsets
from .linalg import ExactMatrix, rank
from .report import Report


@dataclass(frozen=True)
class IncidenceMatrix:
    n: int
    r: int
    s: int
    row_sets: tuple  # s-subsets
    col_sets: tuple  # r-subsets
    matrix: ExactMatrix


def incidence_matrix(n, r, s) -> IncidenceMatrix:
    if not 0 <= r <= s <= n:
        raise ValueError(f"need 0 <= r <= s <= n, got r={r}, s={s}, n={n}")
    rows, cols = subsets(n, s), subsets(n, r)
    m = ExactMatrix([[1 if S & T == S else 0 for S in cols] for T in rows], ncols=len(cols))
    return IncidenceMatrix(n, r, s, tuple(rows), tuple(cols), m)


def check_boolean_hlp(n) -> Report:
    report = Report("boolean-hlp", {"n": n})
    for i in range(n // 2 + 1):
        M = incidence_matrix(n, i, n - i).matrix
        rk = rank(M)
        ok = M.is_square() and rk == comb(n, i)
        report.rows.append({"i": i, "size": comb(n, i), "rank": rk, "passed": ok})
        if not ok:
            report.fail({"i": i, "rank": rk})
    return report


def _pairs(n, i, j):
    return [(A, B) for A in subsets(n, i) for B in subsets(n, j)]


def apply_casimir(n, vec: dict) -> dict:
    """One application of the sign-free transition rule to {(A, B): coeff}."""
    out: dict = {}
    for (A, B), c in vec.items():
        free = ((1 << n) - 1) & ~(A | B)
        while free:
            bit = free & -free
            key = (A | bit, B | bit)
            out[key] = out.get(key, 0) + c
            free ^= bit
    return out


def delta_power_matrix(n, i, j, r) -> ExactMatrix:
    """Matrix of multiplication by delta**r from bidegree (i, j) to (i + r, j + r).

    Columns are the domain basis w(A, B), rows the codomain basis w(C, D); both ordered
    with A (resp. C) in colex order, then B (resp. D).  Entries are nonnegative integers.
    """
    if not (0 <= i <= n and 0 <= j <= n and i + j <= 2 * n and r >= 0):
        raise ValueError(f"bidegree ({i}, {j}) with r={r} out of range for n={n}")
    domain = _pairs(n, i, j)
    target = _pairs(n, i + r, j + r)
    index = {k: p for p, k in enumerate(target)}
    cols = []
    for key in domain:
        vec = {key: 1}
        for _ in range(r):
            vec = apply_casimir(n, vec)
        col = [0] * len(target)
        for k, c in vec.items():
            col[index[k]] = c
        cols.append(col)
    return ExactMatrix([[cols[c][rr] for c in range(len(domain))] for rr in range(len(target))],
                       ncols=len(domain))


def delta_power_matrix_v(n, i, j, r) -> ExactMatrix:
    """The same map written in the xi_c theta_c-paired basis v(A, B): (-1)**r times the above."""
    return delta_power_matrix(n, i, j, r).scale((-1) ** r)


def _relabel(mask, positions):
    """Re-index a subset of ``positions`` (sorted list of indices) as a subset of 1..len."""
    out = 0
    for p, idx in enumerate(positions):
        if mask >> (idx - 1) & 1:
            out |= 1 << p
    return out


def block_structure(n, i, j, r, M=None):
    """Split the delta**r matrix by (I, J) = (A - B, B - A) and check each block.

    Returns (entries_respect_blocks, blocks) where each block is a dict with its key,
    size, rank, and whether it equals r! times a Boolean incidence matrix on the indices
    outside I | J.
    """
    if M is None:
        M = delta_power_matrix(n, i, j, r)
    domain, target = _pairs(n, i, j), _pairs(n, i + r, j + r)
    respects = True
    for rr, (C, D) in enumerate(target):
        for cc, (A, B) in enumerate(domain):
            if M[rr, cc] and (C & ~D, D & ~C) != (A & ~B, B & ~A):
                respects = False
    groups: dict = {}
    for cc, (A, B) in enumerate(domain):
        groups.setdefault((A & ~B, B & ~A), [[], []])[0].append(cc)
    for rr, (C, D) in enumerate(target):
        key = (C & ~D, D & ~C)
        if key in groups:
            groups[key][1].append(rr)
    blocks = []
    for (I, J), (cidx, ridx) in sorted(groups.items()):
        sub = M.submatrix(ridx, cidx)
        rest = [k for k in range(1, n + 1) if not (I | J) >> (k - 1) & 1]
        k = i - popcount(I)
        # read in colex order of R = A & B and R' = C & D inside ``rest``, the block
        # should be r! times the incidence matrix M_{|rest|}(k, k + r)
        matches = False
        if k + r <= len(rest):
            inc = incidence_matrix(len(rest), k, k + r)
            row_pos = {S: p for p, S in enumerate(inc.row_sets)}
            col_pos = {S: p for p, S in enumerate(inc.col_sets)}
            rows_order = [row_pos[_relabel(target[t][0] & target[t][1], rest)] for t in ridx]
            cols_order = [col_pos[_relabel(domain[c][0] & domain[c][1], rest)] for c in cidx]
            matches = inc.matrix.submatrix(rows_order, cols_order).scale(factorial(r)) == sub
        blocks.append({"I": list(indices_of(I)), "J": list(indices_of(J)), "rows": len(ridx),
                       "cols": len(cidx), "rank": rank(sub), "incidence": matches})
    return respects, blocks


def certify_lefschetz(n) -> Report:
    """Full-rank check of delta**(n-i-j) on every bidegree (i, j) with i + j <= n."""
    if n < 1:
        raise ValueError("n must be positive")
    report = Report("lefschetz", {"n": n})
    for i in range(n + 1):
        for j in range(n + 1 - i):
            r = n - i - j
            M = delta_power_matrix(n, i, j, r)
            size = comb(n, i) * comb(n, j)
            rk = rank(M)
            respects, blocks = block_structure(n, i, j, r, M)
            blocks_ok = respects and all(b["incidence"] and b["rank"] == b["rows"] == b["cols"]
                                         for b in blocks)
            ok = M.shape == (size, size) and rk == size and blocks_ok
            report.rows.append({"i": i, "j": j, "r": r, "size": size, "rank": rk, "pass": ok,
                                "blocks": len(blocks),
                                "max_block": max((b["rows"] for b in blocks), default=0),
                                "block_structure": blocks_ok})
            if not ok:
                report.fail({"i": i, "j": j, "r": r, "rank": rk, "size": size})
    return report


@dataclass(frozen=True)
class MapClassification:
    n: int
    i: int
    j: int
    domain_dim: int
    codomain_dim: int
    rank: int
    injective: bool
    surjective: bool
    expected: str

    @property
    def cokernel_dim(self):
        return self.codomain_dim - self.rank

    @property
    def passed(self):
        return self.injective if self.expected == "injective" else self.surjective


def injectivity_surjectivity(n, i, j) -> MapClassification:
    """Classify multiplication by delta from bidegree (i-1, j-1) into (i, j)."""
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"bidegree ({i}, {j}) out of range for n={n}")
    codim = comb(n, i) * comb(n, j)
    if i == 0 or j == 0:
        dom, rk = 0, 0
    else:
        M = delta_power_matrix(n, i - 1, j - 1, 1)
        dom, rk = M.cols, rank(M)
    return MapClassification(n, i, j, dom, codim, rk, rk == dom, rk == codim,
                             "injective" if i + j <= n else "surjective")
