"""
Bigraded dimensions of the two quotients
========================================

Exact ranks of the ideal slices give the Hilbert series; the totals are central binomial
numbers and the top anti-diagonal is a row of Narayana numbers.
"""

from math import comb

from fermionic import hilbert_series, permutation, reflection
from fermionic.coinvariants import narayana_boundary

for n in range(1, 5):
    H = hilbert_series(reflection(n))
    print(n, H, "total", H(1, 1), comb(2 * n + 1, n))

print(hilbert_series(permutation(3)))
print(narayana_boundary(4, oracle=True))
