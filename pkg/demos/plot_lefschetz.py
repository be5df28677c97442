"""
Hard Lefschetz for the Casimir element
======================================

Multiplication by delta**(n - i - j) is a square, full-rank map out of every bidegree
(i, j) with i + j <= n.  Each matrix breaks into blocks that are scaled Boolean incidence
matrices.
"""

from fermionic import certify_lefschetz, delta_power_matrix, incidence_matrix
from fermionic.linalg import determinant, rank

inc = incidence_matrix(4, 1, 3).matrix
print(inc)
print("rank", rank(inc), "det", determinant(inc))

print(delta_power_matrix(3, 1, 0, 2))

for row in certify_lefschetz(4).rows:
    print(row["i"], row["j"], "size", row["size"], "rank", row["rank"], "blocks", row["blocks"])
