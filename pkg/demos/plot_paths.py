"""
Lattice paths and standard monomials
====================================

Monomials are paths with steps U, Ht, Hx, D.  The standard monomials of the
reflection-model quotient are exactly the paths that never go below the axis.
"""

from fermionic import Path, from_path, reflection, standard_monomials
from fermionic.paths import Family, enumerate_paths, path_generating

sigma = Path.parse("U U Ht D D Ht U U D")
print(sigma, sigma.statistics(), from_path(sigma))

for p in enumerate_paths(2, Family.NONNEGATIVE):
    print(p, "->", from_path(p))

print(path_generating(3))
print(sorted(str(p) for p in standard_monomials(reflection(3), (1, 1))))
