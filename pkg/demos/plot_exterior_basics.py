"""
Arithmetic with anticommuting variables
=======================================

Products pick up signs, squares vanish, and the Casimir element commutes with everything.
"""

from fermionic import casimir, parse_text, theta, to_text, xi

n = 3
print(to_text(theta(2, n) * theta(1, n)))   # -1*t1 t2
print(to_text(theta(1, n) * theta(1, n)))   # 0

d = casimir(n)
print(to_text(d))
print(to_text(d * d))

# parsing accepts any generator order and re-sorts with signs
f = parse_text("2*x1 t1 + t3", n)
print(to_text(f))
print(d * xi(2, n) == xi(2, n) * d)
