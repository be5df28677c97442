"""
Graded multiplicities of hooks
==============================

Characters of the permutation-model quotient, paired against hook characters, give
q,t-analogues of small integers.
"""

from fermionic.characters import (full_graded_frobenius, graded_hook_multiplicity,
                                  hook_multiplicity_closed_form)

n = 5
for k in range(n):
    got = graded_hook_multiplicity(n, k)
    print(k, got, got == hook_multiplicity_closed_form(n, k))

for la, poly in full_graded_frobenius(4).items():
    print(la, poly)
