"""
Compositions with constrained parts
===================================

Count compositions of n into P parts with a given number of parts in a
residue class, and check the formulas against enumeration.
"""

from math import comb

from ribbonpoly.compositions import (
    count_by_enumeration,
    count_odd,
    count_residue,
    enumerate_compositions,
)

##############################################################################
# Compositions of 5 into 2 parts, and how many have exactly one odd part.

print(enumerate_compositions(5, 2))
print("one odd part:", count_odd(5, 2, 1), "=", count_by_enumeration(5, 2, 1))

##############################################################################
# Parts in 3N + 2 drive the twisted flowers.

for n in range(2, 9):
    row = [count_residue(n, 2, I, 3, 2) for I in range(3)]
    assert row == [count_by_enumeration(n, 2, I, 3, 2) for I in range(3)]
    assert sum(row) == comb(n - 1, 1)
    print(n, row)

##############################################################################
# The formulas stay exact far beyond enumeration range.

print(count_odd(300, 100, 40))
