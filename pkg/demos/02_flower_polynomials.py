"""
Flower polynomials
==================

An N-petal flower is a rosette whose petals form an interleaving chain.
Its polynomial has a closed form driven by composition counts, which we
compare against the subgraph sum and the first-petal recurrence.
"""

import time

from ribbonpoly import (
    FlowerSpec,
    Poly3,
    build_flower,
    closed_form_twisted,
    closed_form_untwisted,
    recurrence_family,
    reduce,
    state_sum,
    tutte_specialize,
)

##############################################################################
# The first few untwisted and twisted flowers.

for N in range(1, 6):
    print(f"u{N}: {closed_form_untwisted(N)}")
for N in range(1, 6):
    print(f"t{N}: {closed_form_twisted(N)}")

##############################################################################
# Three routes agree.  The subgraph sum grows as 2^N while the closed form
# only needs composition counts.

rec_u = recurrence_family("u", 14)
for N in (8, 12, 14):
    t0 = time.perf_counter()
    brute = state_sum(build_flower(FlowerSpec.untwisted(N)))
    t1 = time.perf_counter()
    closed = closed_form_untwisted(N)
    t2 = time.perf_counter()
    assert brute == closed == rec_u[N]
    print(f"N={N:2d}: state sum {t1 - t0:.3f}s, closed form {t2 - t1:.4f}s")

##############################################################################
# Setting Z = 1 forgets the surface and leaves the Tutte polynomial of N
# loops.

Y = Poly3.gens()[1]
assert tutte_specialize(closed_form_twisted(10)) == (1 + Y) ** 10

##############################################################################
# Flowers far beyond the reach of the subgraph sum are handled by ``reduce``,
# which recognizes them as terminal blocks.

big = build_flower(FlowerSpec.twisted(40))
print("t40 has", len(reduce(big)), "monomials")
