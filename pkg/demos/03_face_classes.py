"""
Counting faces with a Z/3 class
===============================

A flower with mixed petals always has one or two boundary components.  The
count is tracked by a class in Z/3 updated petal by petal.
"""

import itertools
from collections import Counter

from ribbonpoly import (
    PeriodicSpec,
    boundary_components,
    build_flower,
    face_class,
    face_class_closed,
    periodic_face_class,
)

##############################################################################
# Walk one sign sequence through the update ``x -> s*x + 1 mod 3``.

signs = "+-++--+"
x = 1
for i, s in enumerate(signs, start=1):
    x = (x * (1 if s == "+" else -1) + 1) % 3
    print(f"after petal {i} ({s}): class {x}")
print("boundary trace:", boundary_components(build_flower(signs)))

##############################################################################
# Over all sign sequences of length 10 the trace, the iteration and the
# suffix-sum form agree, and only one or two faces ever occur.

tally = Counter()
for seq in itertools.product("+-", repeat=10):
    bc = boundary_components(build_flower(seq))
    assert bc == face_class(seq).faces == face_class_closed(seq).faces
    tally[bc] += 1
print("faces over 2^10 flowers:", dict(tally))

##############################################################################
# Alternating (periodic) flowers have closed class formulas.

for q in range(1, 9):
    spec = PeriodicSpec(k1=1, k2=1, q=q, start="-")
    print(q, "".join(spec.signs()), int(periodic_face_class(spec)), int(face_class(spec.signs())))
