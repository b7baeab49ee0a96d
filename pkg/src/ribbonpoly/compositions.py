"""Counting integer compositions with constrained parts.

``count_odd(n, P, I)`` is the number of compositions of ``n`` into ``P``
positive parts of which exactly ``I`` are odd.  ``count_residue`` generalizes
this to parts lying in the residue class ``D*N + d``.  Both are closed
formulas; :func:`enumerate_compositions` together with
:func:`count_by_enumeration` is the brute-force oracle they are tested
against.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, factorial

__all__ = [
    "binom",
    "multinomial",
    "indicator",
    "eps",
    "eps3",
    "eps4",
    "count_odd",
    "count_residue",
    "enumerate_compositions",
    "count_by_enumeration",
    "in_class",
    "ENUMERATION_CAP",
    "CapExceeded",
]

ENUMERATION_CAP = 25


class CapExceeded(ValueError):
    """Requested work is above the configured size cap."""


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever an argument is out of range."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(*parts: int) -> int:
    if any(p < 0 for p in parts):
        return 0
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def eps(q: int) -> int:
    """1 for odd ``q``, 0 for even."""
    return q & 1


def eps3(q: int) -> int:
    """1 iff ``q`` is in 3N + 2."""
    return int(q % 3 == 2)


def eps4(q: int) -> int:
    """1 iff ``q`` is in 4N + 3."""
    return int(q % 4 == 3)


_INDICATORS = {"parity": eps, "mod3": eps3, "mod4": eps4}


def indicator(kind: str, q: int) -> int:
    """Dispatch to :func:`eps`, :func:`eps3` or :func:`eps4` by name."""
    if q < 0:
        raise ValueError("indicator argument must be non-negative")
    try:
        return _INDICATORS[kind](q)
    except KeyError:
        raise ValueError(f"unknown indicator kind {kind!r}") from None


def _zero_parts(n: int, P: int, I: int) -> int | None:
    if P < 0 or I < 0 or n < 0 or I > P:
        return 0
    if P == 0:
        return int(n == 0 and I == 0)
    return None


def count_odd(n: int, P: int, I: int) -> int:
    """Compositions of ``n`` into ``P`` parts with exactly ``I`` odd parts.

    Adding one to each odd part gives a composition of ``n + I`` into even
    parts, i.e. of ``(n + I)/2`` into ``P`` parts, times the choice of which
    ``I`` parts were odd.

    >>> count_odd(5, 2, 1)
    4
    """
    early = _zero_parts(n, P, I)
    if early is not None:
        return early
    if (n - I) % 2:
        return 0
    return binom((n + I) // 2 - 1, P - 1) * binom(P, I)


def _weak_compositions(total: int, slots: int):
    if slots == 0:
        if total == 0:
            yield ()
        return
    for bars in combinations(range(total + slots - 1), slots - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + slots - 2 - prev)
        yield tuple(out)


def count_residue(n: int, P: int, I: int, D: int, d: int) -> int:
    """Compositions of ``n`` into ``P`` parts with ``I`` parts in ``D*N + d``.

    A part in residue class ``alpha`` (with ``alpha = D`` standing for the
    multiples of ``D``) is written ``D*j - (D - alpha)`` with ``j >= 1``.
    Fixing how many parts fall into each class, ``l_alpha``, the ``j``'s form
    a composition of ``(n + sum (D - alpha) l_alpha) / D`` into ``P`` parts.
    Summing the multinomial placement count times that binomial over all
    class vectors with ``l_d = I`` and an integral quotient gives the count.
    """
    if D < 2 or not 1 <= d <= D - 1:
        raise ValueError(f"invalid residue class: D={D}, d={d}")
    early = _zero_parts(n, P, I)
    if early is not None:
        return early
    others = [a for a in range(1, D + 1) if a != d]
    base = n + (D - d) * I
    # only one residue of the shift sum makes the quotient integral
    need = (-base) % D
    total = 0
    for ls in _weak_compositions(P - I, len(others)):
        shift = sum((D - a) * l for a, l in zip(others, ls))
        if shift % D != need:
            continue
        top = (base + shift) // D - 1
        if top < P - 1:
            continue
        total += multinomial(I, *ls) * binom(top, P - 1)
    return total


def enumerate_compositions(n: int, P: int, cap: int = ENUMERATION_CAP) -> list[tuple[int, ...]]:
    """All compositions of ``n`` into ``P`` positive parts, lexicographically."""
    if n > cap:
        raise CapExceeded(f"enumeration of compositions of {n} exceeds cap {cap}")
    if P == 0:
        return [()] if n == 0 else []
    if P < 0 or n < P:
        return []
    out = []
    for cuts in combinations(range(1, n), P - 1):
        prev = 0
        parts = []
        for c in cuts:
            parts.append(c - prev)
            prev = c
        parts.append(n - prev)
        out.append(tuple(parts))
    return out


def in_class(q: int, D: int, d: int) -> bool:
    return q % D == d


def count_by_enumeration(n: int, P: int, I: int, D: int = 2, d: int = 1) -> int:
    """Oracle: filter :func:`enumerate_compositions` by class membership."""
    return sum(1 for c in enumerate_compositions(n, P)
               if sum(in_class(q, D, d) for q in c) == I)
