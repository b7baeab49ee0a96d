"""Flower rosettes: construction, face classification and closed forms.

An N-petal flower is a one-vertex ribbon graph whose petals form a chain:
consecutive petals interleave, non-consecutive ones do not.  Petals are
signed, ``+`` for twisted and ``-`` for untwisted.

Face counts are tracked through a class in Z/3:

==========  ===================================
class       configuration
==========  ===================================
2           one face, last petal oriented ``+``
1           one face, last petal oriented ``-``
0           two faces
==========  ===================================

Adding a petal with sign ``s`` (``+1`` twisted, ``-1`` untwisted) maps
class ``x`` to ``s*x + 1 mod 3``, starting from the bare vertex at class 1.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import IntEnum

from .compositions import binom, count_odd, count_residue, eps, eps3
from .poly import Poly3
from .ribbon import End, RibbonGraph

__all__ = [
    "FlowerSpec",
    "PeriodicSpec",
    "TerminalProfile",
    "FaceClass",
    "SpecError",
    "UnsupportedSpec",
    "parse_spec",
    "build_flower",
    "signs_of",
    "face_class",
    "face_class_closed",
    "face_count",
    "periodic_face_class",
    "closed_form_untwisted",
    "closed_form_twisted",
    "closed_form",
    "placement_count",
    "placement_count_split",
    "recurrence_family",
    "terminal_form_value",
    "build_terminal",
]

TWISTED = "+"
UNTWISTED = "-"


class SpecError(ValueError):
    """Malformed flower spec string; names the offending token."""


class UnsupportedSpec(ValueError):
    pass


class FaceClass(IntEnum):
    TWO_FACES = 0
    ONE_FACE_MINUS = 1
    ONE_FACE_PLUS = 2

    @property
    def faces(self) -> int:
        return 2 if self is FaceClass.TWO_FACES else 1


def _sign_value(s) -> int:
    if s in (1, "+", True):
        return 1
    if s in (-1, "-", False):
        return -1
    raise ValueError(f"bad petal sign {s!r}")


# ---------------------------------------------------------------------------
# specs


@dataclass(frozen=True)
class FlowerSpec:
    """Sector list ``((N_1, s_1), ..., (N_q, s_q))`` and a layout.

    ``merged`` chains all petals across sectors; ``separate`` joins one
    chain per sector at the vertex without interleaving between sectors.
    """

    sectors: tuple[tuple[int, str], ...] = ()
    layout: str = "merged"

    def __post_init__(self):
        if self.layout not in ("merged", "separate"):
            raise ValueError(f"unknown layout {self.layout!r}")
        for n, s in self.sectors:
            if n < 1 or s not in (TWISTED, UNTWISTED):
                raise ValueError(f"bad sector ({n}, {s!r})")

    @classmethod
    def untwisted(cls, n: int) -> FlowerSpec:
        return cls(((n, UNTWISTED),) if n else ())

    @classmethod
    def twisted(cls, n: int) -> FlowerSpec:
        return cls(((n, TWISTED),) if n else ())

    @property
    def n_petals(self) -> int:
        return sum(n for n, _ in self.sectors)

    @property
    def signs(self) -> tuple[str, ...]:
        return tuple(s for n, s in self.sectors for _ in range(n))


@dataclass(frozen=True)
class PeriodicSpec:
    """Alternating flower: ``q`` sectors starting with sign ``start``.

    Untwisted sectors hold ``k1`` petals and twisted sectors ``k2``.  Sector
    1 carries the final petal, so the petal insertion order runs from sector
    ``q`` back to sector 1.
    """

    k1: int
    k2: int
    q: int
    start: str = UNTWISTED

    def __post_init__(self):
        if self.k1 < 1 or self.k2 < 1 or self.q < 1 or self.start not in (TWISTED, UNTWISTED):
            raise UnsupportedSpec(f"periodic spec out of range: {self}")

    @property
    def ell(self) -> int:
        return self.q // 2

    def sectors(self) -> tuple[tuple[int, str], ...]:
        other = TWISTED if self.start == UNTWISTED else UNTWISTED
        out = []
        for i in range(self.q):
            s = self.start if i % 2 == 0 else other
            out.append((self.k1 if s == UNTWISTED else self.k2, s))
        return tuple(out)

    def signs(self) -> tuple[str, ...]:
        """Petal signs in insertion order (first inserted petal first)."""
        return tuple(s for n, s in reversed(self.sectors()) for _ in range(n))

    def flower_spec(self) -> FlowerSpec:
        return FlowerSpec(tuple(reversed(self.sectors())), "merged")


@dataclass(frozen=True)
class TerminalProfile:
    m: int = 0
    p: int = 0
    q: int = 0
    untwisted: tuple[int, ...] = ()
    twisted: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if min(self.m, self.p, self.q, *self.untwisted, *self.twisted, 0) < 0:
            raise ValueError("terminal profile counts must be non-negative")


_SECTOR = re.compile(r"^(\d+)([+-])$")
_KV = re.compile(r"^(k1|k2|q|start)=(.+)$")


def parse_spec(text: str) -> FlowerSpec | PeriodicSpec:
    """Parse ``u5``, ``t3``, ``3+,2-;merged`` or ``periodic k1=1 k2=1 q=6 start=-``."""
    text = text.strip()
    if not text:
        raise SpecError("empty flower spec")
    if text.startswith("periodic"):
        fields = {}
        for tok in text.split()[1:]:
            m = _KV.match(tok)
            if not m:
                raise SpecError(f"bad periodic token {tok!r}")
            fields[m.group(1)] = m.group(2)
        missing = {"k1", "k2", "q", "start"} - fields.keys()
        if missing:
            raise SpecError(f"periodic spec missing {', '.join(sorted(missing))}")
        try:
            k1, k2, q = (int(fields[k]) for k in ("k1", "k2", "q"))
        except ValueError:
            bad = next(f"{k}={fields[k]}" for k in ("k1", "k2", "q") if not fields[k].isdigit())
            raise SpecError(f"bad periodic token {bad!r}") from None
        if fields["start"] not in (TWISTED, UNTWISTED):
            raise SpecError(f"bad periodic token 'start={fields['start']}'")
        try:
            return PeriodicSpec(k1, k2, q, fields["start"])
        except UnsupportedSpec as exc:
            raise SpecError(str(exc)) from None
    m = re.fullmatch(r"([ut])(\d+)", text)
    if m:
        n = int(m.group(2))
        return FlowerSpec.untwisted(n) if m.group(1) == "u" else FlowerSpec.twisted(n)
    body, _, layout = text.partition(";")
    layout = layout.strip() or "merged"
    if layout not in ("merged", "separate"):
        raise SpecError(f"bad layout token {layout!r}")
    sectors = []
    for tok in body.split(","):
        tok = tok.strip()
        sm = _SECTOR.match(tok)
        if not sm or int(sm.group(1)) < 1:
            raise SpecError(f"bad sector token {tok!r}")
        sectors.append((int(sm.group(1)), sm.group(2)))
    return FlowerSpec(tuple(sectors), layout)


# ---------------------------------------------------------------------------
# construction


def _chain_ends(names: Sequence[str]) -> list[End]:
    n = len(names)
    if n == 0:
        return []
    if n == 1:
        return [End(names[0], "a"), End(names[0], "b")]
    ends = [End(names[0], "a"), End(names[1], "a"), End(names[0], "b")]
    for i in range(2, n):
        ends += [End(names[i], "a"), End(names[i - 1], "b")]
    ends.append(End(names[-1], "b"))
    return ends


def build_flower(spec: FlowerSpec | PeriodicSpec | Sequence, vertex: str = "v",
                 prefix: str = "e") -> RibbonGraph:
    """One-vertex ribbon graph realizing a flower spec.

    A plain sign sequence is accepted as a merged flower.
    """
    if isinstance(spec, PeriodicSpec):
        spec = spec.flower_spec()
    elif not isinstance(spec, FlowerSpec):
        signs = ["+" if _sign_value(s) > 0 else "-" for s in spec]
        spec = FlowerSpec(tuple((1, s) for s in signs))
    names = [f"{prefix}{i + 1}" for i in range(spec.n_petals)]
    twists = tuple((nm, s == TWISTED) for nm, s in zip(names, spec.signs))
    if spec.layout == "merged":
        ends = _chain_ends(names)
    else:
        ends, i = [], 0
        for n, _ in spec.sectors:
            ends += _chain_ends(names[i:i + n])
            i += n
    return RibbonGraph(((vertex, tuple(ends)),), twists)


# ---------------------------------------------------------------------------
# face classes


def signs_of(spec) -> list[int]:
    if isinstance(spec, PeriodicSpec):
        spec = spec.signs()
    elif isinstance(spec, FlowerSpec):
        spec = spec.signs
    return [_sign_value(s) for s in spec]


def face_class(signs: Iterable) -> FaceClass:
    """Class of a merged flower, iterating ``x -> s*x + 1`` from the bare vertex."""
    x = 1
    for s in signs:
        x = (x * _sign_value(s) + 1) % 3
    return FaceClass(x)


def face_class_closed(signs: Iterable) -> FaceClass:
    """Same class from the suffix sum over untwisted-petal counts.

    ``1 + sum_{l=0}^{N-1} (-1)^{u_l}`` where ``u_l`` is the number of
    untwisted petals among the last ``l + 1`` petals.
    """
    total, unt = 1, 0
    for s in reversed(signs_of(signs)):
        unt += s < 0
        total += -1 if unt & 1 else 1
    return FaceClass(total % 3)


def face_count(signs: Iterable) -> int:
    return face_class(signs).faces


def _A(eta: int, xi: int, k: int) -> int:
    return sum((-1) ** (l * k) for l in range(eta, xi + 1))


def periodic_face_class(spec: PeriodicSpec) -> FaceClass:
    """Class of an alternating flower from the closed case formulas.

    The eight cases split on the parity of ``q``, the starting sign and the
    parity of ``k1``; ``l = q // 2``.
    """
    k1, k2, q, ell = spec.k1, spec.k2, spec.q, spec.ell
    odd_q = q % 2 == 1
    if spec.start == UNTWISTED:
        if not odd_q:
            if k1 % 2 == 0:
                x = 1 + ell * k2
            else:
                x = 1 + ((-1) ** ell - 1) // 2 * (1 + k2)
        else:
            if k1 % 2 == 0:
                x = 1 + ell * k2
            else:
                x = (1 - (-1) ** ell) // 2 * (1 - k2)
    elif spec.start == TWISTED:
        if not odd_q:
            if k1 % 2 == 0:
                x = 1 + ell * k2
            else:
                x = 1 + ((-1) ** ell - 1) // 2 * (1 - k2)
        else:
            if k1 % 2 == 0:
                x = 1 + (ell + 1) * k2
            else:
                x = (1 + (-1) ** ell) // 2 * (1 + k2)
    else:  # pragma: no cover - guarded by PeriodicSpec
        raise UnsupportedSpec(f"unsupported periodic spec {spec}")
    return FaceClass(x % 3)


def periodic_face_class_sum(spec: PeriodicSpec) -> FaceClass:
    """Unsimplified form of the case formulas, written with ``A(eta, xi, k)``."""
    k1, k2, ell = spec.k1, spec.k2, spec.ell
    alt = sum((-1) ** a for a in range(1, k1 + 1))
    odd_q = spec.q % 2 == 1
    if spec.start == UNTWISTED:
        head = _A(0, ell, k1) if odd_q else _A(0, ell - 1, k1)
        x = 1 + head * alt + _A(1, ell, k1) * k2
    else:
        x = 1 + _A(0, ell - 1, k1) * alt + (_A(0, ell, k1) if odd_q else _A(0, ell - 1, k1)) * k2
    return FaceClass(x % 3)


# ---------------------------------------------------------------------------
# closed forms


def placement_count(N: int, n: int, P: int) -> int:
    """Ways to place ``P`` petal packets of fixed sizes summing to ``n`` in an
    ``N``-petal chain, with at least one missing petal between packets."""
    return binom(N - n + 1, P)


def placement_count_split(N: int, n: int, P: int) -> int:
    """Same count, split by whether each end of the chain is left empty."""
    m = N - n - 1
    return binom(m, P - 2) + 2 * binom(m, P - 1) + binom(m, P)


def _closed_form(N: int, counter, top_eps) -> Poly3:
    if N < 0:
        raise ValueError("number of petals must be non-negative")
    if N == 0:
        return Poly3.const(1)
    terms = {(0, 0, 0): 1}
    for n in range(1, N):
        for P in range(1, n + 1):
            place = placement_count(N, n, P)
            if not place:
                continue
            for I in range(P + 1):
                c = counter(n, P, I)
                if c:
                    key = (0, n, n - I)
                    terms[key] = terms.get(key, 0) + place * c
    key = (0, N, N - top_eps(N))
    terms[key] = terms.get(key, 0) + 1
    return Poly3(terms)


def closed_form_untwisted(N: int) -> Poly3:
    """R(Y, Z) of the N-petal untwisted flower via odd-part composition counts."""
    return _closed_form(N, count_odd, eps)


def closed_form_twisted(N: int) -> Poly3:
    """R(Y, Z) of the N-petal twisted flower; parts counted in 3N + 2."""
    return _closed_form(N, lambda n, P, I: count_residue(n, P, I, 3, 2), eps3)


def closed_form(spec: FlowerSpec) -> Poly3:
    """Closed form for single-sector flowers and separate-layout sector lists."""
    if spec.layout == "merged" and len(spec.sectors) > 1:
        raise UnsupportedSpec("no closed form for merged mixed-sign flowers")
    out = Poly3.const(1)
    for n, s in spec.sectors:
        out = out * (closed_form_twisted(n) if s == TWISTED else closed_form_untwisted(n))
    return out


def recurrence_family(family: str, n_max: int) -> list[Poly3]:
    """``R_0 .. R_{n_max}`` from the first-petal recurrence.

    ``R_N = sum_{n<N} Y^n Z^(n - e(n)) R_{N-n-1} + Y^N Z^(N - e(N))`` with
    ``e`` the parity indicator (untwisted) or the 3N + 2 indicator (twisted).
    """
    if family in ("u", "untwisted"):
        ind = eps
    elif family in ("t", "twisted"):
        ind = eps3
    else:
        raise ValueError(f"unknown flower family {family!r}")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")

    def chunk(n):
        return Poly3.monomial(0, n, n - ind(n))

    R = [Poly3.const(1)]
    for N in range(1, n_max + 1):
        acc = chunk(N)
        for n in range(N):
            acc = acc + chunk(n) * R[N - n - 1]
        R.append(acc)
    return R


def terminal_form_value(profile: TerminalProfile) -> Poly3:
    """``X^m (1+Y)^p (1+YZ)^q`` times the flower closed forms."""
    X, Y, Z = Poly3.gens()
    out = X ** profile.m * (1 + Y) ** profile.p * (1 + Y * Z) ** profile.q
    for n in profile.untwisted:
        out = out * closed_form_untwisted(n)
    for n in profile.twisted:
        out = out * closed_form_twisted(n)
    return out


def build_terminal(profile: TerminalProfile, rng=None) -> RibbonGraph:
    """A connected graph realizing ``profile``.

    ``m`` bridges form a path on ``m + 1`` vertices; trivial loops and
    flowers are attached as contiguous blocks at vertices and corners chosen
    by ``rng`` (a :class:`random.Random`), or round-robin without one.
    """
    n_vertices = profile.m + 1
    rots: list[list[End]] = [[] for _ in range(n_vertices)]
    twists = []
    for i in range(profile.m):
        name = f"b{i + 1}"
        rots[i].append(End(name, "a"))
        rots[i + 1].append(End(name, "b"))
        twists.append((name, False if rng is None else rng.random() < 0.5))
    blocks = [("p", 1, False)] * profile.p + [("q", 1, True)] * profile.q
    blocks += [("u", n, False) for n in profile.untwisted]
    blocks += [("t", n, True) for n in profile.twisted]
    if rng is not None:
        rng.shuffle(blocks)
    for j, (tag, n, tw) in enumerate(blocks):
        names = [f"{tag}{j}_{i + 1}" for i in range(n)]
        twists += [(nm, tw) for nm in names]
        vi = rng.randrange(n_vertices) if rng is not None else j % n_vertices
        rot = rots[vi]
        at = rng.randrange(len(rot) + 1) if rng is not None else len(rot)
        rot[at:at] = _chain_ends(names)
    return RibbonGraph(tuple((f"v{i}", tuple(r)) for i, r in enumerate(rots)), tuple(twists))
