"""Sparse exact-integer polynomials in three variables.

A :class:`Poly3` maps exponent triples ``(a, b, c)`` to nonzero integer
coefficients.  The second and third slots are always ``Y`` and ``Z``.  The
first slot is either ``X`` or the shifted variable ``x = X - 1``; the state
sum accumulates in the shifted basis because each subgraph contributes a
single monomial there.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from math import comb

__all__ = [
    "Poly3",
    "BasisError",
    "poly_add",
    "poly_mul",
    "poly_scale",
]

Exponent = tuple[int, int, int]

BASES = ("X", "x")


class BasisError(ValueError):
    """Operands live in different first-variable bases."""


class Poly3:
    """Immutable polynomial in (X or x, Y, Z) with integer coefficients."""

    __slots__ = ("_terms", "_basis", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = (),
                 basis: str = "X"):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        acc: dict[Exponent, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            a, b, c = exp
            if min(a, b, c) < 0:
                raise ValueError(f"negative exponent in {exp!r}")
            key = (int(a), int(b), int(c))
            acc[key] = acc.get(key, 0) + int(coeff)
        self._terms = {k: acc[k] for k in sorted(acc, reverse=True) if acc[k]}
        self._basis = basis
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: int, basis: str = "X") -> Poly3:
        return cls({(0, 0, 0): c}, basis)

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: int = 0, coeff: int = 1,
                 basis: str = "X") -> Poly3:
        return cls({(a, b, c): coeff}, basis)

    @classmethod
    def gens(cls, basis: str = "X") -> tuple[Poly3, Poly3, Poly3]:
        """The three variables, e.g. ``X, Y, Z = Poly3.gens()``."""
        return (cls.monomial(1, 0, 0, basis=basis),
                cls.monomial(0, 1, 0, basis=basis),
                cls.monomial(0, 0, 1, basis=basis))

    # -- accessors --------------------------------------------------------

    @property
    def basis(self) -> str:
        return self._basis

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, a: int, b: int, c: int) -> int:
        return self._terms.get((a, b, c), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self, var: int) -> int:
        """Largest exponent of variable ``var`` (0, 1 or 2); -1 for zero."""
        return max((e[var] for e in self._terms), default=-1)

    # -- ring operations --------------------------------------------------

    def _check(self, other: Poly3) -> None:
        if other._basis != self._basis:
            raise BasisError(f"basis mismatch: {self._basis} vs {other._basis}")

    def _coerce(self, other) -> Poly3:
        if isinstance(other, Poly3):
            self._check(other)
            return other
        if isinstance(other, int):
            return Poly3.const(other, self._basis)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return Poly3(acc, self._basis)

    __radd__ = __add__

    def __neg__(self):
        return Poly3({k: -v for k, v in self._terms.items()}, self._basis)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly3({k: v * other for k, v in self._terms.items()}, self._basis)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Exponent, int] = {}
        for (a1, b1, c1), v1 in self._terms.items():
            for (a2, b2, c2), v2 in other._terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                acc[key] = acc.get(key, 0) + v1 * v2
        return Poly3(acc, self._basis)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly3.const(1, self._basis)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- basis change and specialization ----------------------------------

    def to_basis(self, basis: str) -> Poly3:
        """Rewrite in the requested first-variable basis.

        ``x^a = sum_j C(a, j) (-1)^(a-j) X^j`` and ``X^a = sum_j C(a, j) x^j``.
        """
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if basis == self._basis:
            return self
        sign = -1 if basis == "X" else 1
        acc: dict[Exponent, int] = {}
        for (a, b, c), v in self._terms.items():
            for j in range(a + 1):
                key = (j, b, c)
                acc[key] = acc.get(key, 0) + v * comb(a, j) * sign ** (a - j)
        return Poly3(acc, basis)

    def subs_z1(self) -> Poly3:
        """Set Z = 1."""
        return Poly3(_collapse_z(self._terms), self._basis)

    def evaluate(self, x, y, z):
        """Numeric evaluation with the first variable in this basis."""
        return sum(v * x ** a * y ** b * z ** c for (a, b, c), v in self._terms.items())

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly3.const(other, self._basis)
        if not isinstance(other, Poly3):
            return NotImplemented
        if other._basis != self._basis:
            other = other.to_basis(self._basis)
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            canon = self.to_basis("X")
            self._hash = hash(tuple(canon._terms.items()))
        return self._hash

    # -- rendering --------------------------------------------------------

    def __repr__(self):
        return f"Poly3({self.render()!r}, basis={self._basis!r})"

    def __str__(self):
        return self.render()

    def render(self) -> str:
        """Text form, terms by descending Y then Z then first-variable degree.

        >>> X, Y, Z = Poly3.gens()
        >>> (Y**2 * Z**2 + 2 * Y + 1).render()
        'Y^2*Z^2 + 2*Y + 1'
        """
        if not self._terms:
            return "0"
        order = sorted(self._terms, key=lambda e: (e[1], e[2], e[0]), reverse=True)
        names = (self._basis, "Y", "Z")
        out = []
        for exp in order:
            v = self._terms[exp]
            factors = []
            for name, e in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(v)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not out:
                out.append(("-" if v < 0 else "") + body)
            else:
                out.append((" - " if v < 0 else " + ") + body)
        return "".join(out)

    def to_json_obj(self) -> dict:
        """JSON-ready dict; terms sorted descending by (X, Y, Z) exponents."""
        name = self._basis
        return {
            "basis": name,
            "terms": [{"coeff": v, name: a, "Y": b, "Z": c}
                      for (a, b, c), v in self._terms.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> Poly3:
        basis = obj.get("basis")
        if basis not in BASES:
            raise ValueError(f"bad basis in polynomial JSON: {basis!r}")
        terms = {}
        for t in obj["terms"]:
            key = (int(t.get(basis, 0)), int(t.get("Y", 0)), int(t.get("Z", 0)))
            if key in terms:
                raise ValueError(f"duplicate monomial {key} in polynomial JSON")
            terms[key] = int(t["coeff"])
        return cls(terms, basis)

    @classmethod
    def from_json(cls, text: str) -> Poly3:
        return cls.from_json_obj(json.loads(text))


def _collapse_z(terms):
    acc: dict[Exponent, int] = {}
    for (a, b, _), v in terms.items():
        acc[(a, b, 0)] = acc.get((a, b, 0), 0) + v
    return acc


def poly_add(p: Poly3, q: Poly3) -> Poly3:
    return p + q


def poly_mul(p: Poly3, q: Poly3) -> Poly3:
    return p * q


def poly_scale(p: Poly3, c: int) -> Poly3:
    return p * c
