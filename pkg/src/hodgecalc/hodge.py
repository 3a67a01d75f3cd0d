"""Real Hodge structures stored as tables of Hodge numbers.

A single type covers classical structures (integer bidegrees) and fractional
ones (rational bidegrees whose sum is still an integer).  Mixed structures are
a direct sum over weights, so one table holds all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Tuple

from .ring import Poly, as_integer, as_rational

Bidegree = Tuple[Fraction, Fraction]


class HodgeError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str  # "negative", "integral-weight" or "symmetry"
    bidegree: Bidegree
    message: str

    def __str__(self) -> str:
        return self.message


class HodgeStructure:
    """Hodge numbers ``h^{p,q}`` keyed by rational bidegree.

    The constructor enforces nonnegativity, conjugation symmetry
    ``h^{p,q} = h^{q,p}`` and integral weights; :meth:`unchecked` skips that for
    intermediate values.
    """

    # _dims is unordered; _sorted caches the ordered view
    __slots__ = ("_dims", "_sorted")

    def __init__(self, dims: Mapping | None = None, *, check: bool = True):
        acc: dict = {}
        for (p, q), d in (dims or {}).items():
            key = (as_rational(p), as_rational(q))
            acc[key] = acc.get(key, 0) + as_integer(d)
        self._dims = {k: d for k, d in acc.items() if d != 0}
        self._sorted = None
        if check:
            bad = validate_hs(self)
            if bad is not None:
                raise HodgeError(str(bad))

    @classmethod
    def unchecked(cls, dims: Mapping | None = None) -> "HodgeStructure":
        return cls(dims, check=False)

    @classmethod
    def _raw(cls, acc: dict) -> "HodgeStructure":
        # trusted path: Fraction keys, no validation
        h = object.__new__(cls)
        h._dims = {k: d for k, d in acc.items() if d != 0}
        h._sorted = None
        return h

    def _ordered(self) -> dict:
        if self._sorted is None:
            self._sorted = dict(sorted(self._dims.items()))
        return self._sorted

    @property
    def dims(self) -> Mapping[Bidegree, int]:
        return dict(self._ordered())

    def items(self):
        return iter(self._ordered().items())

    def dim(self, p, q) -> int:
        return self._dims.get((as_rational(p), as_rational(q)), 0)

    def total_dim(self) -> int:
        return sum(self._dims.values())

    def is_classical(self) -> bool:
        return all(p.denominator == 1 and q.denominator == 1 for p, q in self._dims)

    def weights(self) -> dict:
        """Dimension of each weight-graded piece."""
        out: dict = {}
        for (p, q), d in self._dims.items():
            out[p + q] = out.get(p + q, 0) + d
        return dict(sorted(out.items()))

    def is_pure(self, k=None) -> bool:
        ws = set(self.weights())
        if k is None:
            return len(ws) <= 1
        return ws <= {as_rational(k)}

    def __eq__(self, other) -> bool:
        if not isinstance(other, HodgeStructure):
            return NotImplemented
        return self._dims == other._dims

    def __hash__(self) -> int:
        return hash(frozenset(self._dims.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"({p}, {q}): {d}" for (p, q), d in self.items())
        return f"HodgeStructure({{{body}}})"

    def __add__(self, other: "HodgeStructure") -> "HodgeStructure":
        return hs_sum(self, other)

    def __mul__(self, other: "HodgeStructure") -> "HodgeStructure":
        return hs_tensor(self, other)


def validate_hs(h: HodgeStructure) -> Violation | None:
    """Return the first violated invariant, or None when ``h`` is a valid structure."""
    dims = h._dims
    for (p, q), d in h.items():
        if d < 0:
            return Violation("negative", (p, q), f"negative dimension {d} at ({p}, {q})")
        w = p + q
        if w.denominator != 1:
            return Violation(
                "integral-weight", (p, q),
                f"integral-weight violation at ({p}, {q}): p+q = {w} is not an integer",
            )
        if dims.get((q, p), 0) != d:
            return Violation(
                "symmetry", (p, q),
                f"symmetry violation at ({p}, {q}): h^({p},{q}) = {d} "
                f"but h^({q},{p}) = {dims.get((q, p), 0)}",
            )
    return None


UNIT = HodgeStructure({(0, 0): 1})


def hn_poly(h: HodgeStructure) -> Poly:
    """Hodge number polynomial: sum of h^{p,q} u^p v^q."""
    return Poly(h._dims)


def _combine(a: HodgeStructure, b: HodgeStructure, sign: int) -> HodgeStructure:
    acc: dict = {}
    for (p, q), d in a._dims.items():
        for (r, s), e in b._dims.items():
            key = (r + sign * p, s + sign * q)
            acc[key] = acc.get(key, 0) + d * e
    return HodgeStructure._raw(acc)


def hs_sum(a: HodgeStructure, b: HodgeStructure) -> HodgeStructure:
    acc = dict(a._dims)
    for k, d in b._dims.items():
        acc[k] = acc.get(k, 0) + d
    return HodgeStructure._raw(acc)


def hs_tensor(a: HodgeStructure, b: HodgeStructure) -> HodgeStructure:
    return _combine(a, b, 1)


def hs_hom(a: HodgeStructure, b: HodgeStructure) -> HodgeStructure:
    """Hom(a, b): bidegrees of ``b`` minus bidegrees of ``a``."""
    return _combine(a, b, -1)


def dual(a: HodgeStructure) -> HodgeStructure:
    return hs_hom(a, UNIT)


def from_poly(p: Poly, *, check: bool = True) -> HodgeStructure:
    """Read a polynomial's coefficients back as a table of Hodge numbers."""
    return HodgeStructure(p.terms, check=check)
