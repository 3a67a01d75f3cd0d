"""Hodge structures with a finite-order automorphism, and fractional structures.

An :class:`EquivariantHodgeStructure` stores, for each weight k and each angle
a in [0, 1), the Hodge numbers of the eigenspace where the automorphism acts by
exp(2 pi i a).  :func:`to_fractional` is the equivalence with fractional Hodge
structures: the a = 0 part keeps its bidegrees, and for a > 0 the type (p, k-p)
moves to (p + a, k - p + 1 - a), of weight k + 1.

Convolution is the tensor product transported through that equivalence.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor
from typing import Dict, Mapping, Tuple

from .hodge import HodgeError, HodgeStructure, hn_poly, hs_tensor, validate_hs
from .ring import Poly, as_integer, as_rational

PieceKey = Tuple[int, Fraction]


class EquivariantHodgeStructure:
    """Eigenspace Hodge numbers keyed by ``(weight, angle)``.

    ``pieces[(k, a)]`` maps integer bidegrees (p, q) with p + q = k to
    dimensions.  The constructor checks the conjugation pairing
    h_a^{p,q} = h_{1-a}^{q,p} (angles mod 1).
    """

    __slots__ = ("_pieces",)

    def __init__(self, pieces: Mapping | None = None, *, check: bool = True):
        acc: Dict[PieceKey, Dict[Tuple[int, int], int]] = {}
        for (k, a), table in (pieces or {}).items():
            k = as_integer(k)
            a = as_rational(a)
            for (p, q), d in table.items():
                p, q, d = as_integer(p), as_integer(q), as_integer(d)
                slot = acc.setdefault((k, a), {})
                slot[(p, q)] = slot.get((p, q), 0) + d
        self._pieces = {}
        for key in sorted(acc):
            table = {pq: d for pq, d in sorted(acc[key].items()) if d != 0}
            if table:
                self._pieces[key] = table
        if check:
            problem = self.violation()
            if problem:
                raise HodgeError(problem)

    @classmethod
    def unchecked(cls, pieces=None) -> "EquivariantHodgeStructure":
        return cls(pieces, check=False)

    def violation(self) -> str | None:
        for (k, a), table in self._pieces.items():
            if not 0 <= a < 1:
                return f"angle {a} outside [0, 1)"
            for (p, q), d in table.items():
                if d < 0:
                    return f"negative dimension {d} at weight {k}, angle {a}, ({p}, {q})"
                if p + q != k:
                    return f"bidegree ({p}, {q}) does not have weight {k}"
                partner = self._pieces.get((k, (1 - a) % 1), {}).get((q, p), 0)
                if partner != d:
                    return (f"conjugation pairing violated: h^({p},{q}) = {d} at angle {a} "
                            f"but h^({q},{p}) = {partner} at angle {(1 - a) % 1}")
        return None

    @property
    def pieces(self) -> Dict[PieceKey, Dict[Tuple[int, int], int]]:
        return {key: dict(t) for key, t in self._pieces.items()}

    def total_dim(self) -> int:
        return sum(sum(t.values()) for t in self._pieces.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, EquivariantHodgeStructure):
            return NotImplemented
        return self._pieces == other._pieces

    def __hash__(self) -> int:
        return hash(tuple((k, tuple(t.items())) for k, t in self._pieces.items()))

    def __repr__(self) -> str:
        parts = []
        for (k, a), t in self._pieces.items():
            body = ", ".join(f"({p}, {q}): {d}" for (p, q), d in t.items())
            parts.append(f"(k={k}, a={a}): {{{body}}}")
        return f"EquivariantHodgeStructure({{{', '.join(parts)}}})"

    def __matmul__(self, other: "EquivariantHodgeStructure") -> "EquivariantHodgeStructure":
        return convolution(self, other)


def to_fractional(e: EquivariantHodgeStructure) -> HodgeStructure:
    acc: dict = {}
    for (k, a), table in e._pieces.items():
        for (p, q), d in table.items():
            key = (Fraction(p), Fraction(q)) if a == 0 else (p + a, k - p + 1 - a)
            acc[key] = acc.get(key, 0) + d
    return HodgeStructure._raw(acc)


def from_fractional(h: HodgeStructure) -> EquivariantHodgeStructure:
    """Inverse of :func:`to_fractional`; the automorphism is exp(2 pi i b) on type (b, w - b)."""
    return _from_fractional(h, validate_hs(h) is None)


def _from_fractional(h: HodgeStructure, check: bool) -> EquivariantHodgeStructure:
    pieces: dict = {}
    for (b, c), d in h._dims.items():
        w = b + c
        if w.denominator != 1:
            raise HodgeError(f"bidegree ({b}, {c}) has non-integral weight {w}")
        p = floor(b)
        a = b - p
        k = int(w) if a == 0 else int(w) - 1
        slot = pieces.setdefault((k, a), {})
        slot[(p, k - p)] = slot.get((p, k - p), 0) + d
    return EquivariantHodgeStructure(pieces, check=check)


def convolution(x: EquivariantHodgeStructure, y: EquivariantHodgeStructure) -> EquivariantHodgeStructure:
    # the tensor product of two valid structures is valid; skip re-checking
    return _from_fractional(hs_tensor(to_fractional(x), to_fractional(y)), False)


def equiv_hn_poly(e: EquivariantHodgeStructure) -> Poly:
    """Equivariant Hodge number polynomial, an element of the rational-exponent ring."""
    return hn_poly(to_fractional(e))


def thom_sebastiani(phi_f: Poly, phi_g: Poly) -> Poly:
    """Vanishing-fibre polynomial of f(x) + g(y) from those of f and g."""
    return -(phi_f * phi_g)


def thom_sebastiani_structure(
    milnor_f: EquivariantHodgeStructure, milnor_g: EquivariantHodgeStructure
) -> EquivariantHodgeStructure:
    """Reduced Milnor-fibre cohomology of f + g, given those of f and g.

    With phn(H^n(F)) = (-1)^n ehn(phi_f) and the product rule for the vanishing
    fibres, the signs cancel: H^(n_f + n_g + 1) of the join is the convolution.
    """
    return convolution(milnor_f, milnor_g)


def milnor_from_vanishing(phi: Poly, n: int) -> Poly:
    """phn of the reduced Milnor-fibre cohomology: (-1)^n times the vanishing fibre."""
    return phi if n % 2 == 0 else -phi


def a_k_milnor(k: int) -> EquivariantHodgeStructure:
    """Reduced H^0 of the Milnor fibre of x^(k+1): k points' worth of eigenvalues."""
    if k < 1:
        raise ValueError(f"A_k needs k >= 1, got {k}")
    return EquivariantHodgeStructure(
        {(0, Fraction(j, k + 1)): {(0, 0): 1} for j in range(1, k + 1)}
    )
