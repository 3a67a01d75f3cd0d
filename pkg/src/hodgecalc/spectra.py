"""Spectral invariants of isolated singularities and Jordan data of monodromy.

The input for the spectral side is the equivariant Hodge number polynomial
sum m(alpha, w) u^alpha v^(w - alpha) of the reduced Milnor-fibre cohomology.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Tuple

from .hodge import HodgeStructure
from .ring import Poly, TPoly, as_integer, as_rational, format_rational


class SpectrumTable:
    """Multiplicities m(alpha, w); zero entries are dropped, negative ones allowed."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping | None = None):
        acc: dict = {}
        for (alpha, w), m in (entries or {}).items():
            key = (as_rational(alpha), as_integer(w))
            acc[key] = acc.get(key, 0) + as_integer(m)
        self._entries = {k: acc[k] for k in sorted(acc) if acc[k]}

    @property
    def entries(self) -> Dict[Tuple[Fraction, int], int]:
        return dict(self._entries)

    def items(self):
        return iter(self._entries.items())

    def total(self) -> int:
        return sum(self._entries.values())

    def check_nonnegative(self) -> None:
        """Raise unless the table can come from an honest cohomology group."""
        for (alpha, w), m in self._entries.items():
            if m < 0:
                raise ValueError(f"negative multiplicity {m} at (alpha={alpha}, w={w})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpectrumTable):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"({a}, {w}): {m}" for (a, w), m in self._entries.items())
        return f"SpectrumTable({{{body}}})"

    def __len__(self) -> int:
        return len(self._entries)

    def to_records(self) -> list:
        return [{"alpha": format_rational(a), "w": w, "m": m} for (a, w), m in self._entries.items()]

    def format_table(self) -> str:
        rows = [(format_rational(a), str(w), str(m)) for (a, w), m in self._entries.items()]
        header = ("alpha", "w", "m")
        widths = [max(len(r[i]) for r in rows + [header]) for i in range(3)]
        lines = ["  ".join(h.rjust(widths[i]) for i, h in enumerate(header))]
        lines += ["  ".join(c.rjust(widths[i]) for i, c in enumerate(r)) for r in rows]
        return "\n".join(lines)


def m_invariants(p: Poly) -> SpectrumTable:
    entries = {}
    for (eu, ev), c in p.items():
        w = eu + ev
        if w.denominator != 1:
            raise ValueError(f"term u^{eu} v^{ev} has non-integral weight {w}")
        entries[(eu, int(w))] = c
    return SpectrumTable(entries)


def characteristic_pairs(t: SpectrumTable, n: int) -> SpectrumTable:
    return SpectrumTable({(n - a, w): m for (a, w), m in t.items()})


def spectral_pairs(t: SpectrumTable) -> SpectrumTable:
    out: dict = {}
    for (a, w), m in t.items():
        key = (a, w + 1) if a.denominator == 1 else (a, w)
        out[key] = out.get(key, 0) + m
    return SpectrumTable(out)


def saito_spectrum(p: Poly) -> TPoly:
    return p.specialize_v()


def varchenko_spectrum(p: Poly) -> TPoly:
    return p.specialize_v().shift(-1)


# -- monodromy weight filtration -----------------------------------------------


class WeightDims:
    """Dimensions g(w) of the graded pieces of a limit structure on H^k.

    Either the full grading (symmetric about k) or only the weights >= k may
    be given; the missing half is filled in by symmetry.  Redundant data that
    disagrees is an error.
    """

    __slots__ = ("k", "g")

    def __init__(self, k: int, g: Mapping[int, int]):
        self.k = as_integer(k)
        given = {}
        for w, d in g.items():
            w, d = as_integer(w), as_integer(d)
            if d < 0:
                raise ValueError(f"negative dimension {d} at weight {w}")
            if d:
                given[w] = given.get(w, 0) + d
        full = dict(given)
        if all(w >= self.k for w in given):
            for w, d in given.items():
                full[2 * self.k - w] = d
        else:
            for w, d in given.items():
                mirror = given.get(2 * self.k - w, 0)
                if mirror != d:
                    raise ValueError(
                        f"weight symmetry violated about k={self.k}: "
                        f"g({w}) = {d} but g({2 * self.k - w}) = {mirror}"
                    )
        self.g = dict(sorted(full.items()))

    @classmethod
    def from_hodge(cls, h: HodgeStructure, k: int) -> "WeightDims":
        weights = {}
        for w, d in h.weights().items():
            if w.denominator != 1:
                raise ValueError(f"non-integral weight {w}")
            weights[int(w)] = d
        return cls(k, weights)

    def total(self) -> int:
        return sum(self.g.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightDims):
            return NotImplemented
        return self.k == other.k and self.g == other.g

    def __repr__(self) -> str:
        return f"WeightDims(k={self.k}, g={self.g})"


def jordan_block_counts(wd: WeightDims) -> Dict[int, int]:
    """Number of Jordan blocks of N of each size m: dim of the primitive part P_(k+m-1).

    count(m) = g(k+m-1) - g(k+m+1).  Only nonzero counts are returned.
    """
    if not wd.g:
        return {}
    g, k = wd.g, wd.k
    top = max(g)
    counts = {}
    for m in range(1, top - k + 2):
        c = g.get(k + m - 1, 0) - g.get(k + m + 1, 0)
        if c < 0:
            raise ValueError(
                f"not a monodromy weight grading: primitive part of weight {k + m - 1} "
                f"would have dimension {c}"
            )
        if c:
            counts[m] = c
    assert sum(m * c for m, c in counts.items()) == wd.total()
    return counts
