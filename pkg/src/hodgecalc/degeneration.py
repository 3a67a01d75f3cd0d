"""One-parameter degenerations with a normal crossing special fibre.

A :class:`Stratification` records the components E_i of the special fibre with
their multiplicities e_i, and the classes of the covers D_J of the strata
E_J = intersection of the E_j for j in J.  The classes are supplied by the user
(as class expressions or polynomials); nothing here intersects varieties.

Projectivity of the fibres is assumed, not checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from .classes import eval_class
from .hodge import HodgeStructure, validate_hs
from .ring import L, ONE, Poly, poly_sum, projective

Subset = FrozenSet[str]


class StratificationError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str
    subset: Optional[Subset]
    message: str

    def __str__(self) -> str:
        return self.message


def _key(J) -> Subset:
    if isinstance(J, str):
        return frozenset((J,))
    return frozenset(J)


def _label(J: Iterable[str]) -> str:
    return "{" + ",".join(sorted(J)) + "}"


@dataclass(frozen=True)
class Stratification:
    """Components with multiplicities and classes of the covers D_J.

    ``strata_d`` maps nonempty subsets of component ids to the class of D_J;
    absent subsets have class 0.  ``strata_e`` optionally gives the reduced
    strata E_J.  Where it is silent, E_J = D_J whenever gcd(e_j : j in J) = 1
    (the cover then has degree one).
    """

    components: Tuple[Tuple[str, int], ...]
    strata_d: Mapping[Subset, object]
    strata_e: Optional[Mapping[Subset, object]] = None
    relative_dim: Optional[int] = None
    _cache: Dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple((str(i), m) for i, m in self.components))
        object.__setattr__(self, "strata_d", {_key(J): c for J, c in self.strata_d.items()})
        if self.strata_e is not None:
            object.__setattr__(self, "strata_e", {_key(J): c for J, c in self.strata_e.items()})

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(i for i, _ in self.components)

    @property
    def multiplicities(self) -> Dict[str, int]:
        return dict(self.components)

    def class_d(self, J) -> Poly:
        J = _key(J)
        cache = self._cache
        if ("d", J) not in cache:
            c = self.strata_d.get(J)
            cache[("d", J)] = Poly() if c is None else eval_class(c)
        return cache[("d", J)]

    def class_e(self, J) -> Poly:
        J = _key(J)
        if self.strata_e is not None and J in self.strata_e:
            return eval_class(self.strata_e[J])
        if J not in self.strata_d:
            return Poly()
        mult = self.multiplicities
        if reduce(gcd, (mult[j] for j in J)) == 1:
            return self.class_d(J)
        raise StratificationError(
            f"reduced stratum E_{_label(J)} has no class: multiplicities have gcd > 1 "
            "and no explicit classE was given"
        )

    def nonzero_d(self) -> Dict[Subset, Poly]:
        out = {}
        for J in self.strata_d:
            p = self.class_d(J)
            if p:
                out[J] = p
        return out


@dataclass(frozen=True)
class BlowupCenter:
    """A blow-up centre Z inside the special fibre.

    ``A`` are the components containing Z, ``c`` the codimension of Z in the
    total space, and ``covers[B]`` the class of W_B, the cover of Z meet E_B,
    for B disjoint from A (missing B means class 0).
    """

    A: Subset
    c: int
    new_id: str
    covers: Mapping[Subset, object] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "A", _key(self.A))
        object.__setattr__(self, "covers", {frozenset(B): w for B, w in self.covers.items()})


# -- validation ----------------------------------------------------------------


def _structural_violations(s: Stratification) -> List[Violation]:
    out: List[Violation] = []
    seen = set()
    for cid, m in s.components:
        if cid in seen:
            out.append(Violation("duplicate-id", None, f"component id {cid!r} declared twice"))
        seen.add(cid)
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            out.append(Violation("multiplicity", None,
                                 f"component {cid!r} has non-positive multiplicity {m!r}"))
    if s.relative_dim is not None and (not isinstance(s.relative_dim, int) or s.relative_dim < 0):
        out.append(Violation("relative-dim", None, f"relative_dim must be >= 0, got {s.relative_dim!r}"))

    for name, table in (("D", s.strata_d), ("E", s.strata_e or {})):
        for J in table:
            if not J:
                out.append(Violation("empty-subset", J, f"stratum {name} keyed on the empty subset"))
                continue
            unknown = sorted(J - seen)
            if unknown:
                out.append(Violation("unknown-id", J,
                                     f"stratum {name}_{_label(J)} references undeclared id(s) {unknown}"))
            try:
                eval_class(table[J])
            except (ValueError, TypeError) as exc:
                out.append(Violation("bad-class", J, f"stratum {name}_{_label(J)}: {exc}"))
    return out


def validate_stratification(s: Stratification) -> List[Violation]:
    """Every invariant violation found in ``s``; an empty list means valid."""
    out = _structural_violations(s)
    if any(v.kind == "bad-class" for v in out):
        return out
    for J in s.nonzero_d():
        for r in range(1, len(J)):
            for sub in combinations(sorted(J), r):
                sub = frozenset(sub)
                if not s.class_d(sub):
                    out.append(Violation(
                        "closure", J,
                        f"closure violation: D_{_label(J)} is nonzero but D_{_label(sub)} is zero",
                    ))
    return out


def _require_structure(s: Stratification) -> None:
    # closure is reported by validate_stratification but not enforced here:
    # Euler-level pipelines legitimately pass through virtual cover classes
    if "structural" not in s._cache:
        s._cache["structural"] = _structural_violations(s)
    bad = s._cache["structural"]
    if bad:
        raise StratificationError("; ".join(str(v) for v in bad))


# -- nearby and vanishing fibres -----------------------------------------------


def _sign(m: int) -> int:
    return 1 if m % 2 == 0 else -1


def strata_level_class(s: Stratification, m: int) -> Poly:
    """[D(m)]: sum of [D_J] over |J| = m."""
    if m < 1:
        raise ValueError(f"stratum level must be >= 1, got {m}")
    _require_structure(s)
    return poly_sum((s.class_d(J), 1) for J in s.strata_d if len(J) == m)


def open_stratum_class(s: Stratification, J) -> Poly:
    """[D^0_J]: points of D_J lying on no further component (Moebius inversion)."""
    J = _key(J)
    if not J:
        raise ValueError("open stratum needs a nonempty subset")
    unknown = J - set(s.ids)
    if unknown:
        raise StratificationError(f"unknown component id(s) {sorted(unknown)}")
    return poly_sum(
        (s.class_d(Jp), _sign(len(Jp) - len(J))) for Jp in s.strata_d if J <= Jp
    )


def nearby_fibre(s: Stratification) -> Poly:
    """Motivic nearby fibre: sum over m of (-1)^(m-1) [D(m)] [P^(m-1)]."""
    _require_structure(s)
    # group by level first so each [P^(m-1)] multiplies once
    levels: Dict[int, List[Subset]] = {}
    for J in s.strata_d:
        levels.setdefault(len(J), []).append(J)
    return poly_sum(
        (poly_sum((s.class_d(J), 1) for J in Js) * projective(m - 1), _sign(m - 1))
        for m, Js in levels.items()
    )


def nearby_fibre_open(s: Stratification) -> Poly:
    """Nearby fibre from the open strata: sum of (-1)^(j-1) [D^0(j)] (uv - 1)^(j-1)."""
    _require_structure(s)
    t = L - ONE
    # every face below a stored stratum, so the identity survives missing closure
    faces = {F for J in s.strata_d for F in _subsets(J) if F}
    levels: Dict[int, List[Poly]] = {}
    for J in faces:
        levels.setdefault(len(J), []).append(open_stratum_class(s, J))
    return poly_sum(
        (poly_sum((p, 1) for p in ps) * t ** (j - 1), _sign(j - 1)) for j, ps in levels.items()
    )


def special_fibre_class(s: Stratification) -> Poly:
    """[E] by inclusion-exclusion over the reduced strata E_J."""
    _require_structure(s)
    keys = set(s.strata_d) | set(s.strata_e or {})
    return poly_sum((s.class_e(J), _sign(len(J) - 1)) for J in keys)


def vanishing_fibre(s: Stratification) -> Poly:
    return nearby_fibre(s) - special_fibre_class(s)


# -- blow-up move --------------------------------------------------------------


def _subsets(xs: Iterable[str]):
    xs = sorted(xs)
    for r in range(len(xs) + 1):
        for c in combinations(xs, r):
            yield frozenset(c)


def validate_center(s: Stratification, ctr: BlowupCenter) -> List[str]:
    problems = []
    ids = set(s.ids)
    if not ctr.A:
        problems.append("blow-up centre must lie on at least one component (A is empty)")
    if ctr.A - ids:
        problems.append(f"A references unknown component(s) {sorted(ctr.A - ids)}")
    if not isinstance(ctr.c, int) or ctr.c < max(1, len(ctr.A)):
        problems.append(f"codimension c = {ctr.c!r} must be >= max(1, |A|) = {max(1, len(ctr.A))}")
    if ctr.new_id in ids:
        problems.append(f"new_id {ctr.new_id!r} is already a component id")
    for B, w in ctr.covers.items():
        if B & ctr.A:
            problems.append(f"cover W_{_label(B)} meets A; B must be disjoint from A")
        if B - ids:
            problems.append(f"cover W_{_label(B)} references unknown component(s) {sorted(B - ids)}")
        try:
            eval_class(w)
        except (ValueError, TypeError) as exc:
            problems.append(f"cover W_{_label(B)}: {exc}")
    return problems


def blowup_transform(s: Stratification, ctr: BlowupCenter) -> Stratification:
    """Strata after blowing up a centre Z in the special fibre.

    For J = K u B with K inside A and B disjoint from A:
    [D'_J] = [D_J] + [W_B]([P^(c-k-1)] - 1), and the strata meeting the
    exceptional component are [D'_{J u *}] = [W_B][P^(c-k-1)], with P^(-1) = 0.
    Reduced strata are not carried over (they would need the classes of Z_B).
    """
    _require_structure(s)
    problems = validate_center(s, ctr)
    if problems:
        raise StratificationError("; ".join(problems))

    A, c, star = ctr.A, ctr.c, ctr.new_id
    covers = {B: eval_class(w) for B, w in ctr.covers.items()}
    covers = {B: w for B, w in covers.items() if w}

    old_keys = set(s.strata_d)
    for B in covers:
        for K in _subsets(A):
            if K | B:
                old_keys.add(K | B)

    new: Dict[Subset, Poly] = {}
    for J in old_keys:
        B = J - A
        cls = s.class_d(J)
        w = covers.get(B)
        if w is not None:
            cls = cls + w * (projective(c - len(J & A) - 1) - ONE)
        if cls:
            new[J] = cls
    for B, w in covers.items():
        for K in _subsets(A):
            cls = w * projective(c - len(K) - 1)
            if cls:
                new[K | B | {star}] = cls

    mult = s.multiplicities
    components = s.components + ((star, sum(mult[i] for i in A)),)
    return Stratification(components, new, None, s.relative_dim)


# -- reading off middle cohomology ---------------------------------------------


class ConcentrationError(ValueError):
    pass


def middle_hodge_numbers(psi: Poly, n: int) -> HodgeStructure:
    """Hodge numbers of the middle cohomology of the limit fibre.

    Assumes H^j of the limit fibre is a single class of type (j/2, j/2) for even
    j != n in [0, 2n] and vanishes for odd j != n.  Raises
    :class:`ConcentrationError` when ``psi`` contradicts that.
    """
    if n < 0:
        raise ValueError(f"relative dimension must be >= 0, got {n}")
    rest = psi
    for j in range(0, 2 * n + 1, 2):
        if j != n:
            rest = rest - L ** (j // 2)
    rest = rest.scale(_sign(n))
    negative = [(k, c) for k, c in rest.items() if c < 0]
    if negative:
        (p, q), c = negative[0]
        raise ConcentrationError(
            f"concentration hypothesis fails: coefficient {c} at ({p}, {q}) is negative"
        )
    h = HodgeStructure.unchecked(rest.terms)
    bad = validate_hs(h)
    if bad is not None:
        raise ConcentrationError(f"concentration hypothesis fails: {bad}")
    return h
