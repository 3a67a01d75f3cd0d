"""Stratifications of standard degenerations, built from their geometry.

These are ordinary inputs to :mod:`hodgecalc.degeneration`; the strata classes
are written down from the configuration of the special fibre, never from the
expected answers.
"""

from __future__ import annotations

from itertools import combinations

from .degeneration import Stratification
from .classes import BinOp, Leaf, Scale

POINT = Leaf("point")
LINE = Leaf("projective", (1,))
P1XP1 = Leaf("p1xp1")


def plane_curve_lines(d: int) -> Stratification:
    """Plane curves of degree d degenerating to d general lines.

    The special fibre is reduced: d lines, meeting pairwise in one point, with
    no three through a point.
    """
    if d < 1:
        raise ValueError("need at least one line")
    ids = [f"L{i}" for i in range(1, d + 1)]
    strata = {frozenset((i,)): LINE for i in ids}
    strata.update({frozenset(pair): POINT for pair in combinations(ids, 2)})
    return Stratification(tuple((i, 1) for i in ids), strata, relative_dim=1)


def surface_planes(d: int) -> Stratification:
    """Degree-d surfaces in P^3 degenerating to d general planes.

    The total space has d ordinary double points on each of the C(d,2) lines
    E_i meet E_k.  After blowing them up, each plane E_i is P^2 blown up in
    d(d-1) points, and each double point becomes a quadric F = P^1 x P^1 that
    meets the two planes through it in a line each and both of them together
    in a point.
    """
    if d < 1:
        raise ValueError("need at least one plane")
    planes = [f"E{i}" for i in range(1, d + 1)]
    strata: dict = {
        frozenset((e,)): Leaf("blowup_p2", (d * (d - 1),)) for e in planes
    }
    quadrics = []
    for a, b in combinations(planes, 2):
        strata[frozenset((a, b))] = LINE
        for s in range(1, d + 1):
            f = f"F_{a}_{b}_{s}"
            quadrics.append(f)
            strata[frozenset((f,))] = P1XP1
            strata[frozenset((a, f))] = LINE
            strata[frozenset((b, f))] = LINE
            strata[frozenset((a, b, f))] = POINT
    for triple in combinations(planes, 3):
        strata[frozenset(triple)] = POINT
    components = tuple((c, 1) for c in planes + quadrics)
    return Stratification(components, strata, relative_dim=2)


def k3_two_quadrics() -> Stratification:
    """Quartic K3 surfaces degenerating to two transverse quadrics.

    The 16 double points of the total space are blown up.  The quadrics Q1, Q2
    become P^1 x P^1 blown up in 16 points, each double point gives a quadric
    F_j meeting Q1 and Q2 in lines and both in a point, and Q1 meets Q2 in an
    elliptic curve.
    """
    # each point blown up adds one copy of the affine line's class
    q1_blown = BinOp("+", P1XP1, Scale(16, Leaf("lefschetz", (1,))))
    strata: dict = {
        frozenset(("Q1",)): q1_blown,
        frozenset(("Q2",)): q1_blown,
        frozenset(("Q1", "Q2")): Leaf("curve", (1,)),
    }
    fs = [f"F{j}" for j in range(1, 17)]
    for f in fs:
        strata[frozenset((f,))] = P1XP1
        strata[frozenset(("Q1", f))] = LINE
        strata[frozenset(("Q2", f))] = LINE
        strata[frozenset(("Q1", "Q2", f))] = POINT
    components = tuple((c, 1) for c in ["Q1", "Q2"] + fs)
    return Stratification(components, strata, relative_dim=2)

