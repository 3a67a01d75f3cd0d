"""JSON file formats: degenerations, blow-up moves, Hodge tables, spectra.

Rationals are written as ``"p/q"`` strings (plain integers are accepted on
input).  Polynomials and class expressions are strings in the grammars of
:mod:`hodgecalc.ring` and :mod:`hodgecalc.classes`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List

from .classes import ClassSyntaxError, Literal, eval_class, parse_class
from .degeneration import BlowupCenter, Stratification, _structural_violations
from .equivariant import EquivariantHodgeStructure, equiv_hn_poly, milnor_from_vanishing
from .hodge import HodgeError, HodgeStructure
from .ring import Poly, PolySyntaxError, as_rational, format_poly, format_rational, parse_poly
from .spectra import WeightDims


class SchemaError(ValueError):
    pass


def _require(obj: dict, key: str, where: str):
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise SchemaError(f"{where}: missing key {key!r}")
    return obj[key]


def _int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"{where}: expected an integer, got {x!r}")
    return x


def _rational(x, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise SchemaError(f"{where}: expected an integer or \"p/q\" string, got {x!r}")
    try:
        return as_rational(x)
    except (ValueError, TypeError) as exc:
        raise SchemaError(f"{where}: {exc}") from None


def _ids(x, where: str) -> frozenset:
    if not isinstance(x, list) or not all(isinstance(i, str) for i in x):
        raise SchemaError(f"{where}: expected a list of component ids")
    return frozenset(x)


def load_poly(text, where: str = "polynomial") -> Poly:
    if not isinstance(text, str):
        raise SchemaError(f"{where}: expected a polynomial string")
    try:
        return parse_poly(text)
    except PolySyntaxError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def load_class(text, where: str):
    if isinstance(text, int) and not isinstance(text, bool):
        return Literal(Poly.const(text))
    if not isinstance(text, str):
        raise SchemaError(f"{where}: expected a class expression string")
    try:
        return parse_class(text)
    except (ClassSyntaxError, ValueError) as exc:
        raise SchemaError(f"{where}: {exc}") from None


def class_to_text(cls) -> str:
    return f"poly({format_poly(eval_class(cls))})"


# -- degenerations -------------------------------------------------------------


def stratification_from_json(doc: Any) -> Stratification:
    comps = _require(doc, "components", "degeneration")
    if not isinstance(comps, list):
        raise SchemaError("degeneration: 'components' must be a list")
    components = []
    for n, c in enumerate(comps):
        where = f"components[{n}]"
        cid = _require(c, "id", where)
        if not isinstance(cid, str):
            raise SchemaError(f"{where}: id must be a string")
        components.append((cid, _int(c.get("multiplicity", 1), f"{where}.multiplicity")))

    strata_d: Dict[frozenset, Any] = {}
    strata_e: Dict[frozenset, Any] = {}
    records = doc.get("strata", [])
    if not isinstance(records, list):
        raise SchemaError("degeneration: 'strata' must be a list")
    for n, r in enumerate(records):
        where = f"strata[{n}]"
        J = _ids(_require(r, "subset", where), f"{where}.subset")
        if J in strata_d:
            raise SchemaError(f"{where}: subset {sorted(J)} listed twice")
        strata_d[J] = load_class(_require(r, "classD", where), f"{where}.classD")
        if "classE" in r:
            strata_e[J] = load_class(r["classE"], f"{where}.classE")

    rel = doc.get("relative_dim")
    if rel is not None:
        rel = _int(rel, "relative_dim")
    s = Stratification(tuple(components), strata_d, strata_e or None, rel)
    bad = _structural_violations(s)
    if bad:
        raise SchemaError("; ".join(str(v) for v in bad))
    return s


def _subset_order(J) -> tuple:
    return (len(J), sorted(J))


def stratification_to_json(s: Stratification) -> dict:
    strata = []
    for J in sorted(s.strata_d, key=_subset_order):
        p = s.class_d(J)
        if not p:
            continue
        rec = {"subset": sorted(J), "classD": f"poly({format_poly(p)})"}
        if s.strata_e and J in s.strata_e:
            rec["classE"] = class_to_text(s.strata_e[J])
        strata.append(rec)
    doc: Dict[str, Any] = {
        "components": [{"id": i, "multiplicity": m} for i, m in s.components],
        "strata": strata,
    }
    if s.relative_dim is not None:
        doc["relative_dim"] = s.relative_dim
    return doc


def blowup_from_json(doc: Any) -> BlowupCenter:
    A = _ids(_require(doc, "A", "blow-up move"), "A")
    c = _int(_require(doc, "c", "blow-up move"), "c")
    new_id = _require(doc, "new_id", "blow-up move")
    if not isinstance(new_id, str):
        raise SchemaError("blow-up move: new_id must be a string")
    covers = {}
    records = doc.get("covers", [])
    if not isinstance(records, list):
        raise SchemaError("blow-up move: 'covers' must be a list")
    for n, r in enumerate(records):
        where = f"covers[{n}]"
        B = _ids(_require(r, "B", where), f"{where}.B")
        covers[B] = load_class(_require(r, "classW", where), f"{where}.classW")
    return BlowupCenter(A, c, new_id, covers)


# -- Hodge tables --------------------------------------------------------------


def hodge_records(h: HodgeStructure) -> List[dict]:
    return [{"p": format_rational(p), "q": format_rational(q), "dim": d} for (p, q), d in h.items()]


def hodge_from_records(records: Any, where: str = "hodge") -> HodgeStructure:
    if not isinstance(records, list):
        raise SchemaError(f"{where}: expected a list of {{p, q, dim}} records")
    dims: dict = {}
    for n, r in enumerate(records):
        w = f"{where}[{n}]"
        key = (_rational(_require(r, "p", w), f"{w}.p"), _rational(_require(r, "q", w), f"{w}.q"))
        dims[key] = dims.get(key, 0) + _int(_require(r, "dim", w), f"{w}.dim")
    try:
        return HodgeStructure(dims)
    except HodgeError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def equivariant_from_records(records: Any, where: str = "equivariant structure") -> EquivariantHodgeStructure:
    if not isinstance(records, list):
        raise SchemaError(f"{where}: expected a list of {{weight, angle, hodge}} records")
    pieces: dict = {}
    for n, r in enumerate(records):
        w = f"{where}[{n}]"
        k = _int(_require(r, "weight", w), f"{w}.weight")
        a = _rational(r.get("angle", 0), f"{w}.angle")
        slot = pieces.setdefault((k, a), {})
        table = _require(r, "hodge", w)
        if not isinstance(table, list):
            raise SchemaError(f"{w}.hodge: expected a list of {{p, q, dim}} records")
        for m, h in enumerate(table):
            hw = f"{w}.hodge[{m}]"
            pq = (_int(_require(h, "p", hw), f"{hw}.p"), _int(_require(h, "q", hw), f"{hw}.q"))
            slot[pq] = slot.get(pq, 0) + _int(_require(h, "dim", hw), f"{hw}.dim")
    try:
        return EquivariantHodgeStructure(pieces)
    except HodgeError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def equivariant_records(e: EquivariantHodgeStructure) -> List[dict]:
    return [
        {"weight": k, "angle": format_rational(a),
         "hodge": [{"p": p, "q": q, "dim": d} for (p, q), d in table.items()]}
        for (k, a), table in e.pieces.items()
    ]


def weight_dims_from_json(doc: Any) -> WeightDims:
    k = _int(_require(doc, "k", "weight data"), "k")
    if "g" in doc:
        g = doc["g"]
        if not isinstance(g, dict):
            raise SchemaError("weight data: 'g' must map weights to dimensions")
        grading = {}
        for w, d in g.items():
            try:
                key = int(w)
            except ValueError:
                raise SchemaError(f"weight data: weight {w!r} is not an integer") from None
            grading[key] = _int(d, f"g[{w}]")
    elif "hodge" in doc:
        grading = {}
        for w, d in hodge_from_records(doc["hodge"]).weights().items():
            if w.denominator != 1:
                raise SchemaError(f"weight data: non-integral weight {w}")
            grading[int(w)] = d
    else:
        raise SchemaError("weight data: need 'g' or 'hodge'")
    try:
        return WeightDims(k, grading)
    except ValueError as exc:
        raise SchemaError(f"weight data: {exc}") from None


def weight_dims_to_json(wd: WeightDims) -> dict:
    return {"k": wd.k, "g": {str(w): d for w, d in wd.g.items()}}


# -- singularities -------------------------------------------------------------


def singularity_from_json(doc: Any):
    """Return ``(n, vanishing, milnor)`` polynomials from a singularity file.

    Accepted shapes: a bare list of equivariant records (the reduced Milnor
    cohomology; n unknown), or an object with ``n`` and one of ``vanishing``
    (polynomial), ``milnor`` (records) or ``milnor_poly`` (polynomial).
    """
    if isinstance(doc, list):
        return None, None, equiv_hn_poly(equivariant_from_records(doc))
    if not isinstance(doc, dict):
        raise SchemaError("singularity: expected an object or a list of records")
    n = doc.get("n")
    if n is not None:
        n = _int(n, "n")
    given = [k for k in ("vanishing", "milnor", "milnor_poly") if k in doc]
    if len(given) != 1:
        raise SchemaError("singularity: give exactly one of 'vanishing', 'milnor', 'milnor_poly'")
    if given[0] == "vanishing":
        phi = load_poly(doc["vanishing"], "vanishing")
        milnor = milnor_from_vanishing(phi, n) if n is not None else None
        return n, phi, milnor
    if given[0] == "milnor":
        milnor = equiv_hn_poly(equivariant_from_records(doc["milnor"], "milnor"))
    else:
        milnor = load_poly(doc["milnor_poly"], "milnor_poly")
    phi = milnor_from_vanishing(milnor, n) if n is not None else None
    return n, phi, milnor


def poly_terms(p: Poly) -> List[dict]:
    return [{"u": format_rational(eu), "v": format_rational(ev), "coeff": c} for (eu, ev), c in p.items()]
