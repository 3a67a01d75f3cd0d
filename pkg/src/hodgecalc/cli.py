"""Command-line front end.

Exit status: 0 on success, 1 when a computation's precondition fails, 2 when
the input cannot be read or parsed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, TextIO

from .classes import ClassSyntaxError, eval_class, parse_class
from .degeneration import (
    blowup_transform,
    middle_hodge_numbers,
    nearby_fibre,
    nearby_fibre_open,
    validate_stratification,
    vanishing_fibre,
)
from .equivariant import thom_sebastiani
from .formats import (
    SchemaError,
    blowup_from_json,
    hodge_records,
    poly_terms,
    singularity_from_json,
    stratification_from_json,
    stratification_to_json,
    weight_dims_from_json,
    weight_dims_to_json,
)
from .ring import Poly, PolySyntaxError, TPoly, format_poly, parse_poly
from .spectra import (
    WeightDims,
    characteristic_pairs,
    jordan_block_counts,
    m_invariants,
    saito_spectrum,
    spectral_pairs,
    varchenko_spectrum,
)

COMMANDS = ("poly", "class", "nearby", "vanishing", "blowup", "jordan", "spectrum", "ts")


class InputError(Exception):
    """Unreadable or malformed input; exit status 2."""


class ComputationError(Exception):
    """A module precondition failed; exit status 1."""


@dataclass
class JobRequest:
    command: str
    inputs: List[str]
    fmt: str = "text"
    options: Dict[str, Any] = field(default_factory=dict)


# -- input helpers -------------------------------------------------------------


def _read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from None


def _load(loader, doc, source: str):
    try:
        return loader(doc)
    except SchemaError as exc:
        raise InputError(f"{source}: {exc}") from None


def _json_or_file(arg: str) -> Any:
    if os.path.exists(arg) or not arg.lstrip().startswith("{"):
        return _read_json(arg)
    try:
        return json.loads(arg)
    except json.JSONDecodeError as exc:
        raise InputError(f"inline JSON: {exc}") from None


# -- rendering -----------------------------------------------------------------


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _render_poly(p: Poly, fmt: str, key: str = "poly") -> str:
    if fmt == "machine":
        return _dump({key: format_poly(p), "terms": poly_terms(p)})
    return format_poly(p)


def _render_tpoly(p: TPoly, fmt: str) -> str:
    if fmt == "machine":
        return _dump({"tpoly": str(p)})
    return str(p)


# -- commands ------------------------------------------------------------------


def _cmd_poly(req: JobRequest) -> str:
    try:
        p = parse_poly(req.inputs[0])
    except PolySyntaxError as exc:
        raise InputError(str(exc)) from None
    if req.options.get("invert"):
        p = p.invert_vars()
    if req.options.get("specialize_v"):
        return _render_tpoly(p.specialize_v(), req.fmt)
    return _render_poly(p, req.fmt)


def _cmd_class(req: JobRequest) -> str:
    try:
        expr = parse_class(req.inputs[0])
    except (ClassSyntaxError, ValueError) as exc:
        raise InputError(str(exc)) from None
    return _render_poly(eval_class(expr), req.fmt)


def _load_degeneration(path: str):
    return _load(stratification_from_json, _read_json(path), path)


def _cmd_nearby(req: JobRequest, err: TextIO) -> str:
    s = _load_degeneration(req.inputs[0])
    for v in validate_stratification(s):
        err.write(f"warning: {v}\n")
    psi = nearby_fibre(s)
    if req.options.get("check_open"):
        other = nearby_fibre_open(s)
        if other != psi:
            raise ComputationError(
                f"closed and open strata forms disagree: {format_poly(psi)} != {format_poly(other)}"
            )
    n = req.options.get("middle")
    if n is None:
        return _render_poly(psi, req.fmt, "psi")
    h = middle_hodge_numbers(psi, n)
    wd = WeightDims.from_hodge(h, n)
    if req.fmt == "machine":
        doc = {"psi": format_poly(psi), "hodge": hodge_records(h)}
        doc.update(weight_dims_to_json(wd))
        return _dump(doc)
    lines = [format_poly(psi), f"H^{n} of the limit fibre:"]
    lines += [f"  h^({p},{q}) = {d}" for (p, q), d in h.items()]
    return "\n".join(lines)


def _cmd_vanishing(req: JobRequest) -> str:
    s = _load_degeneration(req.inputs[0])
    return _render_poly(vanishing_fibre(s), req.fmt, "phi")


def _cmd_blowup(req: JobRequest) -> str:
    s = _load_degeneration(req.inputs[0])
    ctr = _load(blowup_from_json, _read_json(req.inputs[1]), req.inputs[1])
    doc = stratification_to_json(blowup_transform(s, ctr))
    if req.fmt == "machine":
        return _dump(doc)
    return json.dumps(doc, indent=2, sort_keys=True)


def _cmd_jordan(req: JobRequest) -> str:
    wd = _load(weight_dims_from_json, _json_or_file(req.inputs[0]), req.inputs[0])
    counts = jordan_block_counts(wd)
    if req.fmt == "machine":
        return _dump({"blocks": {str(m): c for m, c in counts.items()}})
    if not counts:
        return "no Jordan blocks"
    return "\n".join(f"size {m}: {c}" for m, c in counts.items())


def _milnor_poly(path: str) -> Poly:
    n, _, milnor = _load(singularity_from_json, _read_json(path), path)
    if milnor is None:
        raise InputError(f"{path}: 'n' is required to turn a vanishing fibre into Milnor data")
    return milnor


def _cmd_spectrum(req: JobRequest) -> str:
    p = _milnor_poly(req.inputs[0])
    opts = req.options
    if opts.get("saito"):
        return _render_tpoly(saito_spectrum(p), req.fmt)
    if opts.get("varchenko"):
        return _render_tpoly(varchenko_spectrum(p), req.fmt)
    table = m_invariants(p)
    if opts.get("pairs"):
        table = spectral_pairs(table)
    elif opts.get("char") is not None:
        table = characteristic_pairs(table, opts["char"])
    if req.fmt == "machine":
        return _dump({"entries": table.to_records()})
    return table.format_table()


def _cmd_ts(req: JobRequest) -> str:
    parts = []
    for path in req.inputs[:2]:
        n, phi, _ = _load(singularity_from_json, _read_json(path), path)
        if phi is None or n is None:
            raise InputError(f"{path}: Thom-Sebastiani needs 'n' and the vanishing fibre")
        parts.append((n, phi))
    (n_f, phi_f), (n_g, phi_g) = parts
    phi = thom_sebastiani(phi_f, phi_g)
    if req.fmt == "machine":
        return _dump({"n": n_f + n_g + 1, "vanishing": format_poly(phi)})
    return format_poly(phi)


def run(req: JobRequest, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Execute one request; never raises for bad input."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        if req.command == "poly":
            text = _cmd_poly(req)
        elif req.command == "class":
            text = _cmd_class(req)
        elif req.command == "nearby":
            text = _cmd_nearby(req, err)
        elif req.command == "vanishing":
            text = _cmd_vanishing(req)
        elif req.command == "blowup":
            text = _cmd_blowup(req)
        elif req.command == "jordan":
            text = _cmd_jordan(req)
        elif req.command == "spectrum":
            text = _cmd_spectrum(req)
        elif req.command == "ts":
            text = _cmd_ts(req)
        else:
            raise InputError(f"unknown command {req.command!r}")
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except (ComputationError, ValueError, ArithmeticError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    except Exception as exc:  # noqa: BLE001 - the CLI reports, never tracebacks
        err.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return 1
    out.write(text + "\n")
    return 0


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt_parent = argparse.ArgumentParser(add_help=False)
    fmt_parent.add_argument("--format", choices=("text", "machine"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="hodgecalc",
        description="Hodge-Euler polynomials, motivic nearby fibres and singularity spectra.",
    )
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[fmt_parent], help="normalise a polynomial")
    p.add_argument("expr")
    p.add_argument("--specialize-v", action="store_true", help="substitute u=t, v=1")
    p.add_argument("--invert", action="store_true", help="substitute u->1/u, v->1/v")

    p = sub.add_parser("class", parents=[fmt_parent], help="evaluate a class expression")
    p.add_argument("expr")

    p = sub.add_parser("nearby", parents=[fmt_parent], help="motivic nearby fibre")
    p.add_argument("file")
    p.add_argument("--check-open", action="store_true",
                   help="also compute the open-strata form and fail if it differs")
    p.add_argument("--middle", type=int, metavar="N",
                   help="read off the Hodge numbers of H^N of the limit fibre")

    p = sub.add_parser("vanishing", parents=[fmt_parent], help="motivic vanishing fibre")
    p.add_argument("file")

    p = sub.add_parser("blowup", parents=[fmt_parent], help="apply a blow-up move")
    p.add_argument("file")
    p.add_argument("move")

    p = sub.add_parser("jordan", parents=[fmt_parent], help="Jordan block sizes of N")
    p.add_argument("source", help="weight data file or inline JSON")

    p = sub.add_parser("spectrum", parents=[fmt_parent], help="singularity invariants")
    p.add_argument("file")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--saito", action="store_true")
    kind.add_argument("--varchenko", action="store_true")
    kind.add_argument("--pairs", action="store_true", help="spectral pairs")
    kind.add_argument("--char", type=int, metavar="N", help="characteristic pairs for dimension N")

    p = sub.add_parser("ts", parents=[fmt_parent], help="Thom-Sebastiani product")
    p.add_argument("file_a")
    p.add_argument("file_b")
    return parser


def request_from_args(ns: argparse.Namespace) -> JobRequest:
    cmd = ns.command
    if cmd in ("poly", "class"):
        inputs = [ns.expr]
    elif cmd == "blowup":
        inputs = [ns.file, ns.move]
    elif cmd == "jordan":
        inputs = [ns.source]
    elif cmd == "ts":
        inputs = [ns.file_a, ns.file_b]
    else:
        inputs = [ns.file]
    skip = {"command", "format", "expr", "file", "move", "source", "file_a", "file_b"}
    options = {k: v for k, v in vars(ns).items() if k not in skip}
    return JobRequest(cmd, inputs, ns.format, options)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    return run(request_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
