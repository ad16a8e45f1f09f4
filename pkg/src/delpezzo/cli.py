"""Command-line interface: ``delpezzo <command> [options]``.

Commands: cohomology, bracket, basis, genericity, tables, crosscheck.
Exit status is 0 on success and 1 on any input or validation error (and
for ``genericity`` when the configuration is not generic).
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional, Sequence

from .blowup import check_generic, vanishing_bivector_subspace, vanishing_vector_subspace
from .calculus import VectorField, schouten_pi_v
from .charts import (
    ProjectivePoint,
    SurfaceKind,
    global_bivector_basis,
    global_vector_basis,
    is_global_vector,
)
from .cohomology import pi_field, poisson_cohomology, resolve_pi, theorem_table
from .crosscheck import paper_matrix_crosscheck
from .errors import DelPezzoError, ParseError
from .ratpoly import as_rational, rational_str
from .surface import SurfaceSpec

COMMANDS = ("cohomology", "bracket", "basis", "genericity", "tables", "crosscheck")
NEEDS_PI = {"cohomology", "bracket", "crosscheck"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def parse_pi(text: str) -> List:
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    if not parts:
        raise ParseError("--pi needs at least one coefficient")
    return [as_rational(p) for p in parts]


def parse_points(text: str) -> List[ProjectivePoint]:
    """``"[1,0,0] [1,1,0]"`` or a JSON list of triples of rational strings."""
    text = text.strip()
    if text.startswith("[["):
        try:
            triples = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad --points JSON: {exc}") from exc
    else:
        groups = re.findall(r"\[([^\[\]]*)\]", text)
        if not groups or re.sub(r"\[[^\[\]]*\]", "", text).strip():
            raise ParseError(f"bad --points {text!r}; expected e.g. \"[1,0,0] [1,1,0]\"")
        triples = [[c for c in g.split(",")] for g in groups]
    return [ProjectivePoint(*[as_rational(str(c)) for c in t]) for t in triples]


def _surface(args) -> SurfaceSpec:
    if args.surface is None:
        raise ParseError(f"{args.command} needs --surface")
    points = parse_points(args.points) if args.points else None
    return SurfaceSpec.from_name(args.surface, points)


def _points_json(surface: SurfaceSpec):
    return [[rational_str(c) for c in p.coords] for p in surface.points]


def _fmt_tuple(t) -> str:
    return "(" + ", ".join(str(v) for v in t) + ")"


# -- commands: each returns (payload, text, exit_code) ----------------------

def cmd_cohomology(args):
    surface = _surface(args)
    prof = poisson_cohomology(surface, parse_pi(args.pi))
    payload = prof.to_dict(include_matrix=True)
    lines = [f"surface: {surface}", "pi: " + ", ".join(payload["pi"])]
    if prof.rank is not None:
        lines.append(f"rank(A_pi) = {prof.rank}")
    lines.append(f"dims (H^0, H^1, H^2) = {_fmt_tuple(prof.dims)}")
    lines.append(f"method: {prof.method}")
    return payload, "\n".join(lines), 0


def cmd_bracket(args):
    surface = _surface(args)
    if not args.vector:
        raise ParseError("bracket needs --vector 'f; g'")
    v = VectorField.parse(args.vector)
    coeffs = resolve_pi(surface, parse_pi(args.pi))
    pi = pi_field(surface, coeffs)
    result = schouten_pi_v(pi, v)
    payload = {
        "surface": surface.name,
        "pi": [rational_str(q) for q in coeffs],
        "vector": str(v),
        "vector_global": is_global_vector(surface.base, v),
        "bracket": str(result),
    }
    if surface.points:
        payload["points"] = _points_json(surface)
    text = f"[pi, v] = ({result}) d/dx^d/dw"
    return payload, text, 0


def cmd_basis(args):
    surface = _surface(args)
    payload = {"surface": surface.name}
    lines = [f"surface: {surface}"]
    if surface.kind is SurfaceKind.BlowupP2:
        payload["points"] = _points_json(surface)
        vsub = vanishing_vector_subspace(surface.config)
        bsub = vanishing_bivector_subspace(surface.config)
        vecs = [{"coeffs": [str(c) for c in vec], "field": str(f)}
                for vec, f in zip(vsub.basis, vsub.fields())]
        bivs = [{"coeffs": [str(c) for c in vec], "field": str(f)}
                for vec, f in zip(bsub.basis, bsub.fields())]
    else:
        vecs = [{"field": str(f)} for f in global_vector_basis(surface.kind)]
        bivs = [{"field": str(f)} for f in global_bivector_basis(surface.kind)]
    payload["vector_basis"] = vecs
    payload["bivector_basis"] = bivs
    lines.append(f"vector fields (dim {len(vecs)}), as 'f; g' for f d/dx + g d/dw:")
    lines += [f"  v{k + 1}: {e['field']}" for k, e in enumerate(vecs)]
    lines.append(f"bivector fields (dim {len(bivs)}), coefficient of d/dx^d/dw:")
    lines += [f"  pi{k + 1}: {e['field']}" for k, e in enumerate(bivs)]
    return payload, "\n".join(lines), 0


def cmd_genericity(args):
    if args.points:
        points = parse_points(args.points)
    elif args.surface:
        points = list(SurfaceSpec.from_name(args.surface).points)
    else:
        raise ParseError("genericity needs --points or --surface Br")
    report = check_generic(points)
    payload = report.to_dict()
    payload["points"] = [[rational_str(c) for c in p.coords] for p in points]
    lines = [
        "points: " + " ".join(str(p) for p in points),
        f"no three colinear: {report.no_three_colinear}"
        + (f" (fails for points {report.colinear_triple})" if report.colinear_triple else ""),
        f"no six on a conic: {report.no_six_on_conic}"
        + (f" (fails for points {report.conic_sextuple})" if report.conic_sextuple else ""),
        f"independent on cubics: {report.independent_on_cubics}",
        f"generic: {report.generic}",
    ]
    return payload, "\n".join(lines), 0 if report.generic else 1


def cmd_tables(args):
    rows = []
    lines = ["surface: (h0, h1, h2)  rank  method  h^{1,1}"]
    for prof, sheaf in theorem_table():
        entry = prof.to_dict()
        entry["sheaf"] = sheaf.to_dict()["h"]
        rows.append(entry)
        rank = "-" if prof.rank is None else str(prof.rank)
        lines.append(
            f"{prof.surface.name}: {_fmt_tuple(prof.dims)}  rank={rank}  "
            f"method={prof.method}  h11={sheaf[1, 1]}"
        )
    return {"rows": rows}, "\n".join(lines), 0


def cmd_crosscheck(args):
    surface = _surface(args)
    report = paper_matrix_crosscheck(surface, parse_pi(args.pi))
    payload = report.to_dict()
    if not report.basis_matches:
        text = f"{surface.name}: computed bases differ from the published parametrization"
    else:
        text = f"{surface.name}: {len(report.discrepancies)} discrepancies"
        for d in report.discrepancies:
            text += f"\n  entry ({d.row}, {d.col}): computed {d.computed}, published {d.paper}"
    return payload, text, 0


HANDLERS = {
    "cohomology": cmd_cohomology,
    "bracket": cmd_bracket,
    "basis": cmd_basis,
    "genericity": cmd_genericity,
    "tables": cmd_tables,
    "crosscheck": cmd_crosscheck,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="delpezzo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--surface", help="P2, P1xP1 or B1..B8")
        p.add_argument("--points", help='blow-up points, e.g. "[1,0,0] [1,1,0]"')
        p.add_argument("--pi", help="bivector coefficients a1,a2,... (rational strings)")
        p.add_argument("--vector", help="vector field 'f; g' (bracket only)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", help="write output to this file instead of stdout")
    return parser


def dumps(payload) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    fmt = "text"
    output = None
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise ParseError("missing command; choose one of " + ", ".join(COMMANDS))
        fmt, output = args.format, args.output
        if args.command in NEEDS_PI and not args.pi:
            raise ParseError(f"{args.command} needs --pi")
        if args.command not in NEEDS_PI and args.pi:
            raise ParseError(f"{args.command} does not take --pi")
        if args.vector and args.command != "bracket":
            raise ParseError("--vector is only used by bracket")
        payload, text, code = HANDLERS[args.command](args)
    except DelPezzoError as exc:
        error = {"error": {"type": exc.kind, "message": str(exc)}}
        if fmt == "json":
            _emit(dumps(error), output)
        else:
            sys.stderr.write(f"error: {exc.kind}: {exc}\n")
        return 1
    _emit(dumps(payload) if fmt == "json" else text + "\n", output)
    return code


if __name__ == "__main__":
    sys.exit(main())
