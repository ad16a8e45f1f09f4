"""Compare computed d_pi matrices with the published symbolic matrices.

The published matrices are stored verbatim in ``data/paper_matrices.json``
as linear forms in ``a1..a10`` (e.g. ``"-2a2-a4"``). The computed matrix is
authoritative; any disagreement is reported entry by entry, never patched.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

from .blowup import STANDARD_POINTS
from .charts import ProjectivePoint, SurfaceKind
from .cohomology import assemble_dpi_matrix, resolve_pi, section_spaces
from .errors import ParseError, UnsupportedSurface
from .ratpoly import rational_str
from .surface import SurfaceSpec

_TERM = re.compile(r"([+-]?)(\d*)a(\d+)")


def parse_linear_form(text: str) -> Dict[int, int]:
    """``"-2a2-a4"`` -> ``{2: -2, 4: -1}``; ``"0"`` -> ``{}``."""
    text = text.replace(" ", "")
    if text == "0":
        return {}
    form: Dict[int, int] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"bad linear form {text!r}")
        coeff = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
        k = int(m.group(3))
        form[k] = form.get(k, 0) + coeff
        pos = m.end()
    return form


@lru_cache(maxsize=None)
def paper_matrices() -> dict:
    with resources.files("delpezzo").joinpath("data/paper_matrices.json").open() as fh:
        return json.load(fh)


def evaluate_paper_matrix(key: str, a: Sequence[Fraction]) -> List[List[Fraction]]:
    """Published matrix ``key`` with ``a_k = a[k - 1]`` substituted."""
    rows = paper_matrices()[key]["rows"]
    out = []
    for row in rows:
        vals = []
        for entry in row:
            form = parse_linear_form(entry)
            vals.append(sum((c * a[k - 1] for k, c in form.items()), Fraction(0)))
        out.append(vals)
    return out


@dataclass(frozen=True)
class Discrepancy:
    row: int  # 1-based
    col: int
    computed: Fraction
    paper: Fraction


@dataclass(frozen=True)
class CrosscheckReport:
    surface: str
    pi: Tuple[Fraction, ...]
    computed: Tuple[Tuple[Fraction, ...], ...]
    paper: Optional[Tuple[Tuple[Fraction, ...], ...]]
    basis_matches: bool
    discrepancies: Tuple[Discrepancy, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.basis_matches and not self.discrepancies

    def to_dict(self) -> dict:
        return {
            "surface": self.surface,
            "pi": [rational_str(q) for q in self.pi],
            "basis_matches": self.basis_matches,
            "discrepancies": [
                {"row": d.row, "col": d.col,
                 "computed": rational_str(d.computed), "paper": rational_str(d.paper)}
                for d in self.discrepancies
            ],
            "computed": [[rational_str(q) for q in row] for row in self.computed],
            "paper": None if self.paper is None
            else [[rational_str(q) for q in row] for row in self.paper],
        }


def _fixture_key(surface: SurfaceSpec) -> str:
    if surface.kind is not SurfaceKind.BlowupP2:
        return surface.name
    if surface.r > 3:
        raise UnsupportedSurface(f"no published matrix for {surface.name}")
    standard = tuple(ProjectivePoint(*p) for p in STANDARD_POINTS[: surface.r])
    if surface.points != standard:
        raise UnsupportedSurface(
            f"published {surface.name} matrix assumes points "
            + " ".join(str(p) for p in standard)
        )
    return surface.name


def _unit_at(vectors, free: List[int]) -> bool:
    """Is ``vectors[n]`` 1 at ``free[n]`` and 0 at the other free indices?"""
    if len(vectors) != len(free):
        return False
    for n, vec in enumerate(vectors):
        if [vec[k - 1] for k in free] != [int(m == n) for m in range(len(free))]:
            return False
    return True


def paper_matrix_crosscheck(surface: SurfaceSpec, pi_coeffs: Sequence) -> CrosscheckReport:
    key = _fixture_key(surface)
    fixture = paper_matrices()[key]
    a = resolve_pi(surface, pi_coeffs)
    computed = assemble_dpi_matrix(surface, a)
    basis_matches = True
    if "row_free" in fixture:
        spaces = section_spaces(surface)
        basis_matches = _unit_at(spaces.bivector_coeffs, fixture["row_free"]) and _unit_at(
            spaces.vector_coeffs, fixture["col_free"]
        )
    if not basis_matches:
        return CrosscheckReport(surface.name, a, computed.entries, None, False)
    paper = evaluate_paper_matrix(key, a)
    if [len(r) for r in paper] != [len(r) for r in computed.entries]:
        raise ValueError(f"published {key} matrix has the wrong shape")
    diffs = []
    for i, (crow, prow) in enumerate(zip(computed.entries, paper)):
        for j, (c, p) in enumerate(zip(crow, prow)):
            if c != p:
                diffs.append(Discrepancy(i + 1, j + 1, c, p))
    return CrosscheckReport(
        surface.name, a, computed.entries, tuple(map(tuple, paper)), True, tuple(diffs)
    )
