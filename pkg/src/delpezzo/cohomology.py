"""Poisson cohomology of Del Pezzo surfaces.

For ``X`` in {CP^2, CP^1 x CP^1, B_1..B_4} the higher sheaf cohomology of
``T_X`` and its exterior square vanishes, so the Poisson cohomology is the
cohomology of ``H^0(O) -> H^0(T) -> H^0(wedge^2 T)``. The first map is zero
(the constants), so everything reduces to the rank of the matrix ``A_pi``
of ``v -> [pi, v]`` between global sections::

    dim H^0 = 1,  dim H^1 = D1 - rank,  dim H^2 = D2 - rank

with ``(D1, D2)`` the dimensions of the two section spaces. For B_5..B_8
the answer ``(1, 0, r + 2)`` is taken from the known spectral-sequence
result and recorded with ``method = "spectral-lookup"``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .blowup import vanishing_bivector_subspace, vanishing_vector_subspace
from .calculus import BivectorField, VectorField, schouten_pi_v
from .charts import (
    SurfaceKind,
    bivector_monomials,
    combine_bivectors,
    global_bivector_basis,
    global_vector_basis,
)
from .errors import DimensionMismatch, NotVanishing
from .ratpoly import as_rational, rational_str
from .surface import SurfaceSpec

RANK_FORMULA = "rank-formula"
SPECTRAL_LOOKUP = "spectral-lookup"


@dataclass(frozen=True)
class SectionSpaces:
    """Ordered bases of H^0(T) and H^0(wedge^2 T), realized on the base chart.

    ``*_coeffs`` are the same bases as coefficient vectors in the ambient
    monomial coordinates of the base surface (identity for CP^2 and
    CP^1 x CP^1, the vanishing-subspace bases for B_r).
    """

    vectors: Tuple[VectorField, ...]
    bivectors: Tuple[BivectorField, ...]
    vector_coeffs: Tuple[Tuple[int, ...], ...]
    bivector_coeffs: Tuple[Tuple[int, ...], ...]


def _identity(n: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def section_spaces(surface: SurfaceSpec) -> SectionSpaces:
    if surface.kind is SurfaceKind.BlowupP2:
        vsub = vanishing_vector_subspace(surface.config)
        bsub = vanishing_bivector_subspace(surface.config)
        return SectionSpaces(tuple(vsub.fields()), tuple(bsub.fields()), vsub.basis, bsub.basis)
    vecs = tuple(global_vector_basis(surface.kind))
    bivs = tuple(global_bivector_basis(surface.kind))
    return SectionSpaces(vecs, bivs, _identity(len(vecs)), _identity(len(bivs)))


def section_dimensions(surface: SurfaceSpec) -> Tuple[int, int]:
    """``(dim H^0(T), dim H^0(wedge^2 T))``."""
    spaces = section_spaces(surface)
    return len(spaces.vectors), len(spaces.bivectors)


def resolve_pi(surface: SurfaceSpec, pi_coeffs: Sequence) -> Tuple[Fraction, ...]:
    """Ambient monomial coefficients of ``pi``, validated for ``surface``.

    For B_r, ``pi_coeffs`` may be the 10 CP^2 coefficients (which must
    vanish at every blown-up point) or ``10 - r`` coordinates in the
    vanishing-subspace basis.
    """
    coeffs = [as_rational(c) for c in pi_coeffs]
    n_amb = len(bivector_monomials(surface.base))
    if surface.kind is not SurfaceKind.BlowupP2:
        if len(coeffs) != n_amb:
            raise DimensionMismatch(
                f"{surface.name} bivectors have {n_amb} coefficients, got {len(coeffs)}"
            )
        return tuple(coeffs)
    sub = vanishing_bivector_subspace(surface.config)
    if len(coeffs) == sub.dim:
        return tuple(sub.embed(coeffs))
    if len(coeffs) != n_amb:
        raise DimensionMismatch(
            f"{surface.name} bivectors take {n_amb} CP^2 coefficients or {sub.dim} "
            f"subspace coordinates, got {len(coeffs)}"
        )
    bad = sub.violations(coeffs)
    if bad:
        pts = ", ".join(f"p{k} = {surface.points[k - 1]}" for k in bad)
        raise NotVanishing(f"pi does not vanish at {pts}")
    return tuple(coeffs)


def pi_field(surface: SurfaceSpec, pi_coeffs: Sequence) -> BivectorField:
    coeffs = resolve_pi(surface, pi_coeffs)
    return combine_bivectors(global_bivector_basis(surface.base), coeffs)


def bivector_coefficients(surface_kind, pi: BivectorField) -> List[Fraction]:
    """Coordinates of a global bivector field in the monomial basis."""
    exps = bivector_monomials(surface_kind)
    index = {e: k for k, e in enumerate(exps)}
    out = [Fraction(0)] * len(exps)
    for e, c in pi.h.items():
        if e not in index:
            raise ValueError(f"term x^{e[0]}*w^{e[1]} is outside the global bivector space")
        out[index[e]] = c
    return out


@dataclass(frozen=True)
class DpiMatrix:
    """Matrix of ``v -> [pi, v]``; column j holds the coordinates of ``[pi, v_j]``."""

    entries: Tuple[Tuple[Fraction, ...], ...]
    row_basis: Tuple[BivectorField, ...]
    col_basis: Tuple[VectorField, ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.row_basis), len(self.col_basis)

    def rank(self) -> int:
        return exact_rank(self)

    def column(self, j: int) -> List[Fraction]:
        return [row[j] for row in self.entries]

    def to_strings(self) -> List[List[str]]:
        return [[rational_str(q) for q in row] for row in self.entries]


def assemble_dpi_matrix(surface: SurfaceSpec, pi_coeffs: Sequence) -> DpiMatrix:
    pi = pi_field(surface, pi_coeffs)
    spaces = section_spaces(surface)
    rows = len(spaces.bivectors)
    columns = []
    for v in spaces.vectors:
        image = bivector_coefficients(surface.base, schouten_pi_v(pi, v))
        columns.append(linalg.solve(spaces.bivector_coeffs, image))
    entries = tuple(tuple(col[i] for col in columns) for i in range(rows))
    return DpiMatrix(entries, spaces.bivectors, spaces.vectors)


def exact_rank(m) -> int:
    """Rank over Q (Bareiss). Accepts a :class:`DpiMatrix` or a list of rows."""
    rows = m.entries if isinstance(m, DpiMatrix) else m
    return linalg.rank([list(r) for r in rows])


@dataclass(frozen=True)
class CohomologyProfile:
    surface: SurfaceSpec
    pi: Tuple[Fraction, ...]
    dims: Tuple[int, int, int]
    rank: Optional[int]
    method: str
    matrix: Optional[DpiMatrix] = None

    @property
    def euler_characteristic(self) -> int:
        h0, h1, h2 = self.dims
        return h0 - h1 + h2

    def to_dict(self, include_matrix: bool = False) -> dict:
        out = {
            "surface": self.surface.name,
            "pi": [rational_str(q) for q in self.pi],
            "dims": list(self.dims),
            "method": self.method,
        }
        if self.surface.points:
            out["points"] = [[rational_str(c) for c in p.coords] for p in self.surface.points]
        if self.rank is not None:
            out["rank"] = self.rank
        if include_matrix and self.matrix is not None:
            out["matrix"] = self.matrix.to_strings()
        return out


def poisson_cohomology(surface: SurfaceSpec, pi_coeffs: Sequence) -> CohomologyProfile:
    """Dimensions of ``H^0_pi, H^1_pi, H^2_pi`` (all higher groups vanish)."""
    pi = resolve_pi(surface, pi_coeffs)
    if surface.kind is SurfaceKind.BlowupP2 and surface.r >= 5:
        return CohomologyProfile(surface, pi, (1, 0, surface.r + 2), None, SPECTRAL_LOOKUP)
    m = assemble_dpi_matrix(surface, pi)
    d2, d1 = m.shape
    rank = exact_rank(m)
    return CohomologyProfile(surface, pi, (1, d1 - rank, d2 - rank), rank, RANK_FORMULA, m)


@dataclass(frozen=True)
class SheafCohomologyTable:
    """``h[i][j] = dim H^i(X, wedge^j T_X)`` for ``0 <= i, j <= 2``."""

    surface: SurfaceSpec
    h: Tuple[Tuple[int, int, int], ...]

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.h[i][j]

    def to_dict(self) -> dict:
        return {"surface": self.surface.name, "h": [list(row) for row in self.h]}


def sheaf_cohomology_table(surface: SurfaceSpec) -> SheafCohomologyTable:
    """Row ``i = 0`` is computed from section spaces; rows ``i > 0`` are the
    known vanishing result, with ``h^{1,1} = 2r - 8`` on B_5..B_8."""
    d1, d2 = section_dimensions(surface)
    h1 = [0, 0, 0]
    if surface.kind is SurfaceKind.BlowupP2 and surface.r >= 5:
        h1[1] = 2 * surface.r - 8
    return SheafCohomologyTable(surface, ((1, d1, d2), tuple(h1), (0, 0, 0)))


def canonical_pi(surface: SurfaceSpec) -> List[Fraction]:
    """Fixed representative used by the reproduction table.

    ``d/dx ^ d/dw`` on CP^2 and CP^1 x CP^1; on B_r the sum of the
    vanishing-subspace basis vectors.
    """
    if surface.kind is SurfaceKind.BlowupP2:
        sub = vanishing_bivector_subspace(surface.config)
        return sub.embed([1] * sub.dim)
    n = len(bivector_monomials(surface.kind))
    return [Fraction(int(k == 0)) for k in range(n)]


def theorem_table() -> List[Tuple[CohomologyProfile, SheafCohomologyTable]]:
    """Profiles for P2, P1xP1 and B1..B8 (standard points, canonical pi)."""
    names = ["P2", "P1xP1"] + [f"B{r}" for r in range(1, 9)]
    out = []
    for name in names:
        s = SurfaceSpec.from_name(name)
        out.append((poisson_cohomology(s, canonical_pi(s)), sheaf_cohomology_table(s)))
    return out
