"""Affine atlases of CP^2 and CP^1 x CP^1 and global section bases.

Every public field lives on the distinguished chart of its surface
(``U0`` for CP^2, ``U1`` for CP^1 x CP^1) with coordinates ``(x, w)``.
Each other chart is recorded as a pair of Laurent-monomial substitutions,
and field transforms are derived from those by the chain rule.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from .calculus import BivectorField, VectorField
from .errors import ParseError, UnsupportedSurface
from .ratpoly import RatLaurent, as_rational

__all__ = [
    "SurfaceKind",
    "ProjectivePoint",
    "Chart",
    "atlas",
    "distinguished_chart",
    "chart_name",
    "transform_vector",
    "transform_bivector",
    "is_global_vector",
    "is_global_bivector",
    "global_vector_basis",
    "global_bivector_basis",
    "bivector_monomials",
    "combine_vectors",
    "combine_bivectors",
]


class SurfaceKind(enum.Enum):
    P2 = "P2"
    P1xP1 = "P1xP1"
    BlowupP2 = "BlowupP2"

    @property
    def base(self) -> SurfaceKind:
        """Surface whose fields represent this one (blow-ups reduce to CP^2)."""
        return SurfaceKind.P2 if self is SurfaceKind.BlowupP2 else self


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of CP^2, normalized so its first nonzero coordinate is 1."""

    coords: Tuple[Fraction, Fraction, Fraction]

    def __init__(self, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction, str)):
            coords = tuple(coords[0])
        if len(coords) != 3:
            raise ParseError(f"a point of CP^2 needs 3 homogeneous coordinates, got {len(coords)}")
        qs = [as_rational(c) for c in coords]
        lead = next((q for q in qs if q), None)
        if lead is None:
            raise ParseError("homogeneous coordinates cannot all be zero")
        object.__setattr__(self, "coords", tuple(q / lead for q in qs))

    @property
    def in_u0(self) -> bool:
        return self.coords[0] != 0

    def affine(self) -> Tuple[Fraction, Fraction]:
        """Coordinates ``(x, w) = (z1/z0, z2/z0)`` on ``U0``."""
        if not self.in_u0:
            raise UnsupportedSurface(f"point {self} is not in the chart U0 (z0 = 0)")
        z0, z1, z2 = self.coords
        return z1 / z0, z2 / z0

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"


def _mono(i: int, j: int, c=1) -> RatLaurent:
    return RatLaurent.monomial(i, j, c)


@dataclass(frozen=True)
class Chart:
    name: str
    # chart coordinates as Laurent monomials in the distinguished (x, w)
    from_distinguished: Tuple[RatLaurent, RatLaurent]
    # distinguished (x, w) as Laurent monomials in this chart's coordinates
    to_distinguished: Tuple[RatLaurent, RatLaurent]


_IDENTITY = (_mono(1, 0), _mono(0, 1))

# z = [z0, z1, z2]; U0: (x, w) = (z1/z0, z2/z0)
# U1: (z0/z1, z2/z1) = (1/x, w/x)      U2: (z0/z2, z1/z2) = (1/w, x/w)
_P2_ATLAS = {
    0: Chart("U0", _IDENTITY, _IDENTITY),
    1: Chart("U1", (_mono(-1, 0), _mono(-1, 1)), (_mono(-1, 0), _mono(-1, 1))),
    2: Chart("U2", (_mono(0, -1), _mono(1, -1)), (_mono(-1, 1), _mono(-1, 0))),
}

# U1: (x, w) = (z1/z0, w1/w0); the others invert one or both factors
_P1P1_ATLAS = {
    1: Chart("U1", _IDENTITY, _IDENTITY),
    2: Chart("U2", (_mono(-1, 0), _mono(0, 1)), (_mono(-1, 0), _mono(0, 1))),
    3: Chart("U3", (_mono(1, 0), _mono(0, -1)), (_mono(1, 0), _mono(0, -1))),
    4: Chart("U4", (_mono(-1, 0), _mono(0, -1)), (_mono(-1, 0), _mono(0, -1))),
}


def _kind(surface) -> SurfaceKind:
    kind = getattr(surface, "kind", surface)
    if isinstance(kind, str):
        try:
            kind = SurfaceKind(kind)
        except ValueError:
            if kind.startswith("B"):
                kind = SurfaceKind.BlowupP2
            else:
                raise UnsupportedSurface(f"unknown surface kind {kind!r}") from None
    return kind.base


def atlas(surface) -> Dict[int, Chart]:
    return _P2_ATLAS if _kind(surface) is SurfaceKind.P2 else _P1P1_ATLAS


def distinguished_chart(surface) -> int:
    return 0 if _kind(surface) is SurfaceKind.P2 else 1


def chart_name(surface, chart: int) -> str:
    return _chart(surface, chart).name


def _chart(surface, chart: int) -> Chart:
    charts = atlas(surface)
    if isinstance(chart, str):
        chart = int(chart.lstrip("Uu"))
    if chart not in charts:
        raise UnsupportedSurface(f"no chart U{chart} on {_kind(surface).value}")
    return charts[chart]


@lru_cache(maxsize=None)
def _change(kind: SurfaceKind, src: int, dst: int):
    """Chain-rule data for moving fields from chart ``src`` to chart ``dst``.

    Returns ``(old_in_new, jac)`` where ``old_in_new`` expresses the source
    coordinates in the target coordinates, and ``jac[k][l]`` is
    ``d(new_k)/d(old_l)`` already written in target coordinates.
    """
    a = _chart(kind, src)
    b = _chart(kind, dst)
    old_in_new = tuple(m.substitute(*b.to_distinguished) for m in a.from_distinguished)
    new_in_old = tuple(m.substitute(*a.to_distinguished) for m in b.from_distinguished)
    jac = tuple(
        tuple(new_k.partial(var).substitute(*old_in_new) for var in ("x", "w"))
        for new_k in new_in_old
    )
    return old_in_new, jac


def transform_vector(surface, src: int, dst: int, v: VectorField) -> VectorField:
    """Rewrite ``v`` from chart ``src`` coordinates to chart ``dst`` coordinates."""
    kind = _kind(surface)
    if src == dst:
        _chart(kind, src)
        return v
    old_in_new, jac = _change(kind, _index(src), _index(dst))
    f = v.f.substitute(*old_in_new)
    g = v.g.substitute(*old_in_new)
    return VectorField(jac[0][0] * f + jac[0][1] * g, jac[1][0] * f + jac[1][1] * g)


def transform_bivector(surface, src: int, dst: int, pi: BivectorField) -> BivectorField:
    """Rewrite ``pi`` from chart ``src`` to chart ``dst`` (Jacobian determinant factor)."""
    kind = _kind(surface)
    if src == dst:
        _chart(kind, src)
        return pi
    old_in_new, jac = _change(kind, _index(src), _index(dst))
    det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0]
    return BivectorField(pi.h.substitute(*old_in_new) * det)


def _index(chart) -> int:
    return int(chart.lstrip("Uu")) if isinstance(chart, str) else chart


def is_global_vector(surface, v: VectorField) -> bool:
    """Does ``v`` (on the distinguished chart) extend holomorphically everywhere?"""
    home = distinguished_chart(surface)
    if not v.is_polynomial():
        return False
    return all(
        transform_vector(surface, home, c, v).is_polynomial()
        for c in atlas(surface) if c != home
    )


def is_global_bivector(surface, pi: BivectorField) -> bool:
    home = distinguished_chart(surface)
    if not pi.is_polynomial():
        return False
    return all(
        transform_bivector(surface, home, c, pi).is_polynomial()
        for c in atlas(surface) if c != home
    )


# Monomials x^i w^j ordered as the coefficients a_1, a_2, ... of a global
# bivector field d/dx ^ d/dw on each surface.
_P2_BIVECTOR_EXPONENTS = [
    (0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3),
]
_P1P1_BIVECTOR_EXPONENTS = [
    (0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (2, 2),
]


def bivector_monomials(surface) -> List[Tuple[int, int]]:
    """Exponents ``(i, j)`` indexing the bivector basis, in basis order."""
    if _kind(surface) is SurfaceKind.P2:
        return list(_P2_BIVECTOR_EXPONENTS)
    return list(_P1P1_BIVECTOR_EXPONENTS)


def global_bivector_basis(surface) -> List[BivectorField]:
    return [BivectorField(_mono(i, j)) for i, j in bivector_monomials(surface)]


def global_vector_basis(surface) -> List[VectorField]:
    """Vector fields ``v_k`` with ``b_k = 1`` and every other ``b`` zero."""
    zero = RatLaurent()
    if _kind(surface) is SurfaceKind.P2:
        x, w = _mono(1, 0), _mono(0, 1)
        return [
            VectorField(1, zero),
            VectorField(x, zero),
            VectorField(w, zero),
            VectorField(zero, 1),
            VectorField(zero, x),
            VectorField(zero, w),
            VectorField(x * x, x * w),
            VectorField(x * w, w * w),
        ]
    return [
        VectorField(_mono(0, 0), zero),
        VectorField(_mono(1, 0), zero),
        VectorField(_mono(2, 0), zero),
        VectorField(zero, _mono(0, 0)),
        VectorField(zero, _mono(0, 1)),
        VectorField(zero, _mono(0, 2)),
    ]


def combine_vectors(basis: List[VectorField], coeffs) -> VectorField:
    out = VectorField()
    for c, v in zip(coeffs, basis):
        out = out + v.scale(c)
    return out


def combine_bivectors(basis: List[BivectorField], coeffs) -> BivectorField:
    out = BivectorField()
    for c, p in zip(coeffs, basis):
        out = out + p.scale(c)
    return out
