"""Which Del Pezzo surface: CP^2, CP^1 x CP^1, or CP^2 blown up at r points."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .blowup import MAX_POINTS, PointConfig, require_generic, standard_points
from .charts import ProjectivePoint, SurfaceKind
from .errors import DimensionMismatch, UnsupportedSurface


@dataclass(frozen=True)
class SurfaceSpec:
    kind: SurfaceKind
    points: Tuple[ProjectivePoint, ...] = ()

    def __post_init__(self):
        pts = tuple(p if isinstance(p, ProjectivePoint) else ProjectivePoint(*p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if self.kind is SurfaceKind.BlowupP2:
            # validates count, distinctness, U0 membership and genericity
            require_generic(PointConfig(pts))
        elif pts:
            raise UnsupportedSurface(f"{self.kind.value} takes no blow-up points")

    @classmethod
    def p2(cls) -> SurfaceSpec:
        return cls(SurfaceKind.P2)

    @classmethod
    def p1xp1(cls) -> SurfaceSpec:
        return cls(SurfaceKind.P1xP1)

    @classmethod
    def blowup(cls, points) -> SurfaceSpec:
        return cls(SurfaceKind.BlowupP2, tuple(points))

    @classmethod
    def from_name(cls, name: str, points: Optional[Sequence] = None) -> SurfaceSpec:
        """``"P2"``, ``"P1xP1"`` or ``"B1"``..``"B8"``.

        Blow-ups without explicit points use :data:`delpezzo.blowup.STANDARD_POINTS`.
        """
        key = name.strip()
        if key.upper() == "P2":
            kind = SurfaceKind.P2
        elif key.upper() == "P1XP1":
            kind = SurfaceKind.P1xP1
        else:
            m = re.fullmatch(r"[Bb](\d+)", key)
            if not m:
                raise UnsupportedSurface(f"unknown surface {name!r}; use P2, P1xP1 or B1..B8")
            r = int(m.group(1))
            if not 1 <= r <= MAX_POINTS:
                raise UnsupportedSurface(f"B_r needs 1 <= r <= {MAX_POINTS}, got {name!r}")
            if points is None:
                return cls.blowup(standard_points(r))
            if len(points) != r:
                raise DimensionMismatch(f"{name} needs {r} points, got {len(points)}")
            return cls.blowup(points)
        if points:
            raise UnsupportedSurface(f"{name} takes no blow-up points")
        return cls(kind)

    @property
    def r(self) -> int:
        """Number of blown-up points (0 for CP^2 and CP^1 x CP^1)."""
        return len(self.points)

    @property
    def name(self) -> str:
        if self.kind is SurfaceKind.BlowupP2:
            return f"B{self.r}"
        return self.kind.value

    @property
    def config(self) -> PointConfig:
        if self.kind is not SurfaceKind.BlowupP2:
            raise UnsupportedSurface(f"{self.name} has no blow-up points")
        return PointConfig(self.points)

    @property
    def base(self) -> SurfaceKind:
        return self.kind.base

    def __str__(self) -> str:
        if self.points:
            return f"{self.name} at " + " ".join(str(p) for p in self.points)
        return self.name
