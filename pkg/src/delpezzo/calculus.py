"""Vector fields, bivector fields and the Schouten calculus on one chart.

Coordinates are ``(x, w)``. A vector field is ``f d/dx + g d/dw`` and a
bivector field is ``h d/dx ^ d/dw``; all coefficients are
:class:`~delpezzo.ratpoly.RatLaurent`.

Sign conventions::

    [pi, v]   = (h f_x - f h_x) + (h g_w - g h_w)      (coefficient of dx^dw)
    [pi, phi] = h (phi_x d/dw - phi_w d/dx)           (Hamiltonian field)

With these, ``[pi, [pi, phi]] == 0`` identically. On a surface ``[pi, pi]``
lives in the zero bundle, so no trivector type exists.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import ParseError
from .ratpoly import RatLaurent, Scalar, parse


def _poly(value) -> RatLaurent:
    if isinstance(value, RatLaurent):
        return value
    if isinstance(value, str):
        return parse(value)
    return RatLaurent(value)


@dataclass(frozen=True)
class VectorField:
    f: RatLaurent = RatLaurent()
    g: RatLaurent = RatLaurent()

    def __post_init__(self):
        object.__setattr__(self, "f", _poly(self.f))
        object.__setattr__(self, "g", _poly(self.g))

    def __add__(self, other: VectorField) -> VectorField:
        return VectorField(self.f + other.f, self.g + other.g)

    def __sub__(self, other: VectorField) -> VectorField:
        return VectorField(self.f - other.f, self.g - other.g)

    def __neg__(self) -> VectorField:
        return VectorField(-self.f, -self.g)

    def scale(self, c: Scalar) -> VectorField:
        return VectorField(self.f.scale(c), self.g.scale(c))

    def times(self, phi: RatLaurent) -> VectorField:
        """Multiply by a function."""
        return VectorField(phi * self.f, phi * self.g)

    def apply(self, phi: RatLaurent) -> RatLaurent:
        """Directional derivative ``v(phi)``."""
        return self.f * phi.partial("x") + self.g * phi.partial("w")

    def is_zero(self) -> bool:
        return self.f.is_zero() and self.g.is_zero()

    def is_polynomial(self) -> bool:
        return self.f.is_polynomial() and self.g.is_polynomial()

    def __str__(self) -> str:
        return f"{self.f}; {self.g}"

    @classmethod
    def parse(cls, text: str) -> VectorField:
        parts = text.split(";")
        if len(parts) != 2:
            raise ParseError(f"vector field needs the form 'f; g', got {text!r}")
        return cls(parse(parts[0]), parse(parts[1]))


@dataclass(frozen=True)
class BivectorField:
    h: RatLaurent = RatLaurent()

    def __post_init__(self):
        object.__setattr__(self, "h", _poly(self.h))

    def __add__(self, other: BivectorField) -> BivectorField:
        return BivectorField(self.h + other.h)

    def __sub__(self, other: BivectorField) -> BivectorField:
        return BivectorField(self.h - other.h)

    def __neg__(self) -> BivectorField:
        return BivectorField(-self.h)

    def scale(self, c: Scalar) -> BivectorField:
        return BivectorField(self.h.scale(c))

    def times(self, phi: RatLaurent) -> BivectorField:
        return BivectorField(phi * self.h)

    def is_zero(self) -> bool:
        return self.h.is_zero()

    def is_polynomial(self) -> bool:
        return self.h.is_polynomial()

    def __str__(self) -> str:
        return str(self.h)

    @classmethod
    def parse(cls, text: str) -> BivectorField:
        return cls(parse(text))


def schouten_pi_v(pi: BivectorField, v: VectorField) -> BivectorField:
    """``[pi, v]`` for a bivector and a vector field."""
    h, f, g = pi.h, v.f, v.g
    coeff = (h * f.partial("x") - f * h.partial("x")) + (h * g.partial("w") - g * h.partial("w"))
    return BivectorField(coeff)


def schouten_pi_f(pi: BivectorField, phi: RatLaurent) -> VectorField:
    """``[pi, phi]``, the Hamiltonian vector field of ``phi``."""
    phi = _poly(phi)
    return VectorField(-(pi.h * phi.partial("w")), pi.h * phi.partial("x"))


def lie_bracket(v: VectorField, u: VectorField) -> VectorField:
    """``[v, u]`` with components ``v(u_i) - u(v_i)``."""
    return VectorField(v.apply(u.f) - u.apply(v.f), v.apply(u.g) - u.apply(v.g))


def wedge(v: VectorField, u: VectorField) -> BivectorField:
    return BivectorField(v.f * u.g - v.g * u.f)


def eval_vector(v: VectorField, point) -> Tuple[Fraction, Fraction]:
    return v.f.evaluate(point), v.g.evaluate(point)


def eval_bivector(pi: BivectorField, point) -> Fraction:
    return pi.h.evaluate(point)
