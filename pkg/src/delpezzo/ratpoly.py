"""Sparse bivariate Laurent polynomials with exact rational coefficients.

A :class:`RatLaurent` is a finite map ``(i, j) -> c`` meaning ``c * x**i * w**j``
with ``i, j`` arbitrary integers. Zero coefficients are never stored, so two
polynomials are equal exactly when their term maps are equal.

The textual form is ``"3/2*x^2*w - w^3"``; negative exponents are written
``x^-1``. ``str`` and :meth:`RatLaurent.parse` round-trip exactly.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from .errors import EvalAtPole, ParseError

Exponent = Tuple[int, int]
Scalar = Union[int, Fraction]

VARIABLES = ("x", "w")


def as_rational(value) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a rational string such as ``"-3/2"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"invalid rational {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def rational_str(q: Fraction) -> str:
    """Canonical rational string: ``"3/2"``, ``"-1"``, ``"0"``."""
    return str(Fraction(q))


def _var_index(var: str) -> int:
    try:
        return VARIABLES.index(var)
    except ValueError:
        raise ValueError(f"unknown variable {var!r}; expected 'x' or 'w'") from None


class RatLaurent:
    """Immutable sparse Laurent polynomial in ``x`` and ``w`` over Q."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Exponent, Scalar], Scalar, None] = None):
        clean: Dict[Exponent, Fraction] = {}
        if terms is None:
            pass
        elif isinstance(terms, Mapping):
            for (i, j), c in terms.items():
                c = as_rational(c)
                if c:
                    clean[(int(i), int(j))] = c
        else:
            c = as_rational(terms)
            if c:
                clean[(0, 0)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: Dict[Exponent, Fraction]) -> RatLaurent:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, coeff: Scalar = 1) -> RatLaurent:
        return cls({(i, j): coeff})

    @classmethod
    def var(cls, name: str) -> RatLaurent:
        return cls.monomial(*((1, 0) if _var_index(name) == 0 else (0, 1)))

    # -- inspection ------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in canonical order (graded lex, x before w, highest first)."""
        for e in sorted(self._terms, key=_order_key):
            yield e, self._terms[e]

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_polynomial(self) -> bool:
        """True when no exponent is negative."""
        return all(i >= 0 and j >= 0 for i, j in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(i + j for i, j in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatLaurent):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == RatLaurent(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring structure --------------------------------------------------

    @staticmethod
    def _coerce(other) -> RatLaurent:
        if isinstance(other, RatLaurent):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatLaurent(other)
        return NotImplemented

    def __add__(self, other) -> RatLaurent:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return RatLaurent._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> RatLaurent:
        return RatLaurent._from_clean({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> RatLaurent:
        return self

    def __sub__(self, other) -> RatLaurent:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> RatLaurent:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> RatLaurent:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
        return RatLaurent._from_clean({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> RatLaurent:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            ((i, j), c), = self._terms.items()
            return RatLaurent._from_clean({(i * n, j * n): c ** n})
        result = RatLaurent(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> RatLaurent:
        c = as_rational(c)
        if not c:
            return RatLaurent()
        return RatLaurent._from_clean({e: c * v for e, v in self._terms.items()})

    # -- calculus and evaluation -----------------------------------------

    def partial(self, var: str) -> RatLaurent:
        """Formal partial derivative with respect to ``x`` or ``w``."""
        k = _var_index(var)
        out = {}
        for (i, j), c in self._terms.items():
            n = (i, j)[k]
            if n:
                out[(i - 1, j) if k == 0 else (i, j - 1)] = c * n
        return RatLaurent._from_clean(out)

    def evaluate(self, point: Iterable) -> Fraction:
        """Exact value at ``(x, w)``; raises :class:`EvalAtPole` on a pole."""
        px, pw = (as_rational(v) for v in point)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            if (i < 0 and px == 0) or (j < 0 and pw == 0):
                raise EvalAtPole(f"{self} has a pole at ({px}, {pw})")
            total += c * px ** i * pw ** j
        return total

    def __call__(self, x, w) -> Fraction:
        return self.evaluate((x, w))

    def substitute(self, image_x: RatLaurent, image_w: RatLaurent) -> RatLaurent:
        """Substitute single Laurent monomials for ``x`` and ``w``."""
        if not (image_x.is_monomial() and image_w.is_monomial()):
            raise ValueError("monomial_substitute needs single-term images")
        ((ax, bx), cx), = image_x._terms.items()
        ((aw, bw), cw), = image_w._terms.items()
        out = {}
        for (i, j), c in self._terms.items():
            # distinct source exponents can collide only if the map is degenerate
            e = (ax * i + aw * j, bx * i + bw * j)
            out[e] = out.get(e, 0) + c * cx ** i * cw ** j
        return RatLaurent._from_clean({e: c for e, c in out.items() if c})

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for n, (e, c) in enumerate(self.items()):
            text = _term_str(e, abs(c))
            if n == 0:
                parts.append(("-" if c < 0 else "") + text)
            else:
                parts.append((" - " if c < 0 else " + ") + text)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"RatLaurent({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> RatLaurent:
        return parse(text)


def _order_key(e: Exponent):
    i, j = e
    return (-(i + j), -i)


def _term_str(e: Exponent, c: Fraction) -> str:
    i, j = e
    factors = []
    for name, n in zip(VARIABLES, (i, j)):
        if n == 1:
            factors.append(name)
        elif n:
            factors.append(f"{name}^{n}")
    if not factors:
        return rational_str(c)
    if c == 1:
        return "*".join(factors)
    return "*".join([rational_str(c)] + factors)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[xw])(?:\s*\^\s*(?P<exp>[+-]?\d+))?|(?P<op>[-+*]))"
)


def parse(text: str) -> RatLaurent:
    """Parse the textual form, e.g. ``"3/2*x^2*w - w^3 + x^-1"``.

    Factors inside a term are joined by ``*``; a term is an optional sign
    followed by factors (numbers and ``x``/``w`` powers).
    """
    if not isinstance(text, str):
        raise ParseError("expected a string")
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at {text[pos:]!r}")
        tokens.append(m)
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial")

    result = RatLaurent()
    k = 0
    first = True
    while k < len(tokens):
        sign = 1
        op = tokens[k].group("op")
        if op in ("+", "-"):
            sign = -1 if op == "-" else 1
            k += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' in {text!r}")
        first = False
        coeff = Fraction(sign)
        i = j = 0
        expect_factor = True
        while k < len(tokens):
            t = tokens[k]
            if expect_factor:
                if t.group("num") is not None:
                    try:
                        coeff *= Fraction(t.group("num"))
                    except ZeroDivisionError:
                        raise ParseError(f"zero denominator in {text!r}") from None
                elif t.group("var") is not None:
                    n = int(t.group("exp")) if t.group("exp") is not None else 1
                    if t.group("var") == "x":
                        i += n
                    else:
                        j += n
                else:
                    raise ParseError(f"expected a factor in {text!r}")
                expect_factor = False
                k += 1
            elif t.group("op") == "*":
                expect_factor = True
                k += 1
            else:
                break
        if expect_factor:
            raise ParseError(f"dangling operator in {text!r}")
        result = result + RatLaurent({(i, j): coeff})
    return result


# Functional spellings of the module's operations.

def partial(p: RatLaurent, var: str) -> RatLaurent:
    return p.partial(var)


def evaluate(p: RatLaurent, point) -> Fraction:
    return p.evaluate(point)


def monomial_substitute(p: RatLaurent, image_x: RatLaurent, image_w: RatLaurent) -> RatLaurent:
    return p.substitute(image_x, image_w)


X = RatLaurent.var("x")
W = RatLaurent.var("w")
ONE = RatLaurent(1)
ZERO = RatLaurent()
