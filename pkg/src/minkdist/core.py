"""Exact scalars and the small amount of 2D/3D geometry everything else uses.

Scalars are :class:`fractions.Fraction`; nothing in the pipeline ever touches a
binary float.
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_LITERAL = re.compile(r"^\s*([+-]?\d+(/\d+)?|[+-]?\d*\.\d+|[+-]?\d+\.\d*)\s*$")


def parse_rational(value: RationalLike) -> Fraction:
    """Convert an int, Fraction or literal ``"a/b"``, ``"a"``, ``"d.ddd"`` exactly.

    Floats are refused: they would smuggle a binary approximation in.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        if not _LITERAL.match(value):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} exactly; pass a string or int")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class PlanePoint(NamedTuple):
    x1: Fraction
    x2: Fraction

    @classmethod
    def of(cls, x1: RationalLike, x2: RationalLike) -> "PlanePoint":
        return cls(parse_rational(x1), parse_rational(x2))

    def reflected(self) -> "PlanePoint":
        """Swap the two coordinates."""
        return PlanePoint(self.x2, self.x1)


class SpacePoint(NamedTuple):
    x: Fraction
    y: Fraction
    z: Fraction

    @classmethod
    def of(cls, x: RationalLike, y: RationalLike, z: RationalLike) -> "SpacePoint":
        return cls(parse_rational(x), parse_rational(y), parse_rational(z))


class Plane3(NamedTuple):
    """Plane ``alpha*x + beta*y + gamma*z = delta`` in canonical form.

    Build through :meth:`make`, which scales so the first nonzero normal
    coefficient is 1; then equal planes compare equal field-wise.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    @classmethod
    def make(cls, alpha, beta, gamma, delta) -> "Plane3":
        coeffs = [parse_rational(c) for c in (alpha, beta, gamma, delta)]
        lead = next((c for c in coeffs[:3] if c != 0), None)
        if lead is None:
            raise ValueError("plane normal (alpha, beta, gamma) must be nonzero")
        return cls(*(c / lead for c in coeffs))

    def normalized(self) -> "Plane3":
        return Plane3.make(*self)

    def contains(self, sigma: SpacePoint) -> bool:
        return self.alpha * sigma.x + self.beta * sigma.y + self.gamma * sigma.z == self.delta


def to_new_coordinates(p_old: PlanePoint) -> PlanePoint:
    """Light-cone coordinates: the metric ``dx1^2 - dx2^2`` becomes ``dx1' dx2'``."""
    return PlanePoint(p_old.x1 - p_old.x2, p_old.x1 + p_old.x2)


class Singular(Enum):
    """Why a 2x2 system has no unique solution."""

    INCONSISTENT = "inconsistent"
    DEGENERATE = "degenerate"


def solve_2x2(a11, a12, a21, a22, b1, b2) -> tuple[Fraction, Fraction] | Singular:
    """Solve ``[[a11, a12], [a21, a22]] @ (u, v) = (b1, b2)`` exactly.

    Returns the unique solution, or a :class:`Singular` member telling the
    caller whether there are no solutions or infinitely many.
    """
    det = a11 * a22 - a12 * a21
    if det != 0:
        u = Fraction(b1 * a22 - a12 * b2) / det
        v = Fraction(a11 * b2 - b1 * a21) / det
        return u, v
    # rank <= 1: consistent iff the augmented matrix has the same rank
    if a11 == a12 == a21 == a22 == 0:
        return Singular.DEGENERATE if b1 == b2 == 0 else Singular.INCONSISTENT
    if a11 * b2 - a21 * b1 != 0 or a12 * b2 - a22 * b1 != 0:
        return Singular.INCONSISTENT
    return Singular.DEGENERATE
