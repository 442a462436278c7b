"""Rectangle-preserving maps ``T_(x,y) o H_z`` and the lines they trace in 3D.

An isometry is stored as ``(x, y, z)`` with ``z > 0`` and acts by
``(a, b) -> (x + z*a, y + b/z)``.  The maps taking a fixed ``p`` to a fixed
``s`` form a coset; in the coordinates ``(x, -y*z, z)`` that coset is the
straight line ``x = s1 - p1*z, y = p2 - s2*z`` over ``z > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .core import PlanePoint, Singular, SpacePoint, format_rational, solve_2x2
from .minkowski import rectangular_area


@dataclass(frozen=True)
class Isometry:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.z <= 0:
            raise ValueError(f"dilation parameter must be positive, got {self.z}")

    def __call__(self, p: PlanePoint) -> PlanePoint:
        return apply(self, p)

    def __str__(self) -> str:
        return "({}; {}; {})".format(*(format_rational(v) for v in (self.x, self.y, self.z)))


IDENTITY = Isometry(Fraction(0), Fraction(0), Fraction(1))


def apply(phi: Isometry, p: PlanePoint) -> PlanePoint:
    return PlanePoint(phi.x + phi.z * p.x1, phi.y + p.x2 / phi.z)


def compose(phi2: Isometry, phi1: Isometry) -> Isometry:
    """``phi2 o phi1``: apply ``phi1`` first."""
    return Isometry(phi2.x + phi2.z * phi1.x, phi2.y + phi1.y / phi2.z, phi1.z * phi2.z)


def inverse(phi: Isometry) -> Isometry:
    return Isometry(-phi.x / phi.z, -phi.y * phi.z, 1 / phi.z)


def isometry_from_quadruple(
    p: PlanePoint, q: PlanePoint, s: PlanePoint, t: PlanePoint
) -> tuple[Isometry, bool] | None:
    """The unique map sending the interval pq onto st (or onto ts).

    Returns ``(phi, swapped)``: ``swapped`` is False when ``phi(p) = s`` and
    ``phi(q) = t``, True when orientation forces ``phi(p) = t, phi(q) = s``.
    Returns None unless ``R(p, q) = R(s, t) != 0``.
    """
    area = rectangular_area(p, q)
    if area == 0 or area != rectangular_area(s, t):
        return None
    swapped = False
    # x + p1*z = s1, x + q1*z = t1
    sol = solve_2x2(1, p.x1, 1, q.x1, s.x1, t.x1)
    assert not isinstance(sol, Singular)  # p1 != q1 since the area is nonzero
    x, z = sol
    if z < 0:
        swapped = True
        s, t = t, s
        x, z = solve_2x2(1, p.x1, 1, q.x1, s.x1, t.x1)
    phi = Isometry(x, s.x2 - p.x2 / z, z)
    return phi, swapped


def psi(phi: Isometry) -> SpacePoint:
    """Bijection of the group onto the half-space ``z > 0``: ``(x, y*z, z)``."""
    return SpacePoint(phi.x, phi.y * phi.z, phi.z)


def psi_inverse(sigma: SpacePoint) -> Isometry:
    if sigma.z <= 0:
        raise ValueError("only points with z > 0 correspond to isometries")
    return Isometry(sigma.x, sigma.y / sigma.z, sigma.z)


def line_coordinates(phi: Isometry) -> SpacePoint:
    """``psi`` followed by ``y -> -y``; the chart in which line equations read ``y = p2 - s2*z``."""
    x, y, z = psi(phi)
    return SpacePoint(x, -y, z)


def from_line_coordinates(sigma: SpacePoint) -> Isometry:
    return psi_inverse(SpacePoint(sigma.x, -sigma.y, sigma.z))


class IsoLine(NamedTuple):
    """The line of maps sending ``p`` to ``s``."""

    p: PlanePoint
    s: PlanePoint

    def point_at(self, z) -> SpacePoint:
        z = Fraction(z)
        return SpacePoint(self.s.x1 - self.p.x1 * z, self.p.x2 - self.s.x2 * z, z)

    @property
    def direction(self) -> tuple[Fraction, Fraction, Fraction]:
        return (-self.p.x1, -self.s.x2, Fraction(1))

    def contains(self, sigma: SpacePoint) -> bool:
        return sigma.z > 0 and self.point_at(sigma.z) == sigma

    def contains_isometry(self, phi: Isometry) -> bool:
        return self.contains(line_coordinates(phi))


def line_from_pair(p: PlanePoint, s: PlanePoint) -> IsoLine:
    return IsoLine(p, s)
