"""Exact rectangular-area (Minkowski distance) statistics and the line incidences behind them."""

from .core import PlanePoint, Plane3, SpacePoint, parse_rational, format_rational, solve_2x2, to_new_coordinates
from .minkowski import PointSet, area_spectrum, distance_set, quadruple_energy, rectangular_area
from .isometry import Isometry, IsoLine, apply, compose, inverse, isometry_from_quadruple, line_from_pair, psi, psi_inverse
from .incidence import all_intersections, build_line_family, incidence_energy, refined_multiplicities
from .sumproduct import RealSet, expander_size, direction_count
from .generators import FamilySpec, generate

__version__ = "0.1.0"
