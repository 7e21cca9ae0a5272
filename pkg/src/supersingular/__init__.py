"""Torsion valuations, ramification bounds and sporadic-point gates for
elliptic curves with supersingular reduction."""

from .algebra import INF, RATIONAL, FieldDescriptor, FieldElement, field_invert, field_valuation
from .curve import CurveModel, deuring_coefficient, has_good_reduction, is_supersingular_at
from .divpoly import division_polynomial, mu, primitive_part
from .formalgroup import fiber_valuations, formal_expansion, multiplication_series, oracle_spectrum
from .poly import NewtonPolygon, Poly, Series, newton_polygon, poly_exact_div, reciprocal_eisenstein
from .spectrum import (
    canonical_regime,
    minimal_torsion_field_degree,
    ramification_bounds,
    torsion_spectrum,
    x_coordinate_spectrum,
)
from .sporadic import JClass, composite_gate, custom_gate, gonality_upper_bound, primepower_gate

__version__ = "0.1.0"
