"""Exact computations for algebraic cuts of one-dimensional torus actions on P(V)."""

from .arith import LaurentSeries, Poly, PrecisionError, residue, series_exp, series_invert
from .charnum import (
    euler_characteristic,
    quotient_numbers,
    todd_closed_form_comparator,
    todd_genus,
)
from .cut import CutInventory, FixedPointDatum, InstabilityType, Section, classify_cut_point, cut_fixed_inventory
from .localization import (
    EquivariantClass,
    euler_class,
    kalkman_from_class,
    kalkman_integral,
    restrict_at_fixed_point,
    tangent_chern_class,
    total_residue,
)
from .weights import AmbientWeights, SupportPattern, is_stable, reweight

__version__ = "0.1.0"
