"""Exact and interval arithmetic for periodic continued radicals of 2."""

from .codec import (
    CONSTANT_TWO,
    CONSTANT_ZERO,
    FiniteClosedForm,
    SignWord,
    WordKind,
    canonicalize,
    decode,
    encode_rational,
    encode_real,
    finite_closed_form,
    finite_signs,
    minimal_period,
    odd_decomposition,
    parse_word,
)
from .errors import DomainError, InconsistentTower, PrecisionExhausted
from .exact import Quadrant, cos_sign, mod_pow, parse_rational, quadrant, semi_order
from .interval import DyadicInterval, cos_pi, pi_interval, sin_pi
from .limits import LimitPointSet, SigmaTable, first_limit_coefficient, limit_points, limit_value, sigma_table
from .radical import RadicalTower, eval_tower, iterate_angle, u_sequence
from .vieta import (
    ProductReport,
    VietaFactor,
    render_latex,
    s_sequence,
    telescoping_sides,
    verify_product,
    vieta_factors,
    vieta_target,
)

__version__ = "0.1.0"
