"""Exact Hermite, Chebyshev, Humbert, Legendre and Gegenbauer polynomial families.

Values are exact ``Fraction`` objects; the integral and series routes that
need real numbers run in mpmath at a configurable number of digits.
"""
from .errors import (
    DomainError,
    EvaluationError,
    SingularSeriesError,
    UnsupportedNormalizationError,
    UsageError,
)
from .fps import (
    DEFAULT_ORDER,
    TruncatedSeries,
    series_add,
    series_coefficient,
    series_derivative,
    series_exp,
    series_inv_sqrt,
    series_mul,
    series_power,
    series_reciprocal,
)
from .hermite import (
    hermite2_eval,
    hermite2_poly,
    hermite_lacunary_eval,
    hermite_lacunary_poly,
    hermite_multivar_eval,
    hermite_multivar_poly,
)
from .legendre_family import (
    FamilyTag,
    chebyshev_u2_eval,
    gegenbauer_eval,
    humbert_eval,
    laplace_route_eval,
    legendre2_eval,
    legendre_classical,
    legendre_multivar_eval,
    multivar_u_eval,
    u2n_eval,
)
from .poly import Poly1D, PolyMulti, PolyXY
from .quadrature import QuadratureRule, build_rule, gamma_check, integrate
from .report import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_ORDER",
    "DomainError",
    "EvaluationError",
    "FamilyTag",
    "Poly1D",
    "PolyMulti",
    "PolyXY",
    "QuadratureRule",
    "SingularSeriesError",
    "TruncatedSeries",
    "UnsupportedNormalizationError",
    "UsageError",
    "VerificationReport",
    "build_rule",
    "chebyshev_u2_eval",
    "gamma_check",
    "gegenbauer_eval",
    "hermite2_eval",
    "hermite2_poly",
    "hermite_lacunary_eval",
    "hermite_lacunary_poly",
    "hermite_multivar_eval",
    "hermite_multivar_poly",
    "humbert_eval",
    "integrate",
    "laplace_route_eval",
    "legendre2_eval",
    "legendre_classical",
    "legendre_multivar_eval",
    "multivar_u_eval",
    "series_add",
    "series_coefficient",
    "series_derivative",
    "series_exp",
    "series_inv_sqrt",
    "series_mul",
    "series_power",
    "series_reciprocal",
    "u2n_eval",
]
