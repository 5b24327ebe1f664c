"""Checks of the derivative, generating-function, scaling and asymptotic identities."""
from .asymptotic import asymptotic_gegenbauer, asymptotic_hermite, asymptotic_legendre, scaled_gegenbauer
from .genfun import (
    verify_genfun_chebyshev,
    verify_genfun_gegenbauer,
    verify_genfun_hermite_lacunary,
    verify_genfun_hermite_multivar,
    verify_genfun_humbert,
    verify_genfun_legendre2,
    verify_genfun_multivar_u,
    verify_laplace_route,
    verify_legendre_u2n_integral,
    verify_rainville_lacunary,
    verify_shifted_genfun_chebyshev,
    verify_shifted_genfun_hermite,
)
from .ratfun import RationalFunction1D, ratfun_derivative
from .rodriguez import (
    verify_rodriguez_chebyshev,
    verify_rodriguez_hermite,
    verify_rodriguez_legendre,
    verify_rodriguez_legendre_lacunary,
)
from .scaling import (
    dilation_gamma_operator,
    gegenbauer_scaling,
    legendre_scaling_2var,
    legendre_scaling_classical,
    verify_hermite_dilatation,
    verify_hermite_multiplication,
    verify_hermite_recurrence,
    verify_hermite_repeated_derivative,
)

__all__ = [
    "RationalFunction1D",
    "asymptotic_gegenbauer",
    "asymptotic_hermite",
    "asymptotic_legendre",
    "dilation_gamma_operator",
    "gegenbauer_scaling",
    "legendre_scaling_2var",
    "legendre_scaling_classical",
    "ratfun_derivative",
    "scaled_gegenbauer",
    "verify_genfun_chebyshev",
    "verify_genfun_gegenbauer",
    "verify_genfun_hermite_lacunary",
    "verify_genfun_hermite_multivar",
    "verify_genfun_humbert",
    "verify_genfun_legendre2",
    "verify_genfun_multivar_u",
    "verify_hermite_dilatation",
    "verify_hermite_multiplication",
    "verify_hermite_recurrence",
    "verify_hermite_repeated_derivative",
    "verify_laplace_route",
    "verify_legendre_u2n_integral",
    "verify_rainville_lacunary",
    "verify_rodriguez_chebyshev",
    "verify_rodriguez_hermite",
    "verify_rodriguez_legendre",
    "verify_rodriguez_legendre_lacunary",
    "verify_shifted_genfun_chebyshev",
    "verify_shifted_genfun_hermite",
]
