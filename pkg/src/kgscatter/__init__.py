"""Relativistic scattering off step, tanh and Lambert-W potential barriers.

Closed-form reflection/transmission coefficients (including the
superradiant regime R > 1, T < 0), the exact hypergeometric and confluent
Heun wavefunctions, and an independent direct-integration oracle that
cross-checks every closed form.
"""

from .barriers import (
    Barrier,
    Dispersion,
    Region,
    ScatteringConfig,
    classify_region,
    dispersion,
    lambertw_potential,
    potential_value,
)
from .coefficients import (
    RTPair,
    TanhScatteringData,
    coefficients_for,
    lambertw_rt,
    step_rt,
    tanh_ab,
    tanh_rt,
)
from .errors import (
    ConvergenceError,
    DomainError,
    MatchingError,
    PoleError,
    SingularEnergyError,
)
from .ode_oracle import (
    ClosedFormComparison,
    OracleResult,
    compare_closed_form,
    default_domain,
    integrate_rt,
)
from .special_functions import (
    HeunCParams,
    gauss_2f1,
    heun_c,
    heun_c_prime,
    lambert_w0,
    log_gamma,
)
from .wavefunctions import (
    WaveSample,
    current,
    kg_heun_params,
    lw_wave,
    tanh_wave,
)

__version__ = "0.1.0"

__all__ = [
    "Barrier",
    "ClosedFormComparison",
    "ConvergenceError",
    "Dispersion",
    "DomainError",
    "HeunCParams",
    "MatchingError",
    "OracleResult",
    "PoleError",
    "RTPair",
    "Region",
    "ScatteringConfig",
    "SingularEnergyError",
    "TanhScatteringData",
    "WaveSample",
    "classify_region",
    "coefficients_for",
    "compare_closed_form",
    "current",
    "default_domain",
    "dispersion",
    "gauss_2f1",
    "heun_c",
    "heun_c_prime",
    "integrate_rt",
    "kg_heun_params",
    "lambert_w0",
    "lambertw_potential",
    "lambertw_rt",
    "log_gamma",
    "lw_wave",
    "potential_value",
    "step_rt",
    "tanh_ab",
    "tanh_rt",
    "tanh_wave",
    "__version__",
]
