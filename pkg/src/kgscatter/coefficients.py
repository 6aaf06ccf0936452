"""Closed-form reflection and transmission coefficients for the three barriers.

All coefficients are current ratios: R = j_ref/j_inc, T = j_trans/j_inc.
With the group-velocity sign convention of `barriers.dispersion` they
satisfy R + T = 1 in every region, with T < 0 and R > 1 in the
superradiant band m < E < V0 - m.

The step coefficients are elementary.  The tanh barrier is solved by
hypergeometric functions; the incident/reflected amplitudes A, B come out
as Gamma-function ratios of the parameters

    nu = sqrt(E^2-m^2)/(2b),  mu = +-sqrt((E-V0)^2-m^2)/(2b),
    lambda = (b + sqrt(b^2 - V0^2))/(2b),

evaluated here through `log_gamma` so extreme parameter values cannot
overflow.  The Lambert-W barrier uses the sinh-ratio reflection formula

    R = exp(-2 pi sigma mu) sinh[pi sigma (nu-mu)^2/(2 nu)]
                          / sinh[pi sigma (nu+mu)^2/(2 nu)]

with the unscaled, group-velocity-signed wave numbers; its transmission
is defined by unitarity, T = 1 - R.  Note this sinh formula is exact for
the nonrelativistic problem but only approximate for the relativistic
one; `ode_oracle.compare_closed_form` measures the difference.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from .barriers import Barrier, Region, classify_region, dispersion
from .errors import DomainError, SingularEnergyError
from .special_functions import log_gamma

# relative size of nu + mu below which the step/Lambert-W closed forms are
# treated as singular (E -> V0/2 divergence)
_SINGULAR_RTOL = 1e-9


class RTPair(NamedTuple):
    """Reflection and transmission coefficient of one configuration."""

    R: float
    T: float


@dataclass(frozen=True)
class TanhScatteringData:
    """Hypergeometric parameters and connection coefficients for the tanh
    barrier.  log_A and log_B are the overflow-safe representations used
    to form the current ratios."""

    nu_h: float
    mu_h: complex
    lambda_h: complex
    A: complex
    B: complex
    log_A: complex
    log_B: complex


def _require_propagating(E: float, m: float) -> None:
    if E <= m:
        raise DomainError(f"need E > m for a propagating incident wave, got E={E}")


def step_rt(E: float, m: float, V0: float) -> RTPair:
    """Step-barrier coefficients R = |(mu-nu)/(mu+nu)|^2,
    T = (mu/nu)|2nu/(mu+nu)|^2 with signed mu.

    Raises SingularEnergyError at E = V0/2 inside the superradiant region,
    where mu = -nu makes both expressions diverge.  Returns (1, 0) in the
    evanescent region.
    """
    _require_propagating(E, m)
    d = dispersion(E, m, V0)
    if d.region is Region.EVANESCENT:
        return RTPair(1.0, 0.0)
    nu = d.nu.real
    mu = d.mu.real
    if abs(mu + nu) <= _SINGULAR_RTOL * (abs(mu) + nu):
        raise SingularEnergyError(
            f"step coefficients diverge at E={E} (mu = -nu at E = V0/2)"
        )
    R = ((mu - nu) / (mu + nu)) ** 2
    T = (mu / nu) * (2.0 * nu / (mu + nu)) ** 2
    return RTPair(R, T)


def _tanh_connection(nu, mu, lam):
    """Connection coefficients (A, B, log_A, log_B) of the scattering
    solution: the pure transmitted wave behaves as
    A exp(2ib nu x) + B exp(-2ib nu x) on the incident side."""
    log_A = (
        log_gamma(1.0 - 2j * mu)
        + log_gamma(-2j * nu)
        - log_gamma(-1j * nu + lam - 1j * mu)
        - log_gamma(1.0 - 1j * nu - lam - 1j * mu)
    )
    log_B = (
        log_gamma(1.0 - 2j * mu)
        + log_gamma(2j * nu)
        - log_gamma(1j * nu + lam - 1j * mu)
        - log_gamma(1.0 + 1j * nu - lam - 1j * mu)
    )
    return cmath.exp(log_A), cmath.exp(log_B), log_A, log_B


def tanh_ab(E: float, m: float, V0: float, b: float) -> TanhScatteringData:
    """Hypergeometric parameters and Gamma-ratio coefficients A, B for the
    tanh barrier, with group-velocity-signed mu.

    A PoleError propagates from `log_gamma` if a parameter coincidence
    drops an argument onto a non-positive integer.
    """
    _require_propagating(E, m)
    if b <= 0.0:
        raise DomainError(f"tanh smoothness must be positive, got b={b}")
    d = dispersion(E, m, V0)
    nu = d.nu.real / (2.0 * b)
    mu = complex(d.mu) / (2.0 * b)
    lam = (b + cmath.sqrt(complex(b * b - V0 * V0))) / (2.0 * b)
    A, B, log_A, log_B = _tanh_connection(nu, mu, lam)
    return TanhScatteringData(
        nu_h=nu, mu_h=mu, lambda_h=lam, A=A, B=B, log_A=log_A, log_B=log_B
    )


def tanh_rt(E: float, m: float, V0: float, b: float) -> RTPair:
    """Tanh-barrier coefficients from the current ratios R = |B/A|^2 and
    T = (mu/nu)/|A|^2.  Returns (1, 0) in the evanescent region."""
    data = tanh_ab(E, m, V0, b)
    if classify_region(E, m, V0) is Region.EVANESCENT:
        return RTPair(1.0, 0.0)
    R = math.exp(2.0 * (data.log_B.real - data.log_A.real))
    T = (data.mu_h.real / data.nu_h) * math.exp(-2.0 * data.log_A.real)
    return RTPair(R, T)


def _log_sinh(t: float) -> float:
    # log(sinh t) for t > 0 without overflow
    return t + math.log1p(-math.exp(-2.0 * t)) - math.log(2.0)


def lambertw_rt(E: float, m: float, V0: float, sigma: float) -> RTPair:
    """Lambert-W barrier coefficients from the sinh-ratio reflection
    formula, T defined as 1 - R.  Returns (1, 0) in the evanescent region;
    raises SingularEnergyError at E = V0/2 where the denominator vanishes.
    """
    _require_propagating(E, m)
    if sigma <= 0.0:
        raise DomainError(f"Lambert-W smoothness must be positive, got sigma={sigma}")
    d = dispersion(E, m, V0)
    if d.region is Region.EVANESCENT:
        return RTPair(1.0, 0.0)
    nu = d.nu.real
    mu = d.mu.real
    if abs(mu + nu) <= _SINGULAR_RTOL * (abs(mu) + nu):
        raise SingularEnergyError(
            f"Lambert-W reflection diverges at E={E} (mu = -nu at E = V0/2)"
        )
    if mu == nu:  # V0 = 0 or V0 = 2E: transparent
        return RTPair(0.0, 1.0)
    s_minus = math.pi * sigma * (nu - mu) ** 2 / (2.0 * nu)
    s_plus = math.pi * sigma * (nu + mu) ** 2 / (2.0 * nu)
    if s_plus < 350.0:
        R = math.exp(-2.0 * math.pi * sigma * mu) * math.sinh(s_minus) / math.sinh(s_plus)
    else:
        R = math.exp(-2.0 * math.pi * sigma * mu + _log_sinh(s_minus) - _log_sinh(s_plus))
    return RTPair(R, 1.0 - R)


def coefficients_for(cfg) -> RTPair:
    """Dispatch to the closed form matching cfg.barrier."""
    if cfg.barrier is Barrier.STEP:
        return step_rt(cfg.E, cfg.m, cfg.V0)
    if cfg.barrier is Barrier.TANH:
        return tanh_rt(cfg.E, cfg.m, cfg.V0, cfg.b)
    return lambertw_rt(cfg.E, cfg.m, cfg.V0, cfg.sigma)
