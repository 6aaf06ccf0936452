"""Potential profiles, energy-region classification and signed dispersion.

Three barriers, all rising from 0 on the left to the height V0 on the
right:

* step:      V(x) = 0 for x < 0, V0 for x >= 0
* tanh:      V(x) = V0/2 (tanh(b x) + 1)
* Lambert-W: V(x) = V0 / (1 + W(exp(-x/sigma)))

The Lambert-W barrier is asymmetric: its right tail closes exponentially
while the left tail opens slowly, V(-L) ~ V0 sigma / L.

For a spin-0 particle of energy E and mass m the incident and transmitted
wave numbers are nu = sqrt(E^2 - m^2) and mu = sqrt((E-V0)^2 - m^2).  The
square roots do not fix signs; the physical branch is the one with
non-negative group velocity, dE/dnu = nu/E >= 0 and dE/dmu = mu/(E-V0) >= 0,
which makes mu negative for m < E < V0 - m.  That sign flip is the origin
of superradiance (R > 1, T < 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .special_functions import lambert_w0

# beyond this value of -x/sigma the Lambert-W argument exp(-x/sigma) would
# overflow; switch to the asymptotic expansion W(e^t) = t - ln t + ...
_LW_TAIL_SWITCH = 600.0


class Barrier(Enum):
    STEP = "step"
    TANH = "tanh"
    LAMBERTW = "lambertw"


class Region(Enum):
    """Energy regions of the scattering problem (V0 > 2m assumed for the
    first to be non-empty)."""

    SUPERRADIANT = "superradiant"  # m < E < V0 - m
    EVANESCENT = "evanescent"      # V0 - m <= E <= V0 + m
    TRANSMISSIVE = "transmissive"  # E > V0 + m


@dataclass(frozen=True)
class ScatteringConfig:
    """Input record for every coefficient computation.

    E, m, V0 in the same (natural) units; b is the tanh smoothness, sigma
    the Lambert-W smoothness.  Only the parameter matching `barrier` is
    used.
    """

    E: float
    barrier: Barrier
    m: float = 1.0
    V0: float = 3.0
    b: float = 0.5
    sigma: float = 0.15

    def __post_init__(self):
        if self.m <= 0.0:
            raise DomainError(f"mass must be positive, got m={self.m}")
        if self.V0 <= 0.0:
            raise DomainError(f"barrier height must be positive, got V0={self.V0}")
        if self.E <= self.m:
            raise DomainError(
                f"incident wave must propagate: need E > m, got E={self.E}, m={self.m}"
            )
        if self.barrier is Barrier.TANH and self.b <= 0.0:
            raise DomainError(f"tanh smoothness must be positive, got b={self.b}")
        if self.barrier is Barrier.LAMBERTW and self.sigma <= 0.0:
            raise DomainError(
                f"Lambert-W smoothness must be positive, got sigma={self.sigma}"
            )


@dataclass(frozen=True)
class Dispersion:
    """Group-velocity-signed wave numbers with their region tag.

    nu is real positive.  mu is real negative in the superradiant region,
    purely imaginary with positive imaginary part (decaying transmitted
    wave) in the evanescent region, real positive in the transmissive one.
    """

    nu: complex
    mu: complex
    region: Region


def lambertw_potential(x: float, V0: float, sigma: float) -> float:
    """V0 / (1 + W(exp(-x/sigma))), safe arbitrarily far into the left tail."""
    t = -x / sigma
    if t > _LW_TAIL_SWITCH:
        # W(e^t) = t - L2 + L2/t + L2(L2-2)/(2t^2) + L2(2L2^2-9L2+6)/(6t^3)
        # with L2 = ln t; relative error ~1e-10 at the switch point.
        L2 = math.log(t)
        w = (
            t
            - L2
            + L2 / t
            + L2 * (L2 - 2.0) / (2.0 * t * t)
            + L2 * (2.0 * L2 * L2 - 9.0 * L2 + 6.0) / (6.0 * t**3)
        )
    else:
        w = lambert_w0(math.exp(t))
    return V0 / (1.0 + w)


def potential_value(cfg: ScatteringConfig, x: float) -> float:
    """Evaluate the configured barrier profile at position x."""
    if cfg.barrier is Barrier.STEP:
        return cfg.V0 if x >= 0.0 else 0.0
    if cfg.barrier is Barrier.TANH:
        return 0.5 * cfg.V0 * (math.tanh(cfg.b * x) + 1.0)
    return lambertw_potential(x, cfg.V0, cfg.sigma)


def classify_region(E: float, m: float, V0: float) -> Region:
    """Assign E to one of the three scattering regions.

    Boundary energies E = V0 -+ m belong to the evanescent region (mu = 0
    there and both closed forms degenerate to R = 1).
    """
    if E <= m:
        raise DomainError(f"classify_region: need E > m, got E={E}, m={m}")
    if E < V0 - m:
        return Region.SUPERRADIANT
    if E <= V0 + m:
        return Region.EVANESCENT
    return Region.TRANSMISSIVE


def dispersion(E: float, m: float, V0: float) -> Dispersion:
    """Signed wave numbers nu, mu for the asymptotic plane waves.

    nu = +sqrt(E^2 - m^2).  Where (E-V0)^2 > m^2 the transmitted wave
    number carries the sign of E - V0 so that the group velocity
    dE/dmu = mu/(E-V0) is non-negative; in between, mu = +i sqrt(m^2-(E-V0)^2)
    selects the decaying transmitted wave.
    """
    region = classify_region(E, m, V0)
    nu = complex(math.sqrt((E - m) * (E + m)), 0.0)
    d2 = (E - V0) ** 2 - m * m
    if d2 > 0.0:
        mu = complex(math.copysign(math.sqrt(d2), E - V0), 0.0)
    else:
        mu = complex(0.0, math.sqrt(-d2))
    return Dispersion(nu=nu, mu=mu, region=region)
