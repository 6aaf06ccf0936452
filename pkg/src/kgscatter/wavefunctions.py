"""Exact Klein-Gordon solutions phi(x) for the smooth barriers.

tanh barrier
    With z = -exp(2bx) the equation reduces to hypergeometric form and

        phi(x) = c1 (-e^{2bx})^{i nu} (1+e^{2bx})^lambda
                     2F1(i nu + lambda - i mu, i nu + lambda + i mu; 1 + 2i nu; z)
               + c2 (same with nu -> -nu).

    The power of the negative base is fixed once and for all as
    (-e^{2bx})^{+-i nu} = exp(+-i nu (2bx + i pi)); any other branch choice
    multiplies each part by a constant phase, which R and T cannot see.

Lambert-W barrier
    With y = -W(exp(-x/sigma)) the equation reduces to a confluent Heun
    equation (parameters from `kg_heun_params`) and

        phi(x) = c1 e^{-(alpha/2) W} W^{+beta/2} HeunC(alpha, +beta, ...; y)
               + c2 e^{-(alpha/2) W} W^{-beta/2} HeunC(alpha, -beta, ...; y),

    valid while |y| < 1, i.e. x > -sigma.

Derivatives are exact: the parameter-shift rule
d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z) for the tanh solution, the
term-wise differentiated series for the Heun one.  The conserved current
j = Im(phi* dphi) is position independent for every exact solution, which
the test suite uses as a global consistency check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .barriers import dispersion
from .errors import DomainError
from .special_functions import (
    HeunCParams,
    _heun_series,
    gauss_2f1,
    lambert_w0,
)


@dataclass(frozen=True)
class WaveSample:
    """Field amplitude and spatial derivative at one position."""

    x: float
    phi: complex
    dphi: complex

    def __post_init__(self):
        for v in (self.phi, self.dphi):
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise DomainError(f"WaveSample at x={self.x} is not finite: {v}")


def current(s: WaveSample) -> float:
    """Conserved Klein-Gordon current j = (i/2)(phi* dphi - phi dphi*)
    = Im(phi* dphi)."""
    return (s.phi.conjugate() * s.dphi).imag


def _f21_with_derivative(a, b, c, z):
    f = gauss_2f1(a, b, c, z)
    df = a * b / c * gauss_2f1(a + 1.0, b + 1.0, c + 1.0, z)
    return f, df


def tanh_wave(
    E: float,
    m: float,
    V0: float,
    b: float,
    c1: complex,
    c2: complex,
    x: float,
) -> WaveSample:
    """Evaluate the general hypergeometric solution for the tanh barrier."""
    if 2.0 * b * abs(x) > 700.0:
        raise DomainError(
            f"tanh_wave: exp(2b|x|) overflows at x={x}; the solution is an "
            "asymptotic plane wave there"
        )
    d = dispersion(E, m, V0)
    nu = d.nu.real / (2.0 * b)
    mu = complex(d.mu) / (2.0 * b)
    lam = (b + cmath.sqrt(complex(b * b - V0 * V0))) / (2.0 * b)

    z = -math.exp(2.0 * b * x)
    dz = 2.0 * b * z
    # log of (1+e^{2bx})^lambda and its x-derivative
    ln_shared = lam * cmath.log(1.0 - z)
    dln_shared = lam * 2.0 * b * (-z) / (1.0 - z)

    phi = 0.0 + 0.0j
    dphi = 0.0 + 0.0j
    for coeff, sign in ((complex(c1), 1.0), (complex(c2), -1.0)):
        if coeff == 0.0:
            continue
        a1 = sign * 1j * nu + lam - 1j * mu
        b1 = sign * 1j * nu + lam + 1j * mu
        cc = 1.0 + sign * 2j * nu
        F, dF = _f21_with_derivative(a1, b1, cc, z)
        # (-e^{2bx})^{+-i nu} = exp(+-i nu (2bx + i pi))
        pre = cmath.exp(sign * 1j * nu * (2.0 * b * x + 1j * math.pi) + ln_shared)
        phi += coeff * pre * F
        dphi += coeff * pre * ((sign * 2j * b * nu + dln_shared) * F + dF * dz)
    return WaveSample(x=x, phi=phi, dphi=dphi)


def kg_heun_params(
    E: float, m: float, V0: float, sigma: float, negate_beta: bool = False
) -> HeunCParams:
    """Confluent Heun parameters of the Lambert-W barrier reduction:

        alpha = 2 sigma sqrt(m^2 - E^2)
        beta  = 2 sigma sqrt(m^2 - E^2 + 2 E V0 - V0^2)
        gamma = -2
        delta = 2 sigma^2 (m^2 - E^2 + E V0)
        eta   = 1 - 2 sigma^2 (m^2 - E^2 + E V0)

    (principal square roots).  `negate_beta` selects the second exponent
    at y = 0 for the companion solution.
    """
    alpha = 2.0 * sigma * cmath.sqrt(complex(m * m - E * E))
    beta = 2.0 * sigma * cmath.sqrt(complex(m * m - E * E + 2.0 * E * V0 - V0 * V0))
    if negate_beta:
        beta = -beta
    q = 2.0 * sigma * sigma * (m * m - E * E + E * V0)
    return HeunCParams(alpha=alpha, beta=beta, gamma=-2.0 + 0j, delta=q, eta=1.0 - q)


def lw_wave(
    E: float,
    m: float,
    V0: float,
    sigma: float,
    c1: complex,
    c2: complex,
    x: float,
) -> WaveSample:
    """Evaluate the confluent-Heun solution for the Lambert-W barrier.

    Raises DomainError once the Heun argument y = -W(exp(-x/sigma)) leaves
    the series disk, i.e. for x <= -sigma.
    """
    if x <= -sigma:
        # y = -W(e^{-x/sigma}) reaches -1 at x = -sigma
        raise DomainError(
            f"lw_wave: Heun argument |y| >= 1 at x={x} (need x > -sigma = {-sigma})"
        )
    w = lambert_w0(math.exp(-x / sigma))
    if w == 0.0:
        raise DomainError(
            f"lw_wave: W(exp(-x/sigma)) underflows at x={x}; the solution "
            "is an asymptotic plane wave there"
        )
    y = -w
    p_plus = kg_heun_params(E, m, V0, sigma)
    p_minus = kg_heun_params(E, m, V0, sigma, negate_beta=True)
    alpha, beta = p_plus.alpha, p_plus.beta

    dydx = y / (sigma * (y - 1.0))  # from dW/dz = W/(z (1+W)) and z = e^{-x/sigma}
    exp_pre = cmath.exp(-(alpha / 2.0) * w)

    phi = 0.0 + 0.0j
    dphi_dy = 0.0 + 0.0j
    for coeff, params, half_beta in (
        (complex(c1), p_plus, beta / 2.0),
        (complex(c2), p_minus, -beta / 2.0),
    ):
        if coeff == 0.0:
            continue
        f, fp = _heun_series(params, y)
        pre = exp_pre * w**half_beta
        phi += coeff * pre * f
        dphi_dy += coeff * pre * ((alpha / 2.0) * f + (half_beta / y) * f + fp)
    return WaveSample(x=x, phi=phi, dphi=dphi_dy * dydx)
