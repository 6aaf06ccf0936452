"""Self-contained complex special functions used by the closed-form solutions.

Everything here is scalar and pure: principal-branch Lambert W on the real
axis, principal-branch complex log-Gamma, the Gauss hypergeometric function
2F1 with complex parameters, and the local (Frobenius) solution of the
confluent Heun equation normalized to 1 at the origin.

Series follow one stopping rule throughout: summation ends once the last
term is below 1e-16 of the partial sum twice in a row, with a hard cap of
1e5 terms (ConvergenceError beyond that).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, PoleError

_SERIES_EPS = 1e-16
_SERIES_CAP = 100_000

_LN_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_LN_PI = math.log(math.pi)

# B_{2k} / (2k (2k-1)) for the Stirling tail, k = 1..8; accurate to ~1e-18
# once |z| >= 12.
_STIRLING_COEFFS = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)
_STIRLING_RADIUS = 12.0


@dataclass(frozen=True)
class HeunCParams:
    """Parameter set (alpha, beta, gamma, delta, eta) of the confluent Heun
    equation in the convention

        y(y-1) f'' + [alpha y^2 + (beta - alpha + gamma + 2) y - (beta + 1)] f'
                   + [(alpha (beta + gamma + 2)/2 + delta) y
                      + (gamma + 1) beta/2 - alpha (beta + 1)/2 + gamma/2 + eta] f = 0.

    Every barrier reduction in this package produces gamma = -2.
    """

    alpha: complex
    beta: complex
    gamma: complex
    delta: complex
    eta: complex

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta", "eta"):
            v = complex(getattr(self, name))
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise DomainError(f"HeunCParams.{name} must be finite, got {v}")


def lambert_w0(x: float) -> float:
    """Principal branch of the Lambert W function on the real axis.

    Solves w * exp(w) = x by Halley iteration with a piecewise initial
    guess (logarithmic for x > e, rational near zero, square-root series
    near the branch point -1/e).

    Parameters
    ----------
    x : float
        Argument, must satisfy x >= -1/e.

    Returns
    -------
    float
        w with w >= -1 and w * exp(w) = x to relative accuracy ~1e-14.
    """
    if math.isnan(x):
        raise DomainError("lambert_w0: argument is NaN")
    branch_point = -1.0 / math.e
    if x < branch_point:
        raise DomainError(f"lambert_w0: x={x} below the branch point -1/e")
    if x == 0.0:
        return 0.0

    if x < -0.2875:
        # series around the branch point, in p = sqrt(2 (e x + 1))
        p = math.sqrt(2.0 * (math.e * x + 1.0))
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * 11.0 / 72.0))
        if p < 1e-4:
            return w
    elif x <= math.e:
        w = x / (1.0 + x)
    else:
        w = math.log(x)
        w -= math.log(w)

    for _ in range(100):
        e = math.exp(w)
        f = w * e - x
        w1 = w + 1.0
        dw = f / (e * w1 - (w + 2.0) * f / (2.0 * w1))
        w -= dw
        if abs(dw) <= 1e-15 * (1.0 + abs(w)):
            return w
    raise ConvergenceError(f"lambert_w0: Halley iteration stalled at x={x}")


def _log_sin_pi(z: complex) -> complex:
    # log(sin(pi z)) for Im z >= 0, stable for large imaginary parts.
    # Real part is exact; imaginary part is correct mod 2 pi, which is all
    # the reflection formula requires.
    return (
        0.5j * math.pi
        - math.log(2.0)
        - 1j * math.pi * z
        + cmath.log(1.0 - cmath.exp(2j * math.pi * z))
    )


def _stirling(z: complex) -> complex:
    s = (z - 0.5) * cmath.log(z) - z + _LN_SQRT_2PI
    zi = 1.0 / z
    z2 = zi * zi
    t = zi
    for c in _STIRLING_COEFFS:
        s += c * t
        t *= z2
    return s


def log_gamma(z: complex) -> complex:
    """log Gamma(z) for complex z, accurate to ~1e-13 relative in exp.

    Strategy: conjugate symmetry to reach Im z >= 0, reflection for
    Re z < 1/2, recurrence shift up to |z| >= 12, then the Stirling series.
    The real part (log |Gamma|) is exact; the imaginary part may differ
    from the principal branch by multiples of 2 pi on the reflected half
    plane, which leaves exp(log_gamma) and all modulus identities intact.

    Raises
    ------
    PoleError
        If z is zero or a negative integer.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"log_gamma: argument must be finite, got {z}")
    if z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real):
        raise PoleError(f"log_gamma: pole at z={z}")
    if z.imag < 0.0:
        return log_gamma(z.conjugate()).conjugate()
    if z.real < 0.5:
        return _LN_PI - _log_sin_pi(z) - log_gamma(1.0 - z)
    shift = 0.0 + 0.0j
    while abs(z) < _STIRLING_RADIUS:
        shift += cmath.log(z)
        z += 1.0
    return _stirling(z) - shift


def _gamma_ratio(num: tuple[complex, ...], den: tuple[complex, ...]) -> complex:
    """prod Gamma(num) / prod Gamma(den), with denominator poles giving 0."""
    acc = 0.0 + 0.0j
    for a in num:
        acc += log_gamma(a)
    for b in den:
        try:
            acc -= log_gamma(b)
        except PoleError:
            return 0.0 + 0.0j
    return cmath.exp(acc)


def _is_nonpositive_int(z: complex, tol: float = 0.0) -> bool:
    if tol == 0.0:
        return z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real)
    return (
        abs(z.imag) <= tol
        and z.real <= 0.5
        and abs(z.real - round(z.real)) <= tol
    )


def _f21_series(a: complex, b: complex, c: complex, z: complex) -> complex:
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    small = 0
    for n in range(_SERIES_CAP):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        if abs(term) < _SERIES_EPS * abs(total):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
    raise ConvergenceError(
        f"gauss_2f1: series did not converge for |z|={abs(z):.3f}"
    )


def gauss_2f1(a: complex, b: complex, c: complex, z: complex) -> complex:
    """Gauss hypergeometric function 2F1(a, b; c; z) with complex parameters.

    Evaluation regions:

    * |z| <= 0.9          direct power series;
    * |z| >= 1.1          inversion z -> 1/z through the standard connection
                          formula (requires a - b not an integer);
    * 0.9 < |z| < 1.1     Pfaff transformation z -> z/(z-1), provided the
                          mapped argument stays inside the series disk;
    * z = 1               Gauss summation, for Re(c - a - b) > 0.

    Raises
    ------
    PoleError
        c a non-positive integer, or a degenerate (integer) a - b in the
        inversion region.
    ConvergenceError
        Argument not reachable by the transformations above (z too close
        to the singular point 1), or series cap exceeded.
    """
    a = complex(a)
    b = complex(b)
    c = complex(c)
    z = complex(z)
    if _is_nonpositive_int(c):
        raise PoleError(f"gauss_2f1: c={c} is a non-positive integer")
    if z == 0.0:
        return 1.0 + 0.0j
    if z == 1.0:
        if (c - a - b).real <= 0.0:
            raise ConvergenceError("gauss_2f1: divergent at z=1 for Re(c-a-b)<=0")
        return _gamma_ratio((c, c - a - b), (c - a, c - b))

    az = abs(z)
    if az <= 0.9:
        return _f21_series(a, b, c, z)

    if az >= 1.1:
        # inversion: split into the two z^{-a}, z^{-b} branches
        if _is_nonpositive_int(a - b, 1e-12) or _is_nonpositive_int(b - a, 1e-12):
            raise PoleError(
                f"gauss_2f1: degenerate a-b={a - b} in the inversion region"
            )
        coeff_a = _gamma_ratio((c, b - a), (b, c - a))
        coeff_b = _gamma_ratio((c, a - b), (a, c - b))
        iz = 1.0 / z
        term_a = coeff_a * (-z) ** (-a) * _f21_series(a, 1 - c + a, 1 - b + a, iz)
        term_b = coeff_b * (-z) ** (-b) * _f21_series(b, 1 - c + b, 1 - a + b, iz)
        return term_a + term_b

    w = z / (z - 1.0)
    if abs(w) > 0.9:
        raise ConvergenceError(
            f"gauss_2f1: z={z} too close to the singular point 1"
        )
    return (1.0 - z) ** (-a) * _f21_series(a, c - b, c, w)


def _heun_recurrence_coeffs(p: HeunCParams):
    al, be, ga, de, et = p.alpha, p.beta, p.gamma, p.delta, p.eta
    lin = be - al + ga + 2.0  # linear coefficient of the first-order term
    r = al * (be + ga + 2.0) / 2.0 + de
    s = 0.5 * (-al * (be + 1.0) + (ga + 1.0) * be + ga) + et
    return lin, r, s


def _heun_series(p: HeunCParams, y: complex) -> tuple[complex, complex]:
    """Value and y-derivative of the Frobenius solution at y, f(0)=1."""
    y = complex(y)
    if abs(y) >= 1.0:
        raise DomainError(
            f"heun_c: |y|={abs(y):.6f} outside the series disk |y| < 1"
        )
    be = p.beta
    if be.imag == 0.0 and be.real <= -1.0 and be.real == round(be.real):
        raise PoleError(
            f"heun_c: beta={be} makes the recurrence denominator vanish"
        )
    lin, r, s = _heun_recurrence_coeffs(p)
    al = p.alpha

    c_prev = 0.0 + 0.0j  # c_{n-1}
    c_n = 1.0 + 0.0j
    f = c_n
    fp = 0.0 + 0.0j
    if y == 0.0:
        # c_1 from the y^0 balance
        fp = s / (be + 1.0)
        return f, fp
    y_pow = 1.0 + 0.0j  # y^n
    small = 0
    for n in range(_SERIES_CAP):
        c_next = ((n * (n - 1.0) + lin * n + s) * c_n + (al * (n - 1.0) + r) * c_prev) / (
            (n + 1.0) * (n + be + 1.0)
        )
        term = c_next * y_pow * y  # c_{n+1} y^{n+1}
        f += term
        fp += (n + 1.0) * c_next * y_pow
        y_pow *= y
        c_prev, c_n = c_n, c_next
        if abs(term) < _SERIES_EPS * abs(f):
            small += 1
            if small >= 2:
                return f, fp
        else:
            small = 0
    raise ConvergenceError(
        f"heun_c: series did not converge at |y|={abs(y):.6f}"
    )


def heun_c(p: HeunCParams, y: complex) -> complex:
    """Confluent Heun function: the local solution at the regular singular
    point y = 0 with exponent 0, normalized to heun_c(p, 0) = 1.

    Valid inside the unit disk |y| < 1 (distance to the second regular
    singular point). The physical arguments produced by the Lambert-W
    barrier reduction, y = -W(exp(-x/sigma)), stay inside the disk for
    x > -sigma.

    For purely imaginary alpha the solution oscillates and the monomial
    series cancels like exp(|alpha y|); with float64 arithmetic expect
    roughly 16 - |alpha y|/ln(10) reliable digits near the disk edge.
    """
    return _heun_series(p, y)[0]


def heun_c_prime(p: HeunCParams, y: complex) -> complex:
    """d/dy of `heun_c`, from the term-wise differentiated series."""
    return _heun_series(p, y)[1]
