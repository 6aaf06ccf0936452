"""Closed-form coefficient tests.

Frozen reference values were computed with mpmath at 25 significant
digits from the defining formulas (and, for the step barrier, confirmed
by the direct-integration oracle in test_ode_oracle.py).
"""

import cmath
import math

import numpy as np
import pytest

from kgscatter import (
    Barrier,
    DomainError,
    Region,
    ScatteringConfig,
    SingularEnergyError,
    classify_region,
    coefficients_for,
    lambertw_rt,
    step_rt,
    tanh_ab,
    tanh_rt,
)
from kgscatter.coefficients import _tanh_connection

GRID = np.linspace(1.05, 6.0, 500)


def _skip_sensitive(E, window=0.02):
    # closed-form singular point and the exact region boundaries
    return abs(E - 1.5) < window or abs(E - 2.0) < 1e-9 or abs(E - 4.0) < 1e-9


# ---------------------------------------------------------------- step


def test_step_superradiant_point():
    R, T = step_rt(1.2, 1.0, 3.0)
    assert R == pytest.approx(6.718313616914123, rel=1e-12)
    assert T == pytest.approx(-5.718313616914123, rel=1e-12)


def test_step_evanescent_plateau_point():
    assert step_rt(3.0, 1.0, 3.0) == (1.0, 0.0)


def test_step_transmissive_point():
    R, T = step_rt(5.0, 1.0, 3.0)
    assert R == pytest.approx(0.22809435732932972, rel=1e-12)
    assert T == pytest.approx(0.77190564267067028, rel=1e-12)
    # T from its own formula, not from 1 - R
    nu, mu = math.sqrt(24.0), math.sqrt(3.0)
    assert T == pytest.approx((mu / nu) * (2 * nu / (mu + nu)) ** 2, rel=1e-14)


def test_step_singularity_reported():
    with pytest.raises(SingularEnergyError):
        step_rt(1.5, 1.0, 3.0)


def test_step_requires_propagating():
    with pytest.raises(DomainError):
        step_rt(0.8, 1.0, 3.0)


# ---------------------------------------------------------------- tanh


def test_tanh_ab_parameters():
    data = tanh_ab(5.0, 1.0, 3.0, 0.5)
    assert data.nu_h == pytest.approx(4.8989794855663562, rel=1e-13)
    assert data.mu_h.real == pytest.approx(1.7320508075688773, rel=1e-13)
    assert data.mu_h.imag == 0.0
    assert data.lambda_h == pytest.approx(0.5 + 2.958039891549808j, rel=1e-13)
    assert cmath.exp(data.log_A) == pytest.approx(data.A, rel=1e-12)


def test_tanh_ab_evanescent_is_imaginary():
    data = tanh_ab(3.0, 1.0, 3.0, 0.5)
    assert data.mu_h.real == 0.0
    assert data.mu_h.imag == pytest.approx(1.0, rel=1e-14)
    assert tanh_rt(3.0, 1.0, 3.0, 0.5) == (1.0, 0.0)


def test_tanh_ratio_invariant_under_rescaling():
    data = tanh_ab(5.0, 1.0, 3.0, 0.5)
    scale = 3.7 - 1.2j
    assert abs(scale * data.B / (scale * data.A)) ** 2 == pytest.approx(
        abs(data.B / data.A) ** 2, rel=1e-14
    )


def test_tanh_frozen_values():
    R, T = tanh_rt(1.2, 1.0, 3.0, 0.5)
    assert R == pytest.approx(1.0066406201466774, rel=1e-10)
    assert T == pytest.approx(-0.0066406201466774472, rel=1e-8)
    R, T = tanh_rt(1.5, 1.0, 3.0, 0.5)
    assert R == pytest.approx(1.0107131328383415, rel=1e-10)
    R, T = tanh_rt(5.0, 1.0, 3.0, 0.5)
    assert R == pytest.approx(4.4754452046126946e-10, rel=1e-8)
    assert T == pytest.approx(0.99999999955245548, rel=1e-12)


def test_tanh_r_from_ab_matches_rt():
    for E in (1.3, 1.8, 4.3, 5.5):
        data = tanh_ab(E, 1.0, 3.0, 0.5)
        R, _ = tanh_rt(E, 1.0, 3.0, 0.5)
        assert abs(data.B / data.A) ** 2 == pytest.approx(R, rel=1e-12)


def test_tanh_lambda_branch_swap_leaves_rt_invariant():
    # both lambda and 1 - lambda solve the indicial equation
    for E in (1.3, 5.0):
        data = tanh_ab(E, 1.0, 3.0, 0.5)
        nu, mu, lam = data.nu_h, data.mu_h, data.lambda_h
        _, _, log_a1, log_b1 = _tanh_connection(nu, mu, lam)
        _, _, log_a2, log_b2 = _tanh_connection(nu, mu, 1.0 - lam)
        R1 = math.exp(2.0 * (log_b1.real - log_a1.real))
        R2 = math.exp(2.0 * (log_b2.real - log_a2.real))
        T1 = (mu.real / nu) * math.exp(-2.0 * log_a1.real)
        T2 = (mu.real / nu) * math.exp(-2.0 * log_a2.real)
        assert R1 == pytest.approx(R2, rel=1e-12)
        assert T1 == pytest.approx(T2, rel=1e-12)


# ---------------------------------------------------------------- Lambert-W


def test_lambertw_transparent_without_barrier():
    assert lambertw_rt(2.0, 1.0, 0.0, 0.15) == (0.0, 1.0)


def test_lambertw_frozen_value():
    R, T = lambertw_rt(5.0, 1.0, 3.0, 0.15)
    assert R == pytest.approx(0.023993943145384935, rel=1e-12)
    assert T == pytest.approx(1.0 - R, rel=1e-14)


def test_lambertw_superradiant_band():
    R, T = lambertw_rt(1.5001, 1.0, 3.0, 0.15)
    assert R > 1.0 and T < 0.0
    R, T = lambertw_rt(1.2, 1.0, 3.0, 0.15)
    assert R == pytest.approx(41.562589826599771, rel=1e-11)


def test_lambertw_singularity_reported():
    with pytest.raises(SingularEnergyError):
        lambertw_rt(1.5, 1.0, 3.0, 0.15)


def test_lambertw_extreme_smoothness_no_overflow():
    # sinh arguments far beyond exp overflow; log route must handle them
    R, T = lambertw_rt(5.0, 1.0, 3.0, 60.0)
    assert 0.0 <= R < 1e-300
    assert T == pytest.approx(1.0)


# ---------------------------------------------------------------- shared properties


def _rt_all(E):
    yield step_rt(E, 1.0, 3.0)
    yield tanh_rt(E, 1.0, 3.0, 0.5)
    yield lambertw_rt(E, 1.0, 3.0, 0.15)


def test_unitarity_on_grid():
    for E in GRID:
        E = float(E)
        if _skip_sensitive(E):
            continue
        for R, T in _rt_all(E):
            assert abs(R + T - 1.0) < 1e-8


def test_superradiance_characterization():
    for E in GRID:
        E = float(E)
        if _skip_sensitive(E):
            continue
        superradiant = classify_region(E, 1.0, 3.0) is Region.SUPERRADIANT
        for R, T in _rt_all(E):
            assert (R > 1.0) == superradiant
            assert (T < 0.0) == superradiant


def test_evanescent_plateau():
    for E in np.linspace(2.0, 4.0, 80):
        for R, T in _rt_all(float(E)):
            assert abs(R - 1.0) < 1e-12
            assert abs(T) < 1e-12


def test_high_energy_transparency():
    tail = np.linspace(4.05, 20.0, 300)
    for rt in (
        lambda E: step_rt(E, 1.0, 3.0),
        lambda E: tanh_rt(E, 1.0, 3.0, 0.5),
        lambda E: lambertw_rt(E, 1.0, 3.0, 0.15),
    ):
        rs = [rt(float(E)).R for E in tail]
        assert all(r2 <= r1 for r1, r2 in zip(rs, rs[1:]))
        assert rs[-1] < 0.05


def test_tanh_step_limit_pointwise():
    # pointwise 1/b^2 convergence as the barrier sharpens, away from the
    # singular energy
    E = 1.3
    target = step_rt(E, 1.0, 3.0).R
    errs = [abs(tanh_rt(E, 1.0, 3.0, b).R - target) for b in (50.0, 400.0, 3200.0)]
    assert errs[1] < errs[0] / 30.0
    assert errs[2] < errs[1] / 30.0
    assert errs[2] < 1e-3


def test_tanh_step_limit_sup_outside_convergence_window():
    # The b -> inf limit is not uniform near the E = V0/2 pole: at b = 50
    # the tanh curve saturates at scale (V0^2/2b)^2 and |R_tanh - R_step|
    # stays above 1e-2 for |E - 1.5| < ~0.4 (sup ~85 with a +-0.05
    # exclusion).  Outside +-0.45 the difference drops to the smoothness
    # floor ~(nu/2b)^2, measured sup 2.6e-3 at E = 6.
    sup = 0.0
    for E in np.arange(1.05, 6.0001, 0.005):
        E = float(E)
        if abs(E - 1.5) < 0.45 or abs(E - 2.0) < 0.05 or abs(E - 4.0) < 0.05:
            continue
        sup = max(sup, abs(tanh_rt(E, 1.0, 3.0, 50.0).R - step_rt(E, 1.0, 3.0).R))
    assert sup < 1e-2


def test_dispatch_matches_direct_calls():
    cfg = ScatteringConfig(E=5.0, barrier=Barrier.TANH, b=0.5)
    assert coefficients_for(cfg) == tanh_rt(5.0, 1.0, 3.0, 0.5)
    cfg = ScatteringConfig(E=5.0, barrier=Barrier.LAMBERTW, sigma=0.15)
    assert coefficients_for(cfg) == lambertw_rt(5.0, 1.0, 3.0, 0.15)
    cfg = ScatteringConfig(E=5.0, barrier=Barrier.STEP)
    assert coefficients_for(cfg) == step_rt(5.0, 1.0, 3.0)
