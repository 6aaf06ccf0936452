"""Barrier profiles, region classification and signed dispersion."""

import numpy as np
import pytest

from kgscatter import (
    Barrier,
    DomainError,
    Region,
    ScatteringConfig,
    classify_region,
    dispersion,
    lambertw_potential,
    potential_value,
)

STEP = ScatteringConfig(E=5.0, barrier=Barrier.STEP)
TANH = ScatteringConfig(E=5.0, barrier=Barrier.TANH)
LW = ScatteringConfig(E=5.0, barrier=Barrier.LAMBERTW)


# ---------------------------------------------------------------- profiles


def test_step_values_right_closed():
    assert potential_value(STEP, -1e-12) == 0.0
    assert potential_value(STEP, 0.0) == 3.0
    assert potential_value(STEP, 2.0) == 3.0


def test_tanh_midpoint():
    assert potential_value(TANH, 0.0) == pytest.approx(1.5, abs=1e-15)


def test_lambertw_values():
    # V(0) = V0 / (1 + W(1))
    assert potential_value(LW, 0.0) == pytest.approx(1.9143112300953323, rel=1e-12)
    assert potential_value(LW, 200.0) == pytest.approx(3.0, rel=1e-14)


def test_lambertw_tail_switch_continuity():
    # the asymptotic branch takes over at -x/sigma = 600
    sigma = 0.15
    x_switch = -600.0 * sigma
    below = lambertw_potential(x_switch + 1e-9, 3.0, sigma)
    above = lambertw_potential(x_switch - 1e-9, 3.0, sigma)
    assert below == pytest.approx(above, rel=1e-9)


def test_lambertw_left_tail_slow_decay():
    # V(-L) ~ V0 sigma / L: bounded by V0 sigma/(0.8 L) and above 0.9x of it
    V0, sigma = 3.0, 0.15
    for L in np.geomspace(7.5, 1500.0, 12):
        v = lambertw_potential(-float(L), V0, sigma)
        ratio = v * L / (V0 * sigma)
        assert 0.9 < ratio < 1.25


def test_monotone_profiles():
    for cfg in (STEP, TANH, LW):
        xs = np.linspace(-30.0, 30.0, 1000)
        vals = [potential_value(cfg, float(x)) for x in xs]
        assert all(v2 >= v1 for v1, v2 in zip(vals, vals[1:]))


def test_asymptotic_levels():
    for cfg in (STEP, TANH, LW):
        assert potential_value(cfg, 300.0) == pytest.approx(3.0, rel=1e-12)
        assert abs(potential_value(cfg, -3000.0)) < 2e-3


# ---------------------------------------------------------------- regions


def test_region_examples():
    assert classify_region(1.5, 1.0, 3.0) is Region.SUPERRADIANT
    assert classify_region(3.0, 1.0, 3.0) is Region.EVANESCENT
    assert classify_region(5.0, 1.0, 3.0) is Region.TRANSMISSIVE


def test_region_boundaries_are_evanescent():
    assert classify_region(2.0, 1.0, 3.0) is Region.EVANESCENT
    assert classify_region(4.0, 1.0, 3.0) is Region.EVANESCENT


def test_region_requires_propagating_energy():
    with pytest.raises(DomainError):
        classify_region(1.0, 1.0, 3.0)
    with pytest.raises(DomainError):
        classify_region(0.5, 1.0, 3.0)


# ---------------------------------------------------------------- dispersion


def test_dispersion_superradiant_example():
    d = dispersion(1.2, 1.0, 3.0)
    assert d.nu.real == pytest.approx(0.66332495807107997, rel=1e-14)
    assert d.mu.real == pytest.approx(-1.4966629547095766, rel=1e-14)
    assert d.nu.imag == 0.0 and d.mu.imag == 0.0
    assert d.region is Region.SUPERRADIANT


def test_dispersion_evanescent_branch():
    d = dispersion(3.0, 1.0, 3.0)
    assert d.mu == pytest.approx(1j, abs=1e-15)
    assert d.region is Region.EVANESCENT


def test_dispersion_transmissive_example():
    d = dispersion(5.0, 1.0, 3.0)
    assert d.nu.real == pytest.approx(4.8989794855663562, rel=1e-14)
    assert d.mu.real == pytest.approx(1.7320508075688773, rel=1e-14)


def test_dispersion_squares_identity():
    for E in np.linspace(1.01, 8.0, 200):
        d = dispersion(float(E), 1.0, 3.0)
        assert d.nu**2 == pytest.approx(E * E - 1.0, rel=1e-14, abs=1e-14)
        assert d.mu**2 == pytest.approx((E - 3.0) ** 2 - 1.0, rel=1e-14, abs=1e-14)


def test_dispersion_region_sign_coupling():
    for E in np.linspace(1.01, 8.0, 400):
        d = dispersion(float(E), 1.0, 3.0)
        if d.region is Region.SUPERRADIANT:
            assert d.mu.imag == 0.0 and d.mu.real < 0.0
        elif d.region is Region.EVANESCENT:
            assert d.mu.real == 0.0 and d.mu.imag >= 0.0
        else:
            assert d.mu.imag == 0.0 and d.mu.real > 0.0
        assert d.nu.real > 0.0


# ---------------------------------------------------------------- config


def test_config_validation():
    with pytest.raises(DomainError):
        ScatteringConfig(E=0.9, barrier=Barrier.STEP)  # E <= m
    with pytest.raises(DomainError):
        ScatteringConfig(E=5.0, barrier=Barrier.STEP, m=-1.0)
    with pytest.raises(DomainError):
        ScatteringConfig(E=5.0, barrier=Barrier.STEP, V0=0.0)
    with pytest.raises(DomainError):
        ScatteringConfig(E=5.0, barrier=Barrier.TANH, b=0.0)
    with pytest.raises(DomainError):
        ScatteringConfig(E=5.0, barrier=Barrier.LAMBERTW, sigma=-0.1)
    # shape parameter of the other barrier is not consulted
    ScatteringConfig(E=5.0, barrier=Barrier.TANH, sigma=-1.0)
