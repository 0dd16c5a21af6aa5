import math

import numpy as np
import pytest

from viscoexchange import (
    ConfigError,
    DomainError,
    FluidParams,
    dispersion_point,
    dispersion_residual,
    dispersion_sweep,
    k_gap,
    shear_wave_speed,
)

import oracles

UNIT = FluidParams(eta0=1.0, G0=1.0, rho=1.0)          # c = 1, tau = 1
STIFF = FluidParams(eta0=1.0, G0=4.0, rho=1.0)         # c = 2, tau = 0.25


class TestSpeedAndGap:
    def test_unit_speed(self):
        assert shear_wave_speed(UNIT) == 1.0

    def test_speed_scales_with_modulus(self):
        assert shear_wave_speed(STIFF) == 2.0

    def test_physical_magnitudes(self):
        glassy = FluidParams(eta0=1.0, G0=1e9, rho=1e3)
        assert shear_wave_speed(glassy) == pytest.approx(1000.0, rel=1e-15)

    def test_missing_rho(self):
        with pytest.raises(ConfigError):
            shear_wave_speed(FluidParams(eta0=1.0, G0=1.0))
        with pytest.raises(ConfigError):
            k_gap(FluidParams(eta0=1.0, G0=1.0))

    def test_gap_values(self):
        assert k_gap(UNIT) == 0.5
        assert k_gap(STIFF) == pytest.approx(1.0, rel=1e-15)

    def test_gap_closes_for_elastic_solid(self):
        nearly_solid = FluidParams(eta0=1e12, G0=1.0, rho=1.0)
        assert k_gap(nearly_solid) == pytest.approx(5e-13, rel=1e-15)


class TestDispersionPoint:
    def test_at_the_gap(self):
        kg = k_gap(UNIT)
        pt = dispersion_point(kg, UNIT)
        assert pt.omega_plus.real == 0.0
        assert pt.omega_plus.imag == pytest.approx(-0.5, rel=1e-12)

    def test_above_gap_frozen_value(self):
        # roots at c=1, tau=1, k=1.25: +-sqrt(1.25^2 - 0.25) - i/2
        pt = dispersion_point(1.25, UNIT)
        assert pt.omega_plus.real == pytest.approx(1.14564392373896, rel=1e-12)
        assert pt.omega_plus.imag == -0.5
        assert pt.omega_minus.real == pytest.approx(-1.14564392373896, rel=1e-12)

    def test_k_zero(self):
        pt = dispersion_point(0.0, UNIT)
        assert pt.omega_plus == 0.0
        assert pt.omega_minus == complex(0.0, -1.0)

    def test_below_gap_pure_imaginary(self):
        for k in (0.05, 0.2, 0.4, 0.49):
            pt = dispersion_point(k, UNIT)
            assert pt.omega_plus.real == 0.0
            assert pt.omega_minus.real == 0.0
            assert pt.omega_plus.imag < 0.0
            assert pt.omega_minus.imag < 0.0

    def test_vieta(self):
        for k in (0.0, 0.1, 0.5, 0.7, 3.0, 250.0):
            pt = dispersion_point(k, STIFF)
            total = pt.omega_plus + pt.omega_minus
            prod = pt.omega_plus * pt.omega_minus
            assert total.real == pytest.approx(0.0, abs=1e-12)
            assert total.imag == pytest.approx(-1.0 / STIFF.tau, rel=1e-12)
            ck2 = (shear_wave_speed(STIFF) * k) ** 2
            assert prod.real == pytest.approx(-ck2, rel=1e-12, abs=1e-12)
            assert prod.imag == pytest.approx(0.0, abs=1e-12 * max(1.0, ck2))

    def test_residual(self):
        c = shear_wave_speed(STIFF)
        for k in np.geomspace(1e-3, 1e3, 25):
            pt = dispersion_point(float(k), STIFF)
            assert dispersion_residual(pt, STIFF) <= 1e-10 * max(1.0, (c * k) ** 2)

    def test_matches_generic_root_finder(self):
        # pair roots by proximity: below the gap both are purely imaginary
        # and np.roots carries sign noise in the real parts; at the gap the
        # root is defective and np.roots itself is only sqrt(eps) accurate
        for k, tol in ((0.3, 1e-10), (1.0, 1e-7), (1.3, 1e-10), (7.5, 1e-10)):
            pt = dispersion_point(k, STIFF)
            numeric = oracles.dispersion_roots_numeric(k, 2.0, 0.25)
            for root in (pt.omega_plus, pt.omega_minus):
                assert min(abs(root - z) for z in numeric) <= tol * max(1.0, abs(root))

    def test_rejects_bad_k(self):
        with pytest.raises(DomainError):
            dispersion_point(-1.0, UNIT)
        with pytest.raises(DomainError):
            dispersion_point(math.nan, UNIT)


class TestDispersionSweep:
    def test_gap_split(self):
        kg = k_gap(UNIT)
        grid = np.linspace(0.0, 2.0 * kg, 41)
        points = dispersion_sweep(grid, UNIT)
        for pt in points:
            if pt.k <= kg:
                assert pt.omega_plus.real == 0.0
            else:
                assert pt.omega_plus.real > 0.0

    def test_monotone_above_gap(self):
        kg = k_gap(STIFF)
        points = dispersion_sweep(np.linspace(kg, 10.0 * kg, 30), STIFF)
        re = [pt.omega_plus.real for pt in points]
        assert all(b > a for a, b in zip(re, re[1:]))

    def test_single_trivial_point(self):
        (pt,) = dispersion_sweep([0.0], UNIT)
        assert pt.omega_plus == 0.0

    def test_asymptotic_sound_speed(self):
        c = shear_wave_speed(STIFF)
        k = 100.0 * k_gap(STIFF)
        (pt,) = dispersion_sweep([k], STIFF)
        assert pt.omega_plus.real / (c * k) == pytest.approx(1.0, abs=1e-4)

    def test_unsorted_grid(self):
        with pytest.raises(ConfigError):
            dispersion_sweep([1.0, 0.5], UNIT)
        with pytest.raises(ConfigError):
            dispersion_sweep([], UNIT)
