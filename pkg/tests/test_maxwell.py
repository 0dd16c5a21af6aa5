import math

import numpy as np
import pytest

from viscoexchange import (
    ConfigError,
    DomainError,
    DriveSignal,
    FluidParams,
    complex_shear_modulus,
    frequency_sweep,
    integrate_strain_driven,
    integrate_stress_driven,
    inverse_viscosity,
    maxwell_residual,
    reconstruct_stress,
    response_factor,
)

import oracles

PARAMS = FluidParams(eta0=2.0, G0=4.0)


class TestFluidParams:
    def test_tau_is_derived(self):
        assert PARAMS.tau == 0.5

    @pytest.mark.parametrize("kwargs", [
        {"eta0": 0.0, "G0": 1.0},
        {"eta0": -1.0, "G0": 1.0},
        {"eta0": 1.0, "G0": 0.0},
        {"eta0": math.nan, "G0": 1.0},
        {"eta0": 1.0, "G0": 1.0, "rho": -2.0},
    ])
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(DomainError):
            FluidParams(**kwargs)

    def test_tau_spans_sixteen_decades(self):
        fast = FluidParams(eta0=1e-13, G0=1.0)
        slow = FluidParams(eta0=1e4, G0=1.0)
        assert fast.tau == 1e-13
        assert slow.tau == 1e4


class TestResponseFactor:
    @pytest.mark.parametrize("wt,expected", [(0.0, 1.0), (1.0, 0.5), (3.0, 0.1)])
    def test_values(self, wt, expected):
        assert response_factor(wt) == pytest.approx(expected, rel=1e-15)

    def test_hydrodynamic_limit_exact(self):
        assert response_factor(0.0) == 1.0

    @pytest.mark.parametrize("bad", [math.nan, math.inf, -0.5])
    def test_domain_errors(self, bad):
        with pytest.raises(DomainError):
            response_factor(bad)

    def test_monotone_and_bounded(self):
        grid = np.geomspace(1e-8, 1e8, 161)
        f = np.array([response_factor(x) for x in grid])
        assert np.all(f > 0.0)
        assert np.all(f <= 1.0)
        assert np.all(np.diff(f) <= 0.0)
        # strict decrease where doubles can resolve the change
        mid = np.geomspace(1e-7, 1e7, 141)
        fm = np.array([response_factor(x) for x in mid])
        assert np.all(np.diff(fm) < 0.0)


class TestComplexShearModulus:
    def test_at_unit_omega_tau(self):
        g_re, g_im = complex_shear_modulus(1.0 / PARAMS.tau, PARAMS)
        assert g_re == pytest.approx(PARAMS.G0 / 2.0, rel=1e-15)
        assert g_im == pytest.approx(PARAMS.G0 / 2.0, rel=1e-15)

    def test_hydrodynamic_limit(self):
        assert complex_shear_modulus(0.0, PARAMS) == (0.0, 0.0)

    def test_solid_limit(self):
        g_re, _ = complex_shear_modulus(1e8 / PARAMS.tau, PARAMS)
        assert g_re >= (1.0 - 1e-15) * PARAMS.G0

    def test_identity_with_factor(self):
        for wt in np.geomspace(1e-8, 1e8, 161):
            g_re, _ = complex_shear_modulus(wt / PARAMS.tau, PARAMS)
            total = g_re + PARAMS.G0 * response_factor(wt)
            assert total == pytest.approx(PARAMS.G0, rel=1e-12)

    def test_loss_storage_ratio(self):
        for wt in np.geomspace(1e-6, 1e6, 121):
            g_re, g_im = complex_shear_modulus(wt / PARAMS.tau, PARAMS)
            assert g_im / g_re * wt == pytest.approx(1.0, rel=1e-12)

    def test_magnitude_bounded(self):
        for wt in np.geomspace(1e-4, 1e4, 33):
            g_re, g_im = complex_shear_modulus(wt / PARAMS.tau, PARAMS)
            assert math.hypot(g_re, g_im) <= PARAMS.G0 * (1.0 + 1e-15)

    def test_rejects_negative_omega(self):
        with pytest.raises(DomainError):
            complex_shear_modulus(-1.0, PARAMS)


class TestInverseViscosity:
    def test_static(self):
        assert inverse_viscosity(0.0, PARAMS) == (1.0 / PARAMS.eta0, 0.0)

    @pytest.mark.parametrize("wt", [1.0, 10.0])
    def test_imag_part(self, wt):
        re, im = inverse_viscosity(wt / PARAMS.tau, PARAMS)
        assert re == 1.0 / PARAMS.eta0
        assert im == pytest.approx(wt / PARAMS.eta0, rel=1e-14)


class TestFrequencySweep:
    def test_single_point(self):
        (sample,) = frequency_sweep([1.0], PARAMS)
        assert sample.F == 0.5
        assert sample.omega == pytest.approx(1.0 / PARAMS.tau, rel=1e-15)

    def test_three_decades(self):
        samples = frequency_sweep([1e-3, 1.0, 1e3], PARAMS)
        f = [s.F for s in samples]
        assert f[0] == pytest.approx(1.0, abs=1e-5)
        assert f[1] == 0.5
        assert f[2] == pytest.approx(1e-6, rel=1e-5)

    def test_wide_sweep_is_finite(self):
        samples = frequency_sweep(np.geomspace(1e-8, 1e8, 161), PARAMS)
        for s in samples:
            for v in (s.omega, s.omega_tau, s.F, s.G_real, s.G_imag,
                      s.eta_inv_real, s.eta_inv_imag):
                assert math.isfinite(v)
            assert 0.0 < s.F <= 1.0

    def test_sample_invariants(self):
        for s in frequency_sweep(np.geomspace(1e-6, 1e6, 49), PARAMS):
            assert s.F == pytest.approx(1.0 / (1.0 + s.omega_tau**2), rel=1e-15)
            assert s.G_real == pytest.approx(PARAMS.G0 * (1.0 - s.F), rel=1e-12)
            if s.omega_tau > 0 and s.G_real > 0:
                assert s.G_imag / s.G_real == pytest.approx(1.0 / s.omega_tau, rel=1e-12)

    @pytest.mark.parametrize("grid", [[], [2.0, 1.0], [1.0, 1.0], [-1.0, 2.0], [1.0, math.inf]])
    def test_bad_grids(self, grid):
        with pytest.raises(ConfigError):
            frequency_sweep(grid, PARAMS)

    def test_scale_covariance(self):
        grid = np.geomspace(1e-3, 1e3, 25)
        base = frequency_sweep(grid, PARAMS)
        exact = frequency_sweep(
            grid, FluidParams(eta0=PARAMS.eta0 * 1024.0, G0=PARAMS.G0 * 1024.0)
        )
        for a, b in zip(base, exact):
            assert a.F == b.F
            assert a.omega_tau == b.omega_tau
        rough = frequency_sweep(
            grid, FluidParams(eta0=PARAMS.eta0 * 3.7, G0=PARAMS.G0 * 3.7)
        )
        for a, b in zip(base, rough):
            assert a.F == pytest.approx(b.F, rel=1e-12)


class TestStressDriven:
    def test_constant_stress_closed_form(self):
        p0 = 3.0
        series = integrate_stress_driven(DriveSignal(kind="constant", amplitude=p0), PARAMS)
        exact = oracles.strain_after_stress_hold(series.t, p0, PARAMS.eta0, PARAMS.G0)
        assert np.max(np.abs(series.strain - exact)) <= 1e-12 * np.max(np.abs(exact))
        assert series.strain[0] == p0 / PARAMS.G0

    def test_zero_stress(self):
        series = integrate_stress_driven(DriveSignal(kind="step", amplitude=0.0), PARAMS)
        assert np.all(series.strain == 0.0)
        assert np.all(series.stress == 0.0)

    def test_sinusoid_strain_rate_amplitude(self):
        amp = 2.5
        omega = 1.0 / PARAMS.tau  # omega*tau = 1
        drive = DriveSignal(kind="sinusoid", amplitude=amp, omega=omega)
        period = 2.0 * math.pi / omega
        series = integrate_stress_driven(
            drive, PARAMS, dt=PARAMS.tau / 1000.0, horizon=2.0 * period
        )
        tail = series.strain_rate[series.t >= series.t[-1] - period]
        expected = oracles.sinusoid_strain_rate_amplitude(amp, omega, PARAMS.eta0, PARAMS.G0)
        assert expected == pytest.approx(amp / PARAMS.eta0 * math.sqrt(2.0), rel=1e-15)
        assert np.max(np.abs(tail)) == pytest.approx(expected, rel=1e-4)

    def test_dt_guard(self):
        with pytest.raises(ConfigError):
            integrate_stress_driven(
                DriveSignal(kind="step", amplitude=1.0), PARAMS, dt=PARAMS.tau / 5.0
            )

    @pytest.mark.parametrize("dt,horizon", [(0.0, 1.0), (-1e-3, 1.0), (1e-3, 1e-4)])
    def test_bad_stepping(self, dt, horizon):
        with pytest.raises(ConfigError):
            integrate_stress_driven(
                DriveSignal(kind="step", amplitude=1.0), PARAMS, dt=dt, horizon=horizon
            )

    def test_residual_small(self):
        drive = DriveSignal(kind="sinusoid", amplitude=1.0, omega=1.0 / PARAMS.tau)
        series = integrate_stress_driven(drive, PARAMS)
        scale = np.max(np.abs(series.strain_rate))
        assert maxwell_residual(series, PARAMS) <= 1e-6 * scale


class TestStrainDriven:
    def test_step_relaxation_matches_analytic(self):
        s0 = 0.01
        series = integrate_strain_driven(
            DriveSignal(kind="step", amplitude=s0),
            PARAMS,
            dt=PARAMS.tau / 1000.0,
            horizon=5.0 * PARAMS.tau,
        )
        exact = oracles.stress_after_strain_step(series.t, s0, PARAMS.eta0, PARAMS.G0)
        rel = np.max(np.abs(series.stress - exact) / np.abs(exact))
        assert rel <= 1e-6
        assert series.stress[0] == PARAMS.G0 * s0

    def test_zero_strain(self):
        series = integrate_strain_driven(DriveSignal(kind="constant", amplitude=0.0), PARAMS)
        assert np.all(series.stress == 0.0)

    def test_constant_rate_reaches_viscous_stress(self):
        rate = 0.2
        series = integrate_strain_driven(
            DriveSignal(kind="ramp", amplitude=rate), PARAMS, horizon=15.0 * PARAMS.tau
        )
        exact = oracles.stress_under_strain_ramp(series.t, rate, PARAMS.eta0, PARAMS.G0)
        assert series.stress[-1] == pytest.approx(PARAMS.eta0 * rate, rel=1e-6)
        assert np.max(np.abs(series.stress - exact)) <= 1e-9 * PARAMS.eta0 * rate

    def test_residual_small(self):
        series = integrate_strain_driven(DriveSignal(kind="step", amplitude=1.0), PARAMS)
        scale = PARAMS.G0 / PARAMS.eta0  # initial |ds/dt| equivalent of the decay
        assert maxwell_residual(series, PARAMS) <= 1e-6 * scale


class TestMutualConsistency:
    @pytest.mark.parametrize("drive", [
        DriveSignal(kind="constant", amplitude=3.0),
        DriveSignal(kind="sinusoid", amplitude=1.5, omega=2.0),
        DriveSignal(kind="ramp", amplitude=0.7),
    ])
    def test_stress_roundtrip(self, drive):
        series = integrate_stress_driven(drive, PARAMS)
        recovered = reconstruct_stress(series, PARAMS)
        scale = max(np.max(np.abs(series.stress)), 1e-30)
        assert np.max(np.abs(recovered - series.stress)) <= 1e-4 * scale

    def test_strain_driven_roundtrip(self):
        series = integrate_strain_driven(DriveSignal(kind="step", amplitude=0.02), PARAMS)
        recovered = reconstruct_stress(series, PARAMS)
        scale = np.max(np.abs(series.stress))
        assert np.max(np.abs(recovered - series.stress)) <= 1e-6 * scale


class TestDriveSignal:
    @pytest.mark.parametrize("kwargs", [
        {"kind": "triangle", "amplitude": 1.0},
        {"kind": "step", "amplitude": math.nan},
        {"kind": "sinusoid", "amplitude": 1.0, "omega": -2.0},
        {"kind": "sinusoid", "amplitude": 1.0, "omega": 1.0, "phase": math.inf},
    ])
    def test_validation(self, kwargs):
        with pytest.raises(DomainError):
            DriveSignal(**kwargs)
