"""Pure-numpy implementation of the hot numerical kernels.

This module is the fallback backend; `viscoexchange._kernels` is the
compiled (Cython) twin with identical signatures and semantics. Keep the
two in lock-step: the test suite cross-checks them.

Conventions shared by both backends:

- drive kinds: 0 = hold (step/constant), 1 = ramp, 2 = sinusoid
- interaction kinds: 0 = gaussian_well, 1 = soft_coulomb
- Monte Carlo consumes pre-generated uniforms of shape (n, 2) so that the
  mapping from sample index to variates is fixed by the counter-based RNG,
  not by this module.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "python"

DRIVE_HOLD = 0
DRIVE_RAMP = 1
DRIVE_SINUSOID = 2

KERN_GAUSSIAN_WELL = 0
KERN_SOFT_COULOMB = 1

_TWO_PI = 2.0 * math.pi


def _signal_value(kind, amp, omega, phase, t):
    """Drive signal at time t (t=0 means the 0+ side of the switch-on)."""
    if kind == DRIVE_HOLD:
        return np.full_like(t, amp)
    if kind == DRIVE_RAMP:
        return amp * t
    return amp * np.cos(omega * t + phase)


def _signal_rate(kind, amp, omega, phase, t):
    """Time derivative of the drive signal for t > 0."""
    if kind == DRIVE_HOLD:
        return np.zeros_like(t)
    if kind == DRIVE_RAMP:
        return np.full_like(t, amp)
    return -amp * omega * np.sin(omega * t + phase)


def stress_driven_series(kind, amp, omega, phase, n_steps, dt, eta0, g0):
    """Integrate ds/dt = P/eta0 + (dP/dt)/G0 for a prescribed stress P(t).

    The right-hand side does not depend on the state, so the RK4 update
    collapses to a Simpson increment per step. The elastic jump P(0+)/G0
    is applied analytically at t=0.

    Returns (stress, strain, strain_rate) arrays of length n_steps + 1.
    """
    t = np.arange(n_steps + 1, dtype=np.float64) * dt
    stress = _signal_value(kind, amp, omega, phase, t)
    rate = stress / eta0 + _signal_rate(kind, amp, omega, phase, t) / g0

    t_mid = t[:-1] + 0.5 * dt
    f_mid = (
        _signal_value(kind, amp, omega, phase, t_mid) / eta0
        + _signal_rate(kind, amp, omega, phase, t_mid) / g0
    )
    inc = (dt / 6.0) * (rate[:-1] + 4.0 * f_mid + rate[1:])

    strain = np.empty(n_steps + 1, dtype=np.float64)
    strain[0] = stress[0] / g0
    np.cumsum(inc, out=strain[1:])
    strain[1:] += strain[0]
    return stress, strain, rate


def strain_driven_series(kind, amp, omega, phase, n_steps, dt, eta0, g0):
    """Integrate dP/dt = G0*ds/dt - P/tau for a prescribed strain s(t).

    Classic fixed-step RK4 on the stress; the elastic jump G0*s(0+) is the
    initial condition. Returns (stress, strain, strain_rate).
    """
    t = np.arange(n_steps + 1, dtype=np.float64) * dt
    strain = _signal_value(kind, amp, omega, phase, t)
    sdot = _signal_rate(kind, amp, omega, phase, t)
    sdot_mid = _signal_rate(kind, amp, omega, phase, t[:-1] + 0.5 * dt)

    inv_tau = g0 / eta0
    stress = np.empty(n_steps + 1, dtype=np.float64)
    p = g0 * strain[0]
    stress[0] = p
    sixth = dt / 6.0
    half = 0.5 * dt
    for k in range(n_steps):
        fn = g0 * sdot[k]
        fm = g0 * sdot_mid[k]
        fe = g0 * sdot[k + 1]
        k1 = fn - p * inv_tau
        k2 = fm - (p + half * k1) * inv_tau
        k3 = fm - (p + half * k2) * inv_tau
        k4 = fe - (p + dt * k3) * inv_tau
        p = p + sixth * (k1 + 2.0 * (k2 + k3) + k4)
        stress[k + 1] = p
    return stress, strain, sdot


def stress_from_strain_rate(strain_rate, dt, p0, eta0, g0):
    """Replay dP/dt = G0*ds/dt - P/tau from a sampled strain-rate series.

    The rate between samples is taken piecewise linear; used to check that
    the two integrators are mutually consistent.
    """
    sdot = np.asarray(strain_rate, dtype=np.float64)
    n_steps = sdot.shape[0] - 1
    inv_tau = g0 / eta0
    stress = np.empty(n_steps + 1, dtype=np.float64)
    p = p0
    stress[0] = p
    sixth = dt / 6.0
    half = 0.5 * dt
    for k in range(n_steps):
        fn = g0 * sdot[k]
        fe = g0 * sdot[k + 1]
        fm = 0.5 * (fn + fe)
        k1 = fn - p * inv_tau
        k2 = fm - (p + half * k1) * inv_tau
        k3 = fm - (p + half * k2) * inv_tau
        k4 = fe - (p + dt * k3) * inv_tau
        p = p + sixth * (k1 + 2.0 * (k2 + k3) + k4)
        stress[k + 1] = p
    return stress


def _kernel_eval(kern, u0, scale, r):
    if kern == KERN_GAUSSIAN_WELL:
        return u0 * np.exp(-(r * r) / (2.0 * scale * scale))
    return u0 / np.sqrt(r * r + scale * scale)


def quad_bilinear(x, a, b, kern, u0, scale):
    """Sum_ij a_i * U(x_j - x_i) * b_j (weights already folded into a, b)."""
    r = x[None, :] - x[:, None]
    u = _kernel_eval(kern, u0, scale, r)
    return float(a @ u @ b)


def _box_muller(u):
    """Two standard normals per row from uniform columns 0 and 1."""
    r = np.sqrt(-2.0 * np.log1p(-u[:, 0]))
    th = _TWO_PI * u[:, 1]
    return r * np.cos(th), r * np.sin(th)


def mc_direct(u, c1, sd1, c2, sd2, kern, u0, scale):
    """Accumulate U(x2-x1) with x_i drawn from the orbital densities.

    Returns (sum, sum of squares); exactly-rounded via math.fsum so the
    result does not depend on chunking.
    """
    z1, z2 = _box_muller(u)
    x1 = c1 + sd1 * z1
    x2 = c2 + sd2 * z2
    f = _kernel_eval(kern, u0, scale, x2 - x1)
    return math.fsum(f), math.fsum(f * f)


def mc_exchange(u, mu, sp, c1, s1, c2, s2, kern, u0, scale):
    """Accumulate the exchange integrand under the overlap-shaped proposal.

    Both coordinates are drawn from the normalized Gaussian proposal
    N(mu, sp^2); each sample is reweighted by phi1(x)*phi2(x)/q(x) per
    coordinate, evaluated pointwise.
    """
    z1, z2 = _box_muller(u)
    x1 = mu + sp * z1
    x2 = mu + sp * z2

    n1 = (math.pi * s1 * s1) ** -0.25
    n2 = (math.pi * s2 * s2) ** -0.25
    qn = 1.0 / math.sqrt(_TWO_PI * sp * sp)

    def weight(x):
        rho = (
            n1
            * n2
            * np.exp(
                -((x - c1) ** 2) / (2.0 * s1 * s1)
                - ((x - c2) ** 2) / (2.0 * s2 * s2)
            )
        )
        q = qn * np.exp(-((x - mu) ** 2) / (2.0 * sp * sp))
        return rho / q

    f = _kernel_eval(kern, u0, scale, x2 - x1) * weight(x1) * weight(x2)
    return math.fsum(f), math.fsum(f * f)
