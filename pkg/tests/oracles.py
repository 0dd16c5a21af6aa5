"""Independent oracles the test suite checks the implementation against.

Every function here deliberately takes a different route from the code
under test: closed forms where they exist, otherwise a 1-D reduction of
the pair integrals over the separation coordinate evaluated with a dense
trapezoid rule (spectrally accurate for Gaussian-decaying integrands),
and the generic polynomial root finder for the dispersion quadratic.
"""

from __future__ import annotations

import math

import numpy as np

SQRT2 = math.sqrt(2.0)


# ---------------------------------------------------------------------------
# Pair integrals for 1-D Gaussian orbitals
#
# With phi_i(x) = (pi s_i^2)^(-1/4) exp(-(x-c_i)^2/(2 s_i^2)):
#  * |phi_i|^2 is the normal density N(c_i, s_i^2/2), so the direct
#    integral is E[U(r)] with r = x2 - x1 ~ N(d, (s1^2+s2^2)/2), d = c2-c1.
#  * phi1*phi2 = C * N(mu, sp^2) with 1/sp^2 = 1/s1^2 + 1/s2^2 and
#    C = (pi s1^2)^(-1/4) (pi s2^2)^(-1/4) exp(-d^2/(2(s1^2+s2^2)))
#        * sqrt(2 pi sp^2),
#    so the exchange integral is C^2 * E[U(r)] with r ~ N(0, 2 sp^2).
# For U(r) = U0 exp(-r^2/(2 w^2)) the expectations close up via the
# Gaussian convolution identity E[U] = U0 * w/sqrt(w^2+V) * exp(-m^2/(2(w^2+V)))
# for r ~ N(m, V).
# ---------------------------------------------------------------------------


def overlap_constant(c1: float, s1: float, c2: float, s2: float) -> float:
    """Normalization C of the overlap density phi1*phi2 = C*N(mu, sp^2)."""
    v1, v2 = s1 * s1, s2 * s2
    d = c2 - c1
    sp2 = v1 * v2 / (v1 + v2)
    return (
        (math.pi * v1) ** -0.25
        * (math.pi * v2) ** -0.25
        * math.exp(-d * d / (2.0 * (v1 + v2)))
        * math.sqrt(2.0 * math.pi * sp2)
    )


def gaussian_expect_well(mean: float, var: float, U0: float, w: float) -> float:
    """E[U0 exp(-r^2/(2w^2))] for r ~ N(mean, var), in closed form."""
    return U0 * w / math.sqrt(w * w + var) * math.exp(-mean * mean / (2.0 * (w * w + var)))


def direct_well(c1, s1, c2, s2, U0, w) -> float:
    """Closed-form direct integral for the gaussian_well kernel."""
    return gaussian_expect_well(c2 - c1, 0.5 * (s1 * s1 + s2 * s2), U0, w)


def exchange_well(c1, s1, c2, s2, U0, w) -> float:
    """Closed-form exchange integral for the gaussian_well kernel."""
    v1, v2 = s1 * s1, s2 * s2
    sp2 = v1 * v2 / (v1 + v2)
    C = overlap_constant(c1, s1, c2, s2)
    return C * C * gaussian_expect_well(0.0, 2.0 * sp2, U0, w)


def expect_trapezoid(kern_fn, mean: float, var: float, n: int = 200001, span: float = 18.0) -> float:
    """E[kern_fn(r)] for r ~ N(mean, var) by a dense trapezoid rule."""
    sd = math.sqrt(var)
    r = np.linspace(mean - span * sd, mean + span * sd, n)
    dens = np.exp(-((r - mean) ** 2) / (2.0 * var)) / math.sqrt(2.0 * math.pi * var)
    return float(np.trapezoid(kern_fn(r) * dens, r))


def direct_numeric(c1, s1, c2, s2, kern_fn) -> float:
    """Direct integral via the 1-D separation reduction, any kernel."""
    return expect_trapezoid(kern_fn, c2 - c1, 0.5 * (s1 * s1 + s2 * s2))


def exchange_numeric(c1, s1, c2, s2, kern_fn) -> float:
    """Exchange integral via the 1-D separation reduction, any kernel."""
    v1, v2 = s1 * s1, s2 * s2
    sp2 = v1 * v2 / (v1 + v2)
    C = overlap_constant(c1, s1, c2, s2)
    return C * C * expect_trapezoid(kern_fn, 0.0, 2.0 * sp2)


# ---------------------------------------------------------------------------
# Maxwell time-domain closed forms (switch-on at t=0 from a quiescent state)
# ---------------------------------------------------------------------------


def strain_after_stress_hold(t, P0, eta0, G0):
    """Exact strain for a stress held at P0: elastic jump plus viscous flow."""
    return P0 / G0 + P0 * np.asarray(t) / eta0


def stress_after_strain_step(t, s0, eta0, G0):
    """Exact stress relaxation after a strain step s0."""
    return G0 * s0 * np.exp(-np.asarray(t) * G0 / eta0)


def stress_under_strain_ramp(t, rate, eta0, G0):
    """Exact stress for a constant strain rate: approach to eta0*rate."""
    return eta0 * rate * (1.0 - np.exp(-np.asarray(t) * G0 / eta0))


def sinusoid_strain_rate_amplitude(A, omega, eta0, G0):
    """Steady strain-rate amplitude |1 + i*omega*tau| * A / eta0."""
    wt = omega * eta0 / G0
    return A / eta0 * math.sqrt(1.0 + wt * wt)


# ---------------------------------------------------------------------------
# Shear-wave dispersion: roots of w^2 + i*w/tau - c^2 k^2 = 0 via np.roots
# ---------------------------------------------------------------------------


def dispersion_roots_numeric(k: float, c: float, tau: float):
    """Both roots from the generic polynomial solver, sorted by real part."""
    roots = np.roots([1.0, 1j / tau, -((c * k) ** 2)])
    return sorted(roots, key=lambda z: (z.real, z.imag))
