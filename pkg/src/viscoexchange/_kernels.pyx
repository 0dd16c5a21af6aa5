# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of viscoexchange._kernels_py.

Same signatures, same semantics; sequential loops with compensated
(Neumaier) accumulation instead of vectorized numpy. Selected at import by
viscoexchange._backend when available.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, exp, fabs, log1p, sin, sqrt

cnp.import_array()

BACKEND_NAME = "cython"

DRIVE_HOLD = 0
DRIVE_RAMP = 1
DRIVE_SINUSOID = 2

KERN_GAUSSIAN_WELL = 0
KERN_SOFT_COULOMB = 1

cdef double TWO_PI = 6.283185307179586476925287
cdef double PI = 3.14159265358979323846


cdef inline double sig_value(int kind, double amp, double omega,
                             double phase, double t) noexcept nogil:
    if kind == 0:
        return amp
    if kind == 1:
        return amp * t
    return amp * cos(omega * t + phase)


cdef inline double sig_rate(int kind, double amp, double omega,
                            double phase, double t) noexcept nogil:
    if kind == 0:
        return 0.0
    if kind == 1:
        return amp
    return -amp * omega * sin(omega * t + phase)


cdef inline void neumaier_add(double *s, double *c, double term) noexcept nogil:
    cdef double t = s[0] + term
    if fabs(s[0]) >= fabs(term):
        c[0] += (s[0] - t) + term
    else:
        c[0] += (term - t) + s[0]
    s[0] = t


def stress_driven_series(int kind, double amp, double omega, double phase,
                         int n_steps, double dt, double eta0, double g0):
    """Integrate ds/dt = P/eta0 + (dP/dt)/G0 for a prescribed stress P(t)."""
    cdef cnp.ndarray[cnp.float64_t] stress = np.empty(n_steps + 1)
    cdef cnp.ndarray[cnp.float64_t] strain = np.empty(n_steps + 1)
    cdef cnp.ndarray[cnp.float64_t] rate = np.empty(n_steps + 1)
    cdef double[:] pv = stress
    cdef double[:] sv = strain
    cdef double[:] rv = rate
    cdef Py_ssize_t k
    cdef double t, tm, fn, fm, fe, s
    cdef double sixth = dt / 6.0

    with nogil:
        for k in range(n_steps + 1):
            t = k * dt
            pv[k] = sig_value(kind, amp, omega, phase, t)
            rv[k] = pv[k] / eta0 + sig_rate(kind, amp, omega, phase, t) / g0
        s = pv[0] / g0
        sv[0] = s
        for k in range(n_steps):
            tm = k * dt + 0.5 * dt
            fn = rv[k]
            fm = sig_value(kind, amp, omega, phase, tm) / eta0 \
                + sig_rate(kind, amp, omega, phase, tm) / g0
            fe = rv[k + 1]
            s = s + sixth * (fn + 4.0 * fm + fe)
            sv[k + 1] = s
    return stress, strain, rate


def strain_driven_series(int kind, double amp, double omega, double phase,
                         int n_steps, double dt, double eta0, double g0):
    """Integrate dP/dt = G0*ds/dt - P/tau for a prescribed strain s(t)."""
    cdef cnp.ndarray[cnp.float64_t] stress = np.empty(n_steps + 1)
    cdef cnp.ndarray[cnp.float64_t] strain = np.empty(n_steps + 1)
    cdef cnp.ndarray[cnp.float64_t] sdot = np.empty(n_steps + 1)
    cdef double[:] pv = stress
    cdef double[:] sv = strain
    cdef double[:] dv = sdot
    cdef Py_ssize_t k
    cdef double t, tm, fn, fm, fe, p, k1, k2, k3, k4
    cdef double inv_tau = g0 / eta0
    cdef double sixth = dt / 6.0
    cdef double half = 0.5 * dt

    with nogil:
        for k in range(n_steps + 1):
            t = k * dt
            sv[k] = sig_value(kind, amp, omega, phase, t)
            dv[k] = sig_rate(kind, amp, omega, phase, t)
        p = g0 * sv[0]
        pv[0] = p
        for k in range(n_steps):
            tm = k * dt + 0.5 * dt
            fn = g0 * dv[k]
            fm = g0 * sig_rate(kind, amp, omega, phase, tm)
            fe = g0 * dv[k + 1]
            k1 = fn - p * inv_tau
            k2 = fm - (p + half * k1) * inv_tau
            k3 = fm - (p + half * k2) * inv_tau
            k4 = fe - (p + dt * k3) * inv_tau
            p = p + sixth * (k1 + 2.0 * (k2 + k3) + k4)
            pv[k + 1] = p
    return stress, strain, sdot


def stress_from_strain_rate(cnp.ndarray[cnp.float64_t] strain_rate,
                            double dt, double p0, double eta0, double g0):
    """Replay the strain-driven ODE from a sampled strain-rate series."""
    cdef double[:] dv = strain_rate
    cdef Py_ssize_t n_steps = dv.shape[0] - 1
    cdef cnp.ndarray[cnp.float64_t] stress = np.empty(n_steps + 1)
    cdef double[:] pv = stress
    cdef Py_ssize_t k
    cdef double fn, fm, fe, p, k1, k2, k3, k4
    cdef double inv_tau = g0 / eta0
    cdef double sixth = dt / 6.0
    cdef double half = 0.5 * dt

    with nogil:
        p = p0
        pv[0] = p
        for k in range(n_steps):
            fn = g0 * dv[k]
            fe = g0 * dv[k + 1]
            fm = 0.5 * (fn + fe)
            k1 = fn - p * inv_tau
            k2 = fm - (p + half * k1) * inv_tau
            k3 = fm - (p + half * k2) * inv_tau
            k4 = fe - (p + dt * k3) * inv_tau
            p = p + sixth * (k1 + 2.0 * (k2 + k3) + k4)
            pv[k + 1] = p
    return stress


cdef inline double kern_eval(int kern, double u0, double scale,
                             double r) noexcept nogil:
    if kern == 0:
        return u0 * exp(-(r * r) / (2.0 * scale * scale))
    return u0 / sqrt(r * r + scale * scale)


def quad_bilinear(cnp.ndarray[cnp.float64_t] x,
                  cnp.ndarray[cnp.float64_t] a,
                  cnp.ndarray[cnp.float64_t] b,
                  int kern, double u0, double scale):
    """Sum_ij a_i * U(x_j - x_i) * b_j with Neumaier accumulation."""
    cdef double[:] xv = x
    cdef double[:] av = a
    cdef double[:] bv = b
    cdef Py_ssize_t n = xv.shape[0]
    cdef Py_ssize_t i, j
    cdef double acc = 0.0, comp = 0.0
    cdef double inner, ic, xi

    with nogil:
        for i in range(n):
            xi = xv[i]
            inner = 0.0
            ic = 0.0
            for j in range(n):
                neumaier_add(&inner, &ic,
                             kern_eval(kern, u0, scale, xv[j] - xi) * bv[j])
            neumaier_add(&acc, &comp, av[i] * (inner + ic))
    return acc + comp


def mc_direct(cnp.ndarray[cnp.float64_t, ndim=2] u,
              double c1, double sd1, double c2, double sd2,
              int kern, double u0, double scale):
    """Accumulate U(x2-x1) with x_i drawn from the orbital densities."""
    cdef double[:, :] uv = u
    cdef Py_ssize_t n = uv.shape[0]
    cdef Py_ssize_t i
    cdef double r, th, z1, z2, f
    cdef double s = 0.0, sc = 0.0, q = 0.0, qc = 0.0

    with nogil:
        for i in range(n):
            r = sqrt(-2.0 * log1p(-uv[i, 0]))
            th = TWO_PI * uv[i, 1]
            z1 = r * cos(th)
            z2 = r * sin(th)
            f = kern_eval(kern, u0, scale, (c2 + sd2 * z2) - (c1 + sd1 * z1))
            neumaier_add(&s, &sc, f)
            neumaier_add(&q, &qc, f * f)
    return s + sc, q + qc


def mc_exchange(cnp.ndarray[cnp.float64_t, ndim=2] u,
                double mu, double sp,
                double c1, double s1, double c2, double s2,
                int kern, double u0, double scale):
    """Accumulate the exchange integrand under the overlap-shaped proposal."""
    cdef double[:, :] uv = u
    cdef Py_ssize_t n = uv.shape[0]
    cdef Py_ssize_t i
    cdef double r, th, z1, z2, x1, x2, w1, w2, f
    cdef double s = 0.0, sc = 0.0, q = 0.0, qc = 0.0
    cdef double n1 = (PI * s1 * s1) ** -0.25
    cdef double n2 = (PI * s2 * s2) ** -0.25
    cdef double qn = 1.0 / sqrt(TWO_PI * sp * sp)

    with nogil:
        for i in range(n):
            r = sqrt(-2.0 * log1p(-uv[i, 0]))
            th = TWO_PI * uv[i, 1]
            z1 = r * cos(th)
            z2 = r * sin(th)
            x1 = mu + sp * z1
            x2 = mu + sp * z2
            w1 = n1 * n2 * exp(-(x1 - c1) * (x1 - c1) / (2.0 * s1 * s1)
                               - (x1 - c2) * (x1 - c2) / (2.0 * s2 * s2)) \
                / (qn * exp(-(x1 - mu) * (x1 - mu) / (2.0 * sp * sp)))
            w2 = n1 * n2 * exp(-(x2 - c1) * (x2 - c1) / (2.0 * s1 * s1)
                               - (x2 - c2) * (x2 - c2) / (2.0 * s2 * s2)) \
                / (qn * exp(-(x2 - mu) * (x2 - mu) / (2.0 * sp * sp)))
            f = kern_eval(kern, u0, scale, x2 - x1) * w1 * w2
            neumaier_add(&s, &sc, f)
            neumaier_add(&q, &qc, f * f)
    return s + sc, q + qc
