"""Two-particle direct and exchange integrals for model orbitals.

For a pair interaction U(x2 - x1) and real normalized orbitals phi1, phi2
the average interaction of the pair splits into

    E = A +/- J,

where A is the classical (direct) integral of U over the two orbital
densities and J is the exchange integral that exists only because
identical particles are indistinguishable:

    A  = int U(x2-x1) |phi1(x1)|^2 |phi2(x2)|^2 dx1 dx2
    J0 = int U(x2-x1) phi1(x1) phi2(x1) phi1(x2) phi2(x2) dx1 dx2

(the second form uses that the orbitals are real, so the four-orbital
product collapses onto the overlap density rho12 = phi1*phi2). The +
branch is the symmetric (total spin 0) state, the - branch the
antisymmetric (total spin 1) state.

Whether the exchange term is *observable* depends on whether particles
can actually swap places during the measurement: the viscoelastic factor
F from viscoexchange.maxwell modulates it as J = J0 * F.

Everything is one-dimensional with Gaussian orbitals, which keeps exact
closed forms available for testing while exercising the full two-body
structure. Two independent evaluation routes are provided: tensor-product
Gauss-Legendre quadrature and importance-sampled Monte Carlo with a
counter-based RNG (sample index -> variates is a fixed map, so estimates
do not depend on how the index range is partitioned).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from viscoexchange._backend import kernels
from viscoexchange.errors import ConfigError, DomainError
from viscoexchange.maxwell import response_factor

_KERNEL_KINDS = ("gaussian_well", "soft_coulomb")
_NORM_TOL = 1e-8


@dataclass(frozen=True)
class Orbital:
    """Real normalized 1-D Gaussian orbital.

    phi(x) = (pi*sigma^2)^(-1/4) * exp(-(x-center)^2 / (2*sigma^2))
    """

    center: float
    sigma: float
    kind: str = "gaussian"

    def __post_init__(self) -> None:
        if self.kind != "gaussian":
            raise DomainError(f"unknown orbital kind {self.kind!r}")
        if not math.isfinite(self.center):
            raise DomainError(f"orbital center must be finite, got {self.center}")
        if not (math.isfinite(self.sigma) and self.sigma > 0):
            raise DomainError(f"orbital sigma must be finite and > 0, got {self.sigma}")


@dataclass(frozen=True)
class InteractionKernel:
    """Pairwise interaction depending only on the separation r = x2 - x1.

    gaussian_well:  U(r) = U0 * exp(-r^2 / (2 w^2))
    soft_coulomb:   U(r) = U0 / sqrt(r^2 + a^2)
    """

    kind: str
    U0: float
    w: float | None = None
    a: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KERNEL_KINDS:
            raise DomainError(
                f"unknown kernel kind {self.kind!r}; expected one of {_KERNEL_KINDS}"
            )
        if not math.isfinite(self.U0):
            raise DomainError(f"kernel strength U0 must be finite, got {self.U0}")
        scale = self.w if self.kind == "gaussian_well" else self.a
        name = "w" if self.kind == "gaussian_well" else "a"
        if scale is None or not (math.isfinite(scale) and scale > 0):
            raise DomainError(
                f"kernel {self.kind} needs a finite {name} > 0, got {scale}"
            )

    @property
    def scale(self) -> float:
        return self.w if self.kind == "gaussian_well" else self.a  # type: ignore[return-value]

    @property
    def code(self) -> int:
        if self.kind == "gaussian_well":
            return kernels.KERN_GAUSSIAN_WELL
        return kernels.KERN_SOFT_COULOMB

    def evaluate(self, r):
        """U(r), vectorized over r."""
        r = np.asarray(r, dtype=np.float64)
        if self.kind == "gaussian_well":
            return self.U0 * np.exp(-(r * r) / (2.0 * self.scale**2))
        return self.U0 / np.sqrt(r * r + self.scale**2)


def gaussian_well(U0: float, w: float) -> InteractionKernel:
    return InteractionKernel(kind="gaussian_well", U0=U0, w=w)


def soft_coulomb(U0: float, a: float) -> InteractionKernel:
    return InteractionKernel(kind="soft_coulomb", U0=U0, a=a)


@dataclass(frozen=True)
class QuadratureSpec:
    """Tensor-product Gauss-Legendre settings.

    The integration box is [-L, L]^2 with L = max|center| + padding * max
    sigma; Gaussian decay makes the truncation error negligible at the
    default padding of 10 sigma.
    """

    nodes: int = 200
    padding: float = 10.0

    def __post_init__(self) -> None:
        if self.nodes < 32:
            raise ConfigError(f"quadrature needs >= 32 nodes per axis, got {self.nodes}")
        if not (math.isfinite(self.padding) and self.padding > 0):
            raise ConfigError(f"quadrature padding must be > 0, got {self.padding}")


@dataclass(frozen=True)
class ExchangeResult:
    """Direct/exchange integrals and the pair energies built from them.

    stderr fields are present for Monte Carlo estimates only.
    """

    method: str
    A: float
    J0: float
    J_modulated: float
    E_sym: float
    E_anti: float
    stderr_A: float | None = None
    stderr_J0: float | None = None


def eval_orbital(orb: Orbital, x):
    """Orbital amplitude at x (vectorized)."""
    x = np.asarray(x, dtype=np.float64)
    norm = (math.pi * orb.sigma**2) ** -0.25
    out = norm * np.exp(-((x - orb.center) ** 2) / (2.0 * orb.sigma**2))
    return float(out) if out.ndim == 0 else out


def _quad_grid(orb1: Orbital, orb2: Orbital, quad: QuadratureSpec):
    half = max(abs(orb1.center), abs(orb2.center)) + quad.padding * max(
        orb1.sigma, orb2.sigma
    )
    xg, wg = np.polynomial.legendre.leggauss(quad.nodes)
    return half * xg, half * wg


def _check_normalized(orb: Orbital, x: np.ndarray, w: np.ndarray) -> None:
    norm = float(w @ (eval_orbital(orb, x) ** 2))
    if abs(norm - 1.0) > _NORM_TOL:
        raise DomainError(
            f"orbital at center={orb.center} is not normalized on the quadrature "
            f"grid (got {norm!r}); enlarge the domain padding"
        )


def direct_integral(
    orb1: Orbital,
    orb2: Orbital,
    kernel: InteractionKernel,
    quad: QuadratureSpec = QuadratureSpec(),
) -> float:
    """Direct integral A by tensor-product Gauss-Legendre quadrature.

    Deterministic for a fixed QuadratureSpec. Raises DomainError if either
    orbital is not numerically normalized on the chosen grid.
    """
    x, w = _quad_grid(orb1, orb2, quad)
    _check_normalized(orb1, x, w)
    _check_normalized(orb2, x, w)
    a = np.ascontiguousarray(w * eval_orbital(orb1, x) ** 2)
    b = np.ascontiguousarray(w * eval_orbital(orb2, x) ** 2)
    return float(
        kernels.quad_bilinear(x, a, b, kernel.code, kernel.U0, kernel.scale)
    )


def exchange_integral(
    orb1: Orbital,
    orb2: Orbital,
    kernel: InteractionKernel,
    quad: QuadratureSpec = QuadratureSpec(),
) -> float:
    """Exchange integral J0 by the same quadrature as direct_integral.

    For real orbitals the integrand is the quadratic form of U in the
    overlap density rho12 = phi1*phi2, so J0 = A when the orbitals
    coincide and J0 >= 0 for any positive-definite kernel.
    """
    x, w = _quad_grid(orb1, orb2, quad)
    _check_normalized(orb1, x, w)
    _check_normalized(orb2, x, w)
    g = np.ascontiguousarray(w * eval_orbital(orb1, x) * eval_orbital(orb2, x))
    return float(kernels.quad_bilinear(x, g, g, kernel.code, kernel.U0, kernel.scale))


def pair_integrals(
    orb1: Orbital,
    orb2: Orbital,
    kernel: InteractionKernel,
    quad: QuadratureSpec = QuadratureSpec(),
    omega_tau: float = 0.0,
) -> ExchangeResult:
    """Quadrature A and J0 packaged with modulation and pair energies."""
    a = direct_integral(orb1, orb2, kernel, quad)
    j0 = exchange_integral(orb1, orb2, kernel, quad)
    j = modulated_exchange(j0, omega_tau)
    e_sym, e_anti = pair_energies(a, j)
    return ExchangeResult(
        method="quadrature",
        A=a,
        J0=j0,
        J_modulated=j,
        E_sym=e_sym,
        E_anti=e_anti,
    )


def _overlap_proposal(orb1: Orbital, orb2: Orbital) -> tuple[float, float]:
    """Mean and width of the normalized Gaussian shaped like phi1*phi2."""
    v1 = orb1.sigma**2
    v2 = orb2.sigma**2
    mu = (orb1.center * v2 + orb2.center * v1) / (v1 + v2)
    sp = math.sqrt(v1 * v2 / (v1 + v2))
    return mu, sp


def mc_pair_integrals(
    orb1: Orbital,
    orb2: Orbital,
    kernel: InteractionKernel,
    n_samples: int,
    seed: int,
    omega_tau: float = 0.0,
) -> ExchangeResult:
    """Monte Carlo estimates of A and J0 with standard errors.

    A is sampled from the product of the two orbital densities, J0 from a
    product of overlap-shaped Gaussians with pointwise reweighting. Each
    sample's variates come from a counter-based stream keyed by (seed,
    estimator), so results are reproducible for a fixed seed and
    n_samples regardless of any internal chunking.
    """
    if n_samples < 1000:
        raise ConfigError(f"n_samples must be >= 1000, got {n_samples}")
    if not (0 <= int(seed) < 2**64):
        raise ConfigError(f"seed must fit in an unsigned 64-bit int, got {seed}")

    u_direct = _uniforms(seed, 0, n_samples)
    s, s2 = kernels.mc_direct(
        u_direct,
        orb1.center,
        orb1.sigma / math.sqrt(2.0),
        orb2.center,
        orb2.sigma / math.sqrt(2.0),
        kernel.code,
        kernel.U0,
        kernel.scale,
    )
    a, stderr_a = _mean_stderr(s, s2, n_samples)

    mu, sp = _overlap_proposal(orb1, orb2)
    u_exch = _uniforms(seed, 1, n_samples)
    s, s2 = kernels.mc_exchange(
        u_exch,
        mu,
        sp,
        orb1.center,
        orb1.sigma,
        orb2.center,
        orb2.sigma,
        kernel.code,
        kernel.U0,
        kernel.scale,
    )
    j0, stderr_j0 = _mean_stderr(s, s2, n_samples)

    j = modulated_exchange(j0, omega_tau)
    e_sym, e_anti = pair_energies(a, j)
    return ExchangeResult(
        method="monte_carlo",
        A=a,
        J0=j0,
        J_modulated=j,
        E_sym=e_sym,
        E_anti=e_anti,
        stderr_A=stderr_a,
        stderr_J0=stderr_j0,
    )


def _uniforms(seed: int, stream: int, n: int) -> np.ndarray:
    key = np.array([int(seed), stream], dtype=np.uint64)
    gen = np.random.Generator(np.random.Philox(key=key))
    return gen.random((n, 2))


def _mean_stderr(total: float, total_sq: float, n: int) -> tuple[float, float]:
    mean = total / n
    var = max(total_sq - total * total / n, 0.0) / (n - 1)
    return mean, math.sqrt(var / n)


def modulated_exchange(J0: float, omega_tau: float) -> float:
    """Dynamically modulated exchange energy J = J0 * F(omega_tau)."""
    return J0 * response_factor(omega_tau)


def pair_energies(A: float, J_modulated: float) -> tuple[float, float]:
    """Symmetric and antisymmetric pair energies (A + J, A - J)."""
    if not (math.isfinite(A) and math.isfinite(J_modulated)):
        raise DomainError("pair_energies requires finite inputs")
    return A + J_modulated, A - J_modulated
