"""Polarisation dephasing of two photons with Gaussian-correlated frequencies.

Polarisation basis order is (HH, HV, VH, VV). The frequency environments only
enter through the joint distribution P(w1, w2), a bivariate Gaussian with
means w0/2, variances C11 and correlation coefficient K.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy import integrate
from scipy.stats import norm

from ..qmat import ContractError, DensityOperator, projector, trace_distance
from ..witness import TraceSeries

__all__ = [
    "PhotonParams",
    "BELL_HH_VV",
    "photon_char_fn",
    "photon_char_fn_printed",
    "photon_char_fn_quadrature",
    "photon_rho_S",
    "photon_scenario",
    "gaussian_correlation_distance",
]

BELL_HH_VV = (2**-0.5, 0.0, 0.0, 2**-0.5)


@dataclass(frozen=True)
class PhotonParams:
    K: float = -1.0
    omega0: float = 1.0
    C11: float = 1.0
    dn: float = 1.0
    psi: tuple = BELL_HH_VV

    def __post_init__(self):
        if not -1.0 <= self.K <= 1.0:
            raise ContractError("correlation coefficient K must lie in [-1, 1]")
        if self.C11 <= 0:
            raise ContractError("frequency variance C11 must be positive")
        psi = tuple(complex(c) for c in self.psi)
        if len(psi) != 4 or abs(sum(abs(c) ** 2 for c in psi) - 1) > 1e-9:
            raise ContractError("polarisation state needs 4 coefficients with unit norm")
        object.__setattr__(self, "psi", psi)


def photon_char_fn(tau1: float, tau2: float, p: PhotonParams) -> complex:
    """Fourier transform  E[exp(-i(w1 tau1 + w2 tau2))]  of the Gaussian P."""
    quad = tau1**2 + tau2**2 + 2 * p.K * tau1 * tau2
    return complex(np.exp(-1j * p.omega0 * (tau1 + tau2) / 2 - p.C11 * quad / 2))


def photon_char_fn_printed(tau1: float, tau2: float, p: PhotonParams) -> complex:
    """Variant with cross term K tau1^2 tau2^2; unbounded for K < 0, kept for comparison only."""
    quad = tau1**2 + tau2**2 + p.K * tau1**2 * tau2**2
    return complex(np.exp(1j * p.omega0 * (tau1 + tau2) / 2 - p.C11 * quad / 2))


def photon_char_fn_quadrature(tau1: float, tau2: float, p: PhotonParams, width: float = 8.0) -> complex:
    """Direct double integral of P(w1, w2) exp(-i(w1 tau1 + w2 tau2)) over +-width sigma.

    Requires |K| < 1 (non-singular covariance).
    """
    if abs(p.K) >= 1:
        raise ContractError("quadrature needs a non-singular covariance (|K| < 1)")
    s = math.sqrt(p.C11)
    mu = p.omega0 / 2
    det = 1 - p.K**2
    norm_c = 1 / (2 * math.pi * p.C11 * math.sqrt(det))

    def density(x, y):
        u, v = (x - mu) / s, (y - mu) / s
        return norm_c * math.exp(-(u * u - 2 * p.K * u * v + v * v) / (2 * det))

    def part(fn):
        val, _ = integrate.dblquad(
            lambda y, x: density(x, y) * fn(x * tau1 + y * tau2),
            mu - width * s, mu + width * s,
            mu - width * s, mu + width * s,
            epsabs=1e-11, epsrel=1e-10,
        )
        return val

    return complex(part(math.cos), -part(math.sin))


def photon_rho_S(t: float, p: PhotonParams, t2: float | None = None) -> DensityOperator:
    """Polarisation state after interaction times t (photon 1) and t2 (photon 2, default t)."""
    t1 = t
    t2 = t if t2 is None else t2
    tau1, tau2 = p.dn * t1, p.dn * t2
    k1 = photon_char_fn(tau1, 0.0, p)
    k2 = photon_char_fn(0.0, tau2, p)
    k12 = photon_char_fn(tau1, tau2, p)
    lam12 = photon_char_fn(tau1, -tau2, p)
    rho = projector(p.psi)
    # upper triangle carries the decoherence factors; lower is its conjugate
    factors = {
        (0, 1): k2, (0, 2): k1, (0, 3): k12,
        (1, 2): lam12, (1, 3): k1,
        (2, 3): k2,
    }
    for (i, j), f in factors.items():
        rho[i, j] *= f
        rho[j, i] = np.conj(rho[i, j])
    return DensityOperator(rho, (2, 2), herm_tol=1e-10)


def photon_scenario(K: float, psi1, psi2, grid, **kw) -> TraceSeries:
    """D between the correlated-frequency trajectory (given K, state psi1) and the
    factorised-frequency trajectory (K = 0, state psi2) on ``grid``."""
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise ContractError("empty time grid")
    p1 = PhotonParams(K=K, psi=tuple(psi1), **kw)
    p2 = replace(p1, K=0.0, psi=tuple(psi2))
    values = [trace_distance(photon_rho_S(t, p1), photon_rho_S(t, p2)) for t in grid]
    return TraceSeries(grid, np.array(values), f"photon K={K}")


def _min_mass(A: float, B: float, s: float) -> float:
    """Integral over v of min(A N(v; 0, s^2), B N(v; 0, 1))."""
    if A <= 0 or B <= 0:
        return 0.0
    if abs(s - 1) < 1e-15:
        return min(A, B)
    # crossing radius r: A N(r; s) = B N(r; 1)
    r2 = 2 * math.log(A / (s * B)) / (1 / s**2 - 1)
    center_a_smaller = A / s < B
    if r2 <= 0:
        # no crossing: whichever curve is lower at the centre is lower everywhere
        return A if center_a_smaller else B
    r = math.sqrt(r2)
    inner_a = 2 * norm.cdf(r / s) - 1
    inner_b = 2 * norm.cdf(r) - 1
    if center_a_smaller:
        return A * inner_a + B * (1 - inner_b)
    return B * inner_b + A * (1 - inner_a)


def gaussian_correlation_distance(K: float) -> float:
    """Total-variation distance between the correlated Gaussian P(w1, w2) and the
    product of its marginals.

    Independent of the means and of C11. In principal coordinates u, v (unit
    marginal variance) the correlated density factorises as N(u; 1+K) N(v; 1-K)
    and the product as N(u; 1) N(v; 1); the v-integral is done in closed form.
    """
    if not -1 <= K <= 1:
        raise ContractError("K must lie in [-1, 1]")
    if abs(K) >= 1:
        return 1.0
    if K == 0:
        return 0.0
    su, sv = math.sqrt(1 + K), math.sqrt(1 - K)

    def integrand(u):
        A = norm.pdf(u, scale=su)
        B = norm.pdf(u)
        return A + B - 2 * _min_mass(A, B, sv)

    lim = 12 * max(su, 1.0)
    breaks = [0.0, su, -su, 1.0, -1.0]
    val, _ = integrate.quad(integrand, -lim, lim, points=sorted(set(breaks)), limit=400, epsabs=1e-13)
    return 0.5 * val
