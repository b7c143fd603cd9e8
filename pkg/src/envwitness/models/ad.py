"""Two atoms in local zero-temperature reservoirs with Lorentzian spectral density.

Only closed-form reduced states are produced; the reservoirs are represented
(for the t = 0 bound) by their vacuum / single-excitation subspace.
Two-atom basis order is (ee, eg, ge, gg).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ..qmat import ContractError, DensityOperator, projector, tensor

__all__ = ["ADParams", "ad_h", "ad_reduced_states", "ad_initial_states"]

PSI_PLUS = np.array([0, 1, 1, 0], dtype=complex) / math.sqrt(2)
GG = np.array([0, 0, 0, 1], dtype=complex)


@dataclass(frozen=True)
class ADParams:
    gamma: float
    lam: float

    def __post_init__(self):
        if not (self.gamma > 0 and self.lam > 0):
            raise ContractError("gamma and lambda must be positive")

    @property
    def a(self) -> complex:
        """sqrt(1 - 2 gamma / lambda); imaginary in the strong-coupling regime."""
        return cmath.sqrt(1 - 2 * self.gamma / self.lam)


def ad_h(t: float, p: ADParams) -> tuple[complex, complex]:
    if t < 0:
        raise ContractError("t must be non-negative")
    a, lam = p.a, p.lam
    x = lam * a * t / 2
    decay = math.exp(-lam * t / 2)
    if abs(a) < 1e-12:
        # a -> 0 limit: sinh(x)/a -> lam t / 2
        h1 = decay * (1 + lam * t / 2)
        h2 = -1j * decay * (lam * t / 2)
        return complex(h1), complex(h2)
    h1 = decay * (cmath.cosh(x) + cmath.sinh(x) / a)
    h2 = -1j * decay * cmath.sqrt(1 / a**2 - 1) * cmath.sinh(x)
    return complex(h1), complex(h2)


def ad_reduced_states(t: float, p: ADParams) -> tuple[DensityOperator, DensityOperator]:
    """Atom states for the entangled-reservoir start and the product-reservoir start."""
    _, h2 = ad_h(t, p)
    q = abs(h2) ** 2
    rho1 = q * projector(PSI_PLUS) + (1 - q) * projector(GG)
    rho2 = 0.25 * np.diag([q * q, q * (2 - q), q * (2 - q), (2 - q) ** 2]).astype(complex)
    return DensityOperator(rho1, (2, 2)), DensityOperator(rho2, (2, 2))


def ad_initial_states() -> tuple[DensityOperator, DensityOperator]:
    """t = 0 total states on (atoms, reservoir 1, reservoir 2), each reservoir
    restricted to {vacuum, one excitation}."""
    atoms = DensityOperator(projector(GG), (4,))
    bell = DensityOperator(projector(PSI_PLUS), (2, 2))
    half = DensityOperator(np.eye(2, dtype=complex) / 2)
    return tensor(atoms, bell), tensor(atoms, half, half)
