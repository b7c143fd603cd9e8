"""Three-qubit Heisenberg XX ring in a uniform field.

Qubit 1 is the open system A, qubits 2 and 3 are the environments B and C.
The spin convention is sigma_z|0> = -|0>, so that |000> is the ground state
with energy -3B.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from ..qmat import ContractError, DensityOperator, projector, tensor

__all__ = [
    "XXParams",
    "XX_CASES",
    "werner",
    "xx_hamiltonian",
    "xx_eigensystem",
    "xx_propagator",
    "one_excitation_amplitudes",
    "two_excitation_amplitudes",
    "xx_scenario",
]

SIGMA_Z = np.diag([-1.0, 1.0]).astype(complex)
# raising operator |0> -> |1>
SIGMA_PLUS = np.array([[0, 0], [1, 0]], dtype=complex)
SIGMA_MINUS = SIGMA_PLUS.T.copy()

XX_CASES = ("werner_vs_product", "werner_vs_werner", "werner_vs_classical")


@dataclass(frozen=True)
class XXParams:
    J: float = 1.0
    B: float = 1.0
    f: complex = 2**-0.5
    g: complex = 2**-0.5
    l: complex = (3 / 7) ** 0.5
    m: complex = (4 / 7) ** 0.5
    alpha: float = 1.0
    alpha2: float = 0.0

    def __post_init__(self):
        if abs(abs(self.f) ** 2 + abs(self.g) ** 2 - 1) > 1e-7:
            raise ContractError("|f|^2 + |g|^2 must equal 1")
        if abs(abs(self.l) ** 2 + abs(self.m) ** 2 - 1) > 1e-7:
            raise ContractError("|l|^2 + |m|^2 must equal 1")
        for name in ("alpha", "alpha2"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ContractError(f"Werner weight {name} must lie in [0, 1]")


def _site_op(op: np.ndarray, site: int, n: int = 3) -> np.ndarray:
    mats = [np.eye(2, dtype=complex)] * n
    mats[site] = op
    return reduce(np.kron, mats)


def werner(alpha: float) -> np.ndarray:
    """(1 - alpha) I/4 + alpha |psi-><psi-| on two qubits."""
    psi_minus = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)
    return (1 - alpha) / 4 * np.eye(4, dtype=complex) + alpha * projector(psi_minus)


def xx_hamiltonian(J: float, B: float) -> np.ndarray:
    """J sum_n (s+_n s-_{n+1} + s-_n s+_{n+1}) + B sum_n sz_n on a periodic 3-ring."""
    n = 3
    h = np.zeros((8, 8), dtype=complex)
    for k in range(n):
        nxt = (k + 1) % n
        hop = _site_op(SIGMA_PLUS, k) @ _site_op(SIGMA_MINUS, nxt)
        h += J * (hop + hop.conj().T)
        h += B * _site_op(SIGMA_Z, k)
    return h


def _basis(bits: str) -> np.ndarray:
    v = np.zeros(8, dtype=complex)
    v[int(bits, 2)] = 1.0
    return v


def xx_eigensystem(J: float, B: float) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form energies and eigenvectors (columns), in the order E0..E7."""
    w = np.exp(2j * np.pi / 3)
    s3 = np.sqrt(3.0)
    b = _basis
    vecs = [
        b("000"),
        (w * b("001") + w.conjugate() * b("010") + b("100")) / s3,
        (w.conjugate() * b("001") + w * b("010") + b("100")) / s3,
        (b("001") + b("010") + b("100")) / s3,
        (w * b("110") + w.conjugate() * b("101") + b("011")) / s3,
        (w.conjugate() * b("110") + w * b("101") + b("011")) / s3,
        (b("110") + b("101") + b("011")) / s3,
        b("111"),
    ]
    energies = np.array(
        [-3 * B, -J - B, -J - B, 2 * J - B, -J + B, -J + B, 2 * J + B, 3 * B], dtype=float
    )
    return energies, np.column_stack(vecs)


def xx_propagator(J: float, B: float, t: float) -> np.ndarray:
    """sum_k exp(-i E_k t) |psi_k><psi_k| from the closed-form eigensystem."""
    e, v = xx_eigensystem(J, B)
    return (v * np.exp(-1j * e * t)) @ v.conj().T


def one_excitation_amplitudes(J, B, t, amps) -> np.ndarray:
    """Coefficients on (|001>, |010>, |100>) at time t for a one-excitation start."""
    x, y, z = amps
    k = np.exp(-1j * t * (2 * J - B)) * (x + y + z)
    ph = np.exp(1j * t * (J + B))
    return np.array([ph * (2 * x - y - z) + k, ph * (2 * y - x - z) + k, ph * (2 * z - x - y) + k]) / 3


def two_excitation_amplitudes(J, B, t, amps) -> np.ndarray:
    """Coefficients on (|110>, |101>, |011>) at time t for a two-excitation start."""
    x, y, z = amps
    zt = np.exp(-1j * t * (2 * J + B)) * (x + y + z)
    ph = np.exp(-1j * t * (-J + B))
    return np.array([ph * (2 * x - y - z) + zt, ph * (2 * y - x - z) + zt, ph * (2 * z - x - y) + zt]) / 3


def xx_scenario(case: str, p: XXParams) -> tuple[DensityOperator, DensityOperator]:
    """Initial states (rho1, rho2) on (A, B, C).

    werner_vs_product: W(alpha) vs maximally mixed product environment.
    werner_vs_werner: W(alpha) vs W(alpha2).
    werner_vs_classical: W(alpha) vs (|00><00| + |11><11|)/2.
    System states are f|0> + g|1> and l|0> + m|1> respectively.
    """
    sys1 = DensityOperator(projector([p.f, p.g]))
    sys2 = DensityOperator(projector([p.l, p.m]))
    env1 = werner(p.alpha)
    if case == "werner_vs_product":
        env2 = np.eye(4, dtype=complex) / 4
    elif case == "werner_vs_werner":
        env2 = werner(p.alpha2)
    elif case == "werner_vs_classical":
        env2 = np.diag([0.5, 0, 0, 0.5]).astype(complex)
    else:
        raise ContractError(f"unknown XX case {case!r}; expected one of {XX_CASES}")
    rho1 = tensor(sys1, DensityOperator(env1, (2, 2)))
    rho2 = tensor(sys2, DensityOperator(env2, (2, 2)))
    return rho1, rho2
