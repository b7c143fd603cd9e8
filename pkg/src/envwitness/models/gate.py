"""Four-qubit gate model: two system qubits, each hit by CNOT then SWAP with
its own environment qubit.

Factor order is (S1, S2, E1, E2). Grouped as ``(4, 2, 2)`` the same matrices
are tripartite states with the two system qubits as one open system.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import logm

from ..qmat import (
    ContractError,
    DensityOperator,
    hermitian_propagator,
    partial_trace,
    permute_factors,
    projector,
    tensor,
)

__all__ = [
    "GateParams",
    "CNOT",
    "SWAP",
    "gate_unitary",
    "gate_generator",
    "gate_propagator",
    "gate_scenario",
    "post_gate_distance",
]

CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)
SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)

# (S1, E1, S2, E2) -> (S1, S2, E1, E2)
_PAIR_TO_SE = [0, 2, 1, 3]

PURE = "pure_entangled"
CLASSICAL = "classical_mixture"


@dataclass(frozen=True)
class GateParams:
    a: complex
    b: complex
    alpha: complex
    beta: complex
    kind: str = PURE

    def __post_init__(self):
        for name in ("a", "b", "alpha", "beta"):
            if abs(getattr(self, name)) < 1e-12:
                raise ContractError(f"amplitude {name} must be non-zero")
        if abs(abs(self.a) ** 2 + abs(self.b) ** 2 - 1) > 1e-9:
            raise ContractError("|a|^2 + |b|^2 must equal 1")
        if abs(abs(self.alpha) ** 2 + abs(self.beta) ** 2 - 1) > 1e-9:
            raise ContractError("|alpha|^2 + |beta|^2 must equal 1")
        if self.kind not in (PURE, CLASSICAL):
            raise ContractError(f"unknown gate scenario kind {self.kind!r}")


def _pair_to_se(m: np.ndarray) -> np.ndarray:
    op = DensityOperator(m, (2, 2, 2, 2), check=False)
    return permute_factors(op, _PAIR_TO_SE).mat


def gate_unitary() -> np.ndarray:
    """U1 x U2 with U_i = SWAP . CNOT (control S_i, target E_i), in (S1, S2, E1, E2) order."""
    u = SWAP @ CNOT
    return _pair_to_se(np.kron(u, u))


def gate_generator() -> np.ndarray:
    """Hermitian H with exp(-iH) equal to :func:`gate_unitary`.

    SWAP.CNOT is a 3-cycle on |01>, |10>, |11>, so its principal logarithm has
    eigenphases in {0, +-2pi/3} and is unambiguous.
    """
    h2 = 1j * logm(SWAP @ CNOT)
    h2 = 0.5 * (h2 + h2.conj().T)
    h = np.kron(h2, np.eye(4)) + np.kron(np.eye(4), h2)
    return _pair_to_se(h)


def gate_propagator(t: float) -> np.ndarray:
    """Continuous interpolation exp(-iHt); equals the gate at t = 1."""
    return hermitian_propagator(gate_generator(), t)


def gate_scenario(p: GateParams) -> tuple[DensityOperator, DensityOperator]:
    """Initial total states (rho1, rho2), layout (2, 2, 2, 2).

    rho2 keeps the system state and replaces the environment by the product
    of rho1's single-qubit environment marginals.
    """
    if p.kind == PURE:
        phi = np.zeros(4, complex)
        phi[0], phi[3] = p.a, p.b
        env = projector(np.array([p.alpha, 0, 0, p.beta]))
    else:
        phi = np.zeros(4, complex)
        phi[1], phi[2] = p.a, p.b
        env = np.diag([abs(p.alpha) ** 2, 0, 0, abs(p.beta) ** 2]).astype(complex)
    sys = DensityOperator(projector(phi), (2, 2))
    env = DensityOperator(env, (2, 2))
    env_product = tensor(partial_trace(env, [0]), partial_trace(env, [1]))
    return tensor(sys, env), tensor(sys, env_product)


def post_gate_distance(p: GateParams) -> float:
    """Closed-form system trace distance after the gate.

    Pure case: the post-gate system coherence between |00> and |11> is
    c = |a|^2 alpha conj(beta) + |b|^2 conj(alpha) beta, giving
    D = |alpha beta|^2 + max(|c|, |alpha beta|^2). For environment amplitudes
    with relative phase 0 or pi this is |alpha beta|^2 + |alpha beta|.
    Classical case: D = 2 |alpha beta|^2.
    """
    ab = abs(p.alpha * p.beta)
    if p.kind == CLASSICAL:
        return 2 * ab**2
    c = abs(p.a) ** 2 * p.alpha * np.conj(p.beta) + abs(p.b) ** 2 * np.conj(p.alpha) * p.beta
    return ab**2 + max(abs(c), ab**2)
