"""Random states, unitaries and tripartite scenarios for property checks."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qmat import DensityOperator, hermitian_propagator, tensor
from .witness import build_reference_state

__all__ = [
    "random_ket",
    "random_density",
    "random_hermitian",
    "random_unitary",
    "TripartiteCase",
    "random_tripartite_case",
]


def random_ket(rng: np.random.Generator, d: int) -> np.ndarray:
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    return v / np.linalg.norm(v)


def random_density(rng: np.random.Generator, d: int, rank: int | None = None, dims=()) -> DensityOperator:
    """Mixture of ``rank`` random pure states with Dirichlet weights."""
    rank = rank or int(rng.integers(1, d + 1))
    w = rng.dirichlet(np.ones(rank))
    m = sum(wk * np.outer(v, v.conj()) for wk, v in zip(w, (random_ket(rng, d) for _ in range(rank))))
    return DensityOperator(m, tuple(dims) or (d,))


def random_hermitian(rng: np.random.Generator, d: int, scale: float = 1.0) -> np.ndarray:
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return scale * (a + a.conj().T) / 2


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    """exp(-iH) for a random Hermitian H with O(pi) spectral spread."""
    return hermitian_propagator(random_hermitian(rng, d, scale=np.pi), 1.0)


@dataclass
class TripartiteCase:
    rho1: DensityOperator
    rho2: DensityOperator
    unitary: np.ndarray
    regime: str  # "general", "se_free" or "reference"


def random_tripartite_case(
    rng: np.random.Generator, dims: tuple[int, int, int] = (2, 2, 2), regime: str = "general"
) -> TripartiteCase:
    """Random initial pair plus a random global unitary exp(-iHt).

    general: arbitrary correlated states.
    se_free: both states of the form rho^A x rho^BC.
    reference: se_free first state, second built from it with a random
        trace-preserving channel on A and product environment marginals.
    """
    d = int(np.prod(dims))
    da, dbc = dims[0], dims[1] * dims[2]
    if regime == "general":
        rho1 = random_density(rng, d, dims=dims)
        rho2 = random_density(rng, d, dims=dims)
    elif regime in ("se_free", "reference"):
        rho1 = tensor(random_density(rng, da), random_density(rng, dbc, dims=dims[1:]))
        if regime == "se_free":
            rho2 = tensor(random_density(rng, da), random_density(rng, dbc, dims=dims[1:]))
        else:
            sigma = random_density(rng, da).mat
            v = random_unitary(rng, da)
            if rng.random() < 0.5:
                channel = lambda x, s=sigma: np.trace(x) * s  # replacement channel
            else:
                channel = lambda x, v=v: v @ x @ v.conj().T
            rho2 = build_reference_state(rho1, channel)
    else:
        raise ValueError(f"unknown regime {regime!r}")
    t = float(rng.uniform(0, 5))
    u = hermitian_propagator(random_hermitian(rng, d), t)
    return TripartiteCase(rho1, rho2, u, regime)
