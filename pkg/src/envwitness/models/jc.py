"""Two Jaynes-Cummings atoms, each coupled to its own single-mode field.

Atom-field pair states are stored as amplitude arrays of shape ``(2, F)``:
row 0 is the excited branch |e, n>, row 1 the ground branch |g, n>, for Fock
levels n = 0..F-1. The propagator acts manifold by manifold on
{|e, n-1>, |g, n>}; no dense matrix is ever built.

A joint two-pair state is a list of ``(weight, pair1, pair2)`` product terms
forming a coherent superposition; a mixed initial state is a list of such
superpositions with probabilities.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.stats import poisson

from ..qmat import ContractError, DensityOperator, projector

__all__ = [
    "TruncationError",
    "JCParams",
    "FOCK_CASES",
    "jc_coefficients",
    "manifold_block",
    "excited_pair",
    "coherent_amplitudes",
    "coherent_cutoff",
    "jc_apply_propagator",
    "reduce_superposition",
    "fock_environment",
    "fock_environment_matrix",
    "jc_reduced_system",
    "coherent_environment_matrices",
    "jc_coherent_scenario",
]

FOCK_CASES = ("entangledFock", "productFock", "classicalFock")
COHERENT_CASES = ("coherentClassical", "coherentProduct")
LEAK_TOL = 1e-12


class TruncationError(ContractError):
    """Population reached the Fock cutoff and would leak out of the basis."""


@dataclass(frozen=True)
class JCParams:
    g: float = 1.0
    delta: float = 0.0
    n: int = 1
    alpha: complex = 2**-0.5
    beta: complex = 2**-0.5
    nmax: int | None = None

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise ContractError("photon number n must be a non-negative integer")
        if abs(abs(self.alpha) ** 2 + abs(self.beta) ** 2 - 1) > 1e-9:
            raise ContractError("|alpha|^2 + |beta|^2 must equal 1")
        if self.nmax is not None and self.nmax < self.n + 1:
            raise ContractError(f"nmax={self.nmax} must be at least n+1={self.n + 1}")

    @property
    def cutoff(self) -> int:
        return self.nmax if self.nmax is not None else self.n + 1


def jc_coefficients(n, g: float, delta: float, t: float) -> tuple[np.ndarray, np.ndarray]:
    """c(n, t) and d(n, t) of the interaction-picture propagator, vectorised over n."""
    n = np.asarray(n, dtype=float)
    omega = np.sqrt(delta**2 + 4 * g**2 * n)
    half = omega * t / 2
    phase = np.exp(1j * delta * t / 2)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(omega > 0, delta / np.where(omega > 0, omega, 1.0), 0.0)
        # sin(omega t/2)/omega -> t/2 as omega -> 0
        sinc = np.where(omega > 0, np.sin(half) / np.where(omega > 0, omega, 1.0), t / 2)
    c = phase * (np.cos(half) - 1j * ratio * np.sin(half))
    c = np.where(omega > 0, c, 1.0 + 0j)
    d = -1j * phase * 2 * g * sinc
    return c, d


def manifold_block(N: int, g: float, delta: float, t: float) -> np.ndarray:
    """2x2 propagator on (|e, N-1>, |g, N>)."""
    c, d = jc_coefficients(N, g, delta, t)
    s = math.sqrt(N)
    return np.array([[c, s * d], [-s * np.conj(d), np.conj(c)]], dtype=complex)


def jc_apply_propagator(amps: np.ndarray, g: float, delta: float, t: float) -> np.ndarray:
    """Evolve one atom-field pair for time t.

    new e[n] = c(n+1) e[n] + sqrt(n+1) d(n+1) g[n+1]
    new g[n] = -sqrt(n) conj(d(n)) e[n-1] + conj(c(n)) g[n]
    """
    amps = np.asarray(amps, dtype=complex)
    if amps.ndim != 2 or amps.shape[0] != 2:
        raise ContractError("pair amplitudes must have shape (2, F)")
    norm = float(np.sum(np.abs(amps) ** 2))
    if abs(norm - 1) > 1e-12:
        raise ContractError(f"pair state not normalised (norm^2 = {norm})")
    e, gr = amps
    F = e.size
    if abs(e[-1]) ** 2 > LEAK_TOL:
        raise TruncationError(
            f"excited-branch population {abs(e[-1]) ** 2:.3g} at cutoff level {F - 1}"
        )
    levels = np.arange(F)
    c_up, d_up = jc_coefficients(levels + 1, g, delta, t)
    c_here, d_here = jc_coefficients(levels, g, delta, t)
    g_next = np.zeros(F, dtype=complex)
    g_next[:-1] = gr[1:]
    new_e = c_up * e + np.sqrt(levels + 1) * d_up * g_next
    e_prev = np.zeros(F, dtype=complex)
    e_prev[1:] = e[:-1]
    new_g = -np.sqrt(levels) * np.conj(d_here) * e_prev + np.conj(c_here) * gr
    return np.array([new_e, new_g])


def excited_pair(field_amps) -> np.ndarray:
    """|e> x |field> as pair amplitudes."""
    f = np.asarray(field_amps, dtype=complex)
    return np.array([f, np.zeros_like(f)])


def fock(n: int, F: int) -> np.ndarray:
    v = np.zeros(F, dtype=complex)
    v[n] = 1.0
    return v


def coherent_cutoff(beta: complex) -> int:
    """Fock cutoff: at least ceil(|beta|^2 + 10|beta|), raised until the
    Poisson mass on levels >= cutoff is below 1e-12 (matters for small |beta|)."""
    r = abs(beta)
    cut = max(4, math.ceil(r * r + 10 * r))
    while poisson.sf(cut - 1, r * r) >= LEAK_TOL:
        cut += 1
    return cut


def coherent_amplitudes(beta: complex, F: int) -> np.ndarray:
    """Coherent-state amplitudes on levels 0..F-1; raises if the tail mass is >= 1e-12."""
    mu = abs(beta) ** 2
    levels = np.arange(F)
    if mu == 0:
        return fock(0, F)
    tail = float(poisson.sf(F - 2, mu))  # mass on levels >= F-1
    if tail >= LEAK_TOL:
        raise TruncationError(f"coherent tail mass {tail:.3g} beyond cutoff {F - 2}")
    amps = np.sqrt(poisson.pmf(levels, mu)) * np.exp(1j * np.angle(beta) * levels)
    return amps / np.linalg.norm(amps)


def reduce_superposition(terms: Sequence[tuple[complex, np.ndarray, np.ndarray]]) -> np.ndarray:
    """Two-atom reduced state of sum_k w_k |pair1_k>|pair2_k>, fields traced out.

    rho = sum_{k,l} w_k conj(w_l) (A_k A_l^+) x (B_k B_l^+), where A_k is the
    (2, F) amplitude array of pair 1 in term k.
    """
    rho = np.zeros((4, 4), dtype=complex)
    for wk, ak, bk in terms:
        for wl, al, bl in terms:
            rho += wk * np.conj(wl) * np.kron(ak @ al.conj().T, bk @ bl.conj().T)
    return rho


def fock_environment(case: str, p: JCParams):
    """Field states as mixtures of superpositions of Fock products.

    Returns ``[(prob, [(weight, m1, m2), ...]), ...]``.
    """
    n, a, b = p.n, p.alpha, p.beta
    if case == "entangledFock":
        return [(1.0, [(a, 0, n), (b, n, 0)])]
    if case == "productFock":
        pa, pb = abs(a) ** 2, abs(b) ** 2
        return [
            (pa * pa, [(1.0, 0, n)]),
            (pb * pb, [(1.0, n, 0)]),
            (pa * pb, [(1.0, 0, 0)]),
            (pa * pb, [(1.0, n, n)]),
        ]
    if case == "classicalFock":
        return [(abs(a) ** 2, [(1.0, 0, 0)]), (abs(b) ** 2, [(1.0, n, n)])]
    raise ContractError(f"unknown Fock environment case {case!r}; expected one of {FOCK_CASES}")


def fock_environment_matrix(case: str, p: JCParams) -> DensityOperator:
    """Environment state restricted to span{|0>, |n>} per mode, layout (2, 2).

    Only levels 0 and n are populated, so trace distances between these
    compact states equal those between the full Fock-space states.
    """
    slot = {0: 0, p.n: 1}
    rho = np.zeros((4, 4), dtype=complex)
    for prob, terms in fock_environment(case, p):
        psi = np.zeros(4, dtype=complex)
        for w, m1, m2 in terms:
            psi[2 * slot[m1] + slot[m2]] += w
        rho += prob * projector(psi)
    return DensityOperator(rho, (2, 2))


def jc_reduced_system(case: str, p: JCParams, t: float) -> DensityOperator:
    """Two-atom state at time t for atoms starting in |ee> and fields in ``case``."""
    if p.n == 0:
        raise ContractError("n must be positive for the Fock environment cases")
    F = p.cutoff + 1
    evolved = {
        m: jc_apply_propagator(excited_pair(fock(m, F)), p.g, p.delta, t) for m in {0, p.n}
    }
    rho = np.zeros((4, 4), dtype=complex)
    for prob, terms in fock_environment(case, p):
        rho += prob * reduce_superposition([(w, evolved[m1], evolved[m2]) for w, m1, m2 in terms])
    return DensityOperator(rho, (2, 2), herm_tol=1e-8)


def _gram_vectors(beta: complex) -> np.ndarray:
    """Columns u_plus, u_minus in C^2 with <u_i|u_j> = <+-beta|+-beta>."""
    s = np.exp(-2 * abs(beta) ** 2)
    gram = np.array([[1.0, s], [s, 1.0]])
    w, v = np.linalg.eigh(gram)
    return (v * np.sqrt(np.clip(w, 0, None))) @ v.T


def coherent_environment_matrices(beta: complex) -> tuple[DensityOperator, DensityOperator]:
    """Both coherent-state environment states in span{|beta>, |-beta>} per mode.

    First: (|b,-b><b,-b| + |-b,b><-b,b|)/2. Second: product of the marginals
    (|b><b| + |-b><-b|)/2 for each mode. Exact, including the overlap
    <beta|-beta> = exp(-2|beta|^2).
    """
    u = _gram_vectors(beta)
    up, um = u[:, 0], u[:, 1]
    first = 0.5 * (projector(np.kron(up, um)) + projector(np.kron(um, up)))
    marg = 0.5 * (projector(up) + projector(um))
    return DensityOperator(first, (2, 2)), DensityOperator(np.kron(marg, marg), (2, 2))


def jc_coherent_scenario(
    beta: complex, g: float, delta: float, t: float, nmax: int | None = None
) -> tuple[DensityOperator, DensityOperator]:
    """Two-atom states at time t for the classically correlated coherent-state
    environment (first) and the product of its marginals (second)."""
    F = (nmax if nmax is not None else coherent_cutoff(beta)) + 1
    plus = jc_apply_propagator(excited_pair(coherent_amplitudes(beta, F)), g, delta, t)
    minus = jc_apply_propagator(excited_pair(coherent_amplitudes(-beta, F)), g, delta, t)
    rp, rm = plus @ plus.conj().T, minus @ minus.conj().T
    rho1 = 0.5 * (np.kron(rp, rm) + np.kron(rm, rp))
    avg = 0.5 * (rp + rm)
    rho2 = np.kron(avg, avg)
    return DensityOperator(rho1, (2, 2), herm_tol=1e-8), DensityOperator(rho2, (2, 2), herm_tol=1e-8)
