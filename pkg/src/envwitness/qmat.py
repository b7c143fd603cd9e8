"""Dense complex linear algebra and density-operator primitives.

Index convention: for a layout ``(d0, d1, ..., dk)`` the leftmost factor is the
slowest-varying index, i.e. ``np.kron`` order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "ContractError",
    "DimensionError",
    "InvalidStateError",
    "DensityOperator",
    "HermitianSpectrum",
    "DensityReport",
    "ket",
    "projector",
    "tensor",
    "partial_trace",
    "permute_factors",
    "hermitian_eigensystem",
    "jacobi_eigh",
    "trace_distance",
    "evolve",
    "hermitian_propagator",
    "validate_density",
]


class ContractError(ValueError):
    """An operation was handed input that violates its precondition."""


class DimensionError(ContractError):
    pass


class InvalidStateError(ContractError):
    pass


def _as_matrix(a) -> np.ndarray:
    m = a.mat if isinstance(a, DensityOperator) else np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ContractError("matrix has non-finite entries")
    return m


def _check_layout(dims: Sequence[int], dim: int) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims):
        raise DimensionError(f"invalid layout {dims}")
    if int(np.prod(dims)) != dim:
        raise DimensionError(f"layout {dims} does not match matrix dimension {dim}")
    return dims


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Hermitian, unit-trace, positive semidefinite matrix with a subsystem layout.

    ``dims`` defaults to a single factor spanning the whole space. Construction
    validates the state against ``herm_tol`` unless ``check=False``.
    """

    mat: np.ndarray
    dims: tuple[int, ...] = ()
    herm_tol: float = 1e-10
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        m = np.array(self.mat, dtype=complex)
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)
        dims = self.dims or (m.shape[0],)
        object.__setattr__(self, "dims", _check_layout(dims, _as_matrix(m).shape[0]))
        if self.check:
            report = validate_density(m, self.herm_tol)
            if not report.passed:
                raise InvalidStateError(f"not a density operator: {report}")

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @classmethod
    def from_ket(cls, psi, dims: Sequence[int] = ()) -> "DensityOperator":
        return cls(projector(psi), tuple(dims))

    def with_dims(self, dims: Sequence[int]) -> "DensityOperator":
        """Same matrix, regrouped factors (e.g. ``(2, 2, 2, 2)`` -> ``(4, 2, 2)``)."""
        return DensityOperator(self.mat, tuple(dims), self.herm_tol, check=False)


@dataclass(frozen=True)
class HermitianSpectrum:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


@dataclass(frozen=True)
class DensityReport:
    herm_defect: float
    trace_defect: float
    min_eigenvalue: float
    tol: float

    @property
    def passed(self) -> bool:
        return (
            self.herm_defect <= self.tol
            and self.trace_defect <= self.tol
            and self.min_eigenvalue >= -self.tol
        )


def ket(*amplitudes) -> np.ndarray:
    return np.asarray(amplitudes, dtype=complex)


def projector(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).ravel()
    return np.outer(psi, psi.conj())


MatrixLike = Union[DensityOperator, np.ndarray]


def tensor(*ops: MatrixLike):
    """Kronecker product, left factor slowest.

    Returns a :class:`DensityOperator` (layouts concatenated) when every
    argument is one, otherwise a plain array.
    """
    if not ops:
        raise ContractError("tensor needs at least one operand")
    mats = [_as_matrix(op) for op in ops]
    out = reduce(np.kron, mats)
    if all(isinstance(op, DensityOperator) for op in ops):
        dims = sum((op.dims for op in ops), ())
        return DensityOperator(out, dims, ops[0].herm_tol, check=False)
    return out


def _reshape_factors(m: np.ndarray, dims: tuple[int, ...]) -> np.ndarray:
    return m.reshape(dims + dims)


def partial_trace(rho: DensityOperator, keep: Iterable[int]) -> DensityOperator:
    """Reduced state on the factors in ``keep`` (original order preserved)."""
    dims = rho.dims
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise DimensionError("keep must be non-empty")
    if keep[0] < 0 or keep[-1] >= len(dims):
        raise DimensionError(f"factor indices {keep} invalid for layout {dims}")
    n = len(dims)
    t = _reshape_factors(rho.mat, dims)
    traced = [i for i in range(n) if i not in keep]
    # einsum labels: row index i -> letter i, column index -> letter n+i (or i when traced)
    letters = [chr(ord("a") + i) for i in range(2 * n)]
    row = letters[:n]
    col = [row[i] if i in traced else letters[n + i] for i in range(n)]
    out_labels = [row[i] for i in keep] + [col[i] for i in keep]
    red = np.einsum("".join(row + col) + "->" + "".join(out_labels), t)
    kd = tuple(dims[i] for i in keep)
    d = int(np.prod(kd))
    return DensityOperator(red.reshape(d, d), kd, rho.herm_tol, check=False)


def permute_factors(rho: DensityOperator, order: Sequence[int]) -> DensityOperator:
    """Reorder tensor factors; ``order[k]`` is the old index placed at slot k."""
    dims = rho.dims
    n = len(dims)
    order = list(order)
    if sorted(order) != list(range(n)):
        raise DimensionError(f"{order} is not a permutation of {n} factors")
    t = _reshape_factors(rho.mat, dims).transpose(order + [n + i for i in order])
    new_dims = tuple(dims[i] for i in order)
    return DensityOperator(t.reshape(rho.dim, rho.dim), new_dims, rho.herm_tol, check=False)


def _herm_defect(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def jacobi_eigh(
    h, tol: float = 1e-12, max_sweeps: int = 100
) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalisation of a complex Hermitian matrix.

    Each rotation first removes the phase of the pivot element, then applies a
    real Givens rotation. Iterates until the largest off-diagonal modulus is
    below ``tol * max(1, ||H||max)``.
    """
    a = np.array(_as_matrix(h), dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(a)))) if n else 1.0
    threshold = tol * scale
    for _ in range(max_sweeps):
        off = np.abs(a - np.diag(np.diag(a)))
        if n < 2 or off.max() <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= threshold * 1e-3:
                    continue
                phase = apq / r
                app, aqq = a[p, p].real, a[q, q].real
                tau = (aqq - app) / (2.0 * r)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # W = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                w = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ w
                a[idx, :] = w.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                v[:, idx] = v[:, idx] @ w
    else:
        off = np.abs(a - np.diag(np.diag(a)))
        if off.max() > threshold:
            raise ContractError(f"Jacobi did not converge in {max_sweeps} sweeps")
    evals = np.diag(a).real
    order = np.argsort(evals, kind="stable")
    return evals[order], v[:, order]


def hermitian_eigensystem(h, method: str = "lapack") -> HermitianSpectrum:
    """Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.

    ``method="lapack"`` uses ``numpy.linalg.eigh``; ``method="jacobi"`` uses
    :func:`jacobi_eigh`. Input must be Hermitian to 1e-8.
    """
    m = _as_matrix(h)
    defect = _herm_defect(m)
    if defect > 1e-8:
        raise ContractError(f"matrix is not Hermitian (defect {defect:.3g})")
    m = 0.5 * (m + m.conj().T)
    if method == "lapack":
        w, v = np.linalg.eigh(m)
    elif method == "jacobi":
        w, v = jacobi_eigh(m)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    return HermitianSpectrum(np.asarray(w, dtype=float), v)


def trace_distance(rho, sigma) -> float:
    """D = 1/2 sum |eig(rho - sigma)|, clamped to [0, 1]."""
    a, b = _as_matrix(rho), _as_matrix(sigma)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch {a.shape} vs {b.shape}")
    diff = a - b
    diff = 0.5 * (diff + diff.conj().T)
    d = 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(diff))))
    return min(max(d, 0.0), 1.0)


def _unitarity_defect(u: np.ndarray) -> float:
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))


def evolve(rho: DensityOperator, u) -> DensityOperator:
    """Return ``U rho U^dagger``; U must be unitary to 1e-9."""
    u = _as_matrix(u)
    if u.shape[0] != rho.dim:
        raise DimensionError(f"unitary of dim {u.shape[0]} on state of dim {rho.dim}")
    defect = _unitarity_defect(u)
    if defect > 1e-9:
        raise ContractError(f"operator is not unitary (defect {defect:.3g})")
    return DensityOperator(u @ rho.mat @ u.conj().T, rho.dims, rho.herm_tol, check=False)


def hermitian_propagator(h, t: float, method: str = "lapack") -> np.ndarray:
    """exp(-i H t) assembled from the Hermitian eigensystem (hbar = 1)."""
    spec = hermitian_eigensystem(h, method)
    v = spec.eigenvectors
    return (v * np.exp(-1j * spec.eigenvalues * t)) @ v.conj().T


def validate_density(rho, tol: float = 1e-10) -> DensityReport:
    m = rho.mat if isinstance(rho, DensityOperator) else np.asarray(rho, dtype=complex)
    herm = _herm_defect(m)
    tr = abs(complex(np.trace(m)) - 1.0)
    hm = 0.5 * (m + m.conj().T)
    min_eig = float(np.linalg.eigvalsh(hm)[0]) if m.size else 0.0
    return DensityReport(herm, tr, min_eig, tol)
