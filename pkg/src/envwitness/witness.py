"""Information-flow functionals, the trace-distance bound hierarchy and the
growth-based witness for initial correlations among environments.

Tripartite states use the layout ``(A, B, C)``: ``A`` is the open system,
``B`` and ``C`` are two environments.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .qmat import (
    ContractError,
    DensityOperator,
    DimensionError,
    partial_trace,
    permute_factors,
    tensor,
    trace_distance,
)

__all__ = [
    "TraceSeries",
    "BoundSet",
    "InfoSplit",
    "WitnessReport",
    "info_change",
    "info_flow_rate",
    "product_of_marginals",
    "correlation_distance",
    "bound_bipartite",
    "bound_tripartite",
    "internal_external",
    "external_info_bound",
    "build_reference_state",
    "witness_verdict",
    "count_local_maxima",
]

PRECONDITION_TOL = 1e-10


@dataclass(frozen=True)
class TraceSeries:
    times: np.ndarray
    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if t.ndim != 1 or t.shape != v.shape:
            raise ContractError(f"times/values shape mismatch {t.shape} vs {v.shape}")
        if t.size == 0:
            raise ContractError("empty series")
        if np.any(np.diff(t) <= 0):
            raise ContractError("times must be strictly increasing")
        if np.any(v < -1e-12) or np.any(v > 1 + 1e-12):
            raise ContractError("trace-distance values outside [0, 1]")
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return self.times.size


@dataclass(frozen=True)
class BoundSet:
    """Right-hand sides of the bound hierarchy plus their ingredients.

    b5: bipartite bound (system vs joint environment).
    b8: general tripartite bound.
    b9: b8 without the system-environment correlation terms.
    b10: correlations inside the first environment state alone.

    ``se_free`` says whether b9 is a valid bound, ``b10_valid`` whether the
    second environment state is the product of the first one's marginals.
    """

    b5: float
    b8: float
    b9: float
    b10: float
    terms: dict = field(default_factory=dict)
    se_free: bool = False
    b10_valid: bool = False

    def get(self, name: str) -> float:
        return {"b5": self.b5, "b8": self.b8, "b9": self.b9, "b10": self.b10}[name]

    def to_dict(self) -> dict:
        return {
            "b5": self.b5,
            "b8": self.b8,
            "b9": self.b9,
            "b10": self.b10,
            "terms": dict(self.terms),
            "seFree": self.se_free,
            "b10Valid": self.b10_valid,
        }


@dataclass(frozen=True)
class InfoSplit:
    i_int: float
    i_ext: float
    total: float


@dataclass(frozen=True)
class WitnessReport:
    max_growth: float
    argmax_time: float
    bound: float
    tightness_gap: float
    verdict: bool
    epsilon: float

    def to_dict(self) -> dict:
        return {
            "maxGrowth": self.max_growth,
            "argmaxTime": self.argmax_time,
            "bound": self.bound,
            "tightnessGap": self.tightness_gap,
            "verdict": self.verdict,
            "epsilon": self.epsilon,
        }


def info_change(series: TraceSeries) -> np.ndarray:
    return series.values - series.values[0]


def info_flow_rate(series: TraceSeries) -> np.ndarray:
    """d/dt of the trace distance; positive values mean backflow into the system.

    Second-order central differences inside the grid, one-sided at the ends.
    """
    if len(series) < 2:
        raise ContractError("flow rate needs at least two grid points")
    return np.gradient(series.values, series.times)


def count_local_maxima(values, flat_tol: float = 1e-12) -> int:
    """Strict interior local maxima after merging steps smaller than ``flat_tol``."""
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        return 0
    kept = [v[0]]
    for x in v[1:]:
        if abs(x - kept[-1]) >= flat_tol:
            kept.append(x)
    k = np.asarray(kept)
    return int(np.sum((k[1:-1] > k[:-2]) & (k[1:-1] > k[2:])))


def _require_same_layout(rho1: DensityOperator, rho2: DensityOperator) -> None:
    if rho1.dims != rho2.dims:
        raise DimensionError(f"layout mismatch {rho1.dims} vs {rho2.dims}")


def product_of_marginals(rho: DensityOperator, groups: Sequence[Sequence[int]]) -> DensityOperator:
    """Tensor product of the marginals on ``groups``, laid out in the original factor order.

    ``groups`` must partition the factors of ``rho``.
    """
    n = len(rho.dims)
    flat = [i for g in groups for i in sorted(g)]
    if sorted(flat) != list(range(n)):
        raise DimensionError(f"groups {groups} do not partition {n} factors")
    marginals = [partial_trace(rho, g) for g in groups]
    prod = tensor(*marginals)
    # prod factor k corresponds to old factor flat[k]; undo that ordering
    inverse = [flat.index(i) for i in range(n)]
    return permute_factors(prod, inverse)


def correlation_distance(rho: DensityOperator, groups: Sequence[Sequence[int]]) -> float:
    """D(rho, product of its marginals): total correlations across the split."""
    return trace_distance(rho, product_of_marginals(rho, groups))


def _split(rho: DensityOperator, system: int) -> tuple[list[int], list[int]]:
    n = len(rho.dims)
    if not 0 <= system < n or n < 2:
        raise DimensionError(f"system factor {system} invalid for layout {rho.dims}")
    return [system], [i for i in range(n) if i != system]


def bound_bipartite(rho1: DensityOperator, rho2: DensityOperator, system: int = 0) -> float:
    """Backflow bound for a system/environment split.

    D(rho1^E, rho2^E) + sum_i D(rho_i^SE, rho_i^S x rho_i^E), where the
    environment is every factor except ``system``.
    """
    _require_same_layout(rho1, rho2)
    s, e = _split(rho1, system)
    env = trace_distance(partial_trace(rho1, e), partial_trace(rho2, e))
    return env + sum(correlation_distance(r, [s, e]) for r in (rho1, rho2))


def _require_tripartite(*states: DensityOperator) -> None:
    for r in states:
        if len(r.dims) != 3:
            raise DimensionError(f"expected a tripartite (A, B, C) layout, got {r.dims}")
    if len(states) == 2:
        _require_same_layout(*states)


def bound_tripartite(rho1: DensityOperator, rho2: DensityOperator) -> BoundSet:
    _require_tripartite(rho1, rho2)
    terms: dict[str, float] = {}
    for i, r in enumerate((rho1, rho2), start=1):
        terms[f"seCorr{i}"] = correlation_distance(r, [[0], [1, 2]])
        terms[f"bcCorr{i}"] = correlation_distance(partial_trace(r, [1, 2]), [[0], [1]])
    bc1, bc2 = partial_trace(rho1, [1, 2]), partial_trace(rho2, [1, 2])
    terms["envDistance"] = trace_distance(bc1, bc2)
    terms["margB"] = trace_distance(partial_trace(rho1, [1]), partial_trace(rho2, [1]))
    terms["margC"] = trace_distance(partial_trace(rho1, [2]), partial_trace(rho2, [2]))

    se = terms["seCorr1"] + terms["seCorr2"]
    b9 = terms["bcCorr1"] + terms["bcCorr2"] + terms["margB"] + terms["margC"]
    ref = product_of_marginals(bc1, [[0], [1]])
    b10_valid = float(np.max(np.abs(bc2.mat - ref.mat))) <= PRECONDITION_TOL
    return BoundSet(
        b5=terms["envDistance"] + se,
        b8=se + b9,
        b9=b9,
        b10=terms["bcCorr1"],
        terms=terms,
        se_free=se <= PRECONDITION_TOL,
        b10_valid=b10_valid,
    )


def internal_external(rho1: DensityOperator, rho2: DensityOperator, system: int = 0) -> InfoSplit:
    _require_same_layout(rho1, rho2)
    s, _ = _split(rho1, system)
    i_int = trace_distance(partial_trace(rho1, s), partial_trace(rho2, s))
    total = trace_distance(rho1, rho2)
    return InfoSplit(i_int, total - i_int, total)


def external_info_bound(rho1: DensityOperator, rho2: DensityOperator) -> float:
    """Upper bound on the external information at the time the states are taken."""
    _require_tripartite(rho1, rho2)
    total = 0.0
    for r in (rho1, rho2):
        total += correlation_distance(r, [[0], [1, 2]])
        total += correlation_distance(partial_trace(r, [1, 2]), [[0], [1]])
    total += trace_distance(partial_trace(rho1, [1]), partial_trace(rho2, [1]))
    total += trace_distance(partial_trace(rho1, [2]), partial_trace(rho2, [2]))
    return total


def _check_trace_preserving(channel: Callable[[np.ndarray], np.ndarray], d: int) -> None:
    for i in range(d):
        for j in range(d):
            e = np.zeros((d, d), dtype=complex)
            e[i, j] = 1.0
            tr = complex(np.trace(np.asarray(channel(e), dtype=complex)))
            if abs(tr - (1.0 if i == j else 0.0)) > 1e-10:
                raise ContractError("channel on the system factor is not trace preserving")


def build_reference_state(
    rho1: DensityOperator, channel: Callable[[np.ndarray], np.ndarray]
) -> DensityOperator:
    """Reference state channel(rho1^A) x rho1^B x rho1^C.

    Drops system-environment correlations, applies ``channel`` to the system
    marginal and replaces the environment state by the product of its
    marginals, so the pair (rho1, result) meets the b10 precondition.
    ``channel`` maps a system matrix to a system matrix and must be linear and
    trace preserving.
    """
    _require_tripartite(rho1)
    d_a = rho1.dims[0]
    _check_trace_preserving(channel, d_a)
    rho_a = partial_trace(rho1, [0])
    new_a = DensityOperator(np.asarray(channel(rho_a.mat), dtype=complex), (d_a,))
    return tensor(new_a, partial_trace(rho1, [1]), partial_trace(rho1, [2]))


def witness_verdict(series: TraceSeries, bound: float, epsilon: float = 1e-6) -> WitnessReport:
    if len(series) == 0:
        raise ContractError("empty series")
    if bound < 0:
        raise ContractError("bound must be non-negative")
    if epsilon <= 0:
        raise ContractError("epsilon must be positive")
    growth = info_change(series)
    k = int(np.argmax(growth))
    max_growth = float(growth[k])
    return WitnessReport(
        max_growth=max_growth,
        argmax_time=float(series.times[k]),
        bound=float(bound),
        tightness_gap=float(bound) - max_growth,
        verdict=max_growth > epsilon,
        epsilon=epsilon,
    )
