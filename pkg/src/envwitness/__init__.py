"""Trace-distance dynamics of a system coupled to two environments, and
witnesses for correlations between the environments."""
from ._version import __version__
from .qmat import (
    ContractError,
    DensityOperator,
    DimensionError,
    InvalidStateError,
    evolve,
    hermitian_eigensystem,
    hermitian_propagator,
    partial_trace,
    tensor,
    trace_distance,
    validate_density,
)
from .witness import (
    BoundSet,
    InfoSplit,
    TraceSeries,
    WitnessReport,
    bound_bipartite,
    bound_tripartite,
    build_reference_state,
    external_info_bound,
    info_change,
    info_flow_rate,
    internal_external,
    witness_verdict,
)

__all__ = [
    "__version__",
    "ContractError",
    "DensityOperator",
    "DimensionError",
    "InvalidStateError",
    "evolve",
    "hermitian_eigensystem",
    "hermitian_propagator",
    "partial_trace",
    "tensor",
    "trace_distance",
    "validate_density",
    "BoundSet",
    "InfoSplit",
    "TraceSeries",
    "WitnessReport",
    "bound_bipartite",
    "bound_tripartite",
    "build_reference_state",
    "external_info_bound",
    "info_change",
    "info_flow_rate",
    "internal_external",
    "witness_verdict",
]
