"""Scenario loading, execution, persistence and the oracle battery."""
from .catalog import CATALOG, catalog_spec
from .execute import RunRecord, run_scenario, write_outputs
from .scenario import ScenarioError, ScenarioSpec, load_scenario

__all__ = [
    "CATALOG",
    "catalog_spec",
    "RunRecord",
    "run_scenario",
    "write_outputs",
    "ScenarioError",
    "ScenarioSpec",
    "load_scenario",
]
