"""Run a scenario over its time grid and persist the results."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .._version import __version__
from ..qmat import trace_distance
from ..witness import BoundSet, TraceSeries, WitnessReport, info_change, info_flow_rate, witness_verdict
from .families import FamilyRun, bound_regime, build_family
from .scenario import ScenarioSpec

__all__ = ["RunError", "RunRecord", "run_scenario", "write_outputs", "format_number", "csv_text", "meta_document"]

_BOUND_COLUMNS = {"bound5": "b5", "bound8": "b8", "bound9": "b9", "bound10": "b10"}


class RunError(RuntimeError):
    """A model failed at a particular grid point."""


@dataclass(frozen=True)
class RunRecord:
    spec: ScenarioSpec
    times: np.ndarray
    columns: dict
    bound_set: BoundSet
    regime: str
    witness: WitnessReport
    provenance_hash: str

    @property
    def series(self) -> TraceSeries:
        return TraceSeries(self.times, self.columns["D"], self.spec.id)


def _at_point(spec: ScenarioSpec, k: int, t: float, fn):
    try:
        return fn(t)
    except Exception as exc:
        raise RunError(f"{spec.id}: grid point {k} (t={t:.6g}): {type(exc).__name__}: {exc}") from exc


def run_scenario(spec: ScenarioSpec, family: FamilyRun | None = None) -> RunRecord:
    family = family or build_family(spec)
    times = spec.grid.times()
    d = np.empty(times.size)
    need_split = any(c in spec.outputs for c in ("iInt", "iExt"))
    i_int = np.empty(times.size)
    i_ext = np.empty(times.size)
    for k, t in enumerate(times):
        s1, s2 = _at_point(spec, k, t, family.system_pair)
        d[k] = trace_distance(s1, s2)
        if need_split:
            split = _at_point(spec, k, t, family.info_split)
            i_int[k], i_ext[k] = split.i_int, split.i_ext

    series = TraceSeries(times, d, spec.id)
    regime = bound_regime(spec.family, spec.case)
    bounds = family.bounds
    report = witness_verdict(series, bounds.get(regime))

    full = {"D": d, "sigma": info_flow_rate(series), "I": info_change(series)}
    for col, key in _BOUND_COLUMNS.items():
        full[col] = np.full(times.size, bounds.get(key))
    if need_split:
        full["iInt"], full["iExt"] = i_int, i_ext
    columns = {c: full[c] for c in spec.outputs}
    columns.setdefault("D", d)
    return RunRecord(spec, times, columns, bounds, regime, report, spec.provenance_hash())


def format_number(x: float) -> str:
    """Scientific notation with 12 digits after the point and a bare exponent, e.g. 7.500000000000e-1."""
    x = float(x)
    if x == 0:
        x = 0.0  # drop the sign of negative zero
    mantissa, exp = f"{x:.12e}".split("e")
    return f"{mantissa}e{int(exp)}"


def csv_text(record: RunRecord) -> str:
    cols = list(record.spec.outputs)
    lines = [",".join(["t", *cols])]
    for k, t in enumerate(record.times):
        lines.append(",".join(format_number(v) for v in [t, *(record.columns[c][k] for c in cols)]))
    return "\n".join(lines) + "\n"


def meta_document(record: RunRecord) -> dict:
    return {
        "spec": record.spec.to_dict(),
        "boundRegime": record.regime,
        "boundSet": record.bound_set.to_dict(),
        "witness": record.witness.to_dict(),
        "provenanceHash": record.provenance_hash,
        "artifactVersion": __version__,
    }


def write_outputs(record: RunRecord, out_dir) -> tuple[Path, Path]:
    out = Path(out_dir)
    csv_path = out / f"{record.spec.id}.csv"
    meta_path = out / f"{record.spec.id}.meta.json"
    try:
        out.mkdir(parents=True, exist_ok=True)
        with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(csv_text(record))
        with open(meta_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(json.dumps(meta_document(record), indent=2, sort_keys=True) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write outputs to {out}: {exc}") from exc
    return csv_path, meta_path
