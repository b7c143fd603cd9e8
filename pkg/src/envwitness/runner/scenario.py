"""Declarative scenario documents (JSON) and their validation."""
from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

__all__ = [
    "ScenarioError",
    "ScenarioSpec",
    "Grid",
    "COLUMNS",
    "FAMILY_CASES",
    "PARAM_SCHEMA",
    "load_scenario",
    "spec_from_dict",
]

COLUMNS = ("D", "sigma", "I", "bound5", "bound8", "bound9", "bound10", "iInt", "iExt")
NO_TOTAL_STATE = {"ad", "photon"}

FAMILY_CASES = {
    "gate": ("pure_entangled", "classical_mixture"),
    "xx": ("werner_vs_product", "werner_vs_werner", "werner_vs_classical"),
    "jc": ("entangled_vs_product", "entangled_vs_classical", "classical_vs_product", "coherent"),
    "ad": ("entangled_vs_product",),
    "photon": ("correlated_vs_factorized",),
}

R, C, I = "real", "complex", "int"
_XX_BASE = {"J": (R, 1.0), "B": (R, 1.0), "f": (C, 2**-0.5), "g": (C, 2**-0.5),
            "l": (C, (3 / 7) ** 0.5), "m": (C, (4 / 7) ** 0.5)}
_JC_FOCK = {"g": (R, 1.0), "delta": (R, 0.0), "n": (I, 1), "alpha": (C, 2**-0.5),
            "beta": (C, 2**-0.5), "nmax": (I, None)}
_PSI = {f"{k}{i}": (C, v) for i in (1, 2) for k, v in zip("abcd", (2**-0.5, 0.0, 0.0, 2**-0.5))}

# (family, case) -> name -> (kind, default); default None means optional with no value
PARAM_SCHEMA: dict[tuple[str, str], dict[str, tuple[str, Any]]] = {
    ("gate", "pure_entangled"): {k: (C, 2**-0.5) for k in ("a", "b", "alpha", "beta")},
    ("gate", "classical_mixture"): {k: (C, 2**-0.5) for k in ("a", "b", "alpha", "beta")},
    ("xx", "werner_vs_product"): {**_XX_BASE, "alpha": (R, 1.0)},
    ("xx", "werner_vs_werner"): {**_XX_BASE, "alpha1": (R, 1.0), "alpha2": (R, 0.6)},
    ("xx", "werner_vs_classical"): {**_XX_BASE, "alpha": (R, 1.0)},
    ("jc", "entangled_vs_product"): dict(_JC_FOCK),
    ("jc", "entangled_vs_classical"): dict(_JC_FOCK),
    ("jc", "classical_vs_product"): dict(_JC_FOCK),
    ("jc", "coherent"): {"g": (R, 1.0), "delta": (R, 0.0), "beta": (C, 10.0), "nmax": (I, None)},
    ("ad", "entangled_vs_product"): {"gamma": (R, 0.1), "lambda": (R, 1.0)},
    ("photon", "correlated_vs_factorized"): {
        "K": (R, -1.0), "omega0": (R, 1.0), "C11": (R, 1.0), "dn": (R, 1.0), **_PSI,
    },
}

_TOP_KEYS = {"id", "family", "case", "params", "grid", "outputs", "tolerance"}
_GRID_KEYS = {"tStart", "tEnd", "points"}


class ScenarioError(ValueError):
    """Scenario document failed to parse or validate."""


@dataclass(frozen=True)
class Grid:
    t_start: float
    t_end: float
    points: int

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.points)


@dataclass(frozen=True)
class ScenarioSpec:
    id: str
    family: str
    case: str
    params: dict
    grid: Grid
    outputs: tuple[str, ...]
    tolerance: float = 1e-9
    extra: dict = field(default_factory=dict, compare=False)

    def param(self, name: str):
        value = self.params.get(name)
        if value is None:
            return PARAM_SCHEMA[(self.family, self.case)][name][1]
        return value

    def to_dict(self) -> dict:
        """JSON-ready echo, accepted again by :func:`load_scenario`."""
        params = {}
        for k, v in self.params.items():
            if isinstance(v, complex):
                params[k] = [v.real, v.imag]
            else:
                params[k] = v
        return {
            "id": self.id,
            "family": self.family,
            "case": self.case,
            "params": params,
            "grid": {"tStart": self.grid.t_start, "tEnd": self.grid.t_end, "points": self.grid.points},
            "outputs": list(self.outputs),
            "tolerance": self.tolerance,
        }

    def provenance_hash(self) -> str:
        canon = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canon.encode("utf-8")).hexdigest()


def _fail(where: str, expected: str, actual: Any) -> ScenarioError:
    return ScenarioError(f"{where}: expected {expected}, got {actual!r}")


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def _coerce(name: str, kind: str, raw):
    where = f"params.{name}"
    if kind == I:
        if isinstance(raw, bool) or not isinstance(raw, (int, float)) or int(raw) != raw:
            raise _fail(where, "an integer", raw)
        return int(raw)
    if kind == R:
        if not _is_number(raw):
            raise _fail(where, "a real number", raw)
        return float(raw)
    if _is_number(raw):
        return float(raw)
    if isinstance(raw, list) and len(raw) == 2 and all(_is_number(x) for x in raw):
        return complex(float(raw[0]), float(raw[1]))
    raise _fail(where, "a number or an [re, im] pair", raw)


def _check_physics(family: str, case: str, p: dict) -> None:
    def norm2(*names):
        return sum(abs(p[n]) ** 2 for n in names)

    def require(cond, msg):
        if not cond:
            raise ScenarioError(f"params: {msg}")

    if family == "gate":
        require(abs(norm2("a", "b") - 1) < 1e-7, "|a|^2 + |b|^2 must equal 1")
        require(abs(norm2("alpha", "beta") - 1) < 1e-7, "|alpha|^2 + |beta|^2 must equal 1")
        require(all(abs(p[k]) > 0 for k in ("a", "b", "alpha", "beta")), "amplitudes must be non-zero")
    elif family == "xx":
        require(abs(norm2("f", "g") - 1) < 1e-7, "|f|^2 + |g|^2 must equal 1")
        require(abs(norm2("l", "m") - 1) < 1e-7, "|l|^2 + |m|^2 must equal 1")
        for k in ("alpha", "alpha1", "alpha2"):
            if k in p:
                require(0 <= p[k] <= 1, f"Werner weight {k} must lie in [0, 1]")
    elif family == "jc":
        require(p["g"] > 0, "coupling g must be positive")
        if case != "coherent":
            require(p["n"] >= 1, "photon number n must be at least 1")
            require(abs(norm2("alpha", "beta") - 1) < 1e-7, "|alpha|^2 + |beta|^2 must equal 1")
            if p.get("nmax") is not None:
                require(p["nmax"] >= p["n"] + 1, "nmax must be at least n + 1")
    elif family == "ad":
        require(p["gamma"] > 0, "gamma must be positive")
        require(p["lambda"] > 0, "lambda must be positive")
    elif family == "photon":
        require(-1 <= p["K"] <= 1, "K must lie in [-1, 1]")
        require(p["C11"] > 0, "C11 must be positive")
        for i in (1, 2):
            require(abs(norm2(*(f"{k}{i}" for k in "abcd")) - 1) < 1e-7, f"psi{i} must be normalised")


def spec_from_dict(doc: dict) -> ScenarioSpec:
    if not isinstance(doc, dict):
        raise _fail("document", "a JSON object", type(doc).__name__)
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise ScenarioError(f"unknown keys {sorted(unknown)}")
    missing = {"id", "family", "case", "grid", "outputs"} - set(doc)
    if missing:
        raise ScenarioError(f"missing keys {sorted(missing)}")

    sid = doc["id"]
    if not isinstance(sid, str) or not sid or "/" in sid or sid.startswith("."):
        raise _fail("id", "a non-empty file-name-safe string", sid)
    family = doc["family"]
    if family not in FAMILY_CASES:
        raise _fail("family", f"one of {sorted(FAMILY_CASES)}", family)
    case = doc["case"]
    if case not in FAMILY_CASES[family]:
        raise _fail("case", f"one of {list(FAMILY_CASES[family])} for family {family!r}", case)

    schema = PARAM_SCHEMA[(family, case)]
    raw_params = doc.get("params", {})
    if not isinstance(raw_params, dict):
        raise _fail("params", "an object", raw_params)
    unknown = set(raw_params) - set(schema)
    if unknown:
        raise ScenarioError(f"params: unknown keys {sorted(unknown)} for {family}/{case}")
    params = {k: _coerce(k, schema[k][0], v) for k, v in raw_params.items() if v is not None}
    full = {k: params.get(k, default) for k, (_, default) in schema.items()}
    _check_physics(family, case, full)

    grid = doc["grid"]
    if not isinstance(grid, dict):
        raise _fail("grid", "an object", grid)
    if set(grid) != _GRID_KEYS:
        raise _fail("grid", f"exactly the keys {sorted(_GRID_KEYS)}", sorted(grid))
    if not (_is_number(grid["tStart"]) and _is_number(grid["tEnd"])):
        raise _fail("grid.tStart/tEnd", "real numbers", (grid["tStart"], grid["tEnd"]))
    points = grid["points"]
    if isinstance(points, bool) or not isinstance(points, int) or points < 2:
        raise _fail("grid.points", "an integer >= 2", points)
    if not grid["tEnd"] > grid["tStart"]:
        raise _fail("grid.tEnd", "a value greater than tStart", grid["tEnd"])
    if grid["tStart"] < 0:
        raise _fail("grid.tStart", "a non-negative time", grid["tStart"])

    outputs = doc["outputs"]
    if not isinstance(outputs, list) or not outputs:
        raise _fail("outputs", "a non-empty list", outputs)
    for col in outputs:
        if col not in COLUMNS:
            raise _fail("outputs", f"columns from {list(COLUMNS)}", col)
        if col in ("iInt", "iExt") and family in NO_TOTAL_STATE:
            raise ScenarioError(f"outputs: column {col!r} unavailable for family {family!r}")
    if len(set(outputs)) != len(outputs):
        raise _fail("outputs", "distinct columns", outputs)

    tol = doc.get("tolerance", 1e-9)
    if not _is_number(tol) or tol <= 0:
        raise _fail("tolerance", "a positive real", tol)

    return ScenarioSpec(
        id=sid,
        family=family,
        case=case,
        params=params,
        grid=Grid(float(grid["tStart"]), float(grid["tEnd"]), points),
        outputs=tuple(outputs),
        tolerance=float(tol),
    )


def load_scenario(document: str) -> ScenarioSpec:
    """Parse and validate a JSON scenario document."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"invalid JSON: {exc}") from exc
    return spec_from_dict(doc)
