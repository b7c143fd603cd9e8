"""Built-in scenario catalog: the reference scenarios plus the two gate models."""
from __future__ import annotations

import copy
import math

from .scenario import COLUMNS, ScenarioError, ScenarioSpec, spec_from_dict

__all__ = ["CATALOG", "DESCRIPTIONS", "catalog_ids", "catalog_document", "catalog_spec"]

_ALL = list(COLUMNS)
_NO_TOTAL = [c for c in COLUMNS if c not in ("iInt", "iExt")]
_H = 2**-0.5
_FIG2 = {"J": 1, "B": 1, "f": _H, "g": _H, "l": math.sqrt(3 / 7), "m": math.sqrt(4 / 7)}


def _doc(sid, family, case, params, t_end, points, outputs=_ALL):
    return {
        "id": sid,
        "family": family,
        "case": case,
        "params": params,
        "grid": {"tStart": 0.0, "tEnd": float(t_end), "points": points},
        "outputs": list(outputs),
        "tolerance": 1e-9,
    }


_ENTRIES = [
    (_doc("fig2a", "xx", "werner_vs_product", {**_FIG2, "alpha": 1.0}, 20, 400),
     "XX ring, Bell-state environment (alpha=1) vs maximally mixed product environment"),
    (_doc("fig2b", "xx", "werner_vs_product", {**_FIG2, "alpha": 0.6}, 20, 400),
     "XX ring, entangled Werner environment (alpha=0.6) vs maximally mixed product"),
    (_doc("fig2c", "xx", "werner_vs_product", {**_FIG2, "alpha": 0.2}, 20, 400),
     "XX ring, separable but discordant Werner environment (alpha=0.2) vs product"),
    (_doc("fig2d", "xx", "werner_vs_product", {**_FIG2, "alpha": 0.0}, 20, 400),
     "XX ring, uncorrelated environments (alpha=0); no growth expected"),
    (_doc("fig3a", "xx", "werner_vs_werner", {**_FIG2, "alpha1": 1.0, "alpha2": 0.6}, 20, 400),
     "XX ring, Werner(1) vs Werner(0.6): correlations in both environment states"),
    (_doc("fig3b", "xx", "werner_vs_classical", {**_FIG2, "alpha": 1.0}, 20, 400),
     "XX ring, Bell-state environment vs classically correlated environment"),
    (_doc("fig4a", "jc", "entangled_vs_product", {"g": 1, "delta": 0.1, "n": 1}, 30, 600),
     "Jaynes-Cummings pair, entangled Fock fields vs product fields, detuning 0.1, n=1"),
    (_doc("fig4b", "jc", "entangled_vs_classical", {"g": 1, "delta": 0.0, "n": 7}, 20, 2000),
     "Jaynes-Cummings pair, entangled vs classically correlated Fock fields, n=7; judged by b5"),
    (_doc("fig4c", "jc", "classical_vs_product", {"g": 1, "delta": 0.0, "n": 10}, 20, 400),
     "Jaynes-Cummings pair, classically correlated vs product Fock fields, n=10"),
    (_doc("fig4d", "jc", "classical_vs_product", {"g": 1, "delta": 0.0, "n": 50}, 20, 400),
     "Jaynes-Cummings pair, classically correlated vs product Fock fields, n=50"),
    (_doc("fig5a", "jc", "coherent", {"g": 1, "delta": 0.0, "beta": 10.0}, 50, 5000),
     "Jaynes-Cummings pair, classically correlated coherent fields, |beta|^2=100"),
    (_doc("fig5b", "jc", "coherent", {"g": 1, "delta": 0.0, "beta": math.sqrt(200)}, 50, 5000),
     "Jaynes-Cummings pair, classically correlated coherent fields, |beta|^2=200"),
    (_doc("fig6a", "ad", "entangled_vs_product", {"gamma": 1000.0, "lambda": 1.0}, 10, 1000, _NO_TOTAL),
     "Two damped atoms, entangled vs product reservoirs, strong coupling gamma/lambda=1000"),
    (_doc("fig6b", "ad", "entangled_vs_product", {"gamma": 0.1, "lambda": 1.0}, 10, 1000, _NO_TOTAL),
     "Two damped atoms, entangled vs product reservoirs, weak coupling gamma/lambda=0.1"),
    (_doc("fig7a", "photon", "correlated_vs_factorized", {"K": -1.0}, 6, 600, _NO_TOTAL),
     "Photon dephasing, anticorrelated frequencies (K=-1) vs uncorrelated, same Bell state"),
    (_doc("fig7b", "photon", "correlated_vs_factorized",
          {"K": -1.0, "a2": math.sqrt(16 / 18), "d2": math.sqrt(2 / 18)}, 6, 600, _NO_TOTAL),
     "Photon dephasing, K=-1, Bell state vs sqrt(16/18)|HH> + sqrt(2/18)|VV>"),
    (_doc("gate-pure", "gate", "pure_entangled", {}, 20, 401),
     "SWAP.CNOT gate model, entangled environment; exp(-iHt) reaches the gate at t=1"),
    (_doc("gate-classical", "gate", "classical_mixture", {}, 20, 401),
     "SWAP.CNOT gate model, classically correlated environment; gate at t=1"),
]

CATALOG = {doc["id"]: doc for doc, _ in _ENTRIES}
DESCRIPTIONS = {doc["id"]: text for doc, text in _ENTRIES}


def catalog_ids() -> list[str]:
    return list(CATALOG)


def catalog_document(sid: str) -> dict:
    if sid not in CATALOG:
        raise ScenarioError(f"unknown catalog scenario {sid!r}; known: {', '.join(CATALOG)}")
    return copy.deepcopy(CATALOG[sid])


def catalog_spec(sid: str) -> ScenarioSpec:
    return spec_from_dict(catalog_document(sid))
