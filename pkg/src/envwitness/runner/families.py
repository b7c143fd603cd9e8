"""Adapters from a validated scenario to the model functions.

Each adapter returns a :class:`FamilyRun`: the t = 0 tripartite pair used for
the bounds, a function of t giving the two system states, and, where the total
dynamics is tracked, a function of t giving the internal/external split.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..qmat import DensityOperator, evolve, partial_trace, tensor, trace_distance
from ..witness import BoundSet, InfoSplit, bound_tripartite, internal_external
from ..models import ad, gate, jc, photon, xx
from .scenario import ScenarioSpec

__all__ = ["FamilyRun", "build_family", "bound_regime"]

SystemPair = Callable[[float], "tuple[DensityOperator, DensityOperator]"]


@dataclass
class FamilyRun:
    bounds: BoundSet
    system_pair: SystemPair
    info_split: Optional[Callable[[float], InfoSplit]] = None
    # full (A, B, C) states at time t, only for unitary-tracked families
    total_pair: Optional[Callable[[float], "tuple[DensityOperator, DensityOperator]"]] = None


def bound_regime(family: str, case: str) -> str:
    """Which BoundSet entry a scenario is judged against."""
    if family == "xx" and case != "werner_vs_product":
        return "b8"
    if family == "jc" and case == "entangled_vs_classical":
        return "b5"
    return "b10"


def _unitary_run(rho1: DensityOperator, rho2: DensityOperator, propagator, tri_dims) -> FamilyRun:
    """Shared path for families whose full state is evolved by a global unitary."""
    tri1, tri2 = rho1.with_dims(tri_dims), rho2.with_dims(tri_dims)

    def total(t):
        u = propagator(t)
        return evolve(tri1, u), evolve(tri2, u)

    def system(t):
        r1, r2 = total(t)
        return partial_trace(r1, [0]), partial_trace(r2, [0])

    def split(t):
        r1, r2 = total(t)
        return internal_external(r1, r2, 0)

    return FamilyRun(bound_tripartite(tri1, tri2), system, split, total)


def _unit(*amps):
    # validation admits amplitudes rounded to ~8 digits; the state checks do not
    norm = np.sqrt(sum(abs(a) ** 2 for a in amps))
    return tuple(a / norm for a in amps)


def _gate(spec: ScenarioSpec) -> FamilyRun:
    a, b = _unit(spec.param("a"), spec.param("b"))
    alpha, beta = _unit(spec.param("alpha"), spec.param("beta"))
    p = gate.GateParams(a, b, alpha, beta, kind=spec.case)
    rho1, rho2 = gate.gate_scenario(p)
    return _unitary_run(rho1, rho2, gate.gate_propagator, (4, 2, 2))


def _xx(spec: ScenarioSpec) -> FamilyRun:
    alpha = spec.param("alpha1") if spec.case == "werner_vs_werner" else spec.param("alpha")
    alpha2 = spec.param("alpha2") if spec.case == "werner_vs_werner" else 0.0
    f, g = _unit(spec.param("f"), spec.param("g"))
    l, m = _unit(spec.param("l"), spec.param("m"))
    p = xx.XXParams(
        J=spec.param("J"), B=spec.param("B"), f=f, g=g, l=l, m=m, alpha=alpha, alpha2=alpha2,
    )
    rho1, rho2 = xx.xx_scenario(spec.case, p)
    return _unitary_run(rho1, rho2, lambda t: xx.xx_propagator(p.J, p.B, t), (2, 2, 2))


_JC_PAIRS = {
    "entangled_vs_product": ("entangledFock", "productFock"),
    "entangled_vs_classical": ("entangledFock", "classicalFock"),
    "classical_vs_product": ("classicalFock", "productFock"),
}
# both atoms excited; excited is index 0 of each atom
_EE = DensityOperator(np.diag([1.0, 0, 0, 0]).astype(complex), (4,))


def _jc_run(env1: DensityOperator, env2: DensityOperator, system: SystemPair) -> FamilyRun:
    rho1, rho2 = tensor(_EE, env1), tensor(_EE, env2)
    # the total-state distance is conserved, so its t = 0 value holds at every t
    total = trace_distance(rho1, rho2)

    def split(t):
        s1, s2 = system(t)
        i_int = trace_distance(s1, s2)
        return InfoSplit(i_int, total - i_int, total)

    return FamilyRun(bound_tripartite(rho1, rho2), system, split)


def _jc(spec: ScenarioSpec) -> FamilyRun:
    g, delta, nmax = spec.param("g"), spec.param("delta"), spec.param("nmax")
    if spec.case == "coherent":
        beta = spec.param("beta")
        env1, env2 = jc.coherent_environment_matrices(beta)
        return _jc_run(env1, env2, lambda t: jc.jc_coherent_scenario(beta, g, delta, t, nmax))
    alpha, beta = _unit(spec.param("alpha"), spec.param("beta"))
    p = jc.JCParams(g=g, delta=delta, n=spec.param("n"), alpha=alpha, beta=beta, nmax=nmax)
    c1, c2 = _JC_PAIRS[spec.case]
    env1, env2 = jc.fock_environment_matrix(c1, p), jc.fock_environment_matrix(c2, p)
    return _jc_run(
        env1, env2, lambda t: (jc.jc_reduced_system(c1, p, t), jc.jc_reduced_system(c2, p, t))
    )


def _ad(spec: ScenarioSpec) -> FamilyRun:
    p = ad.ADParams(spec.param("gamma"), spec.param("lambda"))
    rho1, rho2 = ad.ad_initial_states()
    return FamilyRun(bound_tripartite(rho1, rho2), lambda t: ad.ad_reduced_states(t, p))


def _photon(spec: ScenarioSpec) -> FamilyRun:
    kw = {k: spec.param(k) for k in ("omega0", "C11", "dn")}
    psi1 = _unit(*(spec.param(f"{k}1") for k in "abcd"))
    psi2 = _unit(*(spec.param(f"{k}2") for k in "abcd"))
    p1 = photon.PhotonParams(K=spec.param("K"), psi=psi1, **kw)
    p2 = photon.PhotonParams(K=0.0, psi=psi2, **kw)
    # frequency environments are classical distributions: the second is the
    # product of the first one's marginals, so only the first's correlation counts
    d = photon.gaussian_correlation_distance(p1.K)
    terms = {"seCorr1": 0.0, "seCorr2": 0.0, "bcCorr1": d, "bcCorr2": 0.0,
             "envDistance": d, "margB": 0.0, "margC": 0.0}
    bounds = BoundSet(b5=d, b8=d, b9=d, b10=d, terms=terms, se_free=True, b10_valid=True)
    return FamilyRun(bounds, lambda t: (photon.photon_rho_S(t, p1), photon.photon_rho_S(t, p2)))


_BUILDERS = {"gate": _gate, "xx": _xx, "jc": _jc, "ad": _ad, "photon": _photon}


def build_family(spec: ScenarioSpec) -> FamilyRun:
    return _BUILDERS[spec.family](spec)
