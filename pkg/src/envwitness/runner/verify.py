"""Oracle battery: every check pairs an implementation with an independent route."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np
from scipy.integrate import solve_ivp

from ..qmat import (
    DensityOperator,
    evolve,
    hermitian_eigensystem,
    hermitian_propagator,
    partial_trace,
    tensor,
    trace_distance,
)
from ..randomized import random_hermitian, random_tripartite_case
from ..witness import bound_tripartite, external_info_bound, internal_external
from ..models import gate, jc, photon, xx
from .catalog import catalog_spec
from .execute import meta_document, run_scenario
from .families import build_family
from .scenario import spec_from_dict

__all__ = ["CheckResult", "VerifyReport", "verify", "CHECKS"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    defect: float
    tolerance: float
    detail: str = ""
    informational: bool = False


@dataclass
class VerifyReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        checks = []
        for c in self.checks:
            entry = asdict(c)
            if not np.isfinite(entry["tolerance"]):
                entry["tolerance"] = None  # informational entries have no threshold
            checks.append(entry)
        return {"passed": self.passed, "checks": checks}

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "INFO" if c.informational else ("PASS" if c.passed else "FAIL")
            out.append(f"{status:4s} {c.name:32s} defect={c.defect:.3e} tol={c.tolerance:.1e}  {c.detail}")
        out.append("all checks passed" if self.passed else "some checks FAILED")
        return out


def _result(name, defect, tol, detail="") -> CheckResult:
    defect = float(defect)
    return CheckResult(name, bool(defect <= tol), defect, tol, detail)


def check_eigensolvers(rng) -> CheckResult:
    worst = 0.0
    for d in (2, 4, 8, 16):
        h = random_hermitian(rng, d)
        a = hermitian_eigensystem(h, "lapack").eigenvalues
        b = hermitian_eigensystem(h, "jacobi")
        worst = max(worst, np.abs(a - b.eigenvalues).max(), np.abs(b.reconstruct() - h).max())
    return _result("eigensolver_jacobi_vs_lapack", worst, 1e-9)


def check_xx_propagator(rng, propagator: Callable | None = None, n_times: int = 50) -> CheckResult:
    """Closed-form XX propagator against the spectral exponential of the Hamiltonian."""
    propagator = propagator or xx.xx_propagator
    worst = 0.0
    for J, B in ((1.0, 1.0), (0.7, -0.4)):
        h = xx.xx_hamiltonian(J, B)
        for t in rng.uniform(0, 20, n_times):
            worst = max(worst, np.abs(propagator(J, B, t) - hermitian_propagator(h, t)).max())
    return _result("xx_propagator_vs_exponential", worst, 1e-9, f"{n_times} random t in [0, 20]")


def check_xx_coefficients(rng, propagator: Callable | None = None) -> CheckResult:
    propagator = propagator or xx.xx_propagator
    one = [int(b, 2) for b in ("001", "010", "100")]
    two = [int(b, 2) for b in ("110", "101", "011")]
    worst = 0.0
    for t in rng.uniform(0, 20, 20):
        u = propagator(1.0, 1.0, t)
        for idx, fn in ((one, xx.one_excitation_amplitudes), (two, xx.two_excitation_amplitudes)):
            amps = rng.normal(size=3) + 1j * rng.normal(size=3)
            psi = np.zeros(8, complex)
            psi[idx] = amps
            worst = max(worst, np.abs((u @ psi)[idx] - fn(1.0, 1.0, t, amps)).max())
    return _result("xx_excitation_coefficients", worst, 1e-10)


def check_jc_unitarity(rng) -> CheckResult:
    worst = 0.0
    for N in range(0, 60):
        g, delta, t = rng.uniform(0.2, 2), rng.uniform(-1, 1), rng.uniform(0, 30)
        blk = jc.manifold_block(N, g, delta, t)
        worst = max(worst, np.abs(blk.conj().T @ blk - np.eye(2)).max())
    amps = jc.excited_pair(jc.coherent_amplitudes(3.0, jc.coherent_cutoff(3.0) + 1))
    out = jc.jc_apply_propagator(amps, 1.0, 0.2, 7.3)
    worst = max(worst, abs(np.sum(np.abs(out) ** 2) - 1))
    return _result("jc_manifold_unitarity", worst, 1e-12)


def jc_ode_block(N: int, g: float, delta: float, t: float) -> np.ndarray:
    """Integrate i d/dt psi = H_I(s) psi on (|e, N-1>, |g, N>) with
    H_I(s) = g sqrt(N) [[0, e^{i delta s}], [e^{-i delta s}, 0]]."""
    k = g * np.sqrt(N)

    def rhs(s, y):
        psi = y[:2] + 1j * y[2:]
        h = k * np.array([[0, np.exp(1j * delta * s)], [np.exp(-1j * delta * s), 0]])
        dpsi = -1j * h @ psi
        return np.concatenate([dpsi.real, dpsi.imag])

    cols = []
    for e in np.eye(2):
        sol = solve_ivp(rhs, (0, t), np.concatenate([e, 0 * e]), method="DOP853", rtol=1e-12, atol=1e-13)
        y = sol.y[:, -1]
        cols.append(y[:2] + 1j * y[2:])
    return np.array(cols).T


def check_jc_ode(rng) -> CheckResult:
    worst = 0.0
    for N in (1, 2, 7, 50):
        g, delta, t = rng.uniform(0.5, 1.5), rng.uniform(-0.5, 0.5), rng.uniform(0, 5)
        worst = max(worst, np.abs(jc.manifold_block(N, g, delta, t) - jc_ode_block(N, g, delta, t)).max())
    return _result("jc_block_vs_ode", worst, 1e-8, "DOP853 rtol 1e-12")


def post_gate_states(p: gate.GateParams):
    rho1, rho2 = gate.gate_scenario(p)
    u = gate.gate_unitary()
    r1, r2 = evolve(rho1, u), evolve(rho2, u)
    return r1, r2, rho1


def gate_sweep_defect(kind: str, values=np.linspace(0.1, 0.9, 9)) -> tuple[float, float]:
    """Worst |D - closed form| and |D - environment correlation distance| over an (|alpha|, |a|) grid."""
    closed_err = env_err = 0.0
    for x in values:
        for y in values:
            p = gate.GateParams(a=y, b=np.sqrt(1 - y * y), alpha=x, beta=np.sqrt(1 - x * x), kind=kind)
            r1, r2, rho1 = post_gate_states(p)
            d = trace_distance(partial_trace(r1, [0, 1]), partial_trace(r2, [0, 1]))
            env = partial_trace(rho1, [2, 3])
            env_corr = trace_distance(env, tensor(partial_trace(env, [0]), partial_trace(env, [1])))
            closed_err = max(closed_err, abs(d - gate.post_gate_distance(p)))
            env_err = max(env_err, abs(d - env_corr))
    return closed_err, env_err


def check_gate() -> CheckResult:
    worst = max(*gate_sweep_defect(gate.PURE), *gate_sweep_defect(gate.CLASSICAL))
    return _result("gate_closed_forms", worst, 1e-12, "9x9 amplitude sweep, both kinds")


def check_werner(rng) -> CheckResult:
    worst = 0.0
    for a1, a2 in rng.uniform(0, 1, (10, 2)):
        d = trace_distance(DensityOperator(xx.werner(a1)), DensityOperator(xx.werner(a2)))
        worst = max(worst, abs(d - 0.75 * abs(a1 - a2)))
    return _result("werner_distance", worst, 1e-12)


_PHOTON_POINTS = ((0.3, 0.0), (0.0, 0.7), (0.5, 0.5), (0.4, -0.6), (1.1, 0.9))


def check_photon_quadrature() -> CheckResult:
    p = photon.PhotonParams(K=-0.95, C11=1.0, omega0=1.0)
    worst = max(
        abs(photon.photon_char_fn(a, b, p) - photon.photon_char_fn_quadrature(a, b, p))
        for a, b in _PHOTON_POINTS
    )
    return _result("photon_char_fn_vs_quadrature", worst, 1e-6, "K=-0.95, +-8 sigma")


def check_photon_printed() -> CheckResult:
    """Report how far the alternative cross term K tau1^2 tau2^2 is from the quadrature oracle."""
    p = photon.PhotonParams(K=-0.95, C11=1.0, omega0=1.0)
    gaps = []
    for a, b in _PHOTON_POINTS:
        oracle = photon.photon_char_fn_quadrature(a, b, p)
        gaps.append(abs(abs(photon.photon_char_fn_printed(a, b, p)) - abs(oracle)))
    big = photon.photon_char_fn_printed(3.0, 3.0, p)
    detail = (f"|G| mismatch of the K tau1^2 tau2^2 variant up to {max(gaps):.3g}; "
              f"its modulus at tau=(3,3) is {abs(big):.3g} > 1; the 2K tau1 tau2 form is used")
    return CheckResult("photon_printed_cross_term", True, float(max(gaps)), float("inf"), detail, True)


def check_bound_chain(rng, n: int = 300) -> CheckResult:
    worst = -np.inf
    for k in range(n):
        regime = ("general", "se_free", "reference")[k % 3]
        c = random_tripartite_case(rng, regime=regime)
        b = bound_tripartite(c.rho1, c.rho2)
        d0 = trace_distance(partial_trace(c.rho1, [0]), partial_trace(c.rho2, [0]))
        r1, r2 = evolve(c.rho1, c.unitary), evolve(c.rho2, c.unitary)
        growth = trace_distance(partial_trace(r1, [0]), partial_trace(r2, [0])) - d0
        worst = max(worst, growth - b.b8)
        if b.se_free:
            worst = max(worst, growth - b.b9)
        if b.b10_valid:
            worst = max(worst, growth - b.b10)
    return _result("bound_chain_randomized", max(worst, 0.0), 1e-9, f"{n} random scenarios")


def _unitary_catalog_sweep(ids=("gate-pure", "gate-classical", "fig2a", "fig3b"), stride: int = 1):
    """Yield (id, InfoSplit, external-information bound) over catalog grids with tracked total states."""
    for sid in ids:
        spec = catalog_spec(sid)
        fam = build_family(spec)
        for t in spec.grid.times()[::stride]:
            r1, r2 = fam.total_pair(t)
            yield sid, internal_external(r1, r2, 0), external_info_bound(r1, r2)


def check_conservation_and_external(stride: int = 4) -> tuple[CheckResult, CheckResult]:
    totals: dict[str, list[float]] = {}
    violation = 0.0
    for sid, split, bound in _unitary_catalog_sweep(stride=stride):
        totals.setdefault(sid, []).append(split.i_int + split.i_ext)
        violation = max(violation, split.i_ext - bound)
    drift = max(max(v) - min(v) for v in totals.values())
    return (
        _result("info_conservation", drift, 1e-10, "gate and XX catalogs"),
        _result("external_info_bound", violation, 1e-9, "gate and XX catalogs"),
    )


def check_meta_roundtrip() -> CheckResult:
    spec = catalog_spec("fig2a")
    spec = spec_from_dict({**spec.to_dict(), "grid": {"tStart": 0.0, "tEnd": 2.0, "points": 5}})
    meta = meta_document(run_scenario(spec))
    back = spec_from_dict(meta["spec"])
    ok = back == spec and back.provenance_hash() == meta["provenanceHash"]
    return _result("meta_roundtrip", 0.0 if ok else 1.0, 0.0)


CHECKS = (
    "eigensolver_jacobi_vs_lapack",
    "xx_propagator_vs_exponential",
    "xx_excitation_coefficients",
    "jc_manifold_unitarity",
    "jc_block_vs_ode",
    "gate_closed_forms",
    "werner_distance",
    "photon_char_fn_vs_quadrature",
    "photon_printed_cross_term",
    "bound_chain_randomized",
    "info_conservation",
    "external_info_bound",
    "meta_roundtrip",
)


def verify(seed: int = 20240601, xx_propagator: Callable | None = None, n_random: int = 300) -> VerifyReport:
    """Run every check; ``xx_propagator`` may be replaced to test fault detection."""
    rng = np.random.default_rng(seed)
    report = VerifyReport()
    report.checks.append(check_eigensolvers(rng))
    report.checks.append(check_xx_propagator(rng, xx_propagator))
    report.checks.append(check_xx_coefficients(rng, xx_propagator))
    report.checks.append(check_jc_unitarity(rng))
    report.checks.append(check_jc_ode(rng))
    report.checks.append(check_gate())
    report.checks.append(check_werner(rng))
    report.checks.append(check_photon_quadrature())
    report.checks.append(check_photon_printed())
    report.checks.append(check_bound_chain(rng, n_random))
    report.checks.extend(check_conservation_and_external())
    report.checks.append(check_meta_roundtrip())
    return report
