import numpy as np
import pytest
from scipy.stats import poisson

from envwitness.qmat import ContractError, partial_trace, projector, trace_distance, validate_density
from envwitness.models import jc
from envwitness.runner.verify import jc_ode_block


def test_ground_vacuum_invariant():
    c, d = jc.jc_coefficients(0, 0.8, 0.3, 4.2)
    assert abs(c - 1) < 1e-15
    amps = np.zeros((2, 4), complex)
    amps[1, 0] = 1
    assert np.abs(jc.jc_apply_propagator(amps, 0.8, 0.3, 4.2) - amps).max() < 1e-15


def test_resonant_rabi_oscillation():
    g = 0.9
    for t in np.linspace(0, 10, 23):
        out = jc.jc_apply_propagator(jc.excited_pair(jc.fock(0, 3)), g, 0.0, t)
        assert abs(abs(out[0, 0]) ** 2 - np.cos(g * t) ** 2) < 1e-12


def test_zero_frequency_limit():
    # omega -> 0 only when delta = 0 and n = 0; d must stay finite
    c, d = jc.jc_coefficients([0, 1], 1.0, 0.0, 2.0)
    assert np.all(np.isfinite(c)) and np.all(np.isfinite(d))


@pytest.mark.parametrize("N", [1, 2, 5, 20, 200])
def test_manifold_blocks_unitary(rng, N):
    for _ in range(10):
        blk = jc.manifold_block(N, rng.uniform(0.1, 2), rng.uniform(-1, 1), rng.uniform(0, 40))
        assert np.abs(blk.conj().T @ blk - np.eye(2)).max() < 1e-12


@pytest.mark.parametrize("N,delta", [(1, 0.0), (1, 0.1), (3, -0.4), (10, 0.7)])
def test_block_matches_ode_oracle(N, delta):
    assert np.abs(jc.manifold_block(N, 1.0, delta, 3.7) - jc_ode_block(N, 1.0, delta, 3.7)).max() < 1e-8


def test_recurrence_matches_dense_ode_propagator(rng):
    # dense propagator on (|e, n>, |g, n>) assembled from ODE-integrated manifold blocks
    F, g, delta, t = 6, 0.7, 0.25, 2.9
    dense = np.zeros((2 * F, 2 * F), complex)
    dense[F, F] = 1.0  # |g, 0> untouched
    for N in range(1, F):
        idx = [N - 1, F + N]  # |e, N-1>, |g, N>
        dense[np.ix_(idx, idx)] = jc_ode_block(N, g, delta, t)
    amps = rng.normal(size=(2, F)) + 1j * rng.normal(size=(2, F))
    amps[0, -1] = 0
    amps /= np.linalg.norm(amps)
    out = jc.jc_apply_propagator(amps, g, delta, t)
    ref = (dense @ amps.reshape(-1)).reshape(2, F)
    assert np.abs(out - ref).max() < 1e-8


def test_norm_preserved(rng):
    amps = jc.excited_pair(jc.coherent_amplitudes(4.0, jc.coherent_cutoff(4.0) + 1))
    for t in rng.uniform(0, 30, 5):
        out = jc.jc_apply_propagator(amps, 1.0, 0.3, t)
        assert abs(np.sum(np.abs(out) ** 2) - 1) < 1e-12


def test_truncation_and_normalisation_errors():
    amps = jc.excited_pair(jc.fock(2, 3))
    with pytest.raises(jc.TruncationError):
        jc.jc_apply_propagator(amps, 1.0, 0.0, 1.0)
    with pytest.raises(ContractError):
        jc.jc_apply_propagator(2 * jc.excited_pair(jc.fock(0, 3)), 1.0, 0.0, 1.0)
    with pytest.raises(jc.TruncationError):
        jc.coherent_amplitudes(5.0, 20)
    with pytest.raises(ContractError):
        jc.JCParams(n=3, nmax=3)


def test_coherent_cutoff_tail_below_threshold():
    for beta in (1.0, 10.0, np.sqrt(200)):
        F = jc.coherent_cutoff(beta)
        assert poisson.sf(F - 1, abs(beta) ** 2) < 1e-12
        amps = jc.coherent_amplitudes(beta, F + 1)
        assert abs(np.linalg.norm(amps) - 1) < 1e-14


def test_coherent_amplitude_phase():
    beta = 1.5 * np.exp(0.4j)
    amps = jc.coherent_amplitudes(beta, 40)
    n = np.arange(40)
    from math import factorial

    ref = np.exp(-abs(beta) ** 2 / 2) * np.array([beta**k / np.sqrt(float(factorial(k))) for k in n])
    assert np.abs(amps - ref).max() < 1e-12


@pytest.mark.parametrize("case", jc.FOCK_CASES)
def test_reduced_system_initial_state(case):
    rho = jc.jc_reduced_system(case, jc.JCParams(n=3), 0.0)
    assert np.abs(rho.mat - np.diag([1.0, 0, 0, 0])).max() < 1e-15


def test_environment_distance_entangled_vs_product():
    p = jc.JCParams(n=1)
    e1 = jc.fock_environment_matrix("entangledFock", p)
    e2 = jc.fock_environment_matrix("productFock", p)
    assert abs(trace_distance(e1, e2) - 0.75) < 1e-12
    for k in (0, 1):
        assert np.abs(partial_trace(e1, [k]).mat - partial_trace(e2, [k]).mat).max() < 1e-15


def test_compact_environment_matches_full_fock_space():
    # oracle: environment states built directly in the truncated two-mode Fock space
    p = jc.JCParams(n=2)
    F = 3

    def full(case):
        rho = np.zeros((F * F, F * F), complex)
        for prob, terms in jc.fock_environment(case, p):
            psi = np.zeros(F * F, complex)
            for w, m1, m2 in terms:
                psi[m1 * F + m2] += w
            rho += prob * projector(psi)
        return rho

    for c1 in jc.FOCK_CASES:
        for c2 in jc.FOCK_CASES:
            compact = trace_distance(jc.fock_environment_matrix(c1, p), jc.fock_environment_matrix(c2, p))
            assert abs(compact - trace_distance(full(c1), full(c2))) < 1e-12


def test_entangled_vs_classical_reaches_one():
    p = jc.JCParams(n=7)
    t = np.linspace(0, 20, 2000)
    d = [trace_distance(jc.jc_reduced_system("entangledFock", p, tk), jc.jc_reduced_system("classicalFock", p, tk)) for tk in t]
    assert abs(max(d) - 1) < 1e-3


def test_reduced_states_valid_on_grid():
    p = jc.JCParams(n=2, delta=0.3)
    for case in jc.FOCK_CASES:
        for t in np.linspace(0, 20, 200):
            assert validate_density(jc.jc_reduced_system(case, p, t), 1e-8).passed


def test_coherent_scenario_initial():
    r1, r2 = jc.jc_coherent_scenario(3.0, 1.0, 0.0, 0.0)
    assert trace_distance(r1, r2) < 1e-15
    assert np.abs(r1.mat - np.diag([1.0, 0, 0, 0])).max() < 1e-12


def test_gram_environment_distance():
    for beta in (0.3, 1.0, 3.0):
        e1, e2 = jc.coherent_environment_matrices(beta)
        d = trace_distance(e1, e2)
        assert d <= 0.5 + 1e-12
        if beta >= 3:
            assert abs(d - 0.5) < 1e-12


def test_gram_environment_matches_truncated_fock():
    beta, F = 0.8, 14
    plus, minus = jc.coherent_amplitudes(beta, F), jc.coherent_amplitudes(-beta, F)
    pp, mm = np.kron(plus, minus), np.kron(minus, plus)
    rho1 = 0.5 * (projector(pp) + projector(mm))
    marg = 0.5 * (projector(plus) + projector(minus))
    rho2 = np.kron(marg, marg)
    e1, e2 = jc.coherent_environment_matrices(beta)
    assert abs(trace_distance(rho1, rho2) - trace_distance(e1, e2)) < 1e-10


def test_coherent_reduced_states_valid():
    for t in np.linspace(0, 20, 50):
        for r in jc.jc_coherent_scenario(5.0, 1.0, 0.0, t):
            assert validate_density(r, 1e-8).passed
