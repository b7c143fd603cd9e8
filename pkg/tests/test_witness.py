import numpy as np
import pytest

from envwitness.qmat import ContractError, DensityOperator, DimensionError, partial_trace, projector, tensor, trace_distance
from envwitness.randomized import random_density, random_tripartite_case
from envwitness.witness import (
    TraceSeries,
    bound_bipartite,
    bound_tripartite,
    build_reference_state,
    correlation_distance,
    external_info_bound,
    info_change,
    info_flow_rate,
    internal_external,
    product_of_marginals,
    witness_verdict,
)
from envwitness.models import jc, xx

PHI = projector([2**-0.5, 2**-0.5])


def werner_pair(alpha):
    p = xx.XXParams(alpha=alpha)
    return xx.xx_scenario("werner_vs_product", p)


def test_trace_series_validation():
    with pytest.raises(ContractError):
        TraceSeries([0, 1], [0.1], "x")
    with pytest.raises(ContractError):
        TraceSeries([0, 0], [0.1, 0.2], "x")
    with pytest.raises(ContractError):
        TraceSeries([0, 1], [0.1, 1.5], "x")
    assert len(TraceSeries([0, 1], [0.0, 1.0 + 1e-13], "x")) == 2


def test_info_change():
    s = TraceSeries([0, 1, 2], [0.3, 0.3, 0.3], "const")
    assert np.abs(info_change(s)).max() == 0
    s = TraceSeries([0, 1], [0.0, 0.75], "jump")
    assert np.abs(info_change(s) - [0, 0.75]).max() == 0


def test_info_flow_rate():
    t = np.linspace(0, 5, 21)
    assert np.abs(info_flow_rate(TraceSeries(t, np.full(21, 0.2), "c"))).max() == 0
    ramp = info_flow_rate(TraceSeries(t, 0.1 * t, "ramp"))
    assert np.abs(ramp - 0.1).max() < 1e-12
    with pytest.raises(ContractError):
        info_flow_rate(TraceSeries([0.0], [0.1], "single"))


def test_product_of_marginals_keeps_factor_order(rng):
    ra, rb, rc = random_density(rng, 2), random_density(rng, 3), random_density(rng, 2)
    rho = tensor(ra, rb, rc)
    out = product_of_marginals(rho, [[1], [0, 2]])
    assert out.dims == (2, 3, 2)
    assert np.abs(out.mat - rho.mat).max() < 1e-13
    with pytest.raises(DimensionError):
        product_of_marginals(rho, [[0], [1]])


def test_bound_bipartite_product_equal_env(rng):
    env = random_density(rng, 4, dims=(2, 2))
    rho1 = tensor(random_density(rng, 2), env)
    rho2 = tensor(random_density(rng, 2), env)
    assert bound_bipartite(rho1, rho2) < 1e-12


def test_bound_bipartite_jc_entangled_vs_classical():
    p = jc.JCParams(n=7)
    ee = DensityOperator(np.diag([1.0, 0, 0, 0]), (4,))
    rho1 = tensor(ee, jc.fock_environment_matrix("entangledFock", p))
    rho3 = tensor(ee, jc.fock_environment_matrix("classicalFock", p))
    assert abs(bound_bipartite(rho1, rho3) - 1) < 1e-12


def test_bound_bipartite_against_own_marginal_product(rng):
    rho1 = random_density(rng, 8, dims=(2, 4))
    rho2 = tensor(partial_trace(rho1, [0]), partial_trace(rho1, [1]))
    direct = trace_distance(rho1, rho2)
    assert abs(bound_bipartite(rho1, rho2) - direct) < 1e-12


def test_bound_tripartite_product_states():
    rho = tensor(*(DensityOperator(projector([1, 0])) for _ in range(3)))
    b = bound_tripartite(rho, rho)
    assert max(b.b5, b.b8, b.b9, b.b10) < 1e-15
    assert b.se_free and b.b10_valid


@pytest.mark.parametrize("alpha", [0.0, 0.2, 0.6, 1.0])
def test_bound_tripartite_werner_b10(alpha):
    b = bound_tripartite(*werner_pair(alpha))
    # brute-force eigenvalues of W(alpha) - I/4: alpha * (3/4, -1/4, -1/4, -1/4)
    eig = np.linalg.eigvalsh(xx.werner(alpha) - np.eye(4) / 4)
    assert abs(b.b10 - 0.5 * np.abs(eig).sum()) < 1e-12
    assert abs(b.b10 - 0.75 * alpha) < 1e-12
    assert b.b10_valid and b.se_free
    assert abs(b.b9 - b.b10) < 1e-12
    assert b.b9 <= b.b8 + 1e-12


@pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0])
def test_bound_tripartite_werner_vs_classical(alpha):
    rho1, rho2 = xx.xx_scenario("werner_vs_classical", xx.XXParams(alpha=alpha))
    b = bound_tripartite(rho1, rho2)
    assert abs(b.terms["envDistance"] - (1 + alpha) / 2) < 1e-12
    assert not b.b10_valid


def test_bound_tripartite_needs_three_factors(rng):
    rho = random_density(rng, 4, dims=(2, 2))
    with pytest.raises(DimensionError):
        bound_tripartite(rho, rho)


def test_internal_external_examples(rng):
    rho = random_density(rng, 8, dims=(2, 2, 2))
    s = internal_external(rho, rho)
    assert max(abs(s.i_int), abs(s.i_ext), abs(s.total)) < 1e-15
    env = random_density(rng, 4, dims=(2, 2))
    r1 = tensor(random_density(rng, 2), env)
    r2 = tensor(random_density(rng, 2), env)
    s = internal_external(r1, r2)
    assert abs(s.i_ext) < 1e-12
    assert abs(s.i_int + s.i_ext - s.total) < 1e-15


def test_external_info_bound_product():
    r1 = tensor(DensityOperator(projector([1, 0])), DensityOperator(np.eye(4) / 4, (2, 2)))
    r2 = tensor(DensityOperator(projector([0, 1])), DensityOperator(np.eye(4) / 4, (2, 2)))
    assert external_info_bound(r1, r2) < 1e-15
    assert abs(internal_external(r1, r2).i_ext) < 1e-15


def test_reference_state_identity_on_product(rng):
    rho = tensor(random_density(rng, 2), random_density(rng, 2), random_density(rng, 2))
    out = build_reference_state(rho, lambda x: x)
    assert np.abs(out.mat - rho.mat).max() < 1e-14


def test_reference_state_on_werner_scenario():
    rho1, rho2 = werner_pair(1.0)
    ident = build_reference_state(rho1, lambda x: x)
    expect = np.kron(np.kron(projector([2**-0.5, 2**-0.5]), np.eye(2) / 2), np.eye(2) / 2)
    assert np.abs(ident.mat - expect).max() < 1e-14
    phi2 = projector([np.sqrt(3 / 7), np.sqrt(4 / 7)])
    replaced = build_reference_state(rho1, lambda x: np.trace(x) * phi2)
    assert np.abs(replaced.mat - rho2.mat).max() < 1e-14
    assert bound_tripartite(rho1, replaced).b10_valid


def test_reference_state_rejects_non_trace_preserving():
    rho1, _ = werner_pair(1.0)
    with pytest.raises(ContractError):
        build_reference_state(rho1, lambda x: 2 * x)


def test_reference_regime_meets_b10_precondition(rng):
    for _ in range(20):
        case = random_tripartite_case(rng, regime="reference")
        assert bound_tripartite(case.rho1, case.rho2).b10_valid


def test_witness_verdict():
    const = TraceSeries([0, 1, 2], [0.4, 0.4, 0.4], "c")
    r = witness_verdict(const, 0.3)
    assert not r.verdict and r.max_growth == 0
    grow = TraceSeries([0, 1, 2, 3], [0.1, 0.5, 0.3, 0.2], "g")
    r = witness_verdict(grow, 0.75)
    assert r.verdict and abs(r.max_growth - 0.4) < 1e-15 and r.argmax_time == 1
    assert abs(r.tightness_gap - 0.35) < 1e-15
    shifted = TraceSeries(np.array([0, 1, 2, 3]) + 7.5, grow.values, "g")
    assert witness_verdict(shifted, 0.75).max_growth == r.max_growth
    with pytest.raises(ContractError):
        witness_verdict(grow, -1)
    with pytest.raises(ContractError):
        witness_verdict(grow, 1, epsilon=0)


def test_witness_epsilon_threshold():
    tiny = TraceSeries([0, 1], [0.2, 0.2 + 5e-7], "tiny")
    assert not witness_verdict(tiny, 1.0).verdict
    assert witness_verdict(tiny, 1.0, epsilon=1e-7).verdict


def test_correlation_distance_of_product_is_zero(rng):
    rho = tensor(random_density(rng, 2), random_density(rng, 3))
    assert correlation_distance(rho, [[0], [1]]) < 1e-12


def test_count_local_maxima():
    from envwitness.witness import count_local_maxima

    assert count_local_maxima([0, 1, 0, 2, 0]) == 2
    assert count_local_maxima([0, 1, 1, 1, 0]) == 1  # plateau counts once
    assert count_local_maxima([0, 1, 1 + 1e-14, 1, 0]) == 1
    assert count_local_maxima(np.linspace(0, 1, 10)) == 0
    assert count_local_maxima([]) == 0
