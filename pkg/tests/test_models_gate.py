import numpy as np
import pytest

from envwitness.qmat import ContractError, evolve, partial_trace, trace_distance
from envwitness.witness import bound_tripartite
from envwitness.models import gate


def test_gate_unitary_basics():
    u = gate.gate_unitary()
    assert u.shape == (16, 16)
    assert np.abs(u @ u.conj().T - np.eye(16)).max() < 1e-14
    assert abs(u[0, 0] - 1) < 1e-15
    pair = gate.SWAP @ gate.CNOT
    assert abs(pair[0, 0] - 1) < 1e-15


def test_pair_gate_is_swap_after_cnot():
    # control 1: |10> -> CNOT -> |11> -> SWAP -> |11>; |11> -> |10> -> |01>
    pair = gate.SWAP @ gate.CNOT
    e = np.eye(4)
    assert np.abs(pair @ e[2] - e[3]).max() == 0
    assert np.abs(pair @ e[3] - e[1]).max() == 0
    assert np.abs(pair @ e[1] - e[2]).max() == 0


def test_generator_reaches_gate_at_one():
    assert np.abs(gate.gate_propagator(1.0) - gate.gate_unitary()).max() < 1e-12
    assert np.abs(gate.gate_propagator(0.0) - np.eye(16)).max() < 1e-14
    # a 3-cycle: the gate cubed is the identity
    assert np.abs(gate.gate_propagator(3.0) - np.eye(16)).max() < 1e-12


def _post_gate_distance(p):
    rho1, rho2 = gate.gate_scenario(p)
    u = gate.gate_unitary()
    return trace_distance(partial_trace(evolve(rho1, u), [0, 1]), partial_trace(evolve(rho2, u), [0, 1]))


def test_pure_case_symmetric_amplitudes():
    h = 2**-0.5
    p = gate.GateParams(h, h, h, h, gate.PURE)
    assert abs(_post_gate_distance(p) - 0.75) < 1e-12
    b = bound_tripartite(*(r.with_dims((4, 2, 2)) for r in gate.gate_scenario(p)))
    assert abs(b.b10 - 0.75) < 1e-12 and b.b10_valid and b.se_free


def test_classical_case_symmetric_amplitudes():
    h = 2**-0.5
    p = gate.GateParams(h, h, h, h, gate.CLASSICAL)
    assert abs(_post_gate_distance(p) - 0.5) < 1e-12
    b = bound_tripartite(*(r.with_dims((4, 2, 2)) for r in gate.gate_scenario(p)))
    assert abs(b.b10 - 0.5) < 1e-12


@pytest.mark.parametrize("kind", [gate.PURE, gate.CLASSICAL])
def test_complex_amplitudes(kind):
    a, b = 0.6 * np.exp(0.3j), 0.8 * np.exp(-1.1j)
    al, be = 0.28 * np.exp(2.0j), 0.96
    p = gate.GateParams(a, b, al, be, kind)
    assert abs(_post_gate_distance(p) - gate.post_gate_distance(p)) < 1e-12


def test_pure_case_depends_on_environment_phase():
    # only a real relative phase between alpha and beta gives |ab|^2 + |ab|
    ab = 0.28 * 0.96
    real = gate.GateParams(0.6, 0.8, 0.28, 0.96)
    assert abs(_post_gate_distance(real) - (ab**2 + ab)) < 1e-12
    flipped = gate.GateParams(0.6, 0.8, -0.28, 0.96)
    assert abs(_post_gate_distance(flipped) - (ab**2 + ab)) < 1e-12
    quarter = gate.GateParams(0.6, 0.8, 0.28j, 0.96)
    # c = |ab| (0.36 i - 0.64 i), so |c| = 0.28 |ab| and D = |ab|^2 + 0.28 |ab|
    assert abs(_post_gate_distance(quarter) - (ab**2 + 0.28 * ab)) < 1e-12


def test_initial_system_distance_is_zero():
    h = 2**-0.5
    rho1, rho2 = gate.gate_scenario(gate.GateParams(h, h, h, h))
    assert trace_distance(partial_trace(rho1, [0, 1]), partial_trace(rho2, [0, 1])) < 1e-15


def test_rejects_zero_or_unnormalised_amplitudes():
    with pytest.raises(ContractError):
        gate.GateParams(2**-0.5, 2**-0.5, 1.0, 0.0)
    with pytest.raises(ContractError):
        gate.GateParams(1.0, 1.0, 2**-0.5, 2**-0.5)
    with pytest.raises(ContractError):
        gate.GateParams(2**-0.5, 2**-0.5, 2**-0.5, 2**-0.5, kind="other")
