"""Two environment qubits and a SWAP.CNOT gate: system growth equals the
initial environment correlations.

    python3 demos/gate_witness.py
"""
import numpy as np

from envwitness.models import gate
from envwitness.qmat import evolve, partial_trace, trace_distance
from envwitness.witness import bound_tripartite

for kind in (gate.PURE, gate.CLASSICAL):
    print(kind)
    for alpha in (0.2, 0.5, 2**-0.5):
        p = gate.GateParams(a=0.6, b=0.8, alpha=alpha, beta=np.sqrt(1 - alpha**2), kind=kind)
        rho1, rho2 = gate.gate_scenario(p)
        u = gate.gate_unitary()
        before = trace_distance(partial_trace(rho1, [0, 1]), partial_trace(rho2, [0, 1]))
        after = trace_distance(partial_trace(evolve(rho1, u), [0, 1]), partial_trace(evolve(rho2, u), [0, 1]))
        b10 = bound_tripartite(rho1.with_dims((4, 2, 2)), rho2.with_dims((4, 2, 2))).b10
        print(f"  |alpha|={alpha:.3f}  D before={before:.6f}  after={after:.6f}  env correlations={b10:.6f}")
