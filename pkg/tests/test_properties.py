import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from envwitness.qmat import (
    DensityOperator,
    evolve,
    partial_trace,
    tensor,
    trace_distance,
    validate_density,
)
from envwitness.randomized import random_density, random_tripartite_case, random_unitary
from envwitness.runner.catalog import CATALOG, catalog_document
from envwitness.runner.families import build_family
from envwitness.runner.scenario import spec_from_dict
from envwitness.witness import bound_tripartite, product_of_marginals

seeds = st.integers(min_value=0, max_value=2**32 - 1)
dims = st.sampled_from([2, 3, 4, 8])
FAST = settings(max_examples=60, deadline=None)


@FAST
@given(seeds, dims)
def test_metric_axioms(seed, d):
    rng = np.random.default_rng(seed)
    r, s, u = (random_density(rng, d) for _ in range(3))
    drs = trace_distance(r, s)
    assert 0 <= drs <= 1
    assert trace_distance(r, r) < 1e-12
    assert abs(drs - trace_distance(s, r)) < 1e-12
    assert drs <= trace_distance(r, u) + trace_distance(u, s) + 1e-12


@FAST
@given(seeds, st.sampled_from([(2, 2), (2, 3), (3, 2), (2, 4)]))
def test_tensor_subadditivity(seed, ds):
    rng = np.random.default_rng(seed)
    r1, s1 = random_density(rng, ds[0]), random_density(rng, ds[0])
    r2, s2 = random_density(rng, ds[1]), random_density(rng, ds[1])
    lhs = trace_distance(tensor(r1, r2), tensor(s1, s2))
    assert lhs <= trace_distance(r1, s1) + trace_distance(r2, s2) + 1e-12


@FAST
@given(seeds, st.sampled_from([(2, 2), (2, 2, 2), (3, 2), (2, 3, 2)]), st.data())
def test_partial_trace_contracts(seed, layout, data):
    rng = np.random.default_rng(seed)
    d = int(np.prod(layout))
    r, s = random_density(rng, d, dims=layout), random_density(rng, d, dims=layout)
    keep = data.draw(st.lists(st.sampled_from(range(len(layout))), min_size=1, unique=True).map(sorted))
    assert trace_distance(partial_trace(r, keep), partial_trace(s, keep)) <= trace_distance(r, s) + 1e-12


@FAST
@given(seeds, dims)
def test_unitary_invariance(seed, d):
    rng = np.random.default_rng(seed)
    r, s = random_density(rng, d), random_density(rng, d)
    u = random_unitary(rng, d)
    assert abs(trace_distance(evolve(r, u), evolve(s, u)) - trace_distance(r, s)) < 1e-10


@FAST
@given(seeds, st.sampled_from([(2,), (2, 3), (3, 2, 2)]))
def test_partial_trace_inverts_tensor(seed, layout):
    rng = np.random.default_rng(seed)
    parts = [random_density(rng, k) for k in layout]
    joint = tensor(*parts)
    for i, p in enumerate(parts):
        assert np.abs(partial_trace(joint, [i]).mat - p.mat).max() < 1e-12
    assert np.abs(product_of_marginals(joint, [[i] for i in range(len(layout))]).mat - joint.mat).max() < 1e-12


@FAST
@given(seeds, st.sampled_from(["general", "se_free", "reference"]))
def test_bound_chain(seed, regime):
    rng = np.random.default_rng(seed)
    case = random_tripartite_case(rng, (2, 2, 2), regime)
    b = bound_tripartite(case.rho1, case.rho2)
    assert b.b8 >= b.b9 - 1e-12
    assert b.b8 >= b.b5 - 1e-12
    if b.se_free:
        assert b.b9 >= b.b5 - 1e-12
    if b.b10_valid and b.se_free:
        assert b.b9 >= b.b10 - 1e-12
    assert trace_distance(partial_trace(case.rho1, [0]), partial_trace(case.rho2, [0])) <= 1 + 1e-12


def _grid_doc(sid):
    doc = catalog_document(sid)
    doc["grid"]["points"] = 200
    return doc


@pytest.mark.parametrize("sid", ["gate-pure", "fig2b", "fig3a", "fig4a", "fig4b", "fig4d", "fig5a", "fig6a", "fig7b"])
def test_states_valid_on_grid(sid):
    spec = spec_from_dict(_grid_doc(sid))
    fam = build_family(spec)
    for t in spec.grid.times():
        for rho in fam.system_pair(t):
            assert isinstance(rho, DensityOperator)
            report = validate_density(rho, tol=1e-10)
            assert report.passed, (t, report)


def test_catalog_is_json_clean():
    import json

    for sid in CATALOG:
        json.loads(json.dumps(CATALOG[sid], allow_nan=False))
