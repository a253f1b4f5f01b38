import numpy as np
import pytest

import tricount as tc


def test_scale6_dimensions():
    el = tc.generate_rmat(tc.RmatParams(scale=6, edge_factor=16, seed=1))
    assert el.n == 64
    assert len(el.edges) == 1024


def test_scale1_range():
    el = tc.generate_rmat(tc.RmatParams(scale=1, edge_factor=1, seed=7))
    assert el.n == 2
    assert len(el.edges) == 1
    assert set(el.edges.ravel().tolist()) <= {0, 1}


def test_reproducible_and_seed_sensitive():
    p = tc.RmatParams(scale=8, edge_factor=8, seed=123)
    a = tc.generate_rmat(p)
    b = tc.generate_rmat(p)
    assert np.array_equal(a.edges, b.edges)
    c = tc.generate_rmat(tc.RmatParams(scale=8, edge_factor=8, seed=124))
    assert not np.array_equal(a.edges, c.edges)


def test_skew_toward_low_ids():
    # quadrant a dominates, so low vertex ids should absorb most endpoints
    el = tc.generate_rmat(tc.RmatParams(scale=10, edge_factor=16, seed=5))
    half = el.n // 2
    low = int((el.edges < half).sum())
    assert low > 0.6 * el.edges.size


@pytest.mark.parametrize("kwargs", [
    dict(scale=0),
    dict(scale=63),
    dict(scale=5, edge_factor=0),
    dict(scale=5, a=0.5, b=0.5, c=0.5, d=0.5),
    dict(scale=5, a=-0.1, b=0.5, c=0.3, d=0.3),
])
def test_invalid_params(kwargs):
    with pytest.raises(ValueError):
        tc.RmatParams(**kwargs)


def test_scale10_all_algorithms_agree():
    g = tc.normalize(tc.generate_rmat(tc.RmatParams(scale=10, edge_factor=16, seed=42)))
    assert g.m <= 16384
    expect = tc.tc_triples(g)
    for alg, fn in tc.SEQUENTIAL_IDS.items():
        assert fn(g) == expect, alg
    cfg = tc.ParallelConfig(workers=2)
    for alg in tc.PARALLEL_IDS:
        assert tc.tc_par(alg, g, cfg) == expect, alg
