import pytest

import tricount as tc
from tricount.parallel import _cetc_sm_counts

from conftest import er_graph, rmat_graph

# parallel id -> its sequential counterpart
PAIRED = {
    "WP": "W",
    "WDP": "WD",
    "EMP": "EM",
    "EMDP": "EMD",
    "EBP": "EB",
    "EBDP": "EBD",
    "ETP": "ET",
    "ETDP": "ETD",
    "EHP": "EH",
    "EHDP": "EHD",
    "CETC-SM": "CETC-Seq",
}


def test_pairing_covers_registry():
    assert set(PAIRED) == set(tc.PARALLEL_IDS)


def test_ebp_k4():
    from conftest import complete_graph
    assert tc.tc_par("EBP", complete_graph(4), tc.ParallelConfig(workers=4)) == 4


def test_cetc_sm_karate_workers8(karate):
    assert tc.tc_cetc_sm(karate, tc.ParallelConfig(workers=8)) == 45


def test_equivalence_with_sequential(small_corpus):
    for name, g in small_corpus:
        for alg, seq in PAIRED.items():
            expect = tc.SEQUENTIAL_IDS[seq](g)
            for workers in (1, 2, 4, 8):
                got = tc.tc_par(alg, g, tc.ParallelConfig(workers=workers))
                assert got == expect, (name, alg, workers)


def test_ehp_worker_counts_identical():
    g = er_graph(80, 0.1, seed=321)
    expect = tc.tc_triples(g)
    for workers in (1, 2, 7, 32):
        assert tc.tc_par("EHP", g, tc.ParallelConfig(workers=workers)) == expect


def test_repeated_runs_bit_identical(karate):
    g = rmat_graph(8, 16, seed=77)
    cfg = tc.ParallelConfig(workers=4)
    for alg in tc.PARALLEL_IDS:
        first = tc.tc_par(alg, g, cfg)
        assert all(tc.tc_par(alg, g, cfg) == first for _ in range(5)), alg


def test_chunk_granularity_irrelevant(karate):
    expect = 45
    for chunk in (1, 7, 78, 10**9):
        cfg = tc.ParallelConfig(workers=3, chunk=chunk)
        assert tc.tc_par("EMP", karate, cfg) == expect
        assert tc.tc_par("CETC-SM", karate, cfg) == expect


def test_cetc_sm_accumulator_traces(k3, k4):
    # same-level apex tally is triple-counted by design, hence c2 % 3 == 0
    assert _cetc_sm_counts(k4, tc.ParallelConfig(workers=2)) == (3, 3)
    assert _cetc_sm_counts(k3, tc.ParallelConfig(workers=2)) == (1, 0)


def test_cetc_sm_divisibility(small_corpus):
    cfg = tc.ParallelConfig(workers=4)
    for name, g in small_corpus:
        c1, c2 = _cetc_sm_counts(g, cfg)
        assert c2 % 3 == 0, name


def test_config_validation():
    with pytest.raises(ValueError):
        tc.ParallelConfig(workers=0)
    with pytest.raises(ValueError):
        tc.ParallelConfig(workers=2, chunk=0)
    with pytest.raises(ValueError, match="unknown"):
        tc.tc_par("NOPE", rmat_graph(4, 4, 1), tc.ParallelConfig())
