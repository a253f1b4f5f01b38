"""Shared fixtures and the tiny independent oracles used across the suite."""
from __future__ import annotations

import os
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

import tricount as tc

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = Path(os.environ.get("TRICOUNT_DATA", REPO_ROOT / "data"))

KARATE_PATH = DATA_DIR / "karate.txt"


def from_pairs(n: int, pairs) -> tc.Graph:
    edges = np.array(list(pairs), dtype=np.int64).reshape(-1, 2)
    return tc.normalize(tc.EdgeList(n=n, edges=edges))


def complete_graph(n: int) -> tc.Graph:
    return from_pairs(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def path_graph(n: int) -> tc.Graph:
    return from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> tc.Graph:
    return from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int, center: int = 0) -> tc.Graph:
    others = [v for v in range(leaves + 1) if v != center]
    return from_pairs(leaves + 1, [(center, v) for v in others])


def er_graph(n: int, p: float, seed: int) -> tc.Graph:
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < p
    iu = np.triu_indices(n, k=1)
    sel = mask[iu]
    edges = np.stack([iu[0][sel], iu[1][sel]], axis=1)
    return tc.normalize(tc.EdgeList(n=n, edges=edges))


def rmat_graph(scale: int, ef: int, seed: int) -> tc.Graph:
    return tc.normalize(tc.generate_rmat(tc.RmatParams(scale=scale, edge_factor=ef, seed=seed)))


def brute_count(g: tc.Graph) -> int:
    """Pure-Python triangle enumeration; the oracle's oracle at tiny scale."""
    adj = [set(map(int, g.adjacency(v))) for v in range(g.n)]
    return sum(
        1
        for a, b, c in combinations(range(g.n), 3)
        if b in adj[a] and c in adj[a] and c in adj[b]
    )


def dataset_graph(filename: str) -> tc.Graph:
    """Load a SNAP dataset from the data directory or skip the test."""
    path = DATA_DIR / filename
    if not path.exists():
        pytest.skip(
            f"dataset {filename} not present in {DATA_DIR} "
            "(run scripts/fetch_snap.py where network is available)"
        )
    return tc.normalize(tc.load_edge_list(path))


@pytest.fixture(scope="session")
def karate() -> tc.Graph:
    return tc.normalize(tc.load_edge_list(KARATE_PATH))


@pytest.fixture(scope="session")
def k3() -> tc.Graph:
    return complete_graph(3)


@pytest.fixture(scope="session")
def k4() -> tc.Graph:
    return complete_graph(4)


@pytest.fixture(scope="session")
def small_corpus() -> list[tuple[str, tc.Graph]]:
    """A varied mix of small graphs used by cross-algorithm checks."""
    graphs: list[tuple[str, tc.Graph]] = [
        ("k3", complete_graph(3)),
        ("k4", complete_graph(4)),
        ("k7", complete_graph(7)),
        ("path10", path_graph(10)),
        ("cycle9", cycle_graph(9)),
        ("star6", star_graph(6)),
        ("empty5", from_pairs(5, [])),
    ]
    for i, (n, p) in enumerate([(20, 0.2), (40, 0.15), (60, 0.1), (80, 0.08)]):
        graphs.append((f"er{n}", er_graph(n, p, seed=100 + i)))
    for scale in (4, 5, 6):
        graphs.append((f"rmat{scale}", rmat_graph(scale, 8, seed=scale)))
    return graphs
