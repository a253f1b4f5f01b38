"""The sequential triangle counting algorithms.

All functions share one contract: they take a normalized read-only
:class:`~tricount.graph.Graph` and return the exact triangle count as an
``int``.  Any per-algorithm preprocessing (BFS labeling, degree
reordering, scratch arrays) happens inside the call, so wall-clock
comparisons charge each algorithm its full cost.

Algorithm ids follow the usual benchmark shorthand: ``W``/``WD`` wedge
checking, ``EM``/``EB``/``ET``/``EH`` edge iterators named after their
set-intersection strategy (``*D`` for the direction-oriented variant),
``F``/``FH``/``FHD`` the forward family, ``TS`` the hashed
one-orientation edge iterator, ``LA`` the masked lower-triangular
product, ``IR`` Itai-Rodeh spanning-tree listing, and the ``CETC-Seq*``
family for cover-edge counting and its hybrids.
"""
from __future__ import annotations

import numpy as np

from . import _kernels as K
from .bfs import bfs_label
from .graph import Graph, _graph_from_canonical_pairs, degree_order

__all__ = [
    "COVER_RATIO_THRESHOLD",
    "SEQUENTIAL_IDS",
    "tc_triples",
    "tc_wedge",
    "tc_wedge_do",
    "tc_edge_merge",
    "tc_edge_merge_do",
    "tc_edge_binary",
    "tc_edge_binary_do",
    "tc_edge_partition",
    "tc_edge_partition_do",
    "tc_edge_hash",
    "tc_edge_hash_do",
    "tc_forward",
    "tc_forward_hashed",
    "tc_forward_hashed_degree",
    "tc_tri_simple",
    "tc_linear_algebra",
    "tc_treelist",
    "tc_cetc",
    "tc_cetc_degree",
    "tc_cetc_fe",
    "tc_cetc_split",
    "tc_cetc_split_degree",
    "tc_cetc_split_recursive",
    "count_sequential",
    "edge_intersection_sum",
]

# Covering-ratio switch point for the hybrid cover-edge variants; 0.7 is
# the empirical crossover between cover-edge counting and the forward
# algorithm.
COVER_RATIO_THRESHOLD = 0.7

# Recursion floor for the recursive split variant: stop shrinking once
# the horizontal subgraph is this small.
_SPLIT_RECURSION_FLOOR = 1024


def tc_triples(g: Graph) -> int:
    """Brute force over all ordered vertex triples (the oracle).

    Evaluates the three-edge predicate for every ordered triple using a
    dense boolean adjacency, entirely independent of the CSR kernels the
    other algorithms share.  Quadratic memory; only sensible for small n.
    """
    if g.n == 0:
        return 0
    adj = np.zeros((g.n, g.n), dtype=bool)
    adj[g.edge_u, g.edge_v] = True
    adj[g.edge_v, g.edge_u] = True
    total = 0
    # for each ordered pair (u, v) in E, count w with (v,w) and (u,w) in E
    for u in range(g.n):
        row_u = adj[u]
        for v in g.adjacency(u):
            total += int(np.count_nonzero(adj[v] & row_u))
    return total // 6


def tc_wedge(g: Graph) -> int:
    """W: test the closing edge of every ordered wedge, then divide by 6."""
    return int(K.tc_wedge_k(g.row_offsets, g.neighbors, g.n))


def tc_wedge_do(g: Graph) -> int:
    """WD: wedges restricted to v < v1 < v2; no overcount to divide out."""
    return int(K.tc_wedge_do_k(g.row_offsets, g.neighbors, g.n))


def tc_edge_merge(g: Graph) -> int:
    """EM: linear merge of N(u) and N(v) for every directed edge."""
    return int(K.edge_merge_sum_k(g.row_offsets, g.neighbors, g.n)) // 6


def tc_edge_merge_do(g: Graph) -> int:
    """EMD: edges u < v, merging only the adjacency tails above v."""
    return int(K.tc_edge_merge_do_k(g.row_offsets, g.neighbors, g.n))


def tc_edge_binary(g: Graph) -> int:
    """EB: binary-search the smaller adjacency list in the larger."""
    return int(K.tc_edge_binary_k(g.row_offsets, g.neighbors, g.n))


def tc_edge_binary_do(g: Graph) -> int:
    return int(K.tc_edge_binary_do_k(g.row_offsets, g.neighbors, g.n))


def tc_edge_partition(g: Graph) -> int:
    """ET: recursive median-split set intersection per edge."""
    return int(K.tc_edge_partition_k(g.row_offsets, g.neighbors, g.n))


def tc_edge_partition_do(g: Graph) -> int:
    return int(K.tc_edge_partition_do_k(g.row_offsets, g.neighbors, g.n))


def tc_edge_hash(g: Graph) -> int:
    """EH: scatter N(u) into a vertex-indexed mark array, scan N(v)."""
    return int(K.tc_edge_hash_k(g.row_offsets, g.neighbors, g.n))


def tc_edge_hash_do(g: Graph) -> int:
    return int(K.tc_edge_hash_do_k(g.row_offsets, g.neighbors, g.n))


def tc_forward(g: Graph) -> int:
    """F: intersect the dynamically grown A(u), A(v) sets per u < v edge."""
    return int(K.tc_forward_k(g.row_offsets, g.neighbors, g.n))


def tc_forward_hashed(g: Graph) -> int:
    """FH: forward with hashed A-set intersection."""
    return int(K.tc_forward_hashed_k(g.row_offsets, g.neighbors, g.n))


def tc_forward_hashed_degree(g: Graph) -> int:
    """FHD: relabel by non-increasing degree, then FH; reorder cost included."""
    h = degree_order(g)
    return int(K.tc_forward_hashed_k(h.row_offsets, h.neighbors, h.n))


def tc_tri_simple(g: Graph) -> int:
    """TS: hashed edge iterator over one edge orientation, scatter per vertex."""
    return int(K.tc_tri_simple_k(g.row_offsets, g.neighbors, g.n))


def tc_linear_algebra(g: Graph) -> int:
    """LA: masked lower-triangular product accumulated row by row."""
    return int(K.tc_linear_algebra_k(g.row_offsets, g.neighbors, g.n))


def tc_treelist(g: Graph) -> int:
    """IR: spanning-forest rounds testing non-tree edges against parents."""
    return int(K.tc_treelist_k(g.row_offsets, g.neighbors, g.n))


def tc_cetc(g: Graph) -> int:
    """Cover-edge counting: BFS levels, then one intersection per
    horizontal edge with the off-level-or-greater-apex uniqueness test."""
    lab = bfs_label(g)
    return int(K.cetc_count_k(g.row_offsets, g.neighbors, lab.level, g.n))


def tc_cetc_degree(g: Graph) -> int:
    """Cover-edge counting after degree relabeling."""
    return tc_cetc(degree_order(g))


def tc_cetc_fe(g: Graph, threshold: float = COVER_RATIO_THRESHOLD) -> int:
    """Forward-exchanging hybrid: run BFS, pick cover-edge counting when
    the covering ratio is below ``threshold``, else fall back to forward."""
    lab = bfs_label(g)
    ratio = lab.horizontal_count / g.m if g.m else 0.0
    if ratio < threshold:
        return int(K.cetc_count_k(g.row_offsets, g.neighbors, lab.level, g.n))
    return tc_forward(g)


def _split_by_level(g: Graph, level: np.ndarray) -> tuple[Graph, Graph]:
    # E0 = horizontal edges, E1 = level-spanning edges; a disjoint cover of E
    eu = g.edge_u.astype(np.int64)
    ev = g.edge_v.astype(np.int64)
    horizontal = level[eu] == level[ev]
    g0 = _graph_from_canonical_pairs(g.n, eu[horizontal], ev[horizontal])
    g1 = _graph_from_canonical_pairs(g.n, eu[~horizontal], ev[~horizontal])
    return g0, g1


def tc_cetc_split(g: Graph) -> int:
    """Split hybrid: forward-hashed on the horizontal subgraph plus a
    hashed two-graph pass for triangles straddling the level-spanning part."""
    lab = bfs_label(g)
    g0, g1 = _split_by_level(g, lab.level)
    t = int(K.tc_forward_hashed_k(g0.row_offsets, g0.neighbors, g0.n))
    t += int(
        K.split_cross_count_k(
            g0.row_offsets, g0.neighbors, g1.row_offsets, g1.neighbors, g.n
        )
    )
    return t


def tc_cetc_split_degree(g: Graph) -> int:
    return tc_cetc_split(degree_order(g))


def tc_cetc_split_recursive(
    g: Graph, threshold: float = COVER_RATIO_THRESHOLD
) -> int:
    """Recursive split: when the horizontal subgraph still holds more
    than ``threshold`` of the edges, split it again instead of handing it
    to forward-hashed; bottoms out on small or non-shrinking subgraphs."""
    return _cetc_sr(g, threshold, prev_ratio=1.0)


def _cetc_sr(g: Graph, threshold: float, prev_ratio: float) -> int:
    if g.m == 0:
        return 0
    lab = bfs_label(g)
    g0, g1 = _split_by_level(g, lab.level)
    cross = int(
        K.split_cross_count_k(
            g0.row_offsets, g0.neighbors, g1.row_offsets, g1.neighbors, g.n
        )
    )
    ratio = g0.m / g.m
    if ratio > threshold and ratio < prev_ratio and g0.m >= _SPLIT_RECURSION_FLOOR:
        inner = _cetc_sr(g0, threshold, prev_ratio=ratio)
    else:
        inner = int(K.tc_forward_hashed_k(g0.row_offsets, g0.neighbors, g0.n))
    return inner + cross


# ---------------------------------------------------------------------------
# registry

SEQUENTIAL_IDS = {
    "W": tc_wedge,
    "WD": tc_wedge_do,
    "EM": tc_edge_merge,
    "EMD": tc_edge_merge_do,
    "EB": tc_edge_binary,
    "EBD": tc_edge_binary_do,
    "ET": tc_edge_partition,
    "ETD": tc_edge_partition_do,
    "EH": tc_edge_hash,
    "EHD": tc_edge_hash_do,
    "F": tc_forward,
    "FH": tc_forward_hashed,
    "FHD": tc_forward_hashed_degree,
    "TS": tc_tri_simple,
    "LA": tc_linear_algebra,
    "IR": tc_treelist,
    "CETC-Seq": tc_cetc,
    "CETC-Seq-D": tc_cetc_degree,
    "CETC-Seq-FE": tc_cetc_fe,
    "CETC-Seq-S": tc_cetc_split,
    "CETC-Seq-SD": tc_cetc_split_degree,
    "CETC-Seq-SR": tc_cetc_split_recursive,
}


def count_sequential(alg: str, g: Graph) -> int:
    try:
        fn = SEQUENTIAL_IDS[alg]
    except KeyError:
        raise ValueError(f"unknown sequential algorithm id {alg!r}") from None
    return fn(g)


def edge_intersection_sum(g: Graph) -> int:
    """Sum of |N(u) ∩ N(v)| over both directions of every edge (= 6T)."""
    return int(K.edge_merge_sum_k(g.row_offsets, g.neighbors, g.n))


def _cetc_list_triangles(g: Graph) -> list[tuple[int, int, int]]:
    # listing-mode twin of tc_cetc used by the test suite to show each
    # triangle is emitted exactly once; not part of the public API
    lab = bfs_label(g)
    level = lab.level
    out: list[tuple[int, int, int]] = []
    for u, v in zip(g.edge_u, g.edge_v):
        u, v = int(u), int(v)
        if level[u] != level[v]:
            continue
        common = np.intersect1d(g.adjacency(u), g.adjacency(v))
        for w in map(int, common):
            if level[w] != level[u] or v < w:
                out.append(tuple(sorted((u, v, w))))
    return out
