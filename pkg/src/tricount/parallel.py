"""Shared-memory parallel counterparts of the edge-iterator algorithms.

Work is a parallel loop over the undirected edge list, split into
contiguous chunks; each worker thread runs a compiled GIL-releasing
kernel over its chunks and keeps a private counter.  Partial counts are
merged once at the end with integer addition, so results are identical
across runs and across worker counts.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _kernels as K
from .bfs import bfs_label
from .graph import Graph

__all__ = [
    "ParallelConfig",
    "PARALLEL_IDS",
    "tc_wedge_par",
    "tc_wedge_do_par",
    "tc_edge_merge_par",
    "tc_edge_merge_do_par",
    "tc_edge_binary_par",
    "tc_edge_binary_do_par",
    "tc_edge_partition_par",
    "tc_edge_partition_do_par",
    "tc_edge_hash_par",
    "tc_edge_hash_do_par",
    "tc_cetc_sm",
    "tc_par",
]


@dataclass(frozen=True)
class ParallelConfig:
    """Worker count and edge-chunk granularity.

    ``chunk=None`` picks a granularity of a few chunks per worker, which
    is enough balance for contiguous edge ranges.
    """

    workers: int = 1
    chunk: int | None = None

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.chunk is not None and self.chunk < 1:
            raise ValueError("chunk must be >= 1")

    def ranges(self, nitems: int) -> list[tuple[int, int]]:
        if nitems == 0:
            return []
        chunk = self.chunk
        if chunk is None:
            chunk = max(1, -(-nitems // (self.workers * 4)))
        return [(s, min(s + chunk, nitems)) for s in range(0, nitems, chunk)]


def _run_edge_chunks(kernel, g: Graph, cfg: ParallelConfig, *extra):
    """Map ``kernel`` over edge chunks and return the partials in chunk order."""
    ranges = cfg.ranges(g.m)
    args = (g.row_offsets, g.neighbors, *extra, g.edge_u, g.edge_v)
    if cfg.workers == 1 or len(ranges) <= 1:
        return [kernel(*args, k0, k1) for k0, k1 in ranges]
    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        futures = [pool.submit(kernel, *args, k0, k1) for k0, k1 in ranges]
        return [f.result() for f in futures]


def _sum_chunks(kernel, g: Graph, cfg: ParallelConfig, *extra) -> int:
    return sum(int(p) for p in _run_edge_chunks(kernel, g, cfg, *extra))


def tc_wedge_par(g: Graph, cfg: ParallelConfig) -> int:
    return _sum_chunks(K.wp_range_k, g, cfg) // 6


def tc_wedge_do_par(g: Graph, cfg: ParallelConfig) -> int:
    return _sum_chunks(K.wdp_range_k, g, cfg)


def tc_edge_merge_par(g: Graph, cfg: ParallelConfig) -> int:
    return _sum_chunks(K.emp_range_k, g, cfg) // 6


def tc_edge_merge_do_par(g: Graph, cfg: ParallelConfig) -> int:
    return _sum_chunks(K.emdp_range_k, g, cfg)


def tc_edge_binary_par(g: Graph, cfg: ParallelConfig) -> int:
    return _sum_chunks(K.ebp_range_k, g, cfg) // 6


def tc_edge_binary_do_par(g: Graph, cfg: ParallelConfig) -> int:
    return _sum_chunks(K.ebdp_range_k, g, cfg)


def tc_edge_partition_par(g: Graph, cfg: ParallelConfig) -> int:
    return _sum_chunks(K.etp_range_k, g, cfg) // 6


def tc_edge_partition_do_par(g: Graph, cfg: ParallelConfig) -> int:
    return _sum_chunks(K.etdp_range_k, g, cfg)


def tc_edge_hash_par(g: Graph, cfg: ParallelConfig) -> int:
    return _sum_chunks(K.ehp_range_k, g, cfg, g.n) // 6


def tc_edge_hash_do_par(g: Graph, cfg: ParallelConfig) -> int:
    return _sum_chunks(K.ehdp_range_k, g, cfg, g.n)


def tc_cetc_sm(g: Graph, cfg: ParallelConfig) -> int:
    """Parallel cover-edge counting with the two-accumulator discipline.

    Each worker tallies apexes of horizontal edges into private counters:
    ``c1`` for apexes on a different level (triangles with a unique
    horizontal edge, found once) and ``c2`` for same-level apexes (all
    three horizontal edges of such a triangle report it).  The merged
    total is ``c1 + c2/3``.
    """
    c1, c2 = _cetc_sm_counts(g, cfg)
    if c2 % 3:
        raise AssertionError("same-level apex tally must be divisible by 3")
    return c1 + c2 // 3


def _cetc_sm_counts(g: Graph, cfg: ParallelConfig) -> tuple[int, int]:
    lab = bfs_label(g)
    partials = _run_edge_chunks(K.cetc_sm_range_k, g, cfg, lab.level)
    c1 = sum(int(p[0]) for p in partials)
    c2 = sum(int(p[1]) for p in partials)
    return c1, c2


PARALLEL_IDS = {
    "WP": tc_wedge_par,
    "WDP": tc_wedge_do_par,
    "EMP": tc_edge_merge_par,
    "EMDP": tc_edge_merge_do_par,
    "EBP": tc_edge_binary_par,
    "EBDP": tc_edge_binary_do_par,
    "ETP": tc_edge_partition_par,
    "ETDP": tc_edge_partition_do_par,
    "EHP": tc_edge_hash_par,
    "EHDP": tc_edge_hash_do_par,
    "CETC-SM": tc_cetc_sm,
}


def tc_par(alg: str, g: Graph, cfg: ParallelConfig) -> int:
    """Dispatch a parallel algorithm by id."""
    try:
        fn = PARALLEL_IDS[alg]
    except KeyError:
        raise ValueError(f"unknown parallel algorithm id {alg!r}") from None
    return fn(g, cfg)
