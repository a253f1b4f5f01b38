"""BFS level labeling, edge classification, and cover-edge extraction.

A breadth-first search over all components assigns every vertex a level.
Each undirected edge then falls into exactly one class: part of the BFS
forest (tree), spanning adjacent levels without being a tree edge
(strut), or joining two vertices on the same level (horizontal).  Every
triangle contains one or three horizontal edges, so the horizontal set
covers all triangles and the cover-edge counting algorithms only ever
intersect adjacency lists across it.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations

import numpy as np

from . import _kernels as K
from .graph import Graph

__all__ = [
    "EdgeClass",
    "BfsLabeling",
    "CoverEdgeSet",
    "bfs_label",
    "cover_edges",
    "verify_cover",
    "enumerate_triangles",
]


class EdgeClass(IntEnum):
    TREE = 0
    STRUT = 1
    HORIZONTAL = 2


@dataclass(frozen=True)
class BfsLabeling:
    """Per-vertex levels and per-edge classes for one deterministic BFS.

    Roots are the lowest-id unvisited vertices and neighbors are queued
    in ascending id order, so the labeling (and through it the covering
    ratio) is reproducible.  ``edge_class[k]`` classifies the k-th edge
    of the graph's canonical edge arrays.  ``max_level`` is the deepest
    BFS level over all components and stands in for the diameter in the
    communication model.
    """

    level: np.ndarray
    parent: np.ndarray
    edge_class: np.ndarray
    components: int
    max_level: int

    @property
    def horizontal_count(self) -> int:
        return int((self.edge_class == EdgeClass.HORIZONTAL).sum())


@dataclass(frozen=True)
class CoverEdgeSet:
    """Horizontal edges (u < v per row) plus their share of all edges."""

    edges: np.ndarray  # shape (k, 2)
    ratio: float

    def __len__(self) -> int:
        return len(self.edges)

    def as_set(self) -> set[tuple[int, int]]:
        return {(int(u), int(v)) for u, v in self.edges}


def bfs_label(g: Graph) -> BfsLabeling:
    """Label all vertices and classify all edges of ``g``."""
    level, parent, components, max_level = K.bfs_levels_k(
        g.row_offsets, g.neighbors, g.n
    )
    eu = g.edge_u.astype(np.int64)
    ev = g.edge_v.astype(np.int64)
    tree = (parent[ev] == eu) | (parent[eu] == ev)
    horizontal = level[eu] == level[ev]
    edge_class = np.where(
        tree, EdgeClass.TREE, np.where(horizontal, EdgeClass.HORIZONTAL, EdgeClass.STRUT)
    ).astype(np.int8)
    return BfsLabeling(
        level=level,
        parent=parent,
        edge_class=edge_class,
        components=int(components),
        max_level=int(max_level),
    )


def cover_edges(lab: BfsLabeling, g: Graph) -> CoverEdgeSet:
    """Collect the horizontal edges of a labeling as a cover-edge set."""
    if len(lab.level) != g.n or len(lab.edge_class) != g.m:
        raise ValueError("labeling does not match graph dimensions")
    mask = lab.edge_class == EdgeClass.HORIZONTAL
    edges = np.stack(
        [g.edge_u[mask].astype(np.int64), g.edge_v[mask].astype(np.int64)], axis=1
    )
    ratio = len(edges) / g.m if g.m else 0.0
    return CoverEdgeSet(edges=edges, ratio=ratio)


def enumerate_triangles(g: Graph):
    """Brute-force triangle listing, usable only at test scale."""
    adj = [set(map(int, g.adjacency(v))) for v in range(g.n)]
    for u, v in zip(g.edge_u, g.edge_v):
        u, v = int(u), int(v)
        for w in adj[u] & adj[v]:
            if w > v:
                yield (u, v, w)


def verify_cover(g: Graph, s: CoverEdgeSet) -> bool:
    """Check by exhaustive listing that ``s`` covers every triangle.

    Since ``s`` consists of all horizontal edges, the stronger structural
    fact is checked too: each triangle meets the set in exactly 1 or 3
    edges, never 0 or 2.
    """
    if len(s.edges) and (s.edges.min() < 0 or s.edges.max() >= g.n):
        raise ValueError("cover-edge endpoints out of range for graph")
    cover = s.as_set()
    for a, b, c in enumerate_triangles(g):
        hits = sum(
            1 for e in combinations((a, b, c), 2) if (min(e), max(e)) in cover
        )
        if hits not in (1, 3):
            return False
    return True
