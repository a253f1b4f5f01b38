"""Recursive-matrix (RMAT) edge generation in the Graph500 style."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import EdgeList

__all__ = ["RmatParams", "generate_rmat"]

_BLOCK = 1 << 20  # fixed block size keeps the random stream reproducible


@dataclass(frozen=True)
class RmatParams:
    """Quadrant probabilities and size for the recursive generator.

    ``a + b + c + d`` must be 1; the defaults match the common benchmark
    setting for skewed power-law graphs.
    """

    scale: int
    edge_factor: int = 16
    a: float = 0.57
    b: float = 0.19
    c: float = 0.19
    d: float = 0.05
    seed: int = 1

    def __post_init__(self):
        if self.scale < 1:
            raise ValueError("scale must be >= 1")
        if self.scale > 62:
            raise ValueError("scale too large for 64-bit vertex ids")
        if self.edge_factor < 1:
            raise ValueError("edge_factor must be >= 1")
        probs = (self.a, self.b, self.c, self.d)
        if any(p < 0 for p in probs):
            raise ValueError("quadrant probabilities must be non-negative")
        if abs(sum(probs) - 1.0) > 1e-9:
            raise ValueError("quadrant probabilities must sum to 1")


def generate_rmat(params: RmatParams) -> EdgeList:
    """Sample ``edge_factor * 2**scale`` directed pairs by recursive
    quadrant choice.

    Each pair picks one quadrant per bit level with probabilities
    (a, b, c, d); the chosen row/column bits compose the endpoint ids
    (most significant bit first).  Deterministic for a fixed seed; the
    raw pairs may contain duplicates and self-loops, which
    :func:`~tricount.graph.normalize` removes.
    """
    n = 1 << params.scale
    total = params.edge_factor * n
    rng = np.random.default_rng(params.seed)

    a, b, c = params.a, params.b, params.c
    u_parts = []
    v_parts = []
    for start in range(0, total, _BLOCK):
        count = min(_BLOCK, total - start)
        r = rng.random((count, params.scale))
        ubit = r >= a + b          # quadrants (1,0) and (1,1)
        vbit = ((r >= a) & (r < a + b)) | (r >= a + b + c)
        weights = 1 << np.arange(params.scale - 1, -1, -1, dtype=np.int64)
        u_parts.append(ubit.astype(np.int64) @ weights)
        v_parts.append(vbit.astype(np.int64) @ weights)

    edges = np.stack([np.concatenate(u_parts), np.concatenate(v_parts)], axis=1)
    return EdgeList(n=n, edges=edges.astype(np.int64))
