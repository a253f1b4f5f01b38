"""Graph ingestion, normalization and the immutable CSR representation.

Every counting kernel in this package consumes the same read-only
:class:`Graph`: a symmetric compressed-sparse-row adjacency with sorted
neighbor lists, no self-loops and no duplicate edges.
"""
from __future__ import annotations

import io
import struct
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "EdgeList",
    "Graph",
    "ParseError",
    "parse_edge_list",
    "load_edge_list",
    "normalize",
    "to_edge_list",
    "degree_order",
    "wedge_count",
    "save_graph",
    "load_graph",
]

_CSR_MAGIC = b"TCSR"
_CSR_VERSION = 1


class ParseError(ValueError):
    """Raised for malformed edge-list input."""


@dataclass
class EdgeList:
    """Raw edge pairs with dense 0-based vertex ids.

    May still contain duplicates and self-loops; :func:`normalize` removes
    both.  ``original_ids[i]`` is the external id that was relabeled to
    dense id ``i`` (identity when the input was already dense in
    first-appearance order).
    """

    n: int
    edges: np.ndarray  # shape (k, 2), int64
    original_ids: np.ndarray | None = None

    def __post_init__(self):
        self.edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        if self.edges.size and (self.edges.min() < 0 or self.edges.max() >= self.n):
            raise ValueError("edge endpoint out of range [0, n)")


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph in CSR form.

    ``neighbors[row_offsets[v]:row_offsets[v+1]]`` is the strictly
    increasing neighbor list of ``v``.  ``edge_u``/``edge_v`` list each
    undirected edge exactly once with ``edge_u[k] < edge_v[k]``, sorted
    lexicographically; several kernels iterate edges through them.
    All arrays are frozen so a Graph can be shared freely across workers.
    """

    n: int
    m: int
    row_offsets: np.ndarray
    neighbors: np.ndarray
    edge_u: np.ndarray = field(repr=False)
    edge_v: np.ndarray = field(repr=False)

    def degree(self, v: int) -> int:
        return int(self.row_offsets[v + 1] - self.row_offsets[v])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.row_offsets)

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    def adjacency(self, v: int) -> np.ndarray:
        return self.neighbors[self.row_offsets[v]:self.row_offsets[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.adjacency(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)


def _vertex_dtype(n: int):
    return np.int32 if n < 2**31 else np.int64


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _graph_from_canonical_pairs(n: int, eu: np.ndarray, ev: np.ndarray) -> Graph:
    """Build a Graph from unique (u < v) pairs, already free of loops."""
    vdt = _vertex_dtype(n)
    m = len(eu)
    order = np.lexsort((ev, eu))
    eu = np.ascontiguousarray(eu[order], dtype=vdt)
    ev = np.ascontiguousarray(ev[order], dtype=vdt)
    src = np.concatenate([eu, ev])
    dst = np.concatenate([ev, eu])
    perm = np.lexsort((dst, src))
    neighbors = np.ascontiguousarray(dst[perm], dtype=vdt)
    counts = np.bincount(src, minlength=n) if m else np.zeros(n, dtype=np.int64)
    row_offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=row_offsets[1:])
    return Graph(
        n=n,
        m=m,
        row_offsets=_freeze(row_offsets),
        neighbors=_freeze(neighbors),
        edge_u=_freeze(eu),
        edge_v=_freeze(ev),
    )


def parse_edge_list(data) -> EdgeList:
    """Parse whitespace-separated edge-list text into an :class:`EdgeList`.

    Accepts ``str``, ``bytes`` or a file-like object.  Lines starting with
    ``#`` or ``%`` are comments, blank lines are ignored, and every other
    line must hold exactly two non-negative integer tokens.  External ids
    are relabeled densely in first-appearance order; the mapping is kept
    in ``original_ids`` for reporting.
    """
    if isinstance(data, bytes):
        data = data.decode("ascii", errors="replace")
    if isinstance(data, str):
        lines = io.StringIO(data)
    else:
        lines = data

    ids: dict[int, int] = {}
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("ascii", errors="replace")
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 2 tokens, got {len(tokens)}")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer token") from None
        if a < 0 or b < 0:
            raise ParseError(f"line {lineno}: negative vertex id")
        for x in (a, b):
            if x not in ids:
                ids[x] = len(ids)
        pairs.append((ids[a], ids[b]))

    n = len(ids)
    edges = np.array(pairs, dtype=np.int64).reshape(-1, 2)
    original = np.fromiter(ids.keys(), dtype=np.int64, count=n)
    return EdgeList(n=n, edges=edges, original_ids=original)


def load_edge_list(path) -> EdgeList:
    with open(path, "r", encoding="ascii", errors="replace") as fh:
        return parse_edge_list(fh)


def normalize(el: EdgeList) -> Graph:
    """Canonicalize an EdgeList into a Graph.

    Self-loops are dropped, duplicate edges collapse to one, and each
    surviving undirected edge is stored in both adjacency directions.
    """
    edges = el.edges
    if len(edges) == 0:
        empty = np.empty(0, dtype=_vertex_dtype(el.n))
        return _graph_from_canonical_pairs(el.n, empty, empty.copy())
    keep = edges[:, 0] != edges[:, 1]
    edges = edges[keep]
    lo = np.minimum(edges[:, 0], edges[:, 1])
    hi = np.maximum(edges[:, 0], edges[:, 1])
    if len(lo):
        uniq = np.unique(np.stack([lo, hi], axis=1), axis=0)
        lo, hi = uniq[:, 0], uniq[:, 1]
    return _graph_from_canonical_pairs(el.n, lo, hi)


def to_edge_list(g: Graph) -> EdgeList:
    """One (u, v) pair per undirected edge, u < v."""
    edges = np.stack([g.edge_u, g.edge_v], axis=1).astype(np.int64)
    return EdgeList(n=g.n, edges=edges)


def degree_order(g: Graph) -> Graph:
    """Relabel vertices by non-increasing degree, ties by ascending old id.

    The result is isomorphic to ``g``; vertex 0 has maximal degree.
    """
    old_by_rank = np.lexsort((np.arange(g.n), -g.degrees.astype(np.int64)))
    new_id = np.empty(g.n, dtype=np.int64)
    new_id[old_by_rank] = np.arange(g.n)
    eu = new_id[g.edge_u]
    ev = new_id[g.edge_v]
    return _graph_from_canonical_pairs(g.n, np.minimum(eu, ev), np.maximum(eu, ev))


def wedge_count(g: Graph) -> int:
    """Number of 2-paths: sum over vertices of C(d(v), 2)."""
    d = g.degrees.astype(np.int64)
    return int((d * (d - 1) // 2).sum())


def save_graph(g: Graph, path) -> None:
    """Write the binary CSR cache: magic, version, widths, n, m, arrays (LE)."""
    width = g.neighbors.dtype.itemsize
    with open(path, "wb") as fh:
        fh.write(_CSR_MAGIC)
        fh.write(struct.pack("<BB", _CSR_VERSION, width))
        fh.write(struct.pack("<QQ", g.n, g.m))
        fh.write(g.row_offsets.astype("<i8").tobytes())
        fh.write(g.neighbors.astype(f"<i{width}").tobytes())


def load_graph(path) -> Graph:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != _CSR_MAGIC:
            raise ValueError(f"not a CSR container (magic {magic!r})")
        version, width = struct.unpack("<BB", fh.read(2))
        if version != _CSR_VERSION:
            raise ValueError(f"unsupported CSR container version {version}")
        if width not in (4, 8):
            raise ValueError(f"unsupported neighbor width {width}")
        n, m = struct.unpack("<QQ", fh.read(16))
        row = np.frombuffer(fh.read(8 * (n + 1)), dtype="<i8").astype(np.int64)
        nbr = np.frombuffer(fh.read(width * 2 * m), dtype=f"<i{width}")
    if len(row) != n + 1 or len(nbr) != 2 * m:
        raise ValueError("truncated CSR container")
    src = np.repeat(np.arange(n, dtype=np.int64), np.diff(row))
    forward = src < nbr
    return _graph_from_canonical_pairs(n, src[forward], nbr[forward].astype(np.int64))
