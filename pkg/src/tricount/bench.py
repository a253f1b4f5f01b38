"""Benchmark protocol: timed repetitions over (algorithm, graph) pairs.

Rules: the graph is built once outside the timed region and treated as
read-only; every algorithm call pays for its own preprocessing (BFS,
degree reordering, scratch allocation); one warm-up run per pair is
discarded (it also absorbs JIT compilation); the mean of the remaining
repetitions is reported.  Counts are verified against a reference
algorithm — brute-force triples on small graphs, forward-hashed beyond
that.
"""
from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass

from .graph import Graph, load_edge_list, normalize
from .parallel import PARALLEL_IDS, ParallelConfig
from .rmat import RmatParams, generate_rmat
from .sequential import SEQUENTIAL_IDS, tc_forward_hashed, tc_triples

__all__ = [
    "BenchError",
    "BenchRecord",
    "RunSpec",
    "ALGORITHM_GROUPS",
    "expand_algorithms",
    "resolve_graph",
    "reference_count",
    "run_bench",
    "emit_csv",
]

# brute force is the assumption-free reference, but only affordable here
_TRIPLES_MAX_N = 2000

ALGORITHM_GROUPS = {
    "all-seq": list(SEQUENTIAL_IDS),
    "all-par": list(PARALLEL_IDS),
    "all": list(SEQUENTIAL_IDS) + list(PARALLEL_IDS),
    "cetc-family": [a for a in list(SEQUENTIAL_IDS) + list(PARALLEL_IDS)
                    if a.startswith("CETC")],
}


class BenchError(ValueError):
    """Unresolvable algorithm or graph specification."""


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    graph: str
    workers: int
    reps: int
    mean_seconds: float
    count: int
    verified: bool
    error: str = ""


@dataclass(frozen=True)
class RunSpec:
    algorithms: tuple[str, ...]
    graphs: tuple[str, ...]
    reps: int = 10
    workers: tuple[int, ...] = (1,)

    def __post_init__(self):
        if self.reps < 1:
            raise ValueError("reps must be >= 1")


def expand_algorithms(tokens) -> list[str]:
    """Expand group names and validate ids, preserving order without dups."""
    out: list[str] = []
    for token in tokens:
        ids = ALGORITHM_GROUPS.get(token, [token])
        for alg in ids:
            if alg not in SEQUENTIAL_IDS and alg not in PARALLEL_IDS and alg != "Triples":
                raise BenchError(f"unknown algorithm id {alg!r}")
            if alg not in out:
                out.append(alg)
    return out


def resolve_graph(spec: str) -> tuple[str, Graph]:
    """Turn a graph spec into (graph id, Graph).

    Specs: ``rmat:<scale>:<edge_factor>:<seed>``, ``file:<path>``, or a
    bare edge-list path.
    """
    if spec.startswith("rmat:"):
        parts = spec.split(":")
        if len(parts) != 4:
            raise BenchError(f"bad rmat spec {spec!r} (want rmat:scale:ef:seed)")
        try:
            scale, ef, seed = (int(x) for x in parts[1:])
            params = RmatParams(scale=scale, edge_factor=ef, seed=seed)
        except ValueError as exc:
            raise BenchError(f"bad rmat spec {spec!r}: {exc}") from None
        return spec, normalize(generate_rmat(params))
    path = spec[5:] if spec.startswith("file:") else spec
    try:
        el = load_edge_list(path)
    except OSError as exc:
        raise BenchError(f"cannot read graph file {path!r}: {exc}") from None
    except ValueError as exc:
        raise BenchError(f"cannot parse graph file {path!r}: {exc}") from None
    name = path.rsplit("/", 1)[-1]
    name = name[:-4] if name.endswith(".txt") else name
    return name, normalize(el)


def reference_count(g: Graph) -> int:
    if g.n <= _TRIPLES_MAX_N:
        return tc_triples(g)
    return tc_forward_hashed(g)


def _runner(alg: str, workers: int):
    if alg == "Triples":
        return tc_triples
    if alg in SEQUENTIAL_IDS:
        return SEQUENTIAL_IDS[alg]
    fn = PARALLEL_IDS[alg]
    cfg = ParallelConfig(workers=workers)
    return lambda g: fn(g, cfg)


def _time_one(fn, g: Graph, reps: int) -> tuple[float, int]:
    fn(g)  # warm-up, not timed
    total = 0.0
    count = 0
    for _ in range(reps):
        t0 = time.perf_counter()
        count = fn(g)
        total += time.perf_counter() - t0
    return total / reps, count


def run_bench(spec: RunSpec) -> list[BenchRecord]:
    """Execute the benchmark matrix; failures become error records."""
    try:
        algorithms = expand_algorithms(spec.algorithms)
    except BenchError:
        raise
    records: list[BenchRecord] = []
    for gspec in spec.graphs:
        try:
            gid, graph = resolve_graph(gspec)
        except BenchError as exc:
            for alg in algorithms:
                records.append(BenchRecord(alg, gspec, 0, 0, 0.0, 0, False,
                                           error=str(exc)))
            continue
        ref = reference_count(graph)
        for alg in algorithms:
            worker_list = spec.workers if alg in PARALLEL_IDS else (1,)
            for w in worker_list:
                try:
                    mean, count = _time_one(_runner(alg, w), graph, spec.reps)
                except Exception as exc:  # surface, don't abort the matrix
                    records.append(BenchRecord(alg, gid, w, spec.reps, 0.0, 0,
                                               False, error=str(exc)))
                    continue
                records.append(BenchRecord(alg, gid, w, spec.reps, mean, count,
                                           verified=(count == ref)))
    return records


def emit_csv(records) -> str:
    """Serialize records deterministically: header, then rows sorted by
    (algorithm, graph, workers)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["algorithm", "graph", "workers", "reps", "mean_seconds",
                     "count", "verified", "error"])
    for r in sorted(records, key=lambda r: (r.algorithm, r.graph, r.workers)):
        writer.writerow([r.algorithm, r.graph, r.workers, r.reps,
                         f"{r.mean_seconds:.9f}", r.count,
                         str(r.verified).lower(), r.error])
    return buf.getvalue()
