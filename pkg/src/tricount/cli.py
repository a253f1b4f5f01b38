"""Command-line front end.

Three modes share one flag set:

  benchmark (default)   tricount --algs FH,CETC-Seq-S --graphs karate.txt --reps 10
  cover dump            tricount --dump-cover --graphs karate.txt
  comm report           tricount --dm-report --p 2,4 --graphs karate.txt

Exit codes: 0 success, 1 verification failure (with --verify),
2 usage or input errors.
"""
from __future__ import annotations

import argparse
import sys

from .bench import BenchError, RunSpec, emit_csv, resolve_graph, run_bench
from .bfs import bfs_label, cover_edges
from .dmsim import comm_report, reports_to_csv


def _split_csv(value: str) -> list[str]:
    return [tok for tok in value.split(",") if tok]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricount",
        description="Triangle counting benchmark harness and communication model",
    )
    parser.add_argument("--algs", default="",
                        help="comma list of algorithm ids or groups "
                             "(all-seq, all-par, cetc-family, all)")
    parser.add_argument("--graphs", default="", required=False,
                        help="comma list of graph specs: <path>, file:<path>, "
                             "or rmat:<scale>:<ef>:<seed>")
    parser.add_argument("--reps", type=int, default=10,
                        help="timed repetitions per (algorithm, graph)")
    parser.add_argument("--workers", default="1",
                        help="comma list of worker counts for parallel algorithms")
    parser.add_argument("--verify", action="store_true",
                        help="exit 1 if any count disagrees with the reference")
    parser.add_argument("--out", default=None, help="write CSV here instead of stdout")
    parser.add_argument("--dump-cover", action="store_true",
                        help="emit the horizontal (cover) edge list of each graph")
    parser.add_argument("--dm-report", action="store_true",
                        help="emit communication-volume report rows")
    parser.add_argument("--p", default="4",
                        help="comma list of processor counts for --dm-report")
    return parser


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_cover(graph_specs, out_path) -> int:
    chunks = []
    for spec in graph_specs:
        gid, g = resolve_graph(spec)
        cover = cover_edges(bfs_label(g), g)
        chunks.append(f"# {gid}: {len(cover)} cover edges, ratio {cover.ratio:.6f}\n")
        chunks.extend(f"{u} {v}\n" for u, v in cover.edges)
    _emit("".join(chunks), out_path)
    return 0


def _dm_report(graph_specs, procs, out_path) -> int:
    reports = []
    for spec in graph_specs:
        gid, g = resolve_graph(spec)
        for p in procs:
            reports.append(comm_report(g, p, name=gid))
    _emit(reports_to_csv(reports), out_path)
    return 0


def _benchmark(args, graph_specs) -> int:
    algs = _split_csv(args.algs)
    if not algs:
        raise BenchError("--algs is required for benchmarking")
    workers = tuple(int(w) for w in _split_csv(args.workers))
    if any(w < 1 for w in workers) or not workers:
        raise BenchError("--workers entries must be >= 1")
    spec = RunSpec(algorithms=tuple(algs), graphs=tuple(graph_specs),
                   reps=args.reps, workers=workers)
    records = run_bench(spec)
    _emit(emit_csv(records), args.out)
    if any(r.error for r in records):
        return 2
    if args.verify and not all(r.verified for r in records):
        return 1
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    graph_specs = _split_csv(args.graphs)
    try:
        if not graph_specs:
            raise BenchError("--graphs is required")
        if args.dump_cover:
            return _dump_cover(graph_specs, args.out)
        if args.dm_report:
            procs = [int(p) for p in _split_csv(args.p)]
            return _dm_report(graph_specs, procs, args.out)
        return _benchmark(args, graph_specs)
    except (BenchError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
