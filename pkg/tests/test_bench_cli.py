import pytest

import tricount as tc
from tricount.bench import BenchError
from tricount.cli import main as cli_main

from conftest import KARATE_PATH


def bench(algs, graphs, reps=2, workers=(1,)):
    return tc.run_bench(tc.RunSpec(algorithms=tuple(algs), graphs=tuple(graphs),
                                   reps=reps, workers=tuple(workers)))


class TestRunBench:
    def test_karate_two_algorithms(self):
        records = bench(["FH", "CETC-Seq-S"], [str(KARATE_PATH)])
        assert len(records) == 2
        assert all(r.count == 45 and r.verified for r in records)
        assert all(r.mean_seconds > 0 for r in records)
        assert {r.graph for r in records} == {"karate"}

    def test_all_seq_group_on_rmat(self):
        records = bench(["all-seq"], ["rmat:8:16:7"], reps=1)
        assert len(records) == 22
        counts = {r.count for r in records}
        assert len(counts) == 1
        assert all(r.verified for r in records)

    def test_parallel_worker_sweep(self):
        records = bench(["EBP"], [str(KARATE_PATH)], workers=(1, 2, 4))
        assert len(records) == 3
        assert {r.count for r in records} == {45}
        assert [r.workers for r in records] == [1, 2, 4]

    def test_sequential_ignores_worker_sweep(self):
        records = bench(["FH"], [str(KARATE_PATH)], workers=(1, 2, 4))
        assert len(records) == 1

    def test_unknown_algorithm_rejected(self):
        with pytest.raises(BenchError, match="unknown algorithm"):
            bench(["FH", "BOGUS"], [str(KARATE_PATH)])

    def test_unreadable_file_becomes_error_records(self):
        records = bench(["FH", "EM"], ["/no/such/file.txt"])
        assert len(records) == 2
        assert all(r.error and not r.verified for r in records)

    def test_triples_reference_on_small_graph(self):
        records = bench(["Triples"], ["rmat:4:4:1"], reps=1)
        assert records[0].verified


class TestGraphSpecs:
    def test_rmat_spec(self):
        gid, g = tc.resolve_graph("rmat:6:16:3")
        assert gid == "rmat:6:16:3"
        assert g.n == 64

    def test_file_prefix(self):
        gid, g = tc.resolve_graph(f"file:{KARATE_PATH}")
        assert gid == "karate"
        assert g.m == 78

    @pytest.mark.parametrize("spec", ["rmat:6:16", "rmat:a:b:c", "rmat:6:16:3:9"])
    def test_bad_rmat_spec(self, spec):
        with pytest.raises(BenchError):
            tc.resolve_graph(spec)


class TestEmitCsv:
    def test_empty_records_header_only(self):
        assert tc.emit_csv([]).strip().count("\n") == 0
        assert tc.emit_csv([]).startswith("algorithm,graph,workers,")

    def test_single_record_two_lines(self):
        rec = tc.BenchRecord("FH", "karate", 1, 10, 0.001, 45, True)
        assert len(tc.emit_csv([rec]).strip().split("\n")) == 2

    def test_sorted_by_algorithm_then_graph(self):
        recs = [
            tc.BenchRecord("W", "b", 1, 1, 0.1, 1, True),
            tc.BenchRecord("EM", "b", 1, 1, 0.1, 1, True),
            tc.BenchRecord("EM", "a", 1, 1, 0.1, 1, True),
        ]
        rows = tc.emit_csv(recs).strip().split("\n")[1:]
        assert [r.split(",")[:2] for r in rows] == [
            ["EM", "a"], ["EM", "b"], ["W", "b"],
        ]

    def test_quoting(self):
        rec = tc.BenchRecord("FH", "karate", 1, 1, 0.1, 0, False,
                             error="bad, very bad")
        assert '"bad, very bad"' in tc.emit_csv([rec])


class TestGroups:
    def test_expansion_sizes(self):
        assert len(tc.expand_algorithms(["all-seq"])) == 22
        assert len(tc.expand_algorithms(["all-par"])) == 11
        assert len(tc.expand_algorithms(["all"])) == 33
        cetc = tc.expand_algorithms(["cetc-family"])
        assert "CETC-Seq" in cetc and "CETC-SM" in cetc and len(cetc) == 7

    def test_dedup_and_order(self):
        assert tc.expand_algorithms(["FH", "FH", "EM"]) == ["FH", "EM"]


class TestCli:
    def test_benchmark_ok(self, capsys):
        code = cli_main(["--algs", "FH", "--graphs", str(KARATE_PATH),
                         "--reps", "1", "--verify"])
        out = capsys.readouterr().out
        assert code == 0
        assert "FH,karate,1,1," in out

    def test_verify_gate_fails_on_disagreement(self, capsys, monkeypatch):
        monkeypatch.setitem(tc.SEQUENTIAL_IDS, "FH", lambda g: 0)
        code = cli_main(["--algs", "FH", "--graphs", str(KARATE_PATH),
                         "--reps", "1", "--verify"])
        assert code == 1

    def test_missing_graphs_is_usage_error(self, capsys):
        assert cli_main(["--algs", "FH"]) == 2

    def test_unknown_algorithm_is_usage_error(self, capsys):
        assert cli_main(["--algs", "NOPE", "--graphs", str(KARATE_PATH)]) == 2

    def test_unreadable_graph_exits_2(self, capsys):
        code = cli_main(["--algs", "FH", "--graphs", "/no/such.txt", "--reps", "1"])
        assert code == 2

    def test_dump_cover(self, capsys):
        code = cli_main(["--dump-cover", "--graphs", str(KARATE_PATH)])
        out = capsys.readouterr().out
        assert code == 0
        assert out.startswith("# karate: 28 cover edges")
        assert len(out.strip().split("\n")) == 29

    def test_dm_report(self, capsys):
        code = cli_main(["--dm-report", "--p", "2,4", "--graphs", str(KARATE_PATH)])
        out = capsys.readouterr().out
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 3
        assert lines[1].startswith("karate,34,78,45,528,")

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "r.csv"
        code = cli_main(["--algs", "LA", "--graphs", str(KARATE_PATH),
                         "--reps", "1", "--out", str(target)])
        assert code == 0
        assert target.read_text().count("\n") == 2

    def test_rmat_graph_spec_via_cli(self, capsys):
        code = cli_main(["--algs", "EH", "--graphs", "rmat:5:8:2", "--reps", "1"])
        assert code == 0
