"""End-to-end tests of the command-line interface."""
import json

import pytest

from mvq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestVolume:
    def test_total(self, capsys):
        code, out, _ = run(capsys, "volume", "2", "0")
        assert code == 0
        assert "1/15" in out and "6" in out

    def test_per_graph_rows(self, capsys):
        code, out, _ = run(capsys, "volume", "2", "0", "--per-graph")
        assert code == 0
        for q in ("16/945", "1/2835", "8/225", "1/675", "1/135", "2/405"):
            assert q in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "--json", "volume", "1", "2", "--per-graph")
        assert code == 0
        doc = json.loads(out)
        assert doc["total"]["coeff"] == "1/3" or doc["total"]["coeff"] == [1, 3]

    def test_invalid_input_exits_one(self, capsys):
        code, _, err = run(capsys, "volume", "0", "2")
        assert code == 1
        assert err


class TestSiegelVeech:
    def test_both_methods_match(self, capsys):
        code, out, _ = run(capsys, "sv", "2", "0", "--method", "both")
        assert code == 0
        assert "19/18" in out
        assert "MATCH" in out

    def test_out_of_hypothesis_exits_two(self, capsys):
        code, _, err = run(capsys, "sv", "1", "1", "--method", "boundary")
        assert code == 2
        assert err


class TestStatistics:
    def test_pk(self, capsys):
        code, out, _ = run(capsys, "pk", "2", "0")
        assert code == 0
        assert "7/27" in out and "5/27" in out

    def test_lyapunov(self, capsys):
        code, out, _ = run(capsys, "lyapunov", "2", "0")
        assert code == 0
        assert "4/3" in out

    def test_freq(self, capsys, tmp_path):
        doc = {
            "vertices": [{"genus": 0}, {"genus": 1}],
            "edges": [[0, 0], [0, 1]],
            "legs": [],
            "weights": [1, 1],
        }
        path = tmp_path / "mc.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "freq", "--multicurve", str(path))
        assert code == 0
        assert "/" in out  # a positive exact rational

    def test_expect_divergent(self, capsys, tmp_path):
        doc = {
            "vertices": [{"genus": 0}, {"genus": 1}],
            "edges": [[0, 0], [0, 1]],
            "legs": [],
        }
        path = tmp_path / "graph.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(
            capsys, "expect", "--graph", str(path), "--num", "1,0", "--den", "0,1"
        )
        assert code == 0
        assert "0.54107" in out
        code, out, _ = run(
            capsys, "expect", "--graph", str(path), "--num", "0,1", "--den", "1,0"
        )
        assert code == 0
        assert "oo" in out or "inf" in out

    def test_expect_with_heights(self, capsys, tmp_path):
        doc = {
            "vertices": [{"genus": 0}],
            "edges": [[0, 0], [0, 0]],
            "legs": [],
        }
        path = tmp_path / "graph.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(
            capsys,
            "expect",
            "--graph",
            str(path),
            "--num",
            "1,0",
            "--den",
            "0,1",
            "--heights",
            "1,1",
        )
        assert code == 0
        assert "7/3" in out


class TestAsymptotics:
    def test_agk(self, capsys):
        code, out, _ = run(capsys, "agk", "2")
        assert code == 0
        assert "1" in out

    def test_harmonic(self, capsys):
        code, out, _ = run(capsys, "--json", "harmonic", "H", "2", "10")
        assert code == 0
        json.loads(out)

    def test_sep_ratio(self, capsys):
        code, out, _ = run(capsys, "sep-ratio", "3")
        assert code == 0
        assert "5/1776" in out

    def test_poisson(self, capsys):
        code, out, _ = run(capsys, "poisson", "26", "--kmax", "6")
        assert code == 0
        assert "2.48" in out


class TestOracle:
    def test_lattice(self, capsys):
        code, out, _ = run(
            capsys, "oracle", "lattice", "--m", "1,3", "--N", "50"
        )
        assert code == 0
        assert "0.0151882" in out  # normalized value alongside the raw count

    def test_count(self, capsys):
        code, out, _ = run(capsys, "oracle", "count", "1", "2", "--N", "200")
        assert code == 0


class TestGraphsAndChecks:
    def test_graphs_listing(self, capsys):
        code, out, _ = run(capsys, "graphs", "2", "0")
        assert code == 0
        assert out.count("\n") >= 7

    def test_check_all(self, capsys):
        code, out, _ = run(capsys, "check-all")
        assert code == 0
        assert "PASS" in out and "FAIL" not in out
