import csv
import io
import json

import pytest

from cliquetensor.controllers.base import BaseController, format_float
from cliquetensor.main import dispatch, main
from cliquetensor.services.graph_service import complete_graph, disjoint_union, join_turan
from cliquetensor.utils.graph6 import graph_from_graph6

K4 = complete_graph(4).to_graph6()
K5 = complete_graph(5).to_graph6()
K23 = join_turan(5, 1, 2).to_graph6()
TWO_TRIANGLES = disjoint_union(complete_graph(3), complete_graph(3)).to_graph6()


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGraphCommands:
    def test_rho_construct(self, capsys):
        """Test rho of the constructed T_3(6) is 4"""
        code, out, _ = run(capsys, ["rho", "--construct", "turan 6 3", "--t", "3"])
        assert code == 0
        document = json.loads(out)
        assert document["rho"] == pytest.approx(4.0, abs=1e-9)
        assert document["converged"] is True
        assert document["t"] == 3

    def test_rho_max_normalized(self, capsys):
        """Test the max-normalized vector peaks at 1"""
        code, out, _ = run(capsys, ["rho", K4, "--t", "2", "--max-normalized"])
        assert code == 0
        assert json.loads(out)["max_normalized_vector"] == pytest.approx([1.0] * 4)

    def test_rho_from_stdin(self, capsys, monkeypatch):
        """Test - reads the graph from standard input"""
        monkeypatch.setattr("sys.stdin", io.StringIO(f"\n{K5}\n"))
        code, out, _ = run(capsys, ["rho", "-", "--t", "3"])
        assert code == 0
        assert json.loads(out)["rho"] == pytest.approx(6.0, abs=1e-9)

    def test_rho_is_byte_deterministic(self, capsys):
        """Test repeated runs print identical documents"""
        _, first, _ = run(capsys, ["rho", "--construct", "join-turan 7 2 2", "--t", "3"])
        _, second, _ = run(capsys, ["rho", "--construct", "join-turan 7 2 2", "--t", "3"])
        assert first == second

    def test_cliques_list(self, capsys):
        """Test cliques counts and lists the triangles of K_4"""
        code, out, _ = run(capsys, ["cliques", K4, "--t", "3", "--list"])
        assert code == 0
        document = json.loads(out)
        assert document["count"] == 4
        assert document["cliques"] == [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
        assert document["clique_regular"] is True

    def test_free_k5(self, capsys):
        """Test K_5 is 2K_3-free"""
        code, out, _ = run(capsys, ["free", K5, "--k", "2", "--r", "2"])
        assert code == 0
        assert json.loads(out)["free"] is True

    def test_free_witness(self, capsys):
        """Test the witness lists two disjoint triangles"""
        code, out, _ = run(capsys, ["free", TWO_TRIANGLES, "--k", "2", "--r", "2", "--witness"])
        document = json.loads(out)
        assert code == 0
        assert document["free"] is False
        assert document["witness"] == [[0, 1, 2], [3, 4, 5]]

    def test_construct_join_turan(self, capsys):
        """Test construct join-turan 7 2 2 prints K_1 ∨ K_{3,3}"""
        code, out, _ = run(capsys, ["construct", "join-turan", "7", "2", "2"])
        assert code == 0
        assert graph_from_graph6(out.strip()).num_edges() == 15

    def test_construct_multipartite(self, capsys):
        """Test construct multipartite takes a part list"""
        code, out, _ = run(capsys, ["construct", "multipartite", "2,2,2"])
        assert code == 0
        assert graph_from_graph6(out.strip()).num_edges() == 12

    def test_output_file(self, capsys, tmp_path):
        """Test --output writes the document to a file"""
        target = tmp_path / "rho.json"
        code, out, _ = run(capsys, ["rho", K4, "--t", "3", "--output", str(target)])
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["rho"] == pytest.approx(3.0, abs=1e-9)


class TestErrors:
    def test_bad_graph6(self, capsys):
        """Test malformed graph6 exits 2 with the offset on standard error"""
        code, out, err = run(capsys, ["rho", "D?", "--t", "2"])
        assert code == 2
        assert out == ""
        assert "offset" in err

    def test_unknown_command(self, capsys):
        """Test an unknown command is an argument error"""
        code, _, _ = run(capsys, ["frobnicate"])
        assert code == 2

    def test_invalid_tolerance(self, capsys):
        """Test tol must be positive"""
        code, _, err = run(capsys, ["rho", K4, "--t", "2", "--tol", "0"])
        assert code == 2
        assert "tol" in err

    def test_order_too_large(self, capsys):
        """Test t > n exits 2"""
        code, _, _ = run(capsys, ["rho", K4, "--t", "5"])
        assert code == 2

    def test_graph_and_construct(self, capsys):
        """Test a graph and --construct together are refused"""
        code, _, _ = run(capsys, ["rho", K4, "--construct", "turan 6 3", "--t", "2"])
        assert code == 2

    def test_dispatch_returns_document(self):
        """Test dispatch returns the exit code and document without printing"""
        result = dispatch(["construct", "turan", "6", "3"])
        assert result.exit_code == 0
        assert graph_from_graph6(result.document).num_edges() == 12


class TestScanCommands:
    def test_scan_all_with_csv(self, capsys, tmp_path):
        """Test scan --all-n prints the record and writes a CSV row"""
        summary = tmp_path / "scan.csv"
        code, out, _ = run(capsys, ["scan", "--all-n", "4", "--k", "1", "--r", "2", "--t", "2", "--csv", str(summary)])
        assert code == 0
        record = json.loads(out)
        assert record["verdict"] == "unique-conjectured"
        assert record["population"]["scanned"] == 64
        with summary.open() as handle:
            rows = list(csv.DictReader(handle))
        assert rows[0]["verdict"] == "unique-conjectured"
        assert rows[0]["scanned"] == "64"

    def test_scan_graph6_file(self, capsys, tmp_path):
        """Test scan --g6 infers the vertex count from the first record"""
        population = tmp_path / "graphs.g6"
        population.write_text(f"D??\n{K23}\n{K5}\n")
        code, out, _ = run(capsys, ["scan", "--g6", str(population), "--k", "1", "--r", "2", "--t", "2"])
        assert code == 0
        record = json.loads(out)
        assert record["params"]["n"] == 5
        assert record["free_count"] == 2
        assert record["maximizers"] == [K23]

    def test_missing_graph6_file(self, capsys, tmp_path):
        """Test an unreadable population exits 2"""
        code, _, _ = run(capsys, ["scan", "--g6", str(tmp_path / "missing.g6"), "--k", "1", "--r", "2", "--t", "2"])
        assert code == 2

    def test_thresholds(self, capsys):
        """Test thresholds prints one row per n"""
        code, out, _ = run(capsys, ["thresholds", "--n-min", "3", "--n-max", "4", "--k", "1", "--r", "2", "--t", "2"])
        assert code == 0
        table = json.loads(out)
        assert [row["n"] for row in table["rows"]] == [3, 4]


class TestVerifyCommands:
    def test_lower_bound(self, capsys):
        """Test verify lower-bound passes with equality on T_3(6)"""
        code, out, _ = run(capsys, ["verify", "lower-bound", "6", "1", "3", "3"])
        assert code == 0
        report = json.loads(out)
        assert report["passed"] is True
        assert report["equality"] is True

    def test_balancing(self, capsys):
        """Test verify balancing on a single move"""
        code, out, _ = run(capsys, ["verify", "balancing", "2", "2", "4,2", "0", "1"])
        assert code == 0
        assert json.loads(out)["increased"] is True

    def test_balancing_needs_gap(self, capsys):
        """Test parts differing by one are an argument error"""
        code, _, _ = run(capsys, ["verify", "balancing", "2", "2", "3,3", "0", "1"])
        assert code == 2

    def test_monotonicity_not_applicable(self, capsys):
        """Test a pair outside the hypotheses is reported and passes"""
        graph = disjoint_union(complete_graph(3), complete_graph(3)).to_graph6()
        code, out, _ = run(capsys, ["verify", "monotonicity", graph, "2", "3", "--t", "3"])
        assert code == 0
        assert json.loads(out)["applicable"] is False

    def test_connectivity_equiv(self, capsys):
        """Test verify connectivity-equiv on n ≤ 4"""
        code, out, _ = run(capsys, ["verify", "connectivity-equiv", "--max-n", "4"])
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_augmentation(self, capsys):
        """Test verify augmentation on two triangles"""
        code, out, _ = run(capsys, ["verify", "augmentation", TWO_TRIANGLES, "--k", "2", "--r", "3", "--t", "3"])
        assert code == 0
        assert json.loads(out)["added_edges"] == [[0, 3], [1, 3]]

    def test_maximizers_from_record(self, capsys, tmp_path):
        """Test verify maximizers reads a stored scan record"""
        record = tmp_path / "record.json"
        code, _, _ = run(capsys, ["scan", "--all-n", "4", "--k", "1", "--r", "2", "--t", "2", "--output", str(record)])
        assert code == 0
        code, out, _ = run(capsys, ["verify", "maximizers", str(record)])
        assert code == 0
        assert json.loads(out)["maximizers"] == 3

    def test_failed_check_exits_one(self, capsys, tmp_path):
        """Test a failing check prints its report and exits 1"""
        record = tmp_path / "record.json"
        run(capsys, ["scan", "--all-n", "4", "--k", "1", "--r", "2", "--t", "2", "--output", str(record)])
        stored = json.loads(record.read_text())
        stored["maximizers"] = ["C`"]
        record.write_text(json.dumps(stored))
        code, out, err = run(capsys, ["verify", "maximizers", str(record)])
        assert code == 1
        assert json.loads(out)["disconnected"] == ["C`"]
        assert "did not pass" in err


class TestRendering:
    def test_floats_carry_seventeen_digits(self):
        """Test rendered floats print 17 significant digits"""
        text = BaseController.render({"x": 0.1, "y": [4.0, -2.5], "z": True})
        assert '"x": 0.10000000000000001' in text
        assert "4.0" in text
        assert "-2.5" in text
        assert json.loads(text) == {"x": 0.1, "y": [4.0, -2.5], "z": True}

    def test_float_format(self):
        """Test integral values keep a decimal point and round-trip exactly"""
        assert format_float(4.0) == "4.0"
        assert format_float(-3.0) == "-3.0"
        assert float(format_float(4.605551275457798)) == 4.605551275457798

    def test_strings_are_not_rewritten(self):
        """Test strings that look like floats stay quoted"""
        text = BaseController.render({"graph": "4.0"})
        assert json.loads(text) == {"graph": "4.0"}
