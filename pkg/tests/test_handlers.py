"""
Command-line tests: every command run through main() with files in tmp_path.
"""
import json

import pytest

from main import main
from src.config.settings import Settings, settings
from src.exceptions import EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR
from src.repositories import TreeRepository
from src.schemas import tree_from_document
from src.services.tree_model import rooted_isomorphic
from tests.test_data.tree_samples import ARC_END, STAR3, STAR3_LEAF, F2, F3, FORK, CLAW


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON payload under tmp_path and return its path as a string."""
    def write(name, payload):
        path = tmp_path / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def cli(capsys):
    """Run main() quietly and return (exit code, stdout, stderr)."""
    def run(*argv):
        code = main(["--log-level", "ERROR", *argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run


class TestAnalyze:
    """Test cases for the analyze command."""

    def test_simple_n_od(self, cli, write_json):
        code, out, _ = cli("analyze", "--input", write_json("star.json", STAR3.document()))

        assert code == EXIT_OK
        assert json.loads(out) == {
            "attached": 0,
            "cells": [{"dim": 3, "edges": [], "id": 0}],
            "intersections": [],
            "ord_basepoint": 3,
        }

    def test_low_order_basepoint_is_augmented(self, cli, write_json):
        code, out, _ = cli("analyze", "--input", write_json("leaf.json", STAR3_LEAF.document()))
        payload = json.loads(out)

        assert code == EXIT_OK
        assert (payload["ord_basepoint"], payload["attached"]) == (1, 2)

    def test_output_is_byte_stable(self, cli, write_json):
        path = write_json("fork.json", FORK.document())
        assert cli("analyze", "--input", path)[1] == cli("analyze", "--input", path)[1]

    def test_hasse_dot(self, cli, write_json):
        code, out, _ = cli("analyze", "--input", write_json("fork.json", FORK.document()), "--format", "dot")

        assert code == EXIT_OK
        assert out.startswith("digraph hasse {")
        assert out.count("->") == 4

    def test_table(self, cli, write_json):
        code, out, _ = cli("analyze", "--input", write_json("f2.json", F2.document()), "--format", "table")

        assert code == EXIT_OK
        assert out.splitlines()[0] == "ord(p) = 3, attached arcs = 0, cells = 2"
        assert "0\t3\t{p}" in out

    def test_cap(self, cli, write_json):
        code, _, err = cli("analyze", "--input", write_json("f3.json", F3.document()), "--cap", "2")

        assert code == EXIT_INPUT_ERROR
        assert "COMPLEX_TOO_LARGE" in err

    def test_cycle(self, cli, write_json):
        path = write_json("cycle.json", {"edges": [["a", "b"], ["b", "c"], ["c", "a"]], "basepoint": "a"})
        code, out, err = cli("analyze", "--input", path)

        assert code == EXIT_INPUT_ERROR
        assert out == ""
        assert f"{path}: TREE_CYCLE_DETECTED" in err

    def test_missing_basepoint(self, cli, write_json):
        code, out, err = cli("analyze", "--input", write_json("free.json", {"edges": STAR3.document()["edges"]}))

        assert code == EXIT_INPUT_ERROR
        assert out == ""
        assert "INPUT_FORMAT" in err
        assert "basepoint" in err

    def test_bad_json(self, cli, write_json):
        code, _, err = cli("analyze", "--input", write_json("bad.json", '{"edges": [["a", "b"]'))

        assert code == EXIT_INPUT_ERROR
        assert "INPUT_FORMAT" in err

    def test_missing_file(self, cli, tmp_path):
        code, _, err = cli("analyze", "--input", str(tmp_path / "absent.json"))

        assert code == EXIT_INPUT_ERROR
        assert "cannot read input" in err

    def test_output_file(self, cli, write_json, tmp_path):
        target = tmp_path / "complex.json"
        code, out, _ = cli("--output", str(target), "analyze", "--input", write_json("f2.json", F2.document()))

        assert code == EXIT_OK
        assert out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["cells"][1]["dim"] == 4


class TestReconstruct:
    """Test cases for the reconstruct command."""

    @pytest.mark.parametrize("sample", [ARC_END, STAR3_LEAF, F2, FORK], ids=lambda sample: sample.name)
    def test_round_trip(self, cli, write_json, tmp_path, sample):
        complex_path = tmp_path / "complex.json"
        cli("--output", str(complex_path), "analyze", "--input", write_json("tree.json", sample.document()))

        code, out, _ = cli("reconstruct", "--input", str(complex_path))
        rebuilt = tree_from_document(TreeRepository().parse(out))

        assert code == EXIT_OK
        assert rooted_isomorphic(rebuilt, sample.pointed())

    def test_tree_dot(self, cli, write_json):
        complex_path = write_json("complex.json", {"cells": [{"id": 0, "dim": 3}]})
        code, out, _ = cli("reconstruct", "--input", complex_path, "--format", "dot")

        assert code == EXIT_OK
        assert out.startswith("graph tree {")
        assert out.count(" -- ") == 3
        assert out.count("doublecircle") == 1

    def test_tree_table(self, cli, write_json):
        complex_path = write_json("complex.json", {"cells": [{"id": 0, "dim": 3}]})
        code, out, _ = cli("reconstruct", "--input", complex_path, "--format", "table")

        assert code == EXIT_OK
        assert out.splitlines() == [
            "vertex\torder\ttype",
            "p *\t3\tramification",
            "p.1\t1\tend",
            "p.2\t1\tend",
            "p.3\t1\tend",
        ]

    def test_unreachable_cell(self, cli, write_json):
        path = write_json("complex.json", {"cells": [{"id": 0, "dim": 3}, {"id": 1, "dim": 4}]})
        code, _, err = cli("reconstruct", "--input", path)

        assert code == EXIT_INPUT_ERROR
        assert "COMPLEX_MALFORMED" in err

    def test_ambiguous_base(self, cli, write_json):
        path = write_json("complex.json", {"cells": [{"id": 0, "dim": 3}, {"id": 1, "dim": 3}]})
        code, _, err = cli("reconstruct", "--input", path)

        assert code == EXIT_INPUT_ERROR
        assert "COMPLEX_AMBIGUOUS_BASE" in err

    @pytest.mark.parametrize("attached", [7, 1])
    def test_attached_count_must_match_basepoint_order(self, cli, write_json, tmp_path, attached):
        complex_path = tmp_path / "complex.json"
        cli("--output", str(complex_path), "analyze", "--input", write_json("claw.json", CLAW.document()))
        document = json.loads(complex_path.read_text(encoding="utf-8"))
        document["attached"] = attached

        code, out, err = cli("reconstruct", "--input", write_json("bad.json", document))

        assert code == EXIT_INPUT_ERROR
        assert out == ""
        assert "INPUT_FORMAT" in err
        assert "attached" in err

    def test_attached_arcs_missing_from_the_complex(self, cli, write_json, tmp_path):
        complex_path = tmp_path / "complex.json"
        cli("--output", str(complex_path), "analyze", "--input", write_json("claw.json", CLAW.document()))
        document = json.loads(complex_path.read_text(encoding="utf-8"))
        del document["ord_basepoint"]
        document["attached"] = 1

        code, _, err = cli("reconstruct", "--input", write_json("bad.json", document))

        assert code == EXIT_INPUT_ERROR
        assert "COMPLEX_MALFORMED" in err
        assert "internal error" not in err


class TestCompare:
    """Test cases for the compare command."""

    def test_end_point_and_interior_point_of_an_arc(self, cli, write_json):
        end = write_json("end.json", ARC_END.document())
        interior = write_json("interior.json", {"edges": [["a", "m"], ["m", "b"]], "basepoint": "m"})

        code, out, _ = cli("compare", "--input", end, "--input", interior)
        payload = json.loads(out)

        assert code == EXIT_OK
        assert payload["result"] == "distinct"
        assert [s["ord"] for s in payload["signatures"]] == [1, 2]

    def test_symmetric_basepoints(self, cli, write_json):
        first = write_json("p.json", F2.document())
        second = write_json("a.json", {"edges": F2.document()["edges"], "basepoint": "a"})

        code, out, _ = cli("compare", "--input", first, "--input", second, "--format", "table")

        assert code == EXIT_OK
        assert out.splitlines()[0] == "equivalent"

    def test_missing_basepoint(self, cli, write_json):
        first = write_json("p.json", F2.document())
        second = write_json("free.json", {"edges": F2.document()["edges"]})
        code, _, err = cli("compare", "--input", first, "--input", second)

        assert code == EXIT_INPUT_ERROR
        assert "basepoint" in err

    def test_needs_two_inputs(self, cli, write_json):
        code, _, err = cli("compare", "--input", write_json("p.json", F2.document()))

        assert code == EXIT_INPUT_ERROR
        assert "exactly two" in err


class TestKx:
    """Test cases for the kx command."""

    def test_double_star(self, cli, write_json):
        code, out, _ = cli("kx", "--input", write_json("f2.json", {"edges": F2.document()["edges"]}))

        assert code == EXIT_OK
        assert json.loads(out) == {"equal": True, "homogeneity_degree": 4, "kx_size": 4}

    def test_degree_two_vertices_are_suppressed(self, cli, write_json):
        path = write_json("path.json", {"edges": [["a", "b"], ["b", "c"], ["c", "d"]]})
        code, out, _ = cli("kx", "--input", path, "--format", "table")

        assert code == EXIT_OK
        assert out == "kx_size\thomogeneity_degree\n2\t2\n"


class TestVerify:
    """Test cases for the verify command."""

    def test_figure(self, cli):
        code, out, _ = cli("verify", "--figure")
        payload = json.loads(out)

        assert code == EXIT_OK
        assert payload["passed"] is True
        assert payload["notes"]["intersection"] == 9

    def test_single_tree(self, cli, write_json):
        code, out, _ = cli("verify", "--input", write_json("fork.json", FORK.document()))

        assert code == EXIT_OK
        assert "elapsed" not in json.loads(out)

    def test_corrupted_complex(self, cli, write_json, tmp_path):
        tree_path = write_json("f3.json", F3.document())
        complex_path = tmp_path / "complex.json"
        cli("--output", str(complex_path), "analyze", "--input", tree_path)
        document = json.loads(complex_path.read_text(encoding="utf-8"))
        document["cells"][0]["dim"] = 2
        complex_path.write_text(json.dumps(document), encoding="utf-8")

        code, out, _ = cli("verify", "--input", tree_path, "--complex", str(complex_path))
        payload = json.loads(out)

        assert code == EXIT_CHECK_FAILED
        assert payload["passed"] is False
        failing = [check for check in payload["checks"] if check["failures"]]
        assert all("counterexample" in check for check in failing)

    def test_supplied_complex_for_augmented_basepoint(self, cli, write_json, tmp_path):
        tree_path = write_json("leaf.json", STAR3_LEAF.document())
        complex_path = tmp_path / "complex.json"
        cli("--output", str(complex_path), "analyze", "--input", tree_path)

        code, _, _ = cli("verify", "--input", tree_path, "--complex", str(complex_path))
        assert code == EXIT_OK

    def test_complex_without_tree_is_rejected(self, cli, write_json):
        code, out, err = cli("verify", "--complex", write_json("complex.json", {"cells": [{"id": 0, "dim": 3}]}))

        assert code == EXIT_INPUT_ERROR
        assert out == ""
        assert "INPUT_FORMAT" in err
        assert "--input" in err

    def test_sweep(self, cli):
        code, out, _ = cli("verify", "--sweep", "uniqueness", "--max-edges", "3", "--format", "table")

        assert code == EXIT_OK
        assert "pointed_classes: 5" in out
        assert "scope: 3 edges, passed" in out

    def test_invalid_bound_is_rejected_by_the_parser(self, cli):
        with pytest.raises(SystemExit) as excinfo:
            cli("verify", "--sweep", "kx", "--max-edges", "0")
        assert excinfo.value.code == 2


class TestEnumerate:
    """Test cases for the enumerate command."""

    def test_pointed(self, cli):
        code, out, _ = cli("enumerate", "--max-edges", "3", "--pointed")
        trees = json.loads(out)

        assert code == EXIT_OK
        assert len(trees) == 5
        assert all("basepoint" in tree for tree in trees)

    def test_free_table(self, cli):
        code, out, _ = cli("enumerate", "--max-edges", "5", "--format", "table")

        assert code == EXIT_OK
        assert len(out.splitlines()) == 1 + 5


class TestConfiguration:
    """Invalid settings stop the run before any command."""

    def test_invalid_setting(self, cli, monkeypatch):
        monkeypatch.setattr(Settings, "COMPLEX_CELL_CAP", 0)
        code, _, err = cli("verify", "--figure")

        assert code == EXIT_INPUT_ERROR
        assert "CONFIG_COMPLEX_CELL_CAP" in err

    def test_non_integer_setting(self, cli, monkeypatch):
        monkeypatch.setattr(Settings, "SWEEP_JOBS", "many")
        code, _, err = cli("verify", "--figure")

        assert code == EXIT_INPUT_ERROR
        assert "CONFIG_SWEEP_JOBS" in err
        assert "Traceback" not in err

    def test_no_log_file_by_default(self, cli, write_json, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        monkeypatch.setattr(settings, "DEBUG", False)
        monkeypatch.setattr(Settings, "LOG_FILE_PATH", None)
        code, _, _ = cli("analyze", "--input", write_json("star.json", STAR3.document()))

        assert code == EXIT_OK
        assert sorted(path.name for path in tmp_path.iterdir()) == ["star.json"]

    def test_log_file_when_configured(self, cli, write_json, tmp_path, monkeypatch):
        log_path = tmp_path / "logs" / "run.log"
        monkeypatch.setattr(settings, "DEBUG", False)
        monkeypatch.setattr(Settings, "LOG_FILE_PATH", str(log_path))
        code, _, _ = cli("analyze", "--input", write_json("star.json", STAR3.document()))

        assert code == EXIT_OK
        assert log_path.exists()
