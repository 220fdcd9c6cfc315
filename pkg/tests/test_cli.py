"""
Tests for the heapkit command line: output formats and exit codes.
"""

from __future__ import annotations

import orjson
import pytest
from typer.testing import CliRunner

runner = CliRunner()


def invoke(*args: str):
    from heapkit_cli.main import app

    return runner.invoke(app, list(args))


class TestCatalogCommands:
    """catalog list / show / freeze."""

    def test_list_json(self):
        result = invoke("catalog", "list", "--format", "json")
        assert result.exit_code == 0, result.output
        rows = orjson.loads(result.stdout)
        assert len(rows) == 21
        assert all(r["ideals"] == r["expected"] for r in rows)

    def test_list_rejects_format(self):
        assert invoke("catalog", "list", "--format", "dot").exit_code == 2

    def test_show_dot(self):
        result = invoke("catalog", "show", "--family", "A_nat", "--rank", "2", "--format", "dot")
        assert result.exit_code == 0, result.output
        assert result.stdout.startswith('digraph "A2^(1)"')

    def test_show_by_diagram_name(self):
        """Diagram names resolve to the catalog heap over that diagram."""
        result = invoke("catalog", "show", "--family", "C2^(1)", "--format", "json")
        assert result.exit_code == 0, result.output
        assert orjson.loads(result.stdout)["diagram"] == "C2^(1)"

    def test_freeze(self, tmp_path):
        result = invoke("catalog", "freeze", "--out", str(tmp_path))
        assert result.exit_code == 0, result.output
        assert len(list(tmp_path.glob("*.json"))) == 21


class TestVerifyCommand:
    """Suites pass on catalog heaps; bad input exits 2."""

    @pytest.mark.parametrize("suite", ["axioms", "relations", "crystal", "weyl"])
    def test_suite_passes(self, suite):
        result = invoke(
            "verify", "--family", "D_nat", "--rank", "4", "--suite", suite, "--format", "json"
        )
        assert result.exit_code == 0, result.output
        (report,) = orjson.loads(result.stdout)
        assert report["passed"]
        assert report["suite"] == suite

    def test_no_full_heap(self):
        """F4^(1) has no full heap."""
        assert invoke("verify", "--family", "F4affine", "--suite", "axioms").exit_code == 2

    def test_unknown_suite(self):
        assert invoke("verify", "--family", "E6", "--suite", "bogus").exit_code == 2

    def test_bad_window(self):
        result = invoke("verify", "--family", "E6", "--suite", "axioms", "--window", "0")
        assert result.exit_code == 2

    def test_bad_orientation(self):
        """0 and 2 are opposite corners of the A3^(1) square."""
        result = invoke(
            "verify", "--family", "A_nat", "--rank", "3", "--suite", "relations",
            "--orientation", "0>2",
        )
        assert result.exit_code == 2


class TestIdealsAndRoots:
    def test_e7_count(self):
        result = invoke("ideals", "count", "--family", "E7affine", "--format", "json")
        assert result.exit_code == 0, result.output
        data = orjson.loads(result.stdout)
        assert data["key"] == "E7"
        assert data["count"] == data["expected"] == 56

    def test_roots_bad_root(self):
        result = invoke("roots", "heaps", "--family", "A_nat", "--rank", "3", "--root", "1,x")
        assert result.exit_code == 2


class TestRender:
    """render --what heap / crystal / chevalley."""

    def test_chevalley_csv(self):
        """sl_4 has 12 bracket rows and 6 coroot rows under one header."""
        result = invoke(
            "render", "--family", "A_nat", "--rank", "3", "--what", "chevalley", "--format", "csv"
        )
        assert result.exit_code == 0, result.output
        lines = result.stdout.strip().splitlines()
        assert lines[0] == "alpha,beta,constant"
        assert len(lines) == 19

    def test_crystal_json(self):
        result = invoke(
            "render", "--family", "E6", "--what", "crystal", "--quotient", "--format", "json"
        )
        assert result.exit_code == 0, result.output
        assert len(orjson.loads(result.stdout)["nodes"]) == 27

    def test_heap_to_file(self, tmp_path):
        path = tmp_path / "out" / "a2.json"
        result = invoke(
            "render", "--family", "A_nat", "--rank", "2", "--format", "json", "--out", str(path)
        )
        assert result.exit_code == 0, result.output
        motif = orjson.loads(path.read_bytes())["motif"]
        assert [m["label"] for m in motif] == [0, 1, 2]

    def test_unknown_target(self):
        assert invoke("render", "--what", "poset").exit_code == 2
