from __future__ import annotations

import json

import pytest

from schemapath.cli import default_compiled_path, main

FIVE_NODE_LINE = "5/2  D . B . s . f . r~ . A . C"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compile_reports_levels(capsys, example_schema_file):
    code, out, _ = run(capsys, "compile", str(example_schema_file))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "levels: 6 -> 2"
    assert lines[1] == "stored hypernodes: 8"
    assert default_compiled_path(example_schema_file).exists()


def test_compile_disconnected_schema(capsys, tmp_path):
    path = tmp_path / "disconnected.json"
    path.write_text(json.dumps(
        {"object_types": [{"name": "A"}, {"name": "B"}]}), encoding="utf-8")
    code, _, err = run(capsys, "compile", str(path))
    assert code == 2
    assert "schema graph not connected" in err


def test_compile_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "compile", str(tmp_path / "nope.json"))
    assert code == 1
    assert "cannot read" in err


def test_compile_invalid_schema(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{broken", encoding="utf-8")
    code, _, err = run(capsys, "compile", str(path))
    assert code == 2
    assert "line 1" in err


def test_query_first_line_is_best_path(capsys, example_schema_file):
    code, out, _ = run(capsys, "query", str(example_schema_file), "D", "C")
    assert code == 0
    assert out.splitlines()[0] == FIVE_NODE_LINE


def test_query_more_exhausts(capsys, example_schema_file):
    code, out, _ = run(capsys, "query", str(example_schema_file),
                       "D", "C", "--more", "10")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == FIVE_NODE_LINE
    assert len(lines) == 4
    assert lines[-1] == "exhausted"
    assert lines[1].startswith("3  ") and lines[2].startswith("3  ")


def test_query_uses_compiled_artifact(capsys, example_schema_file):
    code, _, _ = run(capsys, "compile", str(example_schema_file))
    assert code == 0
    code, out, _ = run(capsys, "query", str(example_schema_file), "D", "C")
    assert code == 0
    assert out.splitlines()[0] == FIVE_NODE_LINE


def test_query_same_points_rejected(capsys, example_schema_file):
    code, _, err = run(capsys, "query", str(example_schema_file), "D", "D")
    assert code == 2
    assert "points must be distinct" in err


def test_query_unknown_point_rejected(capsys, example_schema_file):
    code, _, err = run(capsys, "query", str(example_schema_file), "D", "Zed")
    assert code == 2
    assert "unknown point" in err


def test_query_c_weight_flag(capsys, example_schema_file):
    code, out, _ = run(capsys, "query", str(example_schema_file),
                       "D", "C", "--c-weight", "0")
    assert code == 0
    assert out.splitlines()[0] == "5  D . B . s . f . r~ . A . C"


def test_query_c_weight_env(capsys, example_schema_file, monkeypatch):
    monkeypatch.setenv("SCHEMAPATH_C_WEIGHT", "0")
    code, out, _ = run(capsys, "query", str(example_schema_file), "D", "C")
    assert code == 0
    assert out.splitlines()[0] == "5  D . B . s . f . r~ . A . C"


def test_query_invalid_c_weight(capsys, example_schema_file):
    code, _, err = run(capsys, "query", str(example_schema_file),
                       "D", "C", "--c-weight", "7")
    assert code == 2
    assert "c_weight" in err
