from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from conftest import DATA
from hzcolor.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from hzcolor.graph import complete_graph, emit_edgelist, emit_graph6, k5_minus_e, parse_graph6
from hzcolor.generate import random_h4
from hzcolor.structure import in_H_k


def run(capsys, *argv: str) -> tuple[int, list[dict], str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    recs = [json.loads(ln) for ln in out.splitlines() if ln.startswith("{")]
    return code, recs, out + err


def write(tmp_path, name: str, text: str) -> str:
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_classify_graph6(tmp_path, capsys):
    g = random_h4(12, 4)
    path = write(tmp_path, "in.g6", emit_graph6(g) + "\n" + emit_graph6(k5_minus_e()) + "\n")
    code, recs, _ = run(capsys, "classify", path, "--trace")
    assert code == EXIT_OK
    assert recs[0]["verdict"] == "class1" and len(recs[0]["coloring"]) == g.m
    assert recs[0]["route"] == "reduction" and recs[0]["trace"]
    assert recs[1] == {"certificate": "K5MinusE", "graph6": emit_graph6(k5_minus_e()), "route": "k5-e", "verdict": "class2"}


def test_classify_edgelist_blocks(tmp_path, capsys):
    text = emit_edgelist(random_h4(10, 1)) + "\n" + emit_edgelist(random_h4(10, 2))
    code, recs, _ = run(capsys, "classify", "--format", "edgelist", write(tmp_path, "in.txt", text))
    assert code == EXIT_OK and [r["verdict"] for r in recs] == ["class1", "class1"]


def test_classify_reports_out_of_scope(tmp_path, capsys):
    code, recs, _ = run(capsys, "classify", write(tmp_path, "k5.g6", emit_graph6(complete_graph(5))))
    assert code == EXIT_FAIL and "error" in recs[0]


def test_color_fails_on_class2(tmp_path, capsys):
    code, recs, _ = run(capsys, "color", write(tmp_path, "k.g6", emit_graph6(k5_minus_e())))
    assert code == EXIT_FAIL and recs[0]["verdict"] == "class2"


def test_stdin_input(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(emit_graph6(random_h4(9, 0)) + "\n"))
    code, recs, _ = run(capsys, "color")
    assert code == EXIT_OK and recs[0]["verdict"] == "class1"


def test_oracle_command(tmp_path, capsys):
    code, recs, _ = run(capsys, "oracle", write(tmp_path, "k.g6", emit_graph6(complete_graph(4)) + "\n" + emit_graph6(k5_minus_e()) + "\n"))
    assert code == EXIT_OK
    assert [(r["chromatic_index"], r["class"]) for r in recs] == [(3, 1), (5, 2)]


def test_gen(capsys, tmp_path):
    out = tmp_path / "g.g6"
    assert main(["gen", "--n", "14", "--count", "3", "--seed", "5", "--out", str(out)]) == EXIT_OK
    lines = out.read_text().split()
    assert len(lines) == 3 and all(in_H_k(parse_graph6(ln), 4) for ln in lines)
    assert main(["gen", "--n", "4"]) == EXIT_FAIL
    assert main(["gen", "--n", "5", "--count", "-1"]) == EXIT_USAGE


def test_sweep_is_byte_identical(tmp_path):
    src = str(DATA / "all_n1-7.g6.gz")
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert main(["sweep", src, "--out", str(a), "--seed", "3"]) == EXIT_OK
    assert main(["sweep", src, "--out", str(b), "--seed", "3", "--jobs", "2"]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    summary = json.loads(a.read_text().splitlines()[-1])["summary"]
    assert summary["total"] == 1252 and summary["class2"] == 1


def test_sweep_needs_graph6(tmp_path, capsys):
    code, _, err = run(capsys, "sweep", "--format", "edgelist", write(tmp_path, "x", "0 1\n"))
    assert code == EXIT_USAGE and "graph6" in err


def test_verify_suites(tmp_path, capsys):
    code, recs, _ = run(capsys, "verify", "--suite", "kempe", "--trials", "300")
    assert code == EXIT_OK and recs[0]["passed"] and recs[0]["checked"] == 300
    code, recs, _ = run(capsys, "verify", "--suite", "lemmas", "--per-kind", "5")
    assert code == EXIT_OK and recs[0]["checked"] == 15
    path = write(tmp_path, "k.g6", emit_graph6(k5_minus_e()) + "\nDQc\n")
    for suite in ("val", "hz", "theorem"):
        code, recs, _ = run(capsys, "verify", "--suite", suite, path)
        assert code == EXIT_OK and recs[0]["suite"] == suite


def test_usage_errors(tmp_path, capsys):
    assert main(["frobnicate"]) == EXIT_USAGE
    assert main(["classify", str(tmp_path / "missing.g6")]) == EXIT_USAGE
    assert main([]) == EXIT_USAGE
    capsys.readouterr()


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == EXIT_OK
    assert "classify" in capsys.readouterr().out


def test_console_script_module():
    out = subprocess.run(
        [sys.executable, "-m", "hzcolor.cli", "gen", "--n", "7"], capture_output=True, text=True, check=True
    )
    assert in_H_k(parse_graph6(out.stdout.strip()), 4)


@pytest.mark.parametrize("bad", ["--seed=-3", "--budget-nodes=0"])
def test_bad_numeric_options(tmp_path, capsys, bad):
    path = write(tmp_path, "k.g6", emit_graph6(k5_minus_e()) + "\n")
    assert main(["classify", path, bad]) == EXIT_USAGE
