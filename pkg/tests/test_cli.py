import io
import json
import subprocess
import sys

import pytest
from hypothesis import given

from ccminor import io as gio
from ccminor.cli import main
from ccminor.gen import cycle, fan
from ccminor.io import ParseError
from ccminor.isomorph import is_isomorphic

from helpers import multigraphs


def run(args, stdin=""):
    p = subprocess.run([sys.executable, "-m", "ccminor", *args], input=stdin, capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def call(args, monkeypatch, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    out = io.StringIO()
    return main(args, out), out.getvalue()


def test_bond_classify_pipeline():
    _, g, _ = run(["gen", "--family", "bond", "--n", "3"])
    code, out, _ = run(["classify", "--kmax", "4"], g)
    doc = json.loads(out)
    assert code == 0 and doc["max_k"] == 3 and doc["obstruction"]["kind"] == "BondKMinus1"


def test_check_absent(tmp_path):
    c3 = tmp_path / "c3.g"
    c3.write_text(gio.dumps(cycle(3)))
    code, out, _ = run(["check", "--minor", str(c3)], gio.dumps(cycle(5)))
    assert (code, out.strip()) == (1, "absent")


def test_check_present(tmp_path, monkeypatch):
    k1 = tmp_path / "k1.g"
    k1.write_text("vertices 1\n")
    code, out = call(["check", "--minor", str(k1)], monkeypatch, gio.dumps(cycle(5)))
    assert code == 0 and len(json.loads(out)["steps"]) == 1


def test_fan_template_pipeline(monkeypatch):
    code, out = call(["extract", "--goal", "template", "--r", "7"], monkeypatch, gio.dumps(fan(5)))
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "TemplateExtension" and doc["params"]["parts"] == 7


def test_extract_failure_exit(monkeypatch):
    code, out = call(["extract", "--goal", "fan", "-t", "30"], monkeypatch, gio.dumps(gio.loads(
        "vertices 4\nedge 0 0 1\nedge 1 0 2\nedge 2 0 3\nedge 3 1 2\nedge 4 1 3\nedge 5 2 3\n")))
    assert code == 1 and json.loads(out)["kind"] == "Failure"


def test_extract_dot(monkeypatch):
    code, out = call(["extract", "--goal", "3con", "--edges", "0,5", "--emit", "dot"], monkeypatch,
                     "vertices 4\nedge 0 0 1\nedge 1 0 2\nedge 2 0 3\nedge 3 1 2\nedge 4 1 3\nedge 5 2 3\n")
    assert code == 0 and out.startswith("graph") and "color=red" in out


def test_usage_errors(monkeypatch, capsys):
    assert call(["extract", "--goal", "3con"], monkeypatch, gio.dumps(cycle(4)))[0] == 2
    assert call(["frobnicate"], monkeypatch)[0] == 2
    assert call(["classify", "--bogus"], monkeypatch)[0] == 2


def test_parse_error_names_line(monkeypatch, capsys):
    code, _ = call(["classify"], monkeypatch, "vertices 2\nedge 0 0 1\nedge 1 0 7\n")
    assert code == 2 and "line 3" in capsys.readouterr().err


def test_decompose_and_dual(monkeypatch):
    code, out = call(["decompose"], monkeypatch, gio.dumps(cycle(5)))
    assert code == 0 and [n["tag"] for n in json.loads(out)["nodes"]] == ["K3"] * 3
    code, out = call(["dual"], monkeypatch, gio.dumps(cycle(4)))
    gd = gio.loads(out)
    assert code == 0 and gd.num_vertices == 2 and gd.num_edges == 4 and "# primal 0 dual 0" in out


def test_verify_limit(monkeypatch):
    code, out = call(["verify", "--suite", "lemma41", "--limit", "10"], monkeypatch)
    assert code == 0 and out.startswith("PASS lemma41: 10/10")


def test_parse_errors():
    for text in ["edge 0 0 1\n", "vertices 2\nedge 0 0 1\nedge 0 1 0\n", "vertices x\n", "wat\n"]:
        with pytest.raises(ParseError):
            gio.loads(text)


@given(multigraphs(max_n=6, max_m=9, loops=True))
def test_edge_list_round_trip(g):
    assert is_isomorphic(gio.loads(gio.dumps(g)), g)
