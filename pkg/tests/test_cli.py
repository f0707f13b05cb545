"""Command-line interface: formats, exit codes, file round trips."""

import json

import pytest

from goeritz2 import curve as cm
from goeritz2.cli import main


@pytest.fixture
def p_file(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(cm.dumps(cm.P_CURVE))
    return str(path)


@pytest.fixture
def pushoff_b_file(tmp_path):
    path = tmp_path / "pb.json"
    path.write_text(cm.dumps(cm.PUSHOFFS["B"]))
    return str(path)


def test_counts_command(p_file, capsys):
    assert main(["counts", "--in", p_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert (doc["a"], doc["b"], doc["c"]) == (2, 0, 0)


def test_apply_delta_gives_prime(p_file, tmp_path, capsys):
    out = str(tmp_path / "pp.json")
    assert main(["apply", "--in", p_file, "--word", "d", "--out", out]) == 0
    w = cm.loads(open(out).read())
    assert cm.counts(w).abc() == (0, 2, 0)


def test_apply_roundtrip_canonical_file(p_file, tmp_path):
    mid = str(tmp_path / "mid.json")
    back = str(tmp_path / "back.json")
    assert main(["apply", "--in", p_file, "--word", "dbg", "--out", mid]) == 0
    assert main(["apply", "--in", mid, "--word", "gBD", "--out", back]) == 0
    orig = cm.canonical_form(cm.loads(open(p_file).read()))
    returned = cm.canonical_form(cm.loads(open(back).read()))
    assert cm.canonical_unoriented(orig) == cm.canonical_unoriented(returned)


def test_reduce_prime_emits_delta_inverse(p_file, tmp_path, capsys):
    pp = str(tmp_path / "pp.json")
    main(["apply", "--in", p_file, "--word", "d", "--out", pp])
    cert_path = str(tmp_path / "cert.json")
    assert main(["reduce", "--in", pp, "--out", cert_path]) == 0
    cert = json.loads(open(cert_path).read())
    assert cert["word"] == "D"
    assert cert["output"]["steps"]


def test_verify_rejects_nonseparating(pushoff_b_file, capsys):
    assert main(["verify", "--in", pushoff_b_file]) == 4
    assert "nonseparating" in capsys.readouterr().out


def test_verify_accepts_standard(p_file, capsys):
    assert main(["verify", "--in", p_file]) == 0
    assert "dominance class A" in capsys.readouterr().out


def test_malformed_input_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"format": "goeritz-curve/1", "representation": "steps", '
                   '"steps": [["A1", "H2"]]}')
    assert main(["validate", "--in", str(bad)]) == 3


def test_unembeddable_input_exit_code(tmp_path):
    steps = [["A1", "H1"], ["B1", "H3"], ["Z2", "H4"], ["B2", "H2"],
             ["Z1", "H1"], ["X1", "H2"], ["A2", "H4"], ["X2", "H3"]]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(
        {"format": "goeritz-curve/1", "representation": "steps", "steps": steps}))
    assert main(["validate", "--in", str(bad)]) == 3


def test_usage_error_exit_code():
    assert main(["apply"]) == 2


def test_null_homotopic_input_exit_code(tmp_path):
    bad = tmp_path / "null.json"
    bad.write_text(json.dumps(
        {"format": "goeritz-curve/1", "representation": "steps",
         "steps": [["A1", "H1"], ["A1", "H3"]]}))
    assert main(["normalize", "--in", str(bad)]) == 3


def test_words_machine_readable_output(p_file, tmp_path):
    out = tmp_path / "words.json"
    assert main(["words", "--in", p_file, "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["format"] == "goeritz-arc-words/1"
    assert len(doc["arcs"]) == 2


def test_normal_coordinates_output(p_file, tmp_path):
    out = str(tmp_path / "p-normal.json")
    assert main(["normalize", "--in", p_file, "--format", "normal",
                 "--out", out]) == 0
    doc = json.loads(open(out).read())
    assert doc["representation"] == "normal"
    returned = cm.from_doc(doc)
    assert cm.signature(returned) == cm.signature(cm.P_CURVE)


def test_words_command(p_file, capsys):
    assert main(["words", "--in", p_file]) == 0
    out = capsys.readouterr().out
    assert "theta-V: X X" in out and "bounds disk in V: True" in out


def test_census_command(p_file, capsys):
    assert main(["census", "--in", p_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["AA1"] == 1 and doc["AA2"] == 1


def test_render_command(p_file, tmp_path):
    svg = tmp_path / "p.svg"
    assert main(["render", "--in", p_file, "--svg", str(svg)]) == 0
    text = svg.read_text()
    assert text.startswith("<svg") and "polygon" in text and "curve" in text


def test_atlas_command(tmp_path, capsys):
    out = str(tmp_path / "atlas.jsonl")
    assert main(["atlas", "--depth", "1", "--out", out]) == 0
    table = capsys.readouterr().out
    assert "2 0 0" in table
    assert (tmp_path / "atlas.jsonl").exists()
    assert (tmp_path / "atlas.jsonl.idx").exists()
