from __future__ import annotations

import json

import pytest

from wfc import cli, formats
from wfc.errors import MultipleSources, NetSyntaxError, UnsupportedPnml
from wfc.generators import build_fixture, fixture_names

PNML_W0 = """<?xml version="1.0"?>
<pnml xmlns="http://www.pnml.org/version-2009/grammar/pnml">
  <net id="n1" type="http://www.pnml.org/version-2009/grammar/ptnet">
    <page id="pg1">
      <place id="pi"><initialMarking><text>1</text></initialMarking></place>
      <place id="po"/>
      <transition id="t"><name><text>a</text></name></transition>
      <transition id="u"/>
      <place id="mid"/>
      <arc id="a1" source="pi" target="t"/>
      <arc id="a2" source="t" target="mid"/>
      <arc id="a3" source="mid" target="u"/>
      <arc id="a4" source="u" target="po"/>
    </page>
  </net>
</pnml>
"""


def test_native_roundtrip_canonical(w0):
    text = formats.write_native(w0, "W0")
    assert formats.write_native(formats.parse_native(text), "W0") == text


def test_native_missing_field():
    with pytest.raises(NetSyntaxError):
        formats.parse_native(json.dumps({"name": "x", "places": [], "transitions": [],
                                         "arcs": [], "source": "pi"}))


def test_native_bad_json_reports_line():
    with pytest.raises(NetSyntaxError) as exc:
        formats.parse_native("{\n  broken\n}")
    assert exc.value.line == 2


def test_pnml_import():
    net = formats.parse_pnml_subset(PNML_W0)
    assert net.source == "pi" and net.sink == "po"
    assert net.label("t") == "a" and net.label("u") is None


def test_pnml_two_sources():
    bad = PNML_W0.replace('<place id="mid"/>', '<place id="mid"/><place id="x"/>'
                          '<arc id="a9" source="x" target="u"/>')
    with pytest.raises(MultipleSources):
        formats.parse_pnml_subset(bad)


def test_pnml_weighted_arc_rejected():
    bad = PNML_W0.replace(
        '<arc id="a1" source="pi" target="t"/>',
        '<arc id="a1" source="pi" target="t"><inscription><text>2</text></inscription></arc>')
    with pytest.raises(UnsupportedPnml):
        formats.parse_pnml_subset(bad)


def test_dot_export(w0, fx):
    dot = formats.export_dot(w0, "W0")
    assert dot.count("shape=circle") == 2
    assert dot.count("shape=box") == 1
    assert dot.count("->") == len(w0.arcs)
    for name in fixture_names():
        text = formats.export_dot(build_fixture(name), name)
        assert text.startswith("digraph")


def _fixture_path(name: str) -> str:
    from importlib import resources

    return str(resources.files("wfc") / "fixtures" / f"{name}.wfnet.json")


def test_cli_score_text(capsys):
    rc = cli.main(["score", _fixture_path("W0")])
    out = capsys.readouterr().out
    assert rc == 0
    assert "size = 3" in out
    assert "cnc = 0.6666666667 (2/3)" in out


def test_cli_score_structured_exact(capsys):
    rc = cli.main(["score", _fixture_path("W2_MM"), "--measure", "mm", "--measure", "cnc",
                   "--format", "structured"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["scores"]["mm"] == {"num": 4, "den": 1}
    assert payload["scores"]["cnc"] == {"num": 1, "den": 1}


def test_cli_validate_and_errors(tmp_path, capsys):
    rc = cli.main(["validate", _fixture_path("M_example")])
    assert rc == 0
    bad = tmp_path / "bad.wfnet.json"
    bad.write_text(json.dumps({
        "name": "bad", "places": ["pi", "po", "q"],
        "transitions": [{"id": "t", "label": None}],
        "arcs": [["pi", "t"], ["t", "po"]], "source": "pi", "sink": "po",
    }))
    rc = cli.main(["validate", str(bad)])
    assert rc == 1
    assert "q" in capsys.readouterr().err


def test_cli_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["score", "x.wfnet.json", "--format", "bogus"])
    assert exc.value.code == 2


def test_cli_compose_generate_language(tmp_path, capsys):
    out = tmp_path / "seq.wfnet.json"
    rc = cli.main(["compose", "--op", "seq", "-o", str(out),
                   _fixture_path("W0_a"), _fixture_path("W0_b")])
    assert rc == 0 and out.exists()
    rc = cli.main(["score", str(out), "--measure", "size"])
    assert rc == 0
    assert "size = 7" in capsys.readouterr().out

    gen = tmp_path / "fam.wfnet.json"
    rc = cli.main(["generate", "esf", "--param", "n=1", "--param", "k=3", "-o", str(gen)])
    assert rc == 0
    capsys.readouterr()
    rc = cli.main(["score", str(gen), "--measure", "esf"])
    assert "esf = 3" in capsys.readouterr().out

    rc = cli.main(["language", _fixture_path("W1_CH"), "--max-len", "5"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert "<>" in lines and "<a,c>" in lines and len(lines) == 5


def test_cli_generate_param_out_of_range(capsys):
    rc = cli.main(["generate", "ch", "--param", "k=1", "--param", "n=1", "-o", "/tmp/x.json"])
    assert rc == 1


def test_cli_export_dot(capsys):
    rc = cli.main(["export-dot", _fixture_path("W0")])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.count("->") == 2


def test_cli_properties_witness(capsys):
    rc = cli.main(["properties", "--measure", "mm", "--property", "w5", "--budget", "10"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "Falsified" in out
    assert "C=0" in out  # the witness composition drops the score to 0


def test_cli_seed_env_override(monkeypatch, capsys):
    monkeypatch.setenv("WFC_SEED", "123")
    rc = cli.main(["properties", "--measure", "size", "--property", "w1",
                   "--budget", "5", "--seed", "7"])
    assert rc == 0


def test_cli_report_expected_roundtrip(tmp_path, capsys):
    from wfc.properties import load_expected_table

    expected_path = tmp_path / "tables.json"
    expected_path.write_text(json.dumps(load_expected_table()))
    rc = cli.main(["report", "--budget", "8", "--seed", "0",
                   "--expected", str(expected_path), "--format", "text"])
    captured = capsys.readouterr()
    assert rc == 0, captured.err
    assert "matches the expected table" in captured.err


def test_cli_report_builtin_expected(capsys):
    rc = cli.main(["report", "--budget", "6", "--seed", "3", "--expected", "builtin"])
    captured = capsys.readouterr()
    assert rc == 0, captured.err
    assert "matches the expected table" in captured.err


def test_cli_report_out_dir(tmp_path, capsys):
    rc = cli.main(["report", "--budget", "4", "--seed", "1", "--format", "structured",
                   "--out-dir", str(tmp_path / "out")])
    captured = capsys.readouterr()
    assert rc == 0
    payload = json.loads(captured.out)
    assert payload["budget"] == 4
    out_dir = tmp_path / "out"
    assert (out_dir / "report.csv").exists()
    assert (out_dir / "report.json").exists()
    assert (out_dir / "verdicts.png").stat().st_size > 0
    header = (out_dir / "report.csv").read_text().splitlines()[0]
    assert header == "measure,property,operator,status,evidence"
