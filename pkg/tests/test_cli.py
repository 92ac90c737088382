import json
import subprocess
import sys
from pathlib import Path

import pytest

from leibniz_lm.dsl.cli import main
from leibniz_lm.dsl.document import dump_document, parse_document
from leibniz_lm.dsl.engine import parse_report
from leibniz_lm.exactlin import QQ

from documents import recipe_document

DEMO_DOCS = Path(__file__).resolve().parent.parent / "demos" / "documents"


@pytest.fixture(scope="module")
def recipes(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "recipes.json"
    path.write_text(recipe_document(QQ))
    return path


def test_check_pass_and_fail_exit_codes(recipes, capsys):
    assert main(["check", str(recipes), "--entity", "g"]) == 0
    assert capsys.readouterr().out.startswith("pass")
    assert main(["check", str(recipes), "--entity", "g", "--kind", "lie"]) == 1
    out = capsys.readouterr().out
    assert "antisym" in out and "(1, 1)" in out


def test_machine_output_parses(recipes, capsys):
    assert main(["check", str(recipes), "--entity", "bad_bracket", "--format", "machine"]) == 1
    rep = parse_report(capsys.readouterr().out)
    assert rep.entity == "bad_bracket" and not rep.passed


def test_usage_errors_exit_2(recipes, tmp_path, capsys):
    assert main(["check", str(recipes), "--entity", "nope"]) == 2
    assert main(["check", str(tmp_path / "missing.json"), "--entity", "g"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"field": "QQ", "tensors": {"g": {"kind": "leibniz", "dim": 1, "bracket": [[0, 0, 0, "1/0"]]}}}')
    assert main(["check", str(bad), "--entity", "g"]) == 2
    err = capsys.readouterr().err
    assert "invalid-scalar" in err and str(bad) in err
    with pytest.raises(SystemExit) as info:
        main(["check", str(recipes)])
    assert info.value.code == 2


def test_construct_writes_document(recipes, tmp_path, capsys):
    out = tmp_path / "theorem2.json"
    code = main(["construct", str(recipes), "--recipe", "theorem2", "--entity", "taut_trunc2", "--name", "E", "--out", str(out)])
    assert code == 0
    assert "'E'" in capsys.readouterr().err
    assert main(["check", str(out), "--entity", "E"]) == 0


def test_construct_precondition_failure(recipes, tmp_path, capsys):
    raw = json.loads(recipes.read_text())
    raw["maps"][raw["packages"]["taut_trunc2"]["rho2"]]["entries"] = []
    broken = tmp_path / "broken.json"
    broken.write_text(dump_document(raw))
    code = main(["construct", str(broken), "--recipe", "theorem2", "--entity", "taut_trunc2", "--format", "machine"])
    assert code == 1
    captured = capsys.readouterr()
    assert "precondition failed" in captured.err
    rep = parse_report(captured.out)
    assert rep.witnesses("T1-3/compDer1-a")


def test_report_subcommand(recipes, capsys):
    assert main(["report", str(recipes)]) == 1
    out = capsys.readouterr().out
    assert out.count("\n") > 5 and "bad_bracket" in out
    assert main(["report", str(recipes), "--entity", "g", "--entity", "taut_trunc2"]) == 0


@pytest.mark.parametrize("name", ["leibniz2.json", "dual_numbers.json", "sl2.json"])
def test_demo_documents_parse(name):
    doc = parse_document((DEMO_DOCS / name).read_bytes())
    assert doc.names()


def test_module_entry_point_reads_stdin(recipes):
    proc = subprocess.run(
        [sys.executable, "-m", "leibniz_lm", "check", "-", "--entity", "g", "--format", "machine"],
        input=recipes.read_bytes(),
        capture_output=True,
    )
    assert proc.returncode == 0
    assert parse_report(proc.stdout.decode()).passed
