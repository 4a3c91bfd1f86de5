import io
import json
import subprocess
import sys

import pytest

from rigidroots.cli import main
from rigidroots.reduction import ReductionTrace
from rigidroots.verify import VerificationReport


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "argv, word",
    [(("word", "-m", "3", "5", "3"), "2321232321232"), (("word", "-m", "2", "2", "1"), "232"), (("word", "-m", "3", "1", "1"), "2")],
)
def test_word(argv, word):
    code, text = run(*argv)
    assert code == 0 and text.strip() == word


def test_word_matrix():
    code, text = run("word", "--matrix", "-m", "3", "4", "1")
    assert code == 0
    assert len(text.strip().splitlines()) == 4


def test_reduce_outputs():
    code, text = run("reduce", "-m", "3", "487", "186")
    assert code == 0 and "[487,186] -> [55,21]" in text and "after 1 steps" in text
    code, text = run("reduce", "-m", "2", "1", "1")
    assert code == 0 and "after 0 steps" in text


def test_reduce_json(tmp_path):
    path = tmp_path / "trace.json"
    code, _ = run("reduce", "-m", "3", "1789", "683", "--json", str(path))
    assert code == 0
    tr = ReductionTrace.from_dict(json.loads(path.read_text()))
    assert [list(v) for v in tr.chain()[1:]] == [[1129, 431], [469, 179], [28, 11]]


def test_root():
    assert run("root", "-m", "3", "55", "21")[1].splitlines()[0] == "6, 8, 17"
    assert run("root", "-m", "4", "5", "2")[1].splitlines()[0] == "1, 3x, 6"
    code, text = run("root", "--symbolic", "5", "3")
    assert code == 0
    assert text.strip() == "x^3 + x, x^6 + 3x^4 + 2x^2 - 1, x^5 + 3x^3 + 2x"


@pytest.mark.parametrize(
    "argv",
    [
        ("word", "2", "4"),
        ("word", "0", "1"),
        ("reduce", "3", "2"),
        ("root", "-m", "1", "1", "1"),
        ("check", "-m", "3", "--bound", "0"),
        ("lemmas", "-m", "3", "--depth", "1"),
        ("frobnicate",),
        ("word", "1"),
        ("check", "-m", "3", "5", "5"),
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_check_reports(tmp_path):
    path = tmp_path / "r.json"
    code, text = run("check", "-m", "2", "--bound", "30", "--json", str(path))
    assert code == 0
    rep = VerificationReport.from_json(path.read_text())
    assert rep.surjectivity_failures == [] and rep.collisions == []
    assert rep.family_match is True
    assert VerificationReport.from_json(rep.to_json()) == rep
    assert run("check", "-m", "5", "--bound", "1")[0] == 0


def test_check_failure_exit_1(monkeypatch):
    import rigidroots.cli as cli

    def fake(m, bound, workers=1):
        return VerificationReport(m=m, bound=bound, surjectivity_failures=[(3, 1)])

    monkeypatch.setattr(cli, "run_check", fake)
    assert run("check", "-m", "3", "--bound", "3")[0] == 1


def test_collisions_fail_only_for_m2():
    coll = [((1, 2), (2, 1))]
    assert not VerificationReport(m=2, bound=3, collisions=coll).passed
    assert VerificationReport(m=3, bound=3, collisions=coll).passed


@pytest.mark.parametrize("m, depth", [("3", "6"), ("2", "6"), ("4", "3")])
def test_lemmas(m, depth):
    code, text = run("lemmas", "-m", m, "--depth", depth, "--bound", "12")
    assert code == 0 and "FAIL" not in text


def test_svg_deterministic(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run("svg", "5", "3", "-o", str(a))[0] == 0
    assert run("svg", "5", "3", "-o", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.startswith("<svg") and text.count("<circle") == 13


def test_svg_small_cases(tmp_path):
    path = tmp_path / "one.svg"
    run("svg", "1", "1", "-o", str(path))
    text = path.read_text()
    assert text.count("<circle") == 1 and ">2</text>" in text
    _, text = run("svg", "4", "1")
    labels = [line.split(">")[1].split("<")[0] for line in text.splitlines() if line.startswith("<text")]
    assert labels == list("2323232")


def test_svg_unwritable(tmp_path):
    assert run("svg", "1", "1", "-o", str(tmp_path / "missing" / "x.svg"))[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rigidroots", "word", "-m", "3", "4", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "2323232"
