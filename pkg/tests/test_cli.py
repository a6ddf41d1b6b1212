import io
import json
import subprocess
import sys

import pytest

from kummer_lorentz.cli import main
from kummer_lorentz.report import Check, Report


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


class TestReport:
    def test_round_trip(self):
        rep = Report("demo")
        rep.anchor("somewhere")
        rep.add("a", "first", True, "x")
        rep.add("b", "second", False)
        rep.flag("c", "third", "text discrepancy")
        assert Report.from_json(rep.to_json()) == rep
        assert not rep.passed

    def test_flag_does_not_fail(self):
        rep = Report("demo")
        rep.add("a", "ok", True)
        rep.flag("b", "note", "detail")
        assert rep.passed and rep.count("flagged") == 1

    def test_duplicate_ids(self):
        rep = Report("demo")
        rep.add("a", "x", True)
        with pytest.raises(ValueError):
            rep.add("a", "y", True)

    def test_bad_status(self):
        with pytest.raises(ValueError):
            Check("a", "x", "maybe")

    def test_key_order(self):
        rep = Report("demo")
        rep.add("a", "x", True)
        data = json.loads(rep.to_json())
        assert list(data) == ["suite", "checks", "paper_anchors"]
        assert list(data["checks"][0]) == ["id", "description", "status", "detail"]


class TestVerify:
    def test_all(self):
        code, text = run("verify", "all", "--format", "json")
        assert code == 0
        rep = Report.from_json(text)
        assert rep.count("fail") == 0
        assert sorted(c.id for c in rep.checks if c.status == "flagged") == [
            "grouplaws.printed_threefold",
            "morphisms.phi.printed_argument",
        ]

    def test_cyclotomic_p3_text(self):
        code, text = run("verify", "cyclotomic", "--primes", "3")
        assert code == 0
        assert "w = -1 - 1·h" in text

    def test_json_round_trip(self):
        code, text = run("verify", "grouplaws", "--format", "json")
        assert code == 0
        assert Report.from_json(text).to_json() + "\n" == text

    @pytest.mark.parametrize("argv", [["verify", "bogus"], ["verify", "all", "--primes", "4"], ["kummer", "--p", "9"]])
    def test_usage_errors(self, argv):
        assert run(*argv)[0] == 2


class TestCalculators:
    def test_addvel(self):
        code, text = run("addvel", "0.5", "0.5", "1")
        assert code == 0 and "u ⊕ v = 0.8" in text
        code, text = run("addvel", "0", "0.25", "--c", "1")
        assert code == 0 and "u ⊕ v = 0.25" in text

    def test_addvel_undefined(self, capsys):
        code, _ = run("addvel", "1", "-1", "1")
        assert code == 1
        assert "error" in capsys.readouterr().err

    def test_boost(self):
        code, text = run("boost", "0.6")
        assert code == 0 and "gamma = 1.25" in text

    def test_kummer_p3(self):
        code, text = run("kummer", "--p", "3")
        assert code == 0
        assert "h^2 = -3·ζ" in text
        assert "fiber u^3 - u" in text
        assert "ψ_3(u) = u^3 - ζ^2·h·u^2 - ζ^2·u" in text

    def test_kummer_p2(self):
        code, text = run("kummer", "2")
        assert code == 0
        assert "fiber u^2 - u" in text and "not applicable" in text

    def test_kummer_p5(self):
        code, text = run("kummer", "5")
        assert code == 0 and "fiber u^5 - u" in text


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kummer_lorentz", "addvel", "0.5", "0.5"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "0.8" in proc.stdout
