"""Tests for the command-line front end (exit codes and report formats)."""

import subprocess
import sys

from superbialg.cli import main
from superbialg.claims import data_path


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValidate:
    def test_builtin(self, capsys):
        code, out, _ = run_cli(capsys, "validate", "--algebra", "osp12")
        assert code == 0
        assert "all axioms hold" in out

    def test_file(self, capsys, tmp_path):
        path = tmp_path / "osp12.alg"
        path.write_text(data_path("osp12.alg").read_text())
        code, out, _ = run_cli(capsys, "validate", "--file", str(path))
        assert code == 0

    def test_bad_file(self, capsys, tmp_path):
        path = tmp_path / "bad.alg"
        path.write_text("[algebra] name = bad\nbasis = H:even X:even Y:even\n"
                        "[brackets]\nH X = 1 X\nH Y = 1 Y\nX Y = 1 H\n")
        code, out, err = run_cli(capsys, "validate", "--file", str(path))
        assert code == 1

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "validate", "--file", "/nonexistent.alg")
        assert code == 2

    def test_missing_argument(self, capsys):
        code, _, err = run_cli(capsys, "validate")
        assert code == 2


class TestSchouten:
    def test_cybe_status_line(self, capsys):
        code, out, _ = run_cli(capsys, "schouten", "--algebra", "super_e2",
                               "--r", "1 H^P+")
        assert code == 0
        assert out.strip() == "CYBE"

    def test_mcybe(self, capsys):
        code, out, _ = run_cli(capsys, "schouten", "--algebra", "super_e2",
                               "--family", "e2-r-iii")
        assert code == 0
        assert out.strip() == "mCYBE"


class TestCobracketCheck:
    def test_family_with_params(self, capsys):
        code, out, _ = run_cli(capsys, "cobracket-check",
                               "--algebra", "super_e2",
                               "--family", "e2-case-a",
                               "--params", "a=1,b=0,c=0")
        assert code == 0
        assert "pass" in out

    def test_generic_case_b_fails(self, capsys):
        code, out, _ = run_cli(capsys, "cobracket-check",
                               "--algebra", "super_e2",
                               "--family", "e2-case-b")
        assert code == 1
        assert "cojacobi" in out

    def test_cobracket_file(self, capsys, tmp_path):
        path = tmp_path / "d.cob"
        path.write_text("delta H = 1 P+^P-\n")
        code, out, _ = run_cli(capsys, "cobracket-check",
                               "--algebra", "super_e2",
                               "--cobracket-file", str(path))
        assert code == 0


class TestCoboundary:
    def test_rows(self, capsys):
        code, out, _ = run_cli(capsys, "coboundary", "--algebra", "super_e2",
                               "--r", "1 H^P+")
        assert code == 0
        assert "delta H = 1 H^P+" in out


class TestSolveCocycle:
    def test_report(self, capsys):
        code, out, _ = run_cli(capsys, "solve-cocycle", "--algebra", "osp12")
        assert code == 0
        assert "unknowns\t30" in out
        assert "nullity\t6" in out
        assert "coboundary-dim\t6" in out


class TestPoisson:
    def test_table(self, capsys):
        code, out, _ = run_cli(capsys, "poisson", "--group", "osp",
                               "--structure", "2")
        assert code == 0
        assert "a^2-1" in out

    def test_machine(self, capsys):
        code, out, _ = run_cli(capsys, "poisson", "--group", "super-e2",
                               "--structure", "iv", "--format", "machine")
        assert code == 0
        assert "{a,b} = -2*a*b" in out

    def test_unknown_structure(self, capsys):
        code, _, err = run_cli(capsys, "poisson", "--group", "osp",
                               "--structure", "9")
        assert code == 2


class TestVerifyOrbits:
    def test_all_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify-orbits")
        assert code == 0
        assert "orbit.rb-to-r1\tpass" in out


class TestVerifyPaper:
    def test_filter_table2(self, capsys):
        code, out, _ = run_cli(capsys, "verify-paper", "--filter", "table2",
                               "--format", "machine")
        assert code == 0
        lines = [l for l in out.splitlines() if l and not l.startswith("#")]
        assert len(lines) == 72
        assert all(len(l.split("\t")) == 3 for l in lines)

    def test_machine_line_format(self, capsys):
        code, out, _ = run_cli(capsys, "verify-paper", "--filter", "axioms",
                               "--format", "machine")
        assert code == 0
        first = out.splitlines()[0].split("\t")
        assert first[0] == "axioms.e2" and first[1] == "pass"

    def test_strict_errata_fail(self, capsys):
        code, out, _ = run_cli(capsys, "verify-paper", "--filter",
                               "table2.v.a,b", "--strict")
        assert code == 1

    def test_non_strict_errata_ok(self, capsys):
        code, out, _ = run_cli(capsys, "verify-paper", "--filter",
                               "table2.v.a,b")
        assert code == 0
        assert "erratum" in out

    def test_unknown_filter(self, capsys):
        code, _, err = run_cli(capsys, "verify-paper", "--filter", "zzz")
        assert code == 2


class TestUsage:
    def test_unknown_command_exits_2(self):
        proc = subprocess.run(
            [sys.executable, "-m", "superbialg.cli", "frobnicate"],
            capture_output=True)
        assert proc.returncode == 2

    def test_console_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "superbialg.cli", "validate",
             "--algebra", "super_e2"], capture_output=True, text=True)
        assert proc.returncode == 0
        assert "all axioms hold" in proc.stdout
