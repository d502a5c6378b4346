import glob
import json
import os
import subprocess
import sys

from canmod.cli import EXIT_MISMATCH, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_RESOURCE, main

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIXTURES = os.path.join(ROOT, "fixtures")


def fixture(name):
    return os.path.join(FIXTURES, name + ".ring")


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    reports = [json.loads(line) for line in out.splitlines() if line.strip()]
    diags = [json.loads(line) for line in err.splitlines() if line.strip()]
    return rc, reports, diags


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_analyze_plane_union_line(capsys):
    rc, reports, diags = run(capsys, "analyze", fixture("xy_xz"), "--q-max", "5")
    assert rc == EXIT_OK and not diags
    r = reports[0]["report"]
    assert r["torsionfree_level"] == 2 and r["depth"] == 1 and r["dim"] == 2
    assert r["unmixed_component"] == ["x"]
    for key in ("codim", "is_cm", "is_gorenstein", "type", "serre", "gn_on_supp_k", "q_gorenstein_level", "crosschecks"):
        assert key in r
    assert all(set(c) == {"name", "status", "certificate"} for c in r["crosschecks"])


def test_analyze_fat_line_and_segre(capsys):
    rc, reports, _ = run(capsys, "analyze", fixture("plane_and_fat_line"), fixture("segre_2x3"))
    assert rc == EXIT_OK
    a, b = (e["report"] for e in reports)
    assert a["torsionless"] is True and a["generically_gorenstein"] is False
    assert b["q_gorenstein_level"] == 4 and b["is_gorenstein"] is False


def test_every_fixture_passes_its_expectations(capsys):
    files = sorted(glob.glob(os.path.join(FIXTURES, "*.ring")))
    assert len(files) >= 10
    rc, reports, diags = run(capsys, "analyze", *files)
    assert rc == EXIT_OK, diags
    assert [e["file"] for e in reports] == files


def test_output_follows_input_order(capsys):
    files = [fixture("node"), fixture("xy_xz"), fixture("semigroup_23")]
    rc, reports, _ = run(capsys, "analyze", "--jobs", "3", *files)
    assert rc == EXIT_OK
    assert [e["file"] for e in reports] == files


def test_expectation_mismatch(capsys, tmp_path):
    p = write(tmp_path, "bad.ring", "ring Q[x,y,z];\nideal I = x*y, x*z;\nexpect depth = 2;\nexpect unmixed_component = y;\n")
    rc, reports, diags = run(capsys, "analyze", p)
    assert rc == EXIT_MISMATCH
    assert reports and diags[0]["error"] == "expect-mismatch"
    keys = {m["key"] for m in diags[0]["mismatches"]}
    assert keys == {"depth", "unmixed_component"}


def test_unmixed_component_compared_as_ideals(capsys, tmp_path):
    p = write(tmp_path, "u.ring", "ring Q[x,y];\nideal I = x^2, x*y;\nexpect unmixed_component = 2*x;\n")
    rc, _, _ = run(capsys, "analyze", p)
    assert rc == EXIT_OK


def test_parse_error_exit(capsys, tmp_path):
    p = write(tmp_path, "p.ring", "ring Q[x,y];\nideal I = x*q;\n")
    rc, reports, diags = run(capsys, "analyze", p)
    assert rc == EXIT_PARSE and not reports
    assert diags[0]["error"] == "parse" and diags[0]["line"] == 2
    rc, _, diags = run(capsys, "analyze", str(tmp_path / "missing.ring"))
    assert rc == EXIT_PARSE and diags[0]["error"] == "io"


def test_precondition_exit(capsys, tmp_path):
    p = write(tmp_path, "c.ring", "ring Q[x,y];\nideal I = x - 1;\n")
    rc, _, diags = run(capsys, "analyze", p)
    assert rc == EXIT_PRECONDITION and diags[0]["error"] == "precondition"
    q = write(tmp_path, "cov.ring", "ring Q[x,y];\nideal I = x^2 - y^3, x*y^2;\nprime P1 = x, y;\nprime P2 = x;\n")
    rc, _, diags = run(capsys, "analyze", q)
    assert rc == EXIT_PRECONDITION
    rc, _, diags = run(capsys, "analyze", fixture("node"), "--q-max", "0")
    assert rc == EXIT_PRECONDITION and diags[0]["error"] == "usage"


def test_resource_exit(capsys):
    rc, reports, diags = run(capsys, "analyze", fixture("xy_xz"), "--length", "1")
    assert rc == EXIT_RESOURCE and not reports
    assert diags[0]["error"] == "resource"


def test_worst_exit_code_wins(capsys, tmp_path):
    bad = write(tmp_path, "p.ring", "ring Q[x];\nideal I = x +;\n")
    rc, reports, diags = run(capsys, "analyze", fixture("node"), bad)
    assert rc == EXIT_PARSE
    assert len(reports) == 1 and len(diags) == 1


def test_primes_file(capsys, tmp_path):
    ring = write(tmp_path, "e.ring", "ring Q[x,y];\nideal I = x^2 - y^3, x*y^2;\n")
    primes = write(tmp_path, "primes.txt", "prime P1 = x, y;\n")
    rc, reports, _ = run(capsys, "analyze", ring, "--primes", primes)
    assert rc == EXIT_OK
    r = reports[0]["report"]
    assert [p["name"] for p in r["primes"]] == ["P1"]


def test_char_and_order_flags(capsys):
    rc, reports, _ = run(capsys, "analyze", fixture("xy_xz"), "--char", "101", "--order", "lex")
    assert rc == EXIT_OK
    assert reports[0]["report"]["torsionfree_level"] == 2


def test_text_output(capsys):
    rc = main(["analyze", "--text", fixture("xy_xz")])
    out = capsys.readouterr().out
    assert rc == EXIT_OK
    assert "torsionfree level 2" in out and "unmixed component (x)" in out


def test_gallery_command(capsys, tmp_path):
    rc = main(["gallery", "--write", str(tmp_path)])
    out = capsys.readouterr().out
    assert rc == EXIT_OK and "segre_2x3" in out
    written = sorted(os.listdir(tmp_path))
    assert "xy_xz.ring" in written and len(written) >= 10
    rc, _, _ = run(capsys, "analyze", str(tmp_path / "xy_xz.ring"))
    assert rc == EXIT_OK


def test_console_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "canmod.cli", "analyze", fixture("node")],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["report"]["is_gorenstein"] is True
