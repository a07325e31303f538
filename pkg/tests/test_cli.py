import json
import subprocess
import sys

import pytest

from divbeta.cli import main
from divbeta.reproduce import ITEMS, run_item, select


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--prime", "5", "--i", "25")
    assert code == 0
    js = [int(v) for v in out.split()]
    assert len(js) == 24 and 5 not in js
    code, out, _ = run(capsys, "enumerate", "--prime", "5", "--i", "1250", "--format", "json")
    rec = json.loads(out)
    assert rec["schema"] == 1 and len(rec["j"]) == 720
    code, out, _ = run(capsys, "enumerate", "--prime", "7", "--i", "3")
    assert out.split() == ["1"]


def test_compute_search_f25_29(capsys):
    code, out, _ = run(
        capsys, "compute", "--prime", "5", "--i", "25", "--j", "29", "--allow-nonfamily", "--method", "search", "--format", "json"
    )
    assert code == 0
    rec = json.loads(out)
    got = [(t["delta_exp"], t["e4_exp"], t["coeff"]) for t in rec["basis_terms"]]
    assert got == [(50, 0, 1), (42, 24, 4), (41, 27, 3)]
    assert rec["conditions"]["passed"] and rec["weight"] == 600


def test_compute_i1250_both(capsys):
    code, out, _ = run(capsys, "compute", "--prime", "5", "--i", "1250", "--j", "748", "--method", "both", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert len(rec["basis_terms"]) == 7 and rec["agree_mod_p"]
    exps = [t["delta_exp"] for t in rec["basis_terms"]]
    assert exps == sorted(exps, reverse=True)


def test_compute_other_prime(capsys):
    code, out, _ = run(capsys, "compute", "--prime", "11", "--i", "11", "--j", "11", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["basis_terms"] == [{"delta_exp": 110, "e4_exp": 0, "coeff": 1}]
    assert rec["conditions"]["c4_at_2"] == "certified"


def test_compute_errors(capsys):
    code, _, err = run(capsys, "compute", "--prime", "5", "--i", "25", "--j", "5")
    assert code != 0 and "not an order-5" in err
    code, _, err = run(capsys, "compute", "--prime", "11", "--i", "11", "--j", "11", "--method", "search")
    assert code != 0
    code, _, _ = run(capsys, "compute", "--prime", "5", "--i", "25", "--j", "31", "--allow-nonfamily", "--method", "search")
    assert code != 0


def test_json_is_stable(capsys):
    argv = ("compute", "--prime", "5", "--i", "50", "--j", "29", "--format", "json")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "timing"}
    assert strip(a) == strip(b)


def test_eisenstein(capsys, tmp_path):
    code, out, _ = run(capsys, "--cache-dir", str(tmp_path), "eisenstein", "--prime", "13", "--level2")
    assert code == 0 and "12*mu^3 + 9*mu^2*eps + 4*mu*eps^2 + eps^3" in out
    assert (tmp_path / "eisenstein_level2_p13.json").exists()
    code, out, _ = run(capsys, "eisenstein", "--prime", "5", "--level2")
    assert "4*mu + eps" in out
    code, out, _ = run(capsys, "eisenstein", "--prime", "677", "--level2", "--format", "json")
    rec = json.loads(out)
    coeffs = [t["coeff"] for t in rec["level2"]["terms"]]
    assert len(coeffs) == 170 and coeffs[:5] == [676, 127, 236, 375, 522]


def test_reproduce_default_tier(capsys):
    code, out, _ = run(capsys, "reproduce")
    assert code == 0
    assert out.count("PASS") == len(select())


def test_reproduce_unknown_item(capsys):
    code, _, err = run(capsys, "reproduce", "no-such-item")
    assert code == 2 and "unknown" in err


def test_reproduce_reports_failures(monkeypatch, capsys):
    monkeypatch.setitem(ITEMS, "broken", (lambda: [("always wrong", False)], "default"))
    code, out, _ = run(capsys, "reproduce", "broken")
    assert code == 1 and "failed: always wrong" in out
    monkeypatch.setitem(ITEMS, "raises", (lambda: 1 / 0, "default"))
    assert not run_item("raises").ok


@pytest.mark.long
@pytest.mark.parametrize("name", [n for n, (_, tier) in ITEMS.items() if tier == "long"])
def test_reproduce_long_items(name):
    res = run_item(name)
    assert res.ok, (res.error, [c for c in res.checks if not c[1]])


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "divbeta.cli", "enumerate", "--prime", "5", "--i", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.split() == ["1", "2", "3", "4", "5"]
