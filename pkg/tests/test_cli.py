import io
import json
import subprocess
import sys

import pytest

from discgroups.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_abelianize():
    assert call("abelianize", "2", "3") == (0, "Z/12\n")
    assert call("abelianize", "2", "3", "--affine") == (0, "Z\n")


def test_order():
    assert call("order", "1", "3") == (0, "12\n")
    code, _ = call("order", "2", "3", "--max-cosets", "200")
    assert code == 1


def test_degrees():
    code, out = call("degrees", "2", "3")
    assert code == 0
    assert ["deg_p", "12"] in [ln.split() for ln in out.splitlines()]
    code, out = call("degrees", "1", "4", "--json")
    assert json.loads(out)["deg_p"] == 6


def test_present_formats():
    code, out = call("present", "2", "3", "--format", "json")
    assert code == 0 and json.loads(out)["variant"] == "projective"
    code, out = call("present", "2", "3", "--affine", "--format", "cas")
    assert code == 0 and len(out.splitlines()) == 12
    code, out = call("present", "2", "3")
    assert "t2 t3 = t3 t2  [commutation]" in out


def test_graph_dot():
    code, out = call("graph", "1", "5", "--dot")
    assert code == 0
    assert out.count("--") == 3
    code, out = call("graph", "3", "3")
    assert out.split() == ["vertices", "8", "edges", "19", "triangles", "18"]


def test_smooth():
    code, out = call("smooth", "2", "3", "--kind", "node", "--verify")
    assert code == 0
    lines = out.splitlines()
    assert "t1 t2 t1 = t2 t1 t2  [braid]" in lines
    assert "PASS certificate.sl2z  nonabelian image" in lines
    assert not any(ln.startswith("FAIL") for ln in lines)
    code, out = call("smooth", "2", "4", "--kind", "cusp")
    rels = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert code == 0 and rels == [" ".join(["t1"] * 27) + " = 1  [projective]"]


def test_hl_values():
    code, out = call("hl-values", "3", "1", "1/10")
    assert code == 0 and out.splitlines()[0] == "index,re,im" and len(out.splitlines()) == 5
    code, out = call("hl-values", "3", "1", "0.1", "--check", "twist")
    assert code == 0 and out.count("PASS") == 2
    code, out = call("hl-values", "4", "1", "0.01", "--check", "circles")
    assert code == 0 and out.startswith("PASS circles")


def test_check_all():
    code, out = call("check-all", "2", "3", "--json")
    assert code == 0
    lines = out.splitlines()
    assert all(ln.startswith("PASS") for ln in lines if ln[:4] in ("PASS", "FAIL"))
    summary = json.loads(out[out.index("{"):])
    assert summary["passed"] and summary["n"] == 2
    names = [c["name"] for c in summary["checks"]]
    assert names == sorted(names)


def test_check_all_threads_are_deterministic():
    a = call("check-all", "2", "3", "--json")
    b = call("check-all", "2", "3", "--json", "--workers", "4")
    assert a == b


@pytest.mark.parametrize("argv", [
    ("abelianize", "0", "3"),
    ("abelianize", "2"),
    ("order", "2", "x"),
    ("smooth", "1", "3", "--kind", "node"),
    ("hl-values", "3", "1", "0"),
    ("hl-values", "3", "1", "--check", "circles"),
    ("frobnicate",),
    (),
])
def test_usage_errors(argv, capsys):
    code, _ = call(*argv)
    assert code == 2
    assert capsys.readouterr().err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "discgroups", "abelianize", "1", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "Z/4\n"
