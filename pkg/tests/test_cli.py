import io
import json
import subprocess
import sys

import pytest

from ribbonpoly import Poly3, build_flower, format_graph, parse_spec
from ribbonpoly.cli import run

from conftest import random_corpus


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_flower_u3():
    code, out, _ = call("flower", "--spec", "u3")
    assert code == 0
    assert out.strip() == "Y^3*Z^2 + 2*Y^2*Z^2 + Y^2 + 3*Y + 1"


def test_faces_t2():
    assert call("faces", "--spec", "t2")[1].strip() == "F=2 class=0"


def test_faces_periodic_and_separate():
    assert call("faces", "--spec", "periodic k1=1 k2=1 q=2 start=-")[1].strip() == "F=1 class=2"
    assert call("faces", "--spec", "1-,1-;separate")[1].strip() == "F=3"


def test_comp():
    assert call("comp", "--n", "4", "--p", "2", "--i", "2")[1].strip() == "2"
    assert call("comp", "--n", "5", "--p", "2", "--i", "1", "--modulus", "3", "--residue", "2")[1].strip() == "2"
    code, _, err = call("comp", "--n", "5", "--p", "2", "--i", "1", "--modulus", "3")
    assert code == 1 and "together" in err
    code, _, err = call("comp", "--n", "5", "--p", "2", "--i", "1", "--modulus", "3", "--residue", "0")
    assert code == 1


def test_recurrence():
    code, out, _ = call("recurrence", "--family", "u", "--max-n", "2")
    assert code == 0
    assert out.splitlines() == ["R_0 = 1", "R_1 = Y + 1", "R_2 = Y^2*Z^2 + 2*Y + 1"]


@pytest.mark.parametrize("spec", ["u1", "u6", "t1", "t7", "2+,3-;separate", "1-,2+,1-;separate", "u0"])
def test_closed_and_statesum_identical(spec):
    a = call("flower", "--spec", spec, "--closed")
    b = call("flower", "--spec", spec, "--statesum")
    assert a[0] == b[0] == 0
    assert a[1] == b[1]
    a = call("flower", "--spec", spec, "--closed", "--json")
    b = call("flower", "--spec", spec, "--statesum", "--json")
    assert a[1] == b[1]


def test_merged_mixed_default_falls_back():
    code, out, _ = call("flower", "--spec", "2+,2-")
    assert code == 0
    assert call("flower", "--spec", "2+,2-", "--closed")[0] == 1


def test_json_idempotent():
    for spec in ["u5", "t4", "periodic k1=2 k2=1 q=3 start=+"]:
        code, out, _ = call("flower", "--spec", spec, "--json")
        assert code == 0
        obj = json.loads(out)
        assert obj["basis"] == "X"
        assert Poly3.from_json(out).to_json() == out.strip()


def test_bad_spec_reports_token():
    code, _, err = call("flower", "--spec", "3+,q-")
    assert code == 1 and "'q-'" in err


def test_cap_exit_code():
    code, _, err = call("flower", "--spec", "u30", "--statesum")
    assert code == 2 and "cap" in err


def test_eval(tmp_path):
    for i, g in enumerate(random_corpus(41, 8, 7)):
        path = tmp_path / f"g{i}.ribbon"
        path.write_text(format_graph(g))
        outs = {m: call("eval", str(path), "--method", m)[1] for m in ("auto", "statesum", "reduce")}
        assert len(set(outs.values())) == 1
        code, out, _ = call("eval", str(path), "--json")
        assert code == 0 and json.loads(out)["basis"] == "X"


def test_eval_flower_file(tmp_path):
    path = tmp_path / "f.ribbon"
    path.write_text(format_graph(build_flower(parse_spec("u3"))))
    assert call("eval", str(path))[1].strip() == "Y^3*Z^2 + 2*Y^2*Z^2 + Y^2 + 3*Y + 1"


def test_eval_cap(tmp_path):
    path = tmp_path / "big.ribbon"
    # three mutually interleaved petals go to the state-sum fallback
    path.write_text("ribbon v1\nvertex v: a.a b.a c.a a.b b.b c.b\nedge a 0\nedge b 0\nedge c 1\n")
    assert call("eval", str(path), "--method", "statesum", "--cap", "2")[0] == 2
    assert call("eval", str(path), "--cap", "2")[0] == 2


def test_eval_parse_error(tmp_path):
    path = tmp_path / "bad.ribbon"
    path.write_text("ribbon v1\nvertex v: e.a e.b\nedge e 5\n")
    code, _, err = call("eval", str(path))
    assert code == 1 and "line 3" in err
    code, _, err = call("eval", str(tmp_path / "missing.ribbon"))
    assert code == 1


def test_usage_errors_exit_1():
    assert call()[0] == 1
    assert call("flower")[0] == 1
    assert call("bogus")[0] == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ribbonpoly", "faces", "--spec", "t2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "F=2 class=0"
