import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from toricgb import validate_presentation
from toricgb.cli import main

from _util import WORKED3, pres

INSTANCES = Path(__file__).resolve().parent.parent / "instances"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return path


def test_validate_ok():
    code, out, _ = run("validate", INSTANCES / "worked3.json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] and doc["errors"] == []
    assert validate_presentation(doc["instance"]) == pres(WORKED3)


def test_validate_wrong_degree(tmp_path):
    path = write(tmp_path, "bad.json", {"d": 3, "alpha": 4, "generators": [[0, 1, 3], [1, 1, 1]]})
    code, out, _ = run("validate", path)
    assert code == 2
    doc = json.loads(out)
    assert not doc["ok"] and doc["errors"][0]["code"] == "WrongDegree"


def test_io_errors(tmp_path):
    assert run("validate", tmp_path / "missing.json")[0] == 3
    assert run("groebner", write(tmp_path, "broken.json", "{not json"))[0] == 3
    assert run("groebner", write(tmp_path, "broken.txt", "2 2\n1 x\n"))[0] == 3
    assert run("decompose", write(tmp_path, "hdr.txt", "2\n1 1\n"))[0] == 3


def test_invalid_instance_exit_code(tmp_path):
    path = write(tmp_path, "neg.json", {"d": 2, "alpha": 2, "generators": [[3, -1]]})
    code, _, err = run("groebner", path)
    assert code == 2 and "NonNegativityViolation" in err


def test_groebner_text_worked3():
    code, out, _ = run("groebner", INSTANCES / "worked3.json")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "6 generators"
    assert lines[1] == "initial ideal: (x2^2, x1^2*y1^2, x1^2*x2*y1, x3^4, x1^2*x3^2, x1^4)"
    body = [ln.strip() for ln in lines[3:9]]
    assert body == ["x2^2 - y1*y3", "x1^2*y1^2 - x2*x3^2*y3", "x1^2*x2*y1 - x3^2*y3^2",
                    "x3^4 - y1^3*y2", "x1^2*x3^2 - x2*y1*y2*y3", "x1^4 - y2*y3^3"]
    assert "max degree: 4" in lines


def test_groebner_with_report():
    code, out, _ = run("groebner", INSTANCES / "planar12.json", "--with-report")
    assert code == 0
    assert "x3*x4^3*y1^2" not in out
    assert "reduction number + 1: 5" in out
    assert "max candidate degree: 6" in out
    assert "candidate degrees within bound: false" in out


def test_groebner_empty():
    code, out, _ = run("groebner", INSTANCES / "axes_only.json")
    assert code == 0 and out.splitlines()[0] == "0 generators"


def test_groebner_json_round_trip():
    code, out, _ = run("groebner", INSTANCES / "worked3.json", "--format", "json", "--with-report")
    assert code == 0
    doc = json.loads(out)
    assert validate_presentation(doc["instance"]) == pres(WORKED3)
    assert len(doc["basis"]) == 6 and doc["basis"][0]["text"] == "x2^2 - y1*y3"
    assert doc["basis"][0]["lead"] == {"mu": [0, 2, 0], "nu": [0, 0, 0]}
    assert doc["degree_bound_report"]["reduction_number_plus_one"] == 6
    assert doc["max_degree"] == 4


def test_groebner_m2():
    code, out, _ = run("groebner", INSTANCES / "quadric.txt", "--format", "m2")
    assert code == 0
    assert "R = QQ[x1, y1, y2, MonomialOrder => GRevLex];" in out
    assert "G = ideal(x1^2 - y1*y2);" in out
    assert "A = transpose matrix {{1, 1}, {2, 0}, {0, 2}};" in out
    _, empty, _ = run("groebner", INSTANCES / "axes_only.json", "--format", "m2")
    assert "G = ideal(0_R);" in empty


def test_labels(tmp_path):
    path = write(tmp_path, "lab.json", {"d": 2, "alpha": 2, "generators": [[1, 1]],
                                        "labels": {"x": ["b"], "y": ["a", "c"]}})
    code, out, _ = run("groebner", path)
    assert code == 0 and "b^2 - a*c" in out
    path = write(tmp_path, "badlab.json", {"d": 2, "alpha": 2, "generators": [[1, 1]],
                                           "labels": {"x": ["b", "z"]}})
    assert run("groebner", path)[0] == 3


def test_text_instance_matches_json(tmp_path):
    path = write(tmp_path, "s.txt", "3 4\n0 1 3\n2,0,2  # second\n3 1 0\n")
    assert run("groebner", path)[1] == run("groebner", INSTANCES / "worked3.json")[1]


def test_decompose():
    code, out, _ = run("decompose", INSTANCES / "cubic_plane.json")
    assert code == 0
    assert "1 × (y2, y3) ⊕ 8 × T" in out
    assert "linear-ideal condition: true" in out
    code, out, _ = run("decompose", INSTANCES / "axes_only.json", "--format", "json")
    doc = json.loads(out)
    assert doc["summary"] == "1 × T" and doc["is_cohen_macaulay"]
    _, out, _ = run("decompose", INSTANCES / "worked3.json", "--format", "json")
    doc = json.loads(out)
    sizes = [len(cl["members"]) for cl in doc["classes"]]
    assert sizes.count(2) == 8 and sum(sizes) == 24


@pytest.mark.parametrize("name", ["worked3.json", "quadric.txt", "planar12.json",
                                  "cubic_plane.json", "axes_only.json"])
def test_verify_ok(name):
    code, out, _ = run("verify", INSTANCES / name)
    assert code == 0, out
    assert out.splitlines()[-1] == "verified"


def test_verify_degree_and_fault():
    assert run("verify", INSTANCES / "worked3.json", "--oracle-degree", "6")[0] == 0
    code, out, _ = run("verify", INSTANCES / "worked3.json", "--inject-fault")
    assert code == 4 and "kernel membership: FAIL" in out
    code, out, _ = run("verify", INSTANCES / "quadric.txt", "--inject-fault")
    assert code == 4


def test_verify_partial_coverage_fails():
    code, out, _ = run("verify", INSTANCES / "worked3.json", "--oracle-degree", "20",
                       "--budget", "500")
    assert code == 4 and "partial coverage" in out


def test_verify_threads_identical(monkeypatch):
    one = run("verify", INSTANCES / "planar12.json", "--threads", "1")
    four = run("verify", INSTANCES / "planar12.json", "--threads", "4")
    assert one == four
    monkeypatch.setenv("TORICGB_THREADS", "3")
    from toricgb.cli import build_parser
    assert build_parser().parse_args(["verify", "x"]).threads == 3


@pytest.mark.parametrize("argv", [
    ["groebner", "worked3.json", "--format", "json", "--with-report"],
    ["groebner", "planar12.json", "--format", "m2"],
    ["decompose", "worked3.json"],
    ["verify", "cubic_plane.json"],
])
def test_output_is_deterministic(argv):
    argv = [INSTANCES / a if a.endswith((".json", ".txt")) else a for a in argv]
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "toricgb", "groebner",
                           str(INSTANCES / "quadric.txt")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "x1^2 - y1*y2" in proc.stdout
