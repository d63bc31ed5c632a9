import io
import json
import subprocess
import sys

import pytest

from mapsym.cli import run
from mapsym.flagsys import FlagSystem
from mapsym.generators import antiprism, cube, tetrahedron


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def antiprism_file(tmp_path):
    path = tmp_path / "a4.json"
    path.write_text(antiprism(4).to_json())
    return str(path)


@pytest.fixture(autouse=True)
def no_colour(monkeypatch):
    monkeypatch.setenv("MAPSYM_COLOR", "never")


@pytest.mark.parametrize("argv", [
    ["generate", "antiprism", "4"], ["generate", "prism", "5"],
    ["generate", "platonic", "dodecahedron"], ["generate", "torus-grid", "3", "4"],
])
def test_generate_then_validate(argv):
    code, text, _ = call(*argv)
    assert code == 0
    assert FlagSystem.from_json(text).n_flags > 0
    code, out, _ = call("validate", "-", stdin=text)
    assert code == 0 and out.strip() == "valid"


@pytest.mark.parametrize("op", ["medial", "truncation", "dual", "petrie"])
def test_generate_operations_read_stdin(op):
    code, text, _ = call("generate", op, "-", stdin=cube().to_json())
    assert code == 0
    assert call("validate", "-", stdin=text)[0] == 0


def test_validate_reports_violations():
    fs = tetrahedron()
    bad = FlagSystem(fs.s0, fs.s2, fs.s1).to_json()
    code, out, _ = call("validate", "-", stdin=bad)
    assert code == 1
    assert "invalid" in out and "s0 and s2 do not commute" in out
    code, out, _ = call("validate", "--json", "-", stdin=bad)
    data = json.loads(out)
    assert code == 1 and data["valid"] is False


def test_validate_strict():
    from mapsym.generators import from_face_cycles

    text = from_face_cycles([(0, 1, 2), (0, 2, 1)]).to_json()
    assert call("validate", "-", stdin=text)[0] == 0
    code, out, _ = call("validate", "--strict", "-", stdin=text)
    assert code == 1 and "degree less than 3" in out


def test_analyze_antiprism(antiprism_file):
    code, out, _ = call("analyze", "--json", antiprism_file)
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == "mapsym/1"
    assert rep["k"] == 4 and rep["aut_order"] == 16
    assert rep["k"] * rep["aut_order"] == rep["flags"]
    assert rep["type_name"] == "4_Dd"
    assert {(f["type"], f["size"]) for f in rep["faces"]} == {("f_3a", 3), ("f_1a", 4)}
    assert sorted(rep["t2_components"]) == ["f_1a", "f_3a"]
    for key, measure in (("vertices", "degree"), ("faces", "size")):
        for r in rep[key]:
            assert r["characteristic"][0] == 2 * r[measure]
    assert rep["table_check"]["ok"] is True


def test_analyze_human_output(antiprism_file):
    code, out, _ = call("analyze", antiprism_file)
    assert code == 0
    assert "4_Dd" in out
    assert "f_3a   size 3    (6,k0,k1)" in out
    assert "\033[" not in out


def test_analyze_without_type_name_for_other_k():
    code, out, _ = call("analyze", "--json", "-", stdin=cube().to_json())
    rep = json.loads(out)
    assert code == 0 and rep["k"] == 1 and "type_name" not in rep


def test_output_is_byte_identical(antiprism_file):
    first = call("analyze", "--json", antiprism_file)[1]
    second = call("analyze", "--json", antiprism_file)[1]
    assert first == second
    data = json.loads(first)
    assert first.strip() == json.dumps(data, sort_keys=True)


def test_classify(antiprism_file):
    assert call("classify", antiprism_file)[1].strip() == "4_Dd"
    assert call("classify", "-", stdin=cube().to_json())[1].strip() == "k=1 (not 4-orbit)"


def test_enumerate_types():
    code, out, _ = call("enumerate-types", "--k", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 22 and len(data["candidates"]) == 22
    assert all(c["name"] for c in data["candidates"])
    code, out, _ = call("enumerate-types", "--k", "4")
    assert out.strip().endswith("22 candidate symmetry type graphs with 4 vertices")
    assert call("enumerate-types", "--k", "9")[0] == 1


def test_enumerate_maps():
    code, out, _ = call("enumerate-maps", "--flags", "8", "--json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 11
    assert data["by_k"] == {"1": 4, "2": 4, "4": 3}
    code, _, err = call("enumerate-maps", "--flags", "20")
    assert code == 1 and "16 flags" in err


def test_catalog():
    code, out, _ = call("catalog", "--json")
    entries = json.loads(out)
    assert code == 0 and len(entries) == 22
    by_name = {e["name"]: e for e in entries}
    assert by_name["4_A"]["t2"] == ["f_2b", "f_2b"]
    assert by_name["4_A"]["dual"] == "4_Ad"
    assert len(call("catalog")[1].strip().splitlines()) == 23


def test_export_dot(antiprism_file):
    code, out, _ = call("export-dot", antiprism_file)
    assert code == 0
    assert out.startswith('graph "symmetry_type_graph" {')
    lines = out.splitlines()
    semi = sum("shape=point" in line for line in lines)
    proper = sum("--" in line and "se_" not in line for line in lines)
    # four orbits, one incidence of each colour at every orbit
    assert 2 * proper + semi == 4 * 3


def test_usage_errors():
    assert call()[0] == 2
    assert call("bogus")[0] == 2
    assert call("validate")[0] == 2
    assert call("generate", "platonic", "torus")[0] == 2
    assert call("enumerate-types", "--k", "x")[0] == 2


def test_data_errors(tmp_path):
    code, _, err = call("analyze", str(tmp_path / "missing.json"))
    assert code == 1 and "cannot read" in err
    code, out, _ = call("--error-format", "json", "analyze", "-", stdin="{oops")
    assert code == 1
    assert json.loads(out)["error"]["kind"] == "InputError"
    code, _, _ = call("generate", "antiprism", "2")
    assert code == 1
    fs = tetrahedron()
    bad = FlagSystem(fs.s0, fs.s2, fs.s1).to_json()
    code, out, _ = call("--error-format", "json", "analyze", "-", stdin=bad)
    assert code == 1 and json.loads(out)["error"]["kind"] == "PreconditionError"


def test_colour_always(monkeypatch):
    monkeypatch.setenv("MAPSYM_COLOR", "always")
    _, out, _ = call("validate", "-", stdin=cube().to_json())
    assert "\033[32m" in out


def test_shell_pipeline():
    gen = subprocess.run([sys.executable, "-m", "mapsym", "generate", "antiprism", "5"],
                         capture_output=True, text=True, check=True)
    val = subprocess.run([sys.executable, "-m", "mapsym", "validate", "-"],
                         input=gen.stdout, capture_output=True, text=True)
    assert val.returncode == 0
