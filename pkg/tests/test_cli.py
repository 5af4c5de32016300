import json
import subprocess
import sys

import pytest

from zdlab.builtins import boolean
from zdlab.cli import run
from zdlab.constructions import matrix_semiring
from zdlab.io import save_structure, structure_to_json


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def bfile(tmp_path):
    path = tmp_path / "b.json"
    save_structure(boolean(), path)
    return str(path)


@pytest.fixture
def m2bfile(tmp_path):
    path = tmp_path / "m2b.json"
    save_structure(matrix_semiring(boolean(), 2), path)
    return str(path)


def test_validate_boolean_file(capsys, bfile):
    code, out, _ = call(capsys, "validate", bfile)
    assert code == 0 and json.loads(out)["valid"] is True


def test_validate_invalid_table_reports_verdict(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"kind": "semigroup_with_zero", "order": 3, "zero": 0,
                                "mul": [[0, 0, 0], [0, 2, 0], [0, 0, 1]]}))
    code, out, _ = call(capsys, "validate", str(path))
    data = json.loads(out)
    assert code == 0 and data["valid"] is False and data["failures"][0]["axiom"] == "associativity"


def test_invalid_file_is_input_error_elsewhere(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"kind": "semigroup_with_zero", "order": 3, "zero": 0,
                                "mul": [[0, 0, 0], [0, 2, 0], [0, 0, 1]]}))
    code, _, err = call(capsys, "props", str(path))
    assert code == 2 and "associativity" in err
    code, out, _ = call(capsys, "--no-validate", "props", str(path), "--props", "reversible")
    assert code == 0 and json.loads(out)[0]["verdict"] in ("holds", "fails")


def test_props_m2b_reversible_fails(capsys, m2bfile):
    code, out, _ = call(capsys, "props", m2bfile, "--props", "reversible")
    (report,) = json.loads(out)
    assert code == 0 and report["verdict"] == "fails"
    M = matrix_semiring(boolean(), 2)
    a, b = report["witness"]
    assert M.mul[a, b] == 0 and M.mul[b, a] != 0


def test_props_rule_structure(capsys):
    code, out, _ = call(capsys, "props", "triangular-n0-z2", "--bound", "50", "--props", "eversible",
                        "--zero-divisors")
    data = json.loads(out)
    assert code == 0
    assert data["reports"][0]["verdict"] == "fails"
    assert data["reports"][0]["witness_elements"] == [[2, 0, 1], [0, 1, 0]]
    assert [2, 0, 1] in data["zero_divisors"]["left"]
    assert [2, 0, 1] not in data["zero_divisors"]["right"]


def test_unknown_property_is_input_error(capsys, bfile):
    code, _, _ = call(capsys, "props", bfile, "--props", "shiny")
    assert code == 2


def test_missing_file_is_input_error(capsys, tmp_path):
    code, _, err = call(capsys, "validate", str(tmp_path / "absent.json"))
    assert code == 2 and "no such file" in err


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["validate", "b", "--frobnicate"])
    assert exc.value.code == 2


def test_construct_matrix_round_trips(capsys, tmp_path):
    code, out, _ = call(capsys, "construct", "matrix", "b", "--n", "2")
    assert code == 0
    assert json.loads(out) == structure_to_json(matrix_semiring(boolean(), 2))


def test_construct_triangular_and_sigma(capsys, tmp_path):
    mod = tmp_path / "m.json"
    mod.write_text(json.dumps({"module_order": 2, "module_add": [[0, 1], [1, 1]],
                               "left_action": [[0, 0], [0, 1]], "right_action": [[0, 0], [0, 1]]}))
    code, out, _ = call(capsys, "construct", "triangular", "b", "b", "--module", str(mod))
    assert code == 0 and json.loads(out)["order"] == 8
    code, out, _ = call(capsys, "construct", "sigma", "z3", "--sigma", "0,1,2")
    assert code == 0 and json.loads(out)["order"] == 9
    code, _, _ = call(capsys, "construct", "sigma", "z4", "--sigma", "0,2,1,3")
    assert code == 2


def test_construct_endomorphisms_closure_failure(capsys, tmp_path):
    magma = tmp_path / "magma.json"
    magma.write_text(json.dumps({"add": [[0, 1, 2], [1, 0, 0], [2, 0, 1]]}))
    code, out, _ = call(capsys, "construct", "endomorphisms", str(magma))
    assert code == 0 and "closure_failure" in json.loads(out)


def test_graph_and_dot(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    code, out, _ = call(capsys, "graph", "z4", "--dot", str(dot))
    data = json.loads(out)
    assert code == 0 and data["vertices"] == [2] and data["notion"] == "strong"
    assert dot.read_text() == 'digraph zd {\n  "2";\n}\n'


def test_enumerate_to_directory_and_verify_corpus(capsys, tmp_path):
    out_dir = tmp_path / "corpus"
    code, out, _ = call(capsys, "enumerate", "--kind", "semigroup_with_zero", "--order", "3", "--up-to-iso",
                        "-o", str(out_dir))
    assert code == 0 and json.loads(out)["count"] == 12
    assert len(list(out_dir.glob("*.json"))) == 12
    code, out, _ = call(capsys, "verify", "--suite", "reversible-equivalences", "--corpus", str(out_dir))
    assert code == 0 and json.loads(out)["structures_checked"] == 12


def test_enumerate_cap_is_resource_error(capsys):
    code, _, err = call(capsys, "enumerate", "--kind", "semiring", "--order", "6")
    assert code == 3 and "resource" in err


def test_enumerate_random_uses_seed(capsys):
    _, a, _ = call(capsys, "--seed", "5", "enumerate", "--kind", "semigroup_with_zero", "--order", "7",
                   "--random", "2")
    _, b, _ = call(capsys, "enumerate", "--kind", "semigroup_with_zero", "--order", "7", "--random", "2",
                   "--seed", "5")
    assert a == b and len(json.loads(a)) == 2


def test_verify_exit_codes(capsys):
    code, out, err = call(capsys, "verify", "--suite", "reversible-equivalences", "--order", "3")
    assert code == 0 and json.loads(out)["violations"] == [] and "violation" in err
    code, out, _ = call(capsys, "verify", "--suite", "triangular", "--order", "2")
    assert code == 1 and json.loads(out)["violations"]


def test_hunt(capsys):
    code, out, _ = call(capsys, "hunt", "--expr", "reversible and not eversible", "--kind",
                        "semigroup_with_zero", "--max-order", "3")
    data = json.loads(out)
    assert code == 0 and data["exhausted"] and data["found"] is None


def test_output_flag_writes_file(capsys, tmp_path, bfile):
    target = tmp_path / "report.json"
    code, out, _ = call(capsys, "-o", str(target), "props", bfile)
    assert code == 0 and out == ""
    assert {r["property"] for r in json.loads(target.read_text())} >= {"reversible", "eversible"}


def test_identical_invocations_are_byte_identical(capsys):
    _, a, _ = call(capsys, "verify", "--suite", "graph", "--order", "3", "--jobs", "1")
    _, b, _ = call(capsys, "verify", "--suite", "graph", "--order", "3", "--jobs", "2")
    assert a == b


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zdlab.cli", "validate", "b"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"valid": True, "failures": []}
    assert "valid" in proc.stderr
