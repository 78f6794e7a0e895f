import json
import subprocess
import sys

import pytest

from glswc.cli import main
from glswc.errors import ValidationError
from glswc.jobs import JobDescriptor, JobResult, run_job


def write(tmp_path, data, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data) if not isinstance(data, str) else data, encoding="utf-8")
    return str(path)


STEINBERG = {"schema_version": 1, "group": "gl_fq", "n": 2, "q": 5, "rep": {"kind": "steinberg"}}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_steinberg(tmp_path, capsys):
    code, out, _ = run(capsys, "compute", write(tmp_path, STEINBERG))
    assert code == 0
    data = json.loads(out)
    assert data["total_class"] == "1 + t1 + t2"
    assert data["multiplicities"] == [3, 0, 2]
    assert data["w4"] == "0"
    assert set(data["components"]) == {str(d) for d in range(13)}


def test_compute_trivial(tmp_path, capsys):
    job = {"schema_version": 1, "group": "gl_fq", "n": 3, "q": 7,
           "rep": {"kind": "character_vector", "values": [1, 1, 1, 1]}}
    code, out, _ = run(capsys, "compute", write(tmp_path, job))
    data = json.loads(out)
    assert code == 0 and data["total_class"] == "1" and data["spinorial"] is True
    assert "w4" not in data


def test_compute_text_and_options(tmp_path, capsys):
    job = {"schema_version": 1, "group": "gl_fq", "n": 2, "q": 5,
           "rep": {"kind": "character_vector", "values": [3, 3, 3]}}
    code, out, _ = run(capsys, "compute", write(tmp_path, job), "--format", "text", "--max-degree", "3", "--delta", "1")
    assert code == 0
    assert "w = 1 + s1 + s2" in out
    assert "w3 = 0" in out and "w4" not in out.split("closed form")[0]


def test_cuspidal_partial_and_refusal(tmp_path, capsys):
    job = {"schema_version": 1, "group": "gl_fq", "n": 3, "q": 5, "rep": {"kind": "cuspidal", "theta_minus_one": 1}}
    code, _, err = run(capsys, "compute", write(tmp_path, job))
    assert code == 3 and err.startswith("UnsupportedCharacterValue")
    code, out, _ = run(capsys, "compute", write(tmp_path, job), "--max-degree", "3")
    data = json.loads(out)
    assert code == 0 and data["total_class"] is None and data["warnings"]
    assert data["m_pi"] == 48 and data["spinorial"] is True


@pytest.mark.parametrize(
    "job",
    [
        {**STEINBERG, "q": 15},
        {**STEINBERG, "colour": "red"},
        {**STEINBERG, "rep": {"kind": "steinberg", "extra": 1}},
        {**STEINBERG, "group": "gl_r"},
        {"schema_version": 2, "group": "gl_fq", "n": 2, "q": 5, "rep": {"kind": "steinberg"}},
        {"schema_version": 1, "group": "gl_fq", "n": 2, "rep": {"kind": "steinberg"}},
        {"schema_version": 1, "group": "gl_fq", "n": 2, "q": 5, "rep": {"kind": "character_vector", "values": [1, 1]}},
        {"schema_version": 1, "group": "gl_r", "n": 2, "rep": {"kind": "steinberg"}},
        "not json",
    ],
)
def test_validation_errors(tmp_path, capsys, job):
    code, out, err = run(capsys, "compute", write(tmp_path, job))
    assert code == 2
    assert err.startswith("ValidationError")
    assert out == ""


def test_mathematical_errors(tmp_path, capsys):
    odd = {"schema_version": 1, "group": "gl_fq", "n": 2, "q": 5,
           "rep": {"kind": "character_vector", "values": [2, 0, -2]}}
    code, _, err = run(capsys, "compute", write(tmp_path, odd))
    assert code == 3 and err.startswith("OddMultiplicity")
    frac = {"schema_version": 1, "group": "gl_r", "n": 2, "rep": {"kind": "character_vector", "values": [1, 0, 0]}}
    code, _, err = run(capsys, "decompose", write(tmp_path, frac))
    assert code == 3 and err.startswith("NonIntegral")
    notreal = {"schema_version": 1, "group": "gl_fq", "n": 2, "q": 7,
               "rep": {"kind": "principal_series", "exponents": [1, 2]}}
    code, _, err = run(capsys, "compute", write(tmp_path, notreal))
    assert code == 3 and err.startswith("NotReal")


def test_negative_multiplicities(tmp_path, capsys):
    job = {"schema_version": 1, "group": "gl_c", "n": 1, "rep": {"kind": "character_vector", "values": [-1, -1]}}
    path = write(tmp_path, job)
    code, _, err = run(capsys, "decompose", path)
    assert code == 3 and err.startswith("NegativeMultiplicity")
    code, out, _ = run(capsys, "decompose", path, "--allow-virtual")
    assert code == 0 and json.loads(out) == [-1, 0]


def test_matrix(capsys):
    assert run(capsys, "matrix", "1")[1].strip() == "[[1, 1], [1, -1]]"
    assert json.loads(run(capsys, "matrix", "2")[1]) == [[1, 2, 1], [1, 0, -1], [1, -2, 1]]
    assert run(capsys, "matrix", "3", "--format", "text")[1].splitlines()[0].split() == ["1", "3", "3", "1"]
    assert run(capsys, "matrix", "0")[0] == 2


def test_decompose(tmp_path, capsys):
    code, out, _ = run(capsys, "decompose", write(tmp_path, STEINBERG))
    assert code == 0 and json.loads(out) == [3, 0, 2]


def test_direct_sum(tmp_path, capsys):
    job = {"schema_version": 1, "group": "gl_fq", "n": 2, "q": 7, "rep": {"kind": "direct_sum", "parts": [
        {"kind": "character_vector", "values": [1, 1, 1]},
        {"kind": "det_twist", "j": 1},
    ]}}
    code, out, _ = run(capsys, "decompose", write(tmp_path, job))
    assert code == 0 and json.loads(out) == [1, 0, 2]


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_result_round_trip():
    desc = JobDescriptor.from_dict(STEINBERG)
    result = run_job(desc)
    assert JobResult.from_dict(json.loads(result.to_json())) == result
    assert run_job(desc).to_json() == result.to_json()


def test_descriptor_defaults():
    desc = JobDescriptor.from_dict(STEINBERG)
    assert desc.max_degree == 12 and desc.allow_virtual is False
    assert JobDescriptor.from_dict(desc.to_dict()) == desc
    with pytest.raises(ValidationError):
        JobDescriptor.from_dict({**STEINBERG, "n": 0})


def test_tables_command(capsys):
    code, out, _ = run(capsys, "tables")
    assert code == 0 and "all rows match" in out
    data = json.loads(run(capsys, "tables", "--format", "json")[1])
    assert data["all_match"] is True


def test_verify_command_small(capsys):
    code, out, _ = run(capsys, "verify", "--cases", "5", "--max-n", "3", "--seed", "4")
    assert code == 0 and out.endswith("all checks passed\n")
    assert run(capsys, "verify", "--cases", "5", "--max-n", "3", "--seed", "4")[1] == out


def test_verify_fault_injection(capsys):
    code, out, err = run(capsys, "verify", "--cases", "2", "--max-n", "2", "--inject-fault", "corrupt-matrix")
    assert code == 1
    assert "M^2=2^nI" in err and "first failure: M^2=2^nI" in out


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "glswc.cli", "matrix", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "[[1, 1], [1, -1]]"
