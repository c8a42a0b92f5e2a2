"""End-to-end command-line runs: exit codes, reports, determinism."""

import json
import os
import subprocess
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run_cli(args, **kw):
    env = dict(os.environ)
    env["PYTHONPATH"] = os.path.join(ROOT, "src")
    return subprocess.run([sys.executable, "-m", "torvoa.cli"] + args,
                          capture_output=True, text=True, env=env, **kw)


MINI = """
[rep]
N = 1
algebra = "sl2"
c = "1"
c_L = "9"
c_LI = "1/2"
max_degree = 2
mode_window = 1
base_mode_window = 1
base_max_degree = 1
pairs_per_class = 10
"""


@pytest.fixture
def mini_config(tmp_path):
    p = tmp_path / "mini.toml"
    p.write_text(MINI)
    return str(p)


def test_lie_check_cli(tmp_path):
    out = tmp_path / "lie.json"
    r = run_cli(["lie-check", "--N", "1", "--mu", "1", "--nu", "0",
                 "--samples", "20", "--seed", "7", "--json", str(out)])
    assert r.returncode == 0, r.stderr
    doc = json.loads(out.read_text())
    assert doc["pass"] is True
    assert doc["results"]["rows"]["jacobi"]["cases"] == 20


def test_verify_toroidal_cli(mini_config, tmp_path):
    out = tmp_path / "r.json"
    r = run_cli(["verify-toroidal", "--config", mini_config,
                 "--json", str(out)])
    assert r.returncode == 0, r.stderr
    assert "PASS" in r.stdout
    doc = json.loads(out.read_text())
    assert doc["results"]["classes"]["d0.da"]["alias"] == "4.4"
    assert doc["config"]["c_L"] == "9"


def test_byte_identical_reports(mini_config, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_cli(["verify-toroidal", "--config", mini_config, "--json", str(a)])
    run_cli(["verify-toroidal", "--config", mini_config, "--json", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_flag_overrides_file(mini_config, tmp_path):
    out = tmp_path / "r.json"
    r = run_cli(["verify-toroidal", "--config", mini_config,
                 "--c-L", "8", "--json", str(out)])
    assert r.returncode == 2
    assert "rank sum" in r.stderr


def test_config_error_exit_code(tmp_path):
    r = run_cli(["verify-exceptional", "--N", "3"])
    assert r.returncode == 2
    assert "N = 12" in r.stderr


def test_negative_controls_cli(mini_config):
    r = run_cli(["verify-toroidal", "--config", mini_config,
                 "--negative-controls"])
    assert r.returncode == 0, r.stderr + r.stdout
    assert "PASS" in r.stdout


def test_characters_cli(tmp_path):
    csv_path = tmp_path / "c.csv"
    r = run_cli(["characters", "--space", "hyp-plus", "--N", "12",
                 "--max-degree", "4", "--csv", str(csv_path)])
    assert r.returncode == 0, r.stderr
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0].startswith("series,degree")
    assert "25650" in lines[-1]


def test_characters_verma_cli():
    r = run_cli(["characters", "--space", "hvir-verma", "--ratio", "-1",
                 "--max-degree", "5"])
    assert r.returncode == 0, r.stderr
    assert "(1-q^2)" in r.stdout


def test_axioms_cli():
    r = run_cli(["axioms", "--space", "hvir", "--max-degree", "3",
                 "--samples", "10", "--seed", "3"])
    assert r.returncode == 0, r.stderr
    assert "PASS" in r.stdout


def test_verify_exceptional_cli(tmp_path):
    r = run_cli(["verify-exceptional", "--N", "12", "--mode-window", "1",
                 "--max-degree", "2", "--active-coords", "2",
                 "--pairs-per-class", "4"])
    assert r.returncode == 0, r.stderr
    assert "PASS" in r.stdout


def test_json_config_accepted(tmp_path):
    cfgp = tmp_path / "c.json"
    cfgp.write_text(json.dumps({"rep": {
        "N": 1, "algebra": "sl2", "c": "1", "c_L": "9", "c_LI": "1/2",
        "max_degree": 1, "mode_window": 1, "base_mode_window": 1,
        "base_max_degree": 1, "pairs_per_class": 5}}))
    r = run_cli(["verify-toroidal", "--config", str(cfgp)])
    assert r.returncode == 0, r.stderr
