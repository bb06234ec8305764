import json
import subprocess
import sys

import pytest

from wtg.cli import main, parse_weight
from wtg.fixtures import data_path

PAW = str(data_path("paw.json"))
EMPTY = str(data_path("empty_matroid.json"))


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_chromatic_example(capsys):
    code, out = run(capsys, "chromatic", "--graph", PAW, "--label", "[4,1,2,3]", "--weight", "basis:hom:1:1")
    assert code == 0
    assert out.strip() == "λ^4 - 3*λ^3 + 2*λ^2"
    code, again = run(capsys, "chromatic", "--graph", PAW, "--label", "[4,1,2,3]", "--weight", "basis:hom:1:1",
                      "--method", "recursive")
    assert again == out


def test_empty_matroid_tutte(capsys):
    code, out = run(capsys, "tutte", "--matroid", EMPTY, "--weight", "ones")
    assert code == 0 and out.strip() == "1"


def test_json_output_is_parseable(capsys):
    code, out = run(capsys, "--format", "json", "tutte", "--graph", PAW, "--weight", "basis:harm:1:2")
    assert code == 0
    assert "polynomial" in json.dumps(json.loads(out))


def test_bad_input_exits_two(capsys):
    code = main(["chromatic", "--graph", PAW, "--label", "[1,1,2,3]", "--weight", "ones"])
    assert code == 2
    assert main(["chromatic", "--graph", "/nonexistent.json", "--weight", "ones"]) == 2


def test_parse_weight():
    assert parse_weight("ones", 4).d == 0
    assert parse_weight("basis:hom:2:1", 4).d == 2
    assert parse_weight("basis:harm:1:3", 4).is_harmonic()
    with pytest.raises(ValueError):
        parse_weight("basis:harm:1:4", 4)


@pytest.mark.parametrize("name", ["example6.1", "example6.2", "logconcavity"])
def test_checks_exit_zero(capsys, name):
    code, out = run(capsys, "check", name)
    assert code == 0, out


def test_wheel_pair_prints_invariants(capsys):
    _, out = run(capsys, "check", "wheel-pair")
    lines = out.splitlines()
    assert lines[0] == "10! * (210*λ^6 - 1260*λ^5 + 2975*λ^4 - 3450*λ^3 + 1960*λ^2 - 435*λ)"
    assert lines[1] == "10! * (210*λ^6 - 1260*λ^5 + 2975*λ^4 - 3434*λ^3 + 1925*λ^2 - 416*λ)"


def test_verify_is_deterministic_across_jobs():
    cmd = [sys.executable, "-m", "wtg.cli", "--format", "json", "verify", "chromatic-tutte"]
    one = subprocess.run(cmd, capture_output=True, text=True)
    two = subprocess.run(cmd + ["--jobs", "2"], capture_output=True, text=True)
    assert one.returncode == 0, one.stdout + one.stderr
    assert one.stdout == two.stdout


def test_harmonic_basis_command(capsys):
    code, out = run(capsys, "--format", "json", "harmonic-basis", "--n", "4", "--d", "1")
    assert code == 0
    assert len(json.loads(out)) == 3
