import json
import subprocess
import sys

import pytest

from brumer_forge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_chartable_d4p3_layout(capsys):
    code, out, _ = run(capsys, "chartable", "--family", "d4p", "--p", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("|")[1].strip() == "1"
    rows = [l for l in lines if l.startswith("χ")]
    assert len(rows) == 6
    assert [r.split("|")[1].strip() for r in rows] == ["1", "1", "1", "1", "2", "2"]
    assert lines[-1] == "odd: χ3, χ4, χ5"


def test_nr_of_one_in_q8(capsys):
    code, out, _ = run(capsys, "nr", "--family", "q", "--n", "1", "--element", "1")
    assert code == 0
    assert out.strip() == "1"


def test_verify_example_reports_display_mismatch(capsys):
    code, out, _ = run(capsys, "verify-example")
    assert code == 1
    marks = [l for l in out.splitlines() if not l.startswith("    ")]
    assert marks[0].endswith("✗")
    assert all(l.endswith("✓") for l in marks[1:])
    assert len(marks) == 6


@pytest.mark.parametrize("argv", [
    ["nr"],
    ["chartable", "--family", "d4p"],
    ["annihilate", "--family", "z2a4"],
    ["theta", "--S", "P7"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_bad_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("BRUMER_FORGE_THREADS", "zero")
    code, _, _ = run(capsys, "group", "--family", "z2a4")
    assert code == 2


def test_bad_seed_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nr", "--family", "q", "--n", "1", "--seed", "-1"])
    assert exc.value.code == 2


def test_machine_chartable_is_json(capsys):
    code, out, _ = run(capsys, "chartable", "--family", "q", "--n", "2", "--format", "machine")
    assert code == 0
    data = json.loads(out)
    assert data


def test_theta_modes_agree(capsys):
    code, out, _ = run(capsys, "theta", "--S", "P2,P3,P11", "--format", "machine")
    assert code == 0
    data = json.loads(out)
    assert data["agree"] is True


def test_theta_with_T_is_integral(capsys):
    code, out, _ = run(capsys, "theta", "--T", "P5", "--mode", "L", "--format", "machine")
    assert code == 0
    data = json.loads(out)
    assert data["L-values"]["integral_components"] is True


def test_conductor_all_orbits_pass(capsys):
    code, out, _ = run(capsys, "conductor", "--family", "d4p", "--p", "5")
    assert code == 0
    assert "1: not in the central conductor" in out


def test_annihilate_from_file(capsys, tmp_path):
    mod = {
        "group": {"family": "d12_paper"},
        "orders": [48],
        "action": {"σ": [[1]], "τ": [[1]], "j": [[-1]]},
        "element": "1+j",
    }
    p = tmp_path / "m.json"
    p.write_text(json.dumps(mod))
    code, out, _ = run(capsys, "annihilate", "--input", str(p))
    assert code == 0, out


def test_seeded_nr_is_byte_stable():
    argv = [sys.executable, "-m", "brumer_forge.cli", "nr", "--family", "d4p", "--p", "3", "--seed", "7"]
    a = subprocess.run(argv, capture_output=True)
    b = subprocess.run(argv, capture_output=True)
    assert a.returncode == 0, a.stderr
    assert a.stdout == b.stdout
