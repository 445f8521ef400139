"""CLI behaviour: golden outputs, exit codes, file round-trips."""

import json

import numpy as np
import pytest

from cli_cases import CASES, FIXTURES, check_case
from spectral_geom import spectral_state
from spectral_geom.cli import load_state, main


@pytest.mark.parametrize("case", CASES, ids=lambda c: c["name"])
def test_golden_case(case, tmp_path):
    check_case(case, tmp_path)


def test_state_out_roundtrip(tmp_path, capsys):
    """The written state file reproduces the in-memory state bitwise."""
    out = tmp_path / "state.json"
    code = main(["state", str(FIXTURES / "matrix_rank_one.json"), "--out", str(out)])
    assert code == 0
    stdout_lambda = json.loads(capsys.readouterr().out)["lambda"]
    reloaded = load_state(str(out))
    expected = spectral_state(np.array([[1.5, 0, 0, 0], [2, 0, 0, 0],
                                        [0, 0, 0, 0], [0, 0, 0, 0]]), 4)
    assert np.array_equal(reloaded, expected)
    assert np.array_equal(np.asarray(stdout_lambda), expected)


def test_state_explicit_n(tmp_path, capsys):
    code = main(["state", str(FIXTURES / "matrix_diag_b.json"), "--n", "5"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["lambda"]) == 5
    assert payload["codimension"] == 3


def test_offsum_state_renormalised_with_warning(capsys):
    lam = load_state(str(FIXTURES / "state_offsum.json"))
    assert "renormalised" in capsys.readouterr().err
    assert lam.sum() == pytest.approx(1.0, abs=1e-15)


def test_exact_state_not_renormalised(capsys):
    lam = load_state(str(FIXTURES / "state_91.json"))
    assert capsys.readouterr().err == ""
    assert np.array_equal(lam, [0.9, 0.1])


def test_transport_warns_without_full_support(capsys):
    code = main(["transport", str(FIXTURES / "state_vertex.json"),
                 "--betas", "2,1"])
    assert code == 0
    captured = capsys.readouterr()
    assert "full support" in captured.err
    assert json.loads(captured.out)["lambda"] == [1.0, 0.0]


def test_validate_fault_injection_exits_1(monkeypatch, capsys):
    """A corrupted library must trip the property suite (harness self-check)."""

    def broken_state(o, n):
        # Depends on the operator's scale, so scale invariance must fail.
        w = np.ones(n)
        w[0] = 1.0 + np.linalg.norm(o)
        return w / w.sum()

    monkeypatch.setattr("spectral_geom.validate.spectral_state", broken_state)
    code = main(["validate", "--trials", "2"])
    assert code == 1
    captured = capsys.readouterr()
    assert "FAIL" in captured.out


def test_missing_file_is_usage_error(capsys):
    assert main(["state", "no_such_file.json"]) == 2
    assert "error" in capsys.readouterr().err
