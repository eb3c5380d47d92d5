"""
Tests for the biharm command-line interface and its exit codes

Run with: python -m pytest tests/
"""

import csv
import io
import json

import pytest
from src.cli import main
from src.commands import (
    EXIT_CONFIG_ERROR,
    EXIT_NUMERIC_FAILURE,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    numeric_stage,
    run_guarded,
)
from src.commands.probe import parse_point
from src.utils.validators import DomainError, QuadratureError

MANUFACTURED = {
    "source_g": {"terms": [{"j": 0, "k": 0, "re": 64}]},
    "quadrature": {"green_potential": "exact"},
    "grid": {"n_radii": 3, "n_angles": 4, "r_min": 0.0, "r_max": 0.5},
}


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_solve_writes_csv(write_config, tmp_path):
    """Test solve writes one row per grid point with f = (1 − |z|²)²."""
    out = tmp_path / "solution.csv"
    assert main(["solve", write_config(MANUFACTURED), "--output", str(out)]) == EXIT_OK
    rows = _rows(out.read_text(encoding="utf-8"))
    assert len(rows) == 9
    for row in rows:
        r2 = float(row["re"]) ** 2 + float(row["im"]) ** 2
        assert float(row["f_re"]) == pytest.approx((1 - r2) ** 2, abs=1e-12)
        assert float(row["lambda"]) == pytest.approx(4 * r2 ** 0.5 * (1 - r2), abs=1e-12)


def test_solve_is_byte_identical(write_config, tmp_path):
    """Test two runs of the same config produce identical files."""
    config = write_config(MANUFACTURED)
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["solve", config, "-o", str(first)])
    main(["solve", config, "-o", str(second)])
    assert first.read_bytes() == second.read_bytes()


def test_solve_empty_grid_prints_header(write_config, capsys):
    """Test an empty grid yields the header row only."""
    config = write_config({"grid": {"n_radii": 0}})
    assert main(["solve", config]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["re,im,f_re,f_im,dfdz_re,dfdz_im,dfdzbar_re,dfdzbar_im,lambda"]


def test_malformed_config_exits_with_config_error(tmp_path, capsys):
    """Test invalid JSON and missing files map to exit code 2."""
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["solve", str(bad)]) == EXIT_CONFIG_ERROR
    assert '"success": false' in capsys.readouterr().err
    assert main(["solve", str(tmp_path / "missing.json")]) == EXIT_CONFIG_ERROR


def test_schema_violation_exits_with_config_error(write_config):
    """Test unknown keys and out-of-range values are config errors."""
    assert main(["solve", write_config({"grid": {"r_max": 1.5}})]) == EXIT_CONFIG_ERROR
    assert main(["solve", write_config({"boundary_psi": {"type": "spline"}})]) == EXIT_CONFIG_ERROR
    assert main(["solve", write_config({"unexpected": 1})]) == EXIT_CONFIG_ERROR


def test_check_majorant_power_law(capsys):
    """Test t^0.5 satisfies all three conditions."""
    assert main(["check-majorant", "--beta", "0.5"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["success"] is True
    assert document["regular"] is True
    assert [r["condition"] for r in document["reports"]] == ["fast", "slow", "hardy_littlewood"]


def test_check_majorant_lipschitz_fails_hardy_littlewood(capsys):
    """Test ω(t) = t fails the HL condition with exit code 1."""
    assert main(["check-majorant", "--beta", "1", "--hl"]) == EXIT_VERIFICATION_FAILED
    document = json.loads(capsys.readouterr().out)
    assert document["reports"][0]["diverged"] is True


def _reject_constant(token):
    raise ValueError(f"non-standard JSON token {token}")


def test_check_majorant_divergent_output_is_strict_json(capsys):
    """Test a divergent slow condition prints its infinite constant as "inf"."""
    assert main(["check-majorant", "--beta", "1", "--slow"]) == EXIT_VERIFICATION_FAILED
    out = capsys.readouterr().out
    document = json.loads(out, parse_constant=_reject_constant)
    report = document["reports"][0]
    assert report["condition"] == "slow"
    assert report["sup_ratio"] == "inf"
    assert report["limit_estimate"] == "inf"


def test_check_majorant_rejects_invalid_majorants(tmp_path):
    """Test out-of-range exponents and non-majorant tables exit 2."""
    assert main(["check-majorant", "--beta", "1.5"]) == EXIT_CONFIG_ERROR
    table = tmp_path / "omega.json"
    table.write_text(json.dumps({"type": "tabulated", "knots": [[1, 1], [2, 3]]}), encoding="utf-8")
    assert main(["check-majorant", "--majorant", str(table)]) == EXIT_CONFIG_ERROR


def test_check_majorant_inline_json(capsys):
    """Test a tabulated majorant given as inline JSON."""
    spec = json.dumps({"type": "tabulated", "knots": [[1, 1], [2, 1.5]]})
    assert main(["check-majorant", "--majorant", spec, "--fast"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["majorant"] == "tabulated(n=2)"
    assert document["regular"] is None


def test_kernel_probe(capsys):
    """Test kernel-probe prints P(0, ·) = 1 and the Green diagonal value."""
    assert main(["kernel-probe", "--kernel", "poisson", "--z", "0,0", "--t", "0.5", "--t", "1.5"]) == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    assert [float(row["value_re"]) for row in rows] == pytest.approx([1.0, 1.0])
    assert main(["kernel-probe", "--kernel", "green", "--z", "0", "--w", "0,0"]) == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    assert float(rows[0]["value_re"]) == pytest.approx(-1.0)


def test_kernel_probe_domain_errors():
    """Test boundary points and missing arguments exit 2."""
    assert main(["kernel-probe", "--kernel", "poisson", "--z", "1,0", "--t", "0"]) == EXIT_CONFIG_ERROR
    assert main(["kernel-probe", "--kernel", "green", "--z", "0"]) == EXIT_CONFIG_ERROR


def test_parse_point():
    """Test point parsing."""
    assert parse_point("0.5,-0.25") == complex(0.5, -0.25)
    assert parse_point(" 0.3 ") == 0.3
    with pytest.raises(DomainError):
        parse_point("a,b")


def test_run_guarded_exit_codes():
    """Test numeric failures exit 3 and config failures exit 2."""
    def numeric():
        raise QuadratureError("non-finite integrand")

    def config():
        raise DomainError("bad radius")

    assert run_guarded(numeric, "numeric") == EXIT_NUMERIC_FAILURE
    assert run_guarded(config, "config") == EXIT_CONFIG_ERROR
    assert run_guarded(lambda: EXIT_OK, "ok") == EXIT_OK


def test_domain_error_during_computation_is_numeric_failure():
    """Test a DomainError raised after config loading exits 3."""
    def computation():
        with numeric_stage():
            raise DomainError("point left the disk")

    assert run_guarded(computation, "numeric") == EXIT_NUMERIC_FAILURE


def test_solve_grid_beyond_derivative_margin_exits_numeric(write_config, capsys):
    """Test a valid grid whose derivatives cannot be evaluated exits 3."""
    config = write_config({
        "quadrature": {"green_potential": "exact"},
        "grid": {"n_radii": 1, "n_angles": 2, "r_min": 0.9995, "r_max": 0.9995},
    })
    assert main(["solve", config]) == EXIT_NUMERIC_FAILURE
    assert '"success": false' in capsys.readouterr().err


def test_verify_requires_majorants(write_config):
    """Test verification without a majorants section is a config error."""
    assert main(["verify-lemmas", write_config({})]) == EXIT_CONFIG_ERROR


def test_verify_lemmas_constant_psi(write_config, tmp_path):
    """Test constant ψ skips the normalised sweeps and passes."""
    config = write_config({
        "boundary_phi": {"type": "trigpoly", "coeffs": [{"k": 0, "re": 1}]},
        "boundary_psi": {"type": "trigpoly", "coeffs": [{"k": 0, "re": 5}]},
        "majorants": {"omega1": {"type": "power", "beta": 1.0}, "omega2": {"type": "power", "beta": 0.5}},
        "verification": {"levels": 2, "n_pairs": 2000},
    })
    out = tmp_path / "lemmas.json"
    assert main(["verify-lemmas", config, "--output", str(out)]) == EXIT_OK
    document = json.loads(out.read_text(encoding="utf-8"))
    assert document["success"] is True
    skipped = {r["quantity"] for r in document["reports"] if r.get("skipped")}
    assert {"j1_scaled", "j1_explicit", "q_sup", "q_lambda", "q_radial", "q_equimodular"} <= skipped


@pytest.mark.slow
def test_verify_theorem_negative_control(write_config, tmp_path):
    """Test a β = 0.5 cusp with ω₁ = ω₂ = t fails with exit code 1."""
    config = write_config({
        "boundary_psi": {"type": "hoelder", "beta": 0.5},
        "quadrature": {"green_potential": "exact"},
        "majorants": {"omega1": {"type": "power", "beta": 1.0}, "omega2": {"type": "power", "beta": 1.0}},
        "verification": {"include_corollaries": False},
    })
    out = tmp_path / "theorem.json"
    assert main(["verify-theorem", config, "--output", str(out)]) == EXIT_VERIFICATION_FAILED
    document = json.loads(out.read_text(encoding="utf-8"))
    failing = {r.get("quantity") for r in document["reports"] if not r["pass"]}
    assert "modulus_f" in failing


@pytest.mark.slow
def test_verify_theorem_positive_configuration(tmp_path):
    """Test the shipped cusp configuration passes every report."""
    out = tmp_path / "theorem.json"
    assert main(["verify-theorem", "configs/theorem.json", "--output", str(out)]) == EXIT_OK


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
