"""Command-line interface: output shapes, determinism, exit codes."""

from __future__ import annotations

import json

import pytest

from mapchi import arith
from mapchi.cli import main


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_maps_table_json(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "maps", "table", "--max-edges", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["max_edges"] == 1
    assert payload["rows"] == [
        {"i": [2], "j": 1, "n": 1, "poly": ["1"]},
        {"i": [0, 1], "j": 1, "n": 1, "poly": ["0", "1"]},
        {"i": [0, 1], "j": 2, "n": 1, "poly": ["1"]},
    ]


def test_maps_table_output_is_byte_deterministic(capsys):
    _, first, _ = run_cli(capsys, "--format", "json", "maps", "table", "--max-edges", "2")
    _, second, _ = run_cli(capsys, "--format", "json", "maps", "table", "--max-edges", "2")
    assert first == second


def test_maps_table_csv_with_specialization(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "csv", "maps", "table", "--max-edges", "1", "--b", "1"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,j,i,count"
    assert lines[1:] == ["1,1,2,1", "1,1,0 1,1", "1,2,0 1,1"]


def test_maps_table_pretty_polynomials(capsys):
    code, out, _ = run_cli(capsys, "maps", "table", "--max-edges", "1")
    assert code == 0
    assert "n=1 j=1 i=[0, 1]" in out and " b" in out


def test_euler_xi_routes_print_same_coefficients(capsys):
    outputs = []
    for route in ("closed", "logw", "maps"):
        code, out, _ = run_cli(
            capsys,
            "--format",
            "json",
            "euler",
            "xi",
            "--g",
            "1",
            "--s",
            "1",
            "--route",
            route,
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["route"] == route
        outputs.append(payload["coeffs"])
    assert outputs[0] == outputs[1] == outputs[2] == ["1/12", "-1/4", "1/12"]


def test_euler_xi_maps_route_rejects_deep_requests(capsys):
    code, _, err = run_cli(capsys, "euler", "xi", "--g", "2", "--s", "1", "--route", "maps")
    assert code == 2
    assert "beyond the supported bound" in err


def test_euler_chi_variants(capsys):
    code, out, _ = run_cli(capsys, "euler", "chi", "--variant", "real", "--g", "2", "--s", "1")
    assert code == 0 and out.strip() == "-1/12"
    code, out, _ = run_cli(
        capsys,
        "--format",
        "json",
        "euler",
        "chi",
        "--variant",
        "fixed",
        "--g",
        "2",
        "--s",
        "1",
        "--m",
        "1",
        "--separating",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "variant": "fixed-curves",
        "g": 2,
        "s": 1,
        "value": "1/12",
        "m": 1,
        "separating": True,
    }


def test_euler_chi_fixed_requires_m(capsys):
    code, _, err = run_cli(capsys, "euler", "chi", "--variant", "fixed", "--g", "2", "--s", "1")
    assert code == 2 and "--m" in err


def test_euler_chi_parity_error_exits_nonzero(capsys):
    code, _, err = run_cli(
        capsys,
        "euler",
        "chi",
        "--variant",
        "fixed",
        "--g",
        "3",
        "--s",
        "1",
        "--m",
        "1",
        "--separating",
    )
    assert code == 2 and "error:" in err


def test_jack_json(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "jack", "--shape", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["shape"] == [2]
    assert payload["expansion"] == {"[2]": "alpha", "[1,1]": "1"}
    assert payload["norm"] == "2alpha^2+2alpha^3"
    assert payload["principal"] == ["0", "alpha", "1"]
    assert payload["p2coeff"] == "alpha"


def test_jack_pretty(capsys):
    code, out, _ = run_cli(capsys, "jack", "--shape", "2,1")
    assert code == 0
    assert "J_[2,1] =" in out
    assert "p_[3]" in out and "norm" in out


def test_oracle_glue_json(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "oracle", "glue", "--sides", "4", "--patterns"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["raw_count"] == 12
    assert payload["edges"] == 2
    klein = payload["patterns"]["chi=0,nonorientable"]
    assert set(klein) == {"a a b b", "a b a^-1 b", "a b a b^-1", "a b b a"}
    assert payload["patterns"]["chi=0,orientable"] == ["a b a^-1 b^-1"]


def test_oracle_rooted_totals(capsys):
    code, out, _ = run_cli(capsys, "oracle", "rooted", "--edges", "2", "--surface", "all")
    assert code == 0
    assert out.strip().splitlines()[-1] == "total: 24"


def test_oracle_lambda_json(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "oracle", "lambda", "--g", "1", "--s", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "g": 1,
        "s": 1,
        "total": "-1/12",
        "orientable": "-1/12",
        "nonorientable": "0",
    }


def test_verify_all_small_truncation_skips_map_route(capsys):
    code, out, _ = run_cli(capsys, "verify-all", "--max-edges", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert any(
        line.startswith("SKIP xi-map-route") and "insufficient truncation" in line
        for line in lines
    )
    assert all(not line.startswith("FAIL") for line in lines)


def test_verify_all_detects_corrupted_bernoulli_cache(capsys):
    """Tampering with the memoized Bernoulli numbers must fail the arithmetic check."""
    from fractions import Fraction

    arith.bernoulli(12)
    saved = list(arith._bernoulli_cache)
    try:
        arith._bernoulli_cache[6] = Fraction(1, 7)
        code, out, _ = run_cli(capsys, "verify-all", "--max-edges", "1")
    finally:
        arith._bernoulli_cache[:] = saved
    assert code == 2
    assert any(line.startswith("FAIL exact-arith") for line in out.splitlines())


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("mapchi ")
