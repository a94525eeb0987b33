"""Parametrized Euler characteristics: three routes, specializations, chi family."""

from __future__ import annotations

from fractions import Fraction

import pytest

from mapchi.arith import AlphaFn, UniPoly, bernoulli
from mapchi.eulerchar import (
    LambdaTriple,
    ParityError,
    TruncationError,
    chi_complex,
    chi_fixed_curves,
    chi_real,
    chi_real_from_lambda,
    eval_at_gamma,
    gamma_poly,
    lambda_values,
    logW_series,
    xi_closed,
    xi_from_logW,
    xi_from_maps,
)
from mapchi.mapseries import map_count_table


def test_logW_first_order_coefficient():
    """Hand-expanded t^1 coefficient of log W.

    Collecting the k=1 tail term and the delta=1 double sum gives
    (-1/(12a) + 1/4 - a/12) x + (1/(4a) - 1/4) x^2 - x^3/(6a).
    """
    alpha = AlphaFn.alpha()
    inv = AlphaFn.alpha(-1)
    expected = UniPoly(
        "x",
        (
            AlphaFn.zero(),
            inv * Fraction(-1, 12) + Fraction(1, 4) - alpha * Fraction(1, 12),
            inv * Fraction(1, 4) - Fraction(1, 4),
            inv * Fraction(-1, 6),
        ),
    )
    assert logW_series(1).coefficient(1) == expected
    with pytest.raises(ValueError):
        logW_series(0)


def test_xi_closed_known_values():
    assert xi_closed(1, 1).coeffs == (
        Fraction(1, 12),
        Fraction(-1, 4),
        Fraction(1, 12),
    )
    # Pinned by xi(1/2) = -1/12 and xi(1) = 0 with zero constant term.
    assert xi_closed(2, 1).coeffs == (0, Fraction(1, 24), Fraction(-1, 24))
    assert xi_closed(1, 2) == xi_closed(1, 1) * -1
    with pytest.raises(ValueError):
        xi_closed(0, 1)
    with pytest.raises(ValueError):
        xi_closed(1, 0)


def test_xi_degree_law():
    """Degree g for even g, degree g+1 for odd g, with predictable top term."""
    for g in range(1, 9):
        for s in range(1, 4):
            xi = xi_closed(g, s)
            assert xi.var == "1/gamma"
            if g % 2 == 0:
                assert xi.degree == g
                assert xi.coeff(0) == 0
                assert xi.coeff(g) == -xi.coeff(1)
                assert all(xi.coeff(k) == 0 for k in range(2, g))
            else:
                assert xi.degree == g + 1
                assert bernoulli(g + 1) != 0


def test_xi_routes_agree():
    for g in range(1, 6):
        for s in range(1, 4):
            assert xi_from_logW(g, s) == xi_closed(g, s)


def test_xi_from_maps_matches_closed_form():
    table = map_count_table(3)
    assert xi_from_maps(1, 1, table) == xi_closed(1, 1)


def test_xi_from_maps_requires_deep_table():
    with pytest.raises(TruncationError, match="insufficient truncation"):
        xi_from_maps(1, 1, map_count_table(2))
    with pytest.raises(TruncationError):
        xi_from_maps(2, 1, map_count_table(3))


def test_eval_at_gamma():
    xi = xi_closed(1, 1)
    assert eval_at_gamma(xi, Fraction(1, 2)) == Fraction(-1, 12)
    assert eval_at_gamma(xi, Fraction(1)) == Fraction(-1, 12)
    assert eval_at_gamma(gamma_poly((0, 1)), Fraction(1, 3)) == 3
    with pytest.raises(ValueError):
        eval_at_gamma(UniPoly("b", (1,)), Fraction(1))


def test_lambda_values():
    assert lambda_values(1, 1) == LambdaTriple(
        Fraction(-1, 12), Fraction(-1, 12), Fraction(0)
    )
    assert lambda_values(2, 1) == LambdaTriple(
        Fraction(-1, 12), Fraction(0), Fraction(-1, 12)
    )
    assert lambda_values(2, 2) == LambdaTriple(
        Fraction(1, 6), Fraction(0), Fraction(1, 6)
    )
    for g in range(1, 9):
        for s in range(1, 4):
            triple = lambda_values(g, s)
            assert triple.total == triple.orientable + triple.nonorientable
            if g % 2:
                assert triple.nonorientable == 0
            else:
                assert triple.orientable == 0


def test_chi_real_values():
    assert chi_real(1, 0).value == Fraction(1, 2)
    assert chi_real(0, 0).value == 1
    assert chi_real(0, 1).value == 1
    assert chi_real(0, 5).value == 0
    assert chi_real(2, 1).value == Fraction(-1, 12)
    assert chi_real(3, 1).value == 0  # odd g >= 3 kills B_g
    with pytest.raises(ValueError):
        chi_real(-1, 0)


def test_chi_real_lambda_route():
    for g in range(1, 9):
        for s in range(1, 4):
            assert chi_real_from_lambda(g, s).value == chi_real(g, s).value
    with pytest.raises(ValueError):
        chi_real_from_lambda(1, 0)


def test_chi_complex_values():
    assert chi_complex(1, 1).value == Fraction(-1, 12)
    assert chi_complex(3, 1).value == Fraction(1, 120)
    assert chi_complex(5, 1).value == Fraction(-1, 252)
    for g in (2, 4, 6):
        assert chi_complex(g, 1).value == 0
    for g in range(1, 8):
        for s in range(1, 4):
            assert chi_complex(g, s).value == eval_at_gamma(xi_closed(g, s), Fraction(1))


def test_chi_fixed_curves_values():
    assert chi_fixed_curves(2, 1, 1, separating=True).value == Fraction(1, 12)
    assert chi_fixed_curves(3, 1, 1, separating=False).value == Fraction(1, 3)


def test_chi_fixed_curves_reduces_at_m_zero():
    for g in range(1, 7):
        for s in range(1, 4):
            nonsep = chi_fixed_curves(g, s, 0, separating=False)
            assert nonsep.value == chi_real(g, s).value
            if (g + 1) % 2 == 0:
                sep = chi_fixed_curves(g, s, 0, separating=True)
                assert sep.value == chi_complex(g, s).value


def test_chi_fixed_curves_guards():
    with pytest.raises(ParityError):
        chi_fixed_curves(3, 1, 1, separating=True)  # g-m+1 odd
    with pytest.raises(ValueError):
        chi_fixed_curves(1, 1, 2, separating=True)  # g-m-1 < 0
    with pytest.raises(ValueError):
        chi_fixed_curves(2, 1, 3, separating=False)  # m > g
    with pytest.raises(ValueError):
        chi_fixed_curves(0, 1, 0, separating=False)


def test_chi_value_metadata():
    v = chi_fixed_curves(2, 1, 1, separating=True)
    assert (v.g, v.s, v.m, v.separating, v.variant) == (2, 1, 1, True, "fixed-curves")
    assert chi_real(2, 1).variant == "real"
