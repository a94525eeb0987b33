"""Brute-force oracles: polygon gluings and encoded rooted maps."""

from __future__ import annotations

from fractions import Fraction

import pytest

from mapchi.eulerchar import TruncationError, lambda_values
from mapchi.maporacle import (
    double_cover_lift_check,
    glue_census,
    lambda_from_census,
    rooted_locally_orientable_counts,
    rooted_orientable_counts,
)
from mapchi.mapseries import MapKey, map_count_table, specialize_counts

# -- polygon gluings ---------------------------------------------------------


def test_two_gon_census():
    census = glue_census(2)
    assert census.raw_count == 2
    assert census.connected_count == 2
    assert census.by_chi == {(2, True): 1, (1, False): 1}
    assert census.by_chi_filtered == {}  # both gluings leave low-valence vertices


def test_square_census():
    census = glue_census(4, collect_patterns=True)
    assert census.raw_count == 12
    assert census.by_chi == {(2, True): 2, (1, False): 5, (0, False): 4, (0, True): 1}
    assert census.by_chi_filtered == {(0, False): 4, (0, True): 1}
    assert census.lambda_nonorientable(1) == 4
    assert census.lambda_orientable(1) == 1


def test_square_patterns_are_the_klein_and_torus_words():
    census = glue_census(4, collect_patterns=True)
    klein = set(census.patterns_filtered[(0, False)])
    assert klein == {"a a b b", "a b a^-1 b", "a b a b^-1", "a b b a"}
    assert census.patterns_filtered[(0, True)] == ["a b a^-1 b^-1"]


def test_two_squares_census_counts_connectivity():
    census = glue_census(2, 2)
    assert census.raw_count == 12
    assert census.connected_count == 8
    assert census.by_chi == {(2, True): 4, (1, False): 4}


def test_glue_census_rejects_bad_sides():
    with pytest.raises(ValueError):
        glue_census()
    with pytest.raises(ValueError):
        glue_census(3)
    with pytest.raises(ValueError):
        glue_census(2, 0)


def test_orientable_gluings_have_even_chi():
    census = glue_census(6)
    for (chi, orientable), count in census.by_chi.items():
        assert count > 0
        assert chi <= 2
        if orientable:
            assert chi % 2 == 0


def test_double_cover_lifts():
    assert double_cover_lift_check(2) == 1
    assert double_cover_lift_check(4) == 9
    assert double_cover_lift_check(2, 2) == 4


# -- rooted-map oracles -------------------------------------------------------


def test_rooted_orientable_one_edge():
    assert rooted_orientable_counts(1) == {
        MapKey((2,), 1, 1): 1,
        MapKey((0, 1), 2, 1): 1,
    }


def test_rooted_locally_orientable_one_edge():
    assert rooted_locally_orientable_counts(1) == {
        MapKey((2,), 1, 1): 1,
        MapKey((0, 1), 1, 1): 1,
        MapKey((0, 1), 2, 1): 1,
    }


def test_rooted_totals():
    for n, expected in ((1, 2), (2, 10), (3, 74)):
        assert sum(rooted_orientable_counts(n).values()) == expected
    for n, expected in ((1, 3), (2, 24), (3, 297)):
        assert sum(rooted_locally_orientable_counts(n).values()) == expected


def test_oracles_match_series_specializations():
    """Both oracles agree with the b = 0 and b = 1 columns of the series table."""
    table = map_count_table(2)
    at_zero = specialize_counts(table, Fraction(0))
    at_one = specialize_counts(table, Fraction(1))
    for n in (1, 2):
        orient = rooted_orientable_counts(n)
        everything = rooted_locally_orientable_counts(n)
        for key in (k for k in table.entries if k.n == n):
            assert orient.get(key, 0) == at_zero[key]
            assert everything.get(key, 0) == at_one[key]
        assert set(orient) == {k for k in at_zero if k.n == n and at_zero[k]}
        assert set(everything) == {k for k in at_one if k.n == n and at_one[k]}


def test_rooted_counts_respect_enumeration_bound():
    with pytest.raises(TruncationError):
        rooted_orientable_counts(4)
    with pytest.raises(TruncationError):
        rooted_locally_orientable_counts(4)
    with pytest.raises(ValueError):
        rooted_orientable_counts(0)


def test_lambda_from_census():
    triple = lambda_from_census(1, 1)
    assert triple == lambda_values(1, 1)
    assert triple.total == Fraction(-1, 12)
    assert triple.nonorientable == 0


def test_lambda_from_census_bound_guard():
    with pytest.raises(TruncationError):
        lambda_from_census(2, 1)  # needs censuses through n = 6
    with pytest.raises(ValueError):
        lambda_from_census(0, 1)
