from fractions import Fraction
from math import floor

import pytest

from sscoincidence import SUPERSINGULAR_PRIMES
from sscoincidence.arith import primes_up_to
from sscoincidence.jacobi import delta6, jacobi_cusp_dim, positivity_scan
from sscoincidence.modcurve import dim_weight2_plus


def oracle_dim(p):
    total = 0
    for j in range(1, p + 1):
        total += floor(Fraction(1 + j, 6)) - (1 if j % 6 == 0 else 0) - floor(Fraction(j * j, 4 * p))
    return total


@pytest.mark.parametrize("j, expected", [(6, 1), (7, 0), (36, 1), (1, 0), (12, 1)])
def test_delta6(j, expected):
    assert delta6(j) == expected


@pytest.mark.parametrize("p, dim", [(2, 0), (11, 0), (37, 1), (43, 1), (67, 2), (71, 0)])
def test_dim_examples(p, dim):
    assert jacobi_cusp_dim(p).dim == dim


def test_terms_at_11():
    # by hand: only j = 5 (+1) and j = 10 (-1) contribute
    assert jacobi_cusp_dim(11).terms == (0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0)


def test_matches_fraction_oracle():
    for p in primes_up_to(1500):
        jd = jacobi_cusp_dim(p)
        assert jd.dim == oracle_dim(p) == sum(jd.terms)
        assert len(jd.terms) == p


def test_equals_weight2_plus_dimension():
    mismatches = [p for p in primes_up_to(10_000) if jacobi_cusp_dim(p).dim != dim_weight2_plus(p)]
    assert mismatches == []


@pytest.mark.parametrize("bound", [71, 173, 10_000])
def test_positivity_scan_returns_s(bound):
    assert positivity_scan(bound) == list(SUPERSINGULAR_PRIMES)


def test_positivity_scan_small_bounds():
    assert positivity_scan(2) == [2]
    assert positivity_scan(12) == [2, 3, 5, 7, 11]
    with pytest.raises(ValueError):
        positivity_scan(1)
