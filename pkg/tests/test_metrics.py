from fractions import Fraction

import pytest

from pcf_unify.metrics import convergence_rate, irrationality_delta, rate_ratio
from pcf_unify.parsing import parse_poly
from pcf_unify.recurrence import PCF


def pcf(a, b):
    return PCF(parse_poly(a), parse_poly(b))


DEPTH = 2000


@pytest.fixture(scope="module")
def table_pcfs():
    return {
        "row1": pcf("3n+1", "n(1-2n)"),
        "row3": pcf("2", "(2n-1)^2"),
        "row5": pcf(
            "240n^3 + 164n^2 - 54n - 29",
            "-9216n^6 + 12288n^5 + 11264n^4 - 15520n^3 - 764n^2 + 3802n - 714",
        ),
        "gauss": pcf("2n+1", "n^2"),
    }


def test_delta_row1(table_pcfs):
    d = irrationality_delta(table_pcfs["row1"], DEPTH)
    assert abs(d.delta - (-0.65)) < 0.02


def test_delta_leibniz(table_pcfs):
    d = irrationality_delta(table_pcfs["row3"], DEPTH)
    assert abs(d.delta - (-1.00)) < 0.02


def test_delta_gauss(table_pcfs):
    d = irrationality_delta(table_pcfs["gauss"], DEPTH)
    assert abs(d.delta - (-0.2)) < 0.05


def test_rates_and_ratio(table_pcfs):
    r1 = convergence_rate(table_pcfs["row1"], DEPTH)
    r5 = convergence_rate(table_pcfs["row5"], DEPTH)
    assert abs(r1.rate - 0.69) < 0.02
    assert abs(r5.rate - 1.38) < 0.02
    assert rate_ratio(r1, r5) == Fraction(1, 2)
    assert rate_ratio(r5, r1) == Fraction(2)


def test_rate_thresholded_to_zero(table_pcfs):
    r = convergence_rate(table_pcfs["row3"], DEPTH)
    assert r.rate == 0.0
    assert rate_ratio(r, convergence_rate(table_pcfs["row1"], DEPTH)) == 0


def test_rate_ratio_symmetry(table_pcfs):
    r1 = convergence_rate(table_pcfs["row1"], DEPTH)
    r5 = convergence_rate(table_pcfs["row5"], DEPTH)
    assert rate_ratio(r1, r5) * rate_ratio(r5, r1) == 1


def test_delta_stabilizes(table_pcfs):
    d1 = irrationality_delta(table_pcfs["row1"], 1000)
    d2 = irrationality_delta(table_pcfs["row1"], 2000)
    assert abs(d1.delta - d2.delta) < 0.05
