from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcf_unify.matrix import Mat, identity
from pcf_unify.parsing import parse_poly
from pcf_unify.poly import N, Poly
from pcf_unify.recurrence import (
    INF,
    PCF,
    InitialConditions,
    Recurrence,
    companion,
    convergent,
    convergent_sequence,
    evaluate_limit,
    mobius_apply,
    step_product,
)


def pcf(a, b):
    return PCF(parse_poly(a), parse_poly(b))


def test_companion_shapes():
    c = pcf("1", "1").companion()
    assert [[str(e) for e in row] for row in c.matrix] == [["0", "1"], ["1", "1"]]
    c = pcf("3n+1", "n(1-2n)").companion()
    assert str(c[0, 1]) == "-2*n^2 + n"
    assert str(c[1, 1]) == "3*n + 1"
    # order 3: subdiagonal ones, coefficients up the last column
    rec = Recurrence(coeffs=[N, N + 1, N + 2])
    m = companion(rec).matrix
    assert str(m[0, 2]) == "n + 2"
    assert str(m[1, 2]) == "n + 1"
    assert str(m[2, 2]) == "n"
    assert m[1, 0] == m[2, 1] and str(m[1, 0]) == "1"
    assert str(m[0, 0]) == "0"


def test_fibonacci_step_product():
    sp = step_product(pcf("1", "1").companion(), 1, 3)
    assert sp.matrix == Mat([[1, 2], [2, 3]]).map(Fraction)
    # convergent ratios 1, 1/2, 2/3
    xs = convergent_sequence(pcf("1", "1"), 3)
    assert xs == [Fraction(1), Fraction(1, 2), Fraction(2, 3)]


def test_empty_range_is_identity():
    sp = step_product(pcf("2", "(2n-1)^2").companion(), 5, 4)
    assert sp.matrix == identity(2)


def test_two_step_product_by_hand():
    sp = step_product(pcf("2", "(2n-1)^2").companion(), 1, 2)
    hand = Mat([[0, 1], [1, 2]]).map(Fraction) * Mat([[0, 9], [1, 2]]).map(Fraction)
    assert sp.matrix == hand


def test_fibonacci_convergent():
    assert convergent(pcf("1", "1"), 4) == Fraction(3, 5)


def test_series_reproduction_with_init():
    # partial sums 1, 4/3, 22/15 of sum n!/(2i+1) products, via init [[0,1],[1,1]]
    p = pcf("3n+1", "n(1-2n)")
    init = InitialConditions(Mat([[0, 1], [1, 1]]).map(Fraction))
    assert mobius_apply(init.matrix, Fraction(0)) == 1
    assert convergent(p, 1, init) == Fraction(4, 3)
    assert convergent(p, 2, init) == Fraction(22, 15)


def test_mobius_conventions():
    m = Mat([[1, 0], [0, 1]]).map(Fraction)
    assert mobius_apply(m, Fraction(5)) == 5
    m = Mat([[2, 3], [5, 7]]).map(Fraction)
    assert mobius_apply(m, Fraction(0)) == Fraction(3, 7)
    assert mobius_apply(m, INF) == Fraction(2, 5)
    assert mobius_apply(Mat([[1, 0], [0, 0]]).map(Fraction), Fraction(1)) is INF


def test_binary_splitting_equals_naive():
    p = pcf("2n+1", "n^2")
    cm = p.companion()
    sp = step_product(cm, 1, 37)
    naive = identity(2)
    for n in range(1, 38):
        naive = naive * Mat(
            [[Fraction(0), Fraction(p.b(n))], [Fraction(1), Fraction(p.a(n))]]
        )
    assert sp.matrix == naive


def test_pole_reporting():
    from pcf_unify.ratfunc import RationalFunction as RF
    from pcf_unify.recurrence import CompanionMatrix, PoleError

    # a genuine pole: rational-function entry with denominator n-3
    m = CompanionMatrix(
        Mat([[RF(0), RF(1, N - 3)], [RF(1), RF(1)]])
    )
    with pytest.raises(PoleError) as e:
        step_product(m, 1, 5)
    assert e.value.index == 3


def test_singular_factor_is_fine_but_start_shifts():
    p = PCF(Poly([1]), (N - 3) * (N + 1))  # b(3) = 0: singular factor, no pole
    sp = step_product(p.companion(), 1, 5)
    assert sp.matrix[0, 0] is not None
    assert p.first_valid_index() == 4


def test_limit_golden_ratio():
    # limit of the Eq-3 convergents of PCF(1,1) is 1/phi
    v = evaluate_limit(pcf("1", "1"), depth=120, precision_digits=40)
    with mp.workdps(50):
        target = 2 / (1 + mp.sqrt(5))
        assert abs(v.value - target) < mp.mpf(10) ** -38


def test_limit_euler_pcf():
    # full written fraction 1 + 2/(1 + 6/(1 + ...)) = 2/(pi-2); convergents
    # converge to that minus a(0) = 1 (polynomial convergence, accelerated)
    p = pcf("1", "n(n+1)")
    v = evaluate_limit(p, depth=400, precision_digits=60)
    with mp.workdps(80):
        target = 2 / (mp.pi - 2) - 1
        assert abs(v.value - target) < mp.mpf(10) ** -55
    assert v.error_bound < mp.mpf(10) ** -55


def test_limit_table_value_one_over_pi_minus_3():
    p = pcf("6", "(2n+1)^2")
    init = InitialConditions(Mat([[0, 1], [1, 6]]).map(Fraction))
    # with the init matrix the generated sequence reproduces the series
    # partial sums of sum (-1)^(n+1)/(n(n+1)(2n+1)) = pi - 3
    v = evaluate_limit(p, init=init, depth=400, precision_digits=50)
    with mp.workdps(60):
        assert abs(v.value - (mp.pi - 3)) < mp.mpf(10) ** -45


def test_limit_agreement_across_precisions():
    p = pcf("2", "(2n-1)^2")
    v1 = evaluate_limit(p, depth=200, precision_digits=40)
    v2 = evaluate_limit(p, depth=200, precision_digits=80)
    assert abs(v1.value - v2.value) < mp.mpf(10) ** -38


small_polys = st.lists(
    st.integers(min_value=-6, max_value=6), min_size=1, max_size=3
).map(Poly)


@given(small_polys, small_polys)
@settings(max_examples=40, deadline=None)
def test_column_solution_property(a, b):
    """Step-matrix columns are the basis solutions of the scalar recurrence."""
    if b.is_zero():
        return
    p = PCF(a, b)
    if p.first_valid_index() != 1:
        return
    # u_n = a(n) u_{n-1} + b(n) u_{n-2}, basis initial conditions
    for which, (u0, u1) in enumerate([(1, 0), (0, 1)]):
        us = [Fraction(u0), Fraction(u1)]
        for n in range(1, 21):
            us.append(a(n) * us[-1] + b(n) * us[-2])
        sp = step_product(p.companion(), 1, 20)
        # column `which`... rows are (p_{n-1}, p_n; q_{n-1}, q_n) style:
        # row 0 tracks the solution with (u_{-1}, u_0) = (1, 0), row 1 = (0, 1)
        assert sp.matrix[which, 1] == us[21]
        assert sp.matrix[which, 0] == us[20]
