from fractions import Fraction

import pytest

from pcf_unify.guess import (
    RationalSequence,
    eval_series_terms,
    guess_recurrence,
    series_initial_conditions,
    table_style_init,
)
from pcf_unify.matrix import Mat
from pcf_unify.parsing import parse_poly
from pcf_unify.recurrence import PCF, convergent
from pcf_unify.transforms import to_pcf_canonical


def pcf(a, b):
    return PCF(parse_poly(a), parse_poly(b))


def test_eval_series_partial_sums():
    s = eval_series_terms("(-1)^n / (2n+1)", 0, 3)
    assert s.terms == (Fraction(1), Fraction(2, 3), Fraction(13, 15))
    s = eval_series_terms("factorial(n) / rising_factorial(3, n) * 2^n", 0, 3)
    # n!/prod_{i<=n}(2i+1) = n! 2^n / (2n+1)!?? use the direct product form instead
    s = eval_series_terms("factorial(n) / (rising_factorial(3/2, n) * 2^n)", 0, 3)
    assert s.terms == (Fraction(1), Fraction(4, 3), Fraction(22, 15))


def test_eval_series_binomial():
    s = eval_series_terms("2^n / (n * binom(2n, n))", 1, 2)
    assert s.terms == (Fraction(1), Fraction(4, 3))


def test_eval_series_reports_bad_index():
    with pytest.raises(ZeroDivisionError) as e:
        eval_series_terms("1 / (n - 2)", 0, 5)
    assert "index 2" in str(e.value)


def test_guess_geometric():
    seq = RationalSequence(0, [Fraction(2) ** k for k in range(40)])
    g = guess_recurrence(seq, max_order=2, max_degree=3)
    assert g is not None and g.order == 1 and g.degree == 0
    rec = g.recurrence
    assert rec.den.degree == 0
    assert rec.coeffs[0] * (1 / rec.den[0]) == parse_poly("2")


def test_guess_fibonacci():
    fib = [1, 1]
    while len(fib) < 40:
        fib.append(fib[-1] + fib[-2])
    g = guess_recurrence(RationalSequence(0, list(map(Fraction, fib))), 3, 3)
    assert g is not None and g.order == 2 and g.degree == 0
    assert [str(c) for c in g.recurrence.coeffs] == ["1", "1"]


def test_guess_leibniz_canonical():
    sums = eval_series_terms("(-1)^n / (2n+1)", 0, 200)
    g = guess_recurrence(sums, max_order=2, max_degree=8)
    assert g is not None and g.order == 2
    canon, _ = to_pcf_canonical(g.recurrence)
    assert canon == pcf("2", "(2n-1)^2")


def test_guess_soundness_holds_for_all_terms():
    sums = eval_series_terms("1 / (n+1)^2", 0, 120)
    g = guess_recurrence(sums, max_order=3, max_degree=6)
    assert g is not None
    cs = g.rel_coeffs
    m = g.order
    for n in range(len(sums.terms) - m):
        assert sum(c(n) * sums.terms[n + j] for j, c in enumerate(cs)) == 0


def test_guess_none_when_out_of_reach():
    # 2^(n^2) is not P-recursive at these sizes
    seq = RationalSequence(0, [Fraction(2) ** (k * k % 31 + k) for k in range(60)])
    assert guess_recurrence(seq, max_order=2, max_degree=2) is None


def test_series_initial_conditions_leibniz():
    p = pcf("2", "(2n-1)^2")
    s = eval_series_terms("(-1)^n / (2n+1)", 0, 50)
    x, init = series_initial_conditions(s.terms[0], s.terms[1], s.terms[2], p.a, p.b)
    assert x == 3
    assert init.matrix == Mat([[1, 2], [1, 3]]).map(Fraction)
    # round trip: convergents from index 2 reproduce all 50 partial sums
    for k in range(2, 50):
        got = convergent(p, k - 1, init, start=2)
        assert got == s.terms[k]
    # products-from-1 form matches the published table style
    t = table_style_init(init, p)
    assert t.matrix == Mat([[0, 1], [1, 1]]).map(Fraction)


def test_series_initial_conditions_row1():
    p = pcf("3n+1", "n(1-2n)")
    s = eval_series_terms("factorial(n) / (rising_factorial(3/2, n) * 2^n)", 0, 50)
    x, init = series_initial_conditions(s.terms[0], s.terms[1], s.terms[2], p.a, p.b)
    for k in range(2, 50):
        assert convergent(p, k - 1, init, start=2) == s.terms[k]
    assert table_style_init(init, p).matrix == Mat([[0, 1], [1, 1]]).map(Fraction)


def test_series_initial_conditions_degenerate():
    with pytest.raises(ValueError):
        series_initial_conditions(1, 2, 2, parse_poly("2"), parse_poly("(2n-1)^2"))
