from fractions import Fraction

import pytest

from pcf_unify.parsing import (
    ParseError,
    TermError,
    eval_term,
    parse_ast,
    parse_mrat,
    parse_poly,
    parse_ratfunc,
)
from pcf_unify.poly import N, Poly


def test_literals_and_rationals():
    assert parse_poly("-9216") == Poly.const(-9216)
    assert parse_poly("3/2") == Poly.const(Fraction(3, 2))


def test_whitespace_insensitive():
    assert parse_poly(" 3 n +   1 ") == parse_poly("3n+1")


def test_implicit_multiplication():
    assert parse_poly("3n+1") == 3 * N + 1
    assert parse_poly("n(1-2n)") == N * (1 - 2 * N)
    assert parse_poly("(2n-1)^2") == (2 * N - 1) ** 2
    assert parse_poly("2(4n+3)(6n^2+9n+2)") == 2 * (4 * N + 3) * (6 * N**2 + 9 * N + 2)


def test_power_binds_tighter_than_mul():
    assert parse_poly("2n^2") == 2 * N**2
    assert parse_poly("-n^2") == -(N**2)


def test_parse_error_reports_byte_offset():
    with pytest.raises(ParseError) as e:
        parse_poly("3n + $")
    assert e.value.offset == 5
    with pytest.raises(ParseError) as e:
        parse_poly("3n + ")
    assert "offset" in str(e.value)


def test_unknown_variable_rejected():
    with pytest.raises(ValueError):
        parse_poly("3m+1")


def test_ratfunc_division():
    f = parse_ratfunc("(n^2 - 1) / (n - 1)")
    assert f == parse_ratfunc("n + 1")
    g = parse_mrat("z*(-x - y + z)/((y - z)*(x - z))", ("x", "y", "z"))
    assert not g.is_zero()


def test_poly_rejects_true_fractions():
    with pytest.raises(ValueError):
        parse_poly("1/n")


def test_term_evaluation():
    ast = parse_ast("(-1)^n / (2n+1)")
    assert eval_term(ast, {"n": Fraction(3)}) == Fraction(-1, 7)
    ast = parse_ast("factorial(n) + binom(2n, n) + harmonic(n)")
    assert eval_term(ast, {"n": Fraction(3)}) == 6 + 20 + Fraction(11, 6)
    ast = parse_ast("rising_factorial(1/2, n)")
    assert eval_term(ast, {"n": Fraction(3)}) == Fraction(1, 2) * Fraction(3, 2) * Fraction(5, 2)


def test_term_inner_sum():
    # sum_{k=0}^{n} binom(n, k) = 2^n
    ast = parse_ast("sum(binom(n, k), k, 0, n)")
    assert eval_term(ast, {"n": Fraction(5)}) == 32


def test_term_errors():
    with pytest.raises(TermError):
        eval_term(parse_ast("unknown_func(n)"), {"n": Fraction(1)})
    with pytest.raises(ZeroDivisionError):
        eval_term(parse_ast("1/(n-1)"), {"n": Fraction(1)})
    with pytest.raises(TermError):
        eval_term(parse_ast("2^(1/2)"), {"n": Fraction(1)})
