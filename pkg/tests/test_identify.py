from fractions import Fraction

import mpmath as mp
import pytest

from pcf_unify.constants import ConstantError, ConstantRef, constant_value, digits_available
from pcf_unify.identify import (
    InsufficientPrecision,
    identify_mobius,
    pslq,
)
from pcf_unify.matrix import Mat
from pcf_unify.parsing import parse_poly
from pcf_unify.recurrence import PCF, evaluate_limit, mobius_apply


def test_constant_prefixes():
    assert mp.nstr(constant_value("pi", 20), 16) == "3.141592653589793"
    assert str(constant_value("zeta3", 128))[:16] == "1.20205690315959"
    assert digits_available("pi") >= 10_000


def test_constant_bounds():
    with pytest.raises(ConstantError):
        constant_value("pi", 10**6)
    with pytest.raises(ConstantError):
        ConstantRef("sqrt2")


def test_pslq_exact_relation():
    with mp.workdps(120):
        rel = pslq([mp.mpf(1), mp.mpf(1) / 2], max_coeff_digits=5, working_digits=100)
    assert rel is not None
    a, b = rel.coefficients
    assert (a, b) in [(1, -2), (-1, 2)]


def test_pslq_no_relation_pi_e():
    with mp.workdps(80):
        rel = pslq(
            [constant_value("pi", 70), constant_value("e", 70)],
            max_coeff_digits=6,
            working_digits=70,
        )
    assert rel is None


def test_pslq_insufficient_precision():
    with pytest.raises(InsufficientPrecision):
        pslq([mp.mpf(1), mp.mpf(2)], max_coeff_digits=30, working_digits=50)


def test_pslq_scale_invariance():
    with mp.workdps(150):
        c = constant_value("pi", 140)
        xs = [1 + c, 2 * c, mp.mpf(1)]
        r1 = pslq(xs, max_coeff_digits=8, working_digits=130)
        r2 = pslq([x * mp.mpf(3) / 7 for x in xs], max_coeff_digits=8, working_digits=130)
    assert r1 is not None and r1.coefficients == r2.coefficients


def test_identify_leibniz_value():
    # PCF(2,(2n-1)^2) + head term a(0)=2 has CF value 1 + 4/pi
    p = PCF(parse_poly("2"), parse_poly("(2n-1)^2"))
    lim = evaluate_limit(p, depth=4000, precision_digits=250)
    with mp.workdps(300):
        full = lim.value + 2  # a(0)
        ident = identify_mobius(
            type(lim)(full, lim.precision_digits, lim.error_bound), "pi"
        )
    assert ident is not None
    assert ident.matrix == Mat([[1, 4], [1, 0]]).map(Fraction)  # (pi+4)/pi = 1+4/pi


def test_identify_identity_matrix():
    with mp.workdps(260):
        c = constant_value("pi", 250)
        from pcf_unify.recurrence import ApproxValue

        ident = identify_mobius(ApproxValue(c, 250, mp.mpf(10) ** -240), "pi")
    assert ident is not None
    assert ident.matrix == Mat([[1, 0], [0, 1]]).map(Fraction)


def test_identify_round_trip_random_matrices():
    import random

    rng = random.Random(7)
    with mp.workdps(260):
        c = constant_value("pi", 250)
        from pcf_unify.recurrence import ApproxValue

        for _ in range(10):
            while True:
                m = Mat(
                    [
                        [rng.randint(-9, 9), rng.randint(-9, 9)],
                        [rng.randint(-9, 9), rng.randint(-9, 9)],
                    ]
                ).map(Fraction)
                from pcf_unify.matrix import det2

                if det2(m) != 0:
                    break
            val = mobius_apply(m, c)
            ident = identify_mobius(ApproxValue(val, 250, mp.mpf(10) ** -240), "pi")
            assert ident is not None
            # canonical normalization: gcd 1, first nonzero entry positive
            got = [int(e) for row in ident.matrix for e in row]
            want = [int(e) for row in m for e in row]
            from math import gcd

            g = 0
            for v in want:
                g = gcd(g, v)
            want = [v // g for v in want]
            if next(v for v in want if v) < 0:
                want = [-v for v in want]
            assert got == want


def test_identify_rejects_rational_limit():
    from pcf_unify.recurrence import ApproxValue

    with mp.workdps(260):
        val = mp.mpf(22) / 7
        ident = identify_mobius(ApproxValue(val, 250, mp.mpf(10) ** -240), "pi")
    assert ident is None
