"""Polynomial continued fractions: exact convergents and limits.

A PCF(a(n), b(n)) is the continued fraction

    a(0) + b(1)/(a(1) + b(2)/(a(2) + ...))

backed by the order-2 recurrence u_n = a(n) u_{n-1} + b(n) u_{n-2}.  The
library computes convergents exactly (products of 2x2 integer matrices via
binary splitting) and rounds once at the end.
"""

from fractions import Fraction

import mpmath as mp

from pcf_unify.guess import eval_series_terms, series_initial_conditions, table_style_init
from pcf_unify.recurrence import convergent, evaluate_limit, parse_pcf

golden = parse_pcf("PCF(1; 1)")
print("PCF(1; 1) convergents:", [str(convergent(golden, k)) for k in range(1, 8)])
lim = evaluate_limit(golden, depth=200, precision_digits=50)
with mp.workdps(50):
    print("limit of the convergents:", mp.nstr(lim.value, 40))
    print("1/phi                   :", mp.nstr(2 / (1 + mp.sqrt(5)), 40))

# Euler's fraction for pi: the full written fraction includes the head a(0)
euler = parse_pcf("PCF(1; n(n+1))")
lim = evaluate_limit(euler, depth=500, precision_digits=60)
with mp.workdps(60):
    print("\nPCF(1; n(n+1)) written in full =", mp.nstr(lim.value + 1, 40))
    print("2/(pi-2)                       =", mp.nstr(2 / (mp.pi - 2), 40))

# a series is reproduced by its PCF with the right initial conditions
print("\nLeibniz series via PCF(2; (2n-1)^2):")
sums = eval_series_terms("(-1)^n / (2n+1)", 0, 8)
p = parse_pcf("PCF(2; (2n-1)^2)")
x, init = series_initial_conditions(sums.terms[0], sums.terms[1], sums.terms[2], p.a, p.b)
regen = [init.matrix[0, 1] / init.matrix[1, 1]] + [
    convergent(p, k, init, start=2) for k in range(1, 7)
]
print("  partial sums :", [str(Fraction(s)) for s in sums.terms[1:8]])
print("  from the PCF :", [str(v) for v in regen])
print("  table-style init (products from n=1):", table_style_init(init, p).matrix)
