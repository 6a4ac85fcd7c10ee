"""Polynomial recurrences, continued fractions, and exact convergent evaluation.

Conventions (fixed package-wide, validated against the worked fixtures):

* The companion matrix of ``u_n = a_1(n) u_{n-1} + ... + a_m(n) u_{n-m}`` has
  subdiagonal ones and the coefficients up the last column, highest lag first.
* Step products run over ``n = 1 .. N``.  For a PCF the Moebius action of the
  product on 0 gives the classical convergent ``p_N/q_N`` of
  ``b(1)/(a(1) + b(2)/(...))`` -- the leading ``a(0)`` term of the written
  continued fraction is *not* included.  ``cf_value`` adds it back.
* Initial-condition matrices multiply the step product on the left.  A
  depth-0 convergent is ``init`` applied to 0.

Step products are computed by binary splitting on integer matrices (each
factor is scaled by the lcm of its entry denominators, and the scalar
denominators are multiplied separately), which keeps depth-4000 evaluations
cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import mpmath as mp

from .matrix import Mat, identity
from .poly import ONE, Poly, format_poly
from .ratfunc import RationalFunction

INF = object()  # projective infinity marker for Moebius arithmetic


class PoleError(ArithmeticError):
    def __init__(self, index: int):
        super().__init__(f"companion matrix has a pole at integer index {index}")
        self.index = index


@dataclass(frozen=True)
class PCF:
    """Polynomial continued fraction PCF(a(n), b(n))."""

    a: Poly
    b: Poly

    def __post_init__(self):
        if self.b.is_zero():
            raise ValueError("PCF partial numerator b(n) must not be identically zero")

    def __str__(self) -> str:
        return f"PCF({format_poly(self.a)}; {format_poly(self.b)})"

    def companion(self) -> "CompanionMatrix":
        return CompanionMatrix(
            Mat(
                [
                    [RationalFunction(0), RationalFunction(self.b)],
                    [RationalFunction(1), RationalFunction(self.a)],
                ]
            )
        )

    def to_recurrence(self) -> "Recurrence":
        return Recurrence(coeffs=[self.a, self.b])

    def first_valid_index(self) -> int:
        """Smallest s >= 1 with b(n) != 0 for all scanned n >= s.

        The scan is bounded; evaluation paths additionally retry past any
        pole reported by PoleError, so a root beyond the bound is still
        handled.
        """
        roots = [r for r in self.b.integer_roots(500) if r >= 1]
        return max(roots) + 1 if roots else 1


@dataclass(frozen=True)
class Recurrence:
    """Order-m linear recurrence c(n) u_n = sum_i a_i(n) u_{n-i}.

    ``coeffs[i-1]`` is the polynomial on u_{n-i}; ``den`` is c(n) and defaults
    to 1 (the purely polynomial form).
    """

    coeffs: tuple[Poly, ...]
    den: Poly = ONE

    def __init__(self, coeffs, den=ONE):
        coeffs = tuple(coeffs)
        if not coeffs or coeffs[-1].is_zero():
            raise ValueError("highest-lag coefficient must be nonzero (true order)")
        if den.is_zero():
            raise ValueError("recurrence denominator must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "den", den)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0 and self.den[0] == 1

    def coefficient_rfs(self) -> list[RationalFunction]:
        return [RationalFunction(c, self.den) for c in self.coeffs]

    def to_pcf(self) -> PCF:
        if self.order != 2 or not self.is_polynomial():
            raise ValueError("only polynomial order-2 recurrences map directly to a PCF")
        return PCF(self.coeffs[0], self.coeffs[1])


@dataclass(frozen=True)
class CompanionMatrix:
    matrix: Mat

    @property
    def order(self) -> int:
        return self.matrix.nrows

    def __getitem__(self, ij):
        return self.matrix[ij]


def companion(rec: Recurrence) -> CompanionMatrix:
    """Companion matrix with subdiagonal ones and coefficients up the last column."""
    if not rec.is_polynomial():
        raise ValueError("inflate the recurrence to polynomial form before companion()")
    m = rec.order
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            if j == m - 1:
                row.append(RationalFunction(rec.coeffs[m - 1 - i]))
            elif j == i - 1:
                row.append(RationalFunction(1))
            else:
                row.append(RationalFunction(0))
        rows.append(row)
    return CompanionMatrix(Mat(rows))


@dataclass(frozen=True)
class StepMatrix:
    """Exact product of companion (or general step) matrices over an index range."""

    matrix: Mat  # entries are Fractions
    from_index: int
    to_index: int


@dataclass(frozen=True)
class InitialConditions:
    matrix: Mat  # m x m Fractions, applied on the left of the step product

    def __post_init__(self):
        if all(e == 0 for row in self.matrix for e in row):
            raise ValueError("initial-condition matrix must be nonzero")

    @staticmethod
    def eye(m: int = 2) -> "InitialConditions":
        return InitialConditions(identity(m))


@dataclass
class ApproxValue:
    """High-precision evaluation of a limit with a heuristic error bound."""

    value: mp.mpf
    precision_digits: int
    error_bound: mp.mpf
    converged: bool = True

    def good_digits(self) -> int:
        if self.error_bound == 0:
            return self.precision_digits
        return max(0, int(-mp.log10(abs(self.error_bound))))


# -- integerized step products -------------------------------------------------


def _integer_factor(mat_rf: Mat, n: int):
    """Evaluate a rational-function matrix at n, scaled to (int matrix, int den)."""
    vals = []
    for row in mat_rf.rows:
        vrow = []
        for e in row:
            if e.den(n) == 0:
                raise PoleError(n)
            vrow.append(e(n))
        vals.append(vrow)
    den = 1
    for row in vals:
        for v in row:
            den = lcm(den, v.denominator)
    ints = [[int(v * den) for v in row] for row in vals]
    return ints, den


def _imat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [
        [sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
        for i in range(n)
    ]


def _split_product(factors, lo, hi):
    """Balanced product of integer matrices factors[lo..hi] (inclusive)."""
    if lo == hi:
        return factors[lo]
    mid = (lo + hi) // 2
    return _imat_mul(
        _split_product(factors, lo, mid), _split_product(factors, mid + 1, hi)
    )


def step_product(cm: CompanionMatrix, lo: int, hi: int) -> StepMatrix:
    """Exact product of cm(n) for n = lo..hi; empty range (lo > hi) gives I."""
    m = cm.order
    if lo > hi:
        return StepMatrix(identity(m), lo, hi)
    ints = []
    dens = []
    for n in range(lo, hi + 1):
        im, d = _integer_factor(cm.matrix, n)
        ints.append(im)
        dens.append(d)
    prod = _split_product(ints, 0, len(ints) - 1)
    den = 1
    for d in dens:
        den *= d
    frac = Mat([[Fraction(v, den) for v in row] for row in prod])
    return StepMatrix(frac, lo, hi)


class _RunningProduct:
    """Sequential exact step products, exposing convergents one depth at a time."""

    def __init__(self, cm: CompanionMatrix, init: InitialConditions | None, start: int = 1):
        m = cm.order
        base = init.matrix if init is not None else identity(m)
        self.cm = cm
        self.n = start - 1
        den = 1
        for row in base.rows:
            for f in row:
                den = lcm(den, f.denominator)
        self.ints = [
            [f.numerator * (den // f.denominator) for f in row] for row in base.rows
        ]
        self.den = den

    def advance(self):
        self.n += 1
        fac, d = _integer_factor(self.cm.matrix, self.n)
        self.ints = _imat_mul(self.ints, fac)
        self.den *= d

    def convergent(self):
        """Moebius action on 0: ratio of the last-column entries (rows -2, -1)."""
        num = self.ints[-2][-1]
        den = self.ints[-1][-1]
        if den == 0:
            return INF
        return Fraction(num, den)


def convergent_sequence(
    pcf: PCF, depth: int, init: InitialConditions | None = None, start: int = 1
) -> list:
    """Exact convergents at depths 1..depth (Fraction or INF per entry)."""
    rp = _RunningProduct(pcf.companion(), init, start)
    out = []
    for _ in range(depth):
        rp.advance()
        out.append(rp.convergent())
    return out


def convergent_pairs(
    pcf: PCF, depth: int, init: InitialConditions | None = None, start: int = 1
) -> list:
    """(numerator, denominator) integer pairs of the convergents, unreduced.

    Skipping the gcd reduction matters when thousands of large convergents
    feed a float conversion (extrapolation); values equal convergent_sequence.
    """
    rp = _RunningProduct(pcf.companion(), init, start)
    out = []
    for _ in range(depth):
        rp.advance()
        out.append((rp.ints[-2][-1], rp.ints[-1][-1]))
    return out


def mobius_apply(m: Mat, x):
    """(a x + b) / (c x + d) with the projective conventions M(inf) = a/c."""
    a, b = m[0, 0], m[0, 1]
    c, d = m[1, 0], m[1, 1]
    if x is INF:
        if c == 0:
            return INF
        return Fraction(a) / Fraction(c)
    if isinstance(x, mp.mpf):
        den = c * x + d
        if den == 0:
            return INF
        return (a * x + b) / den
    x = Fraction(x)
    den = Fraction(c) * x + Fraction(d)
    if den == 0:
        return INF
    return (Fraction(a) * x + Fraction(b)) / den


def convergent(pcf: PCF, depth: int, init: InitialConditions | None = None, start: int = 1):
    """p_N/q_N of the continued fraction (init applied on the left).

    Depth 0 returns init applied to 0.  Raises ZeroDivisionError when the
    denominator vanishes at this exact depth.
    """
    sp = step_product(pcf.companion(), start, start + depth - 1)
    base = init.matrix if init is not None else identity(2)
    v = mobius_apply(base * sp.matrix, Fraction(0))
    if v is INF:
        raise ZeroDivisionError(f"zero denominator at depth {depth}")
    return v


def cf_value_offset(pcf: PCF) -> Fraction:
    """a(0): the head term of the continued fraction written in full."""
    return pcf.a(0)


def parse_pcf(text: str) -> PCF:
    """Parse the text form ``PCF(a-poly; b-poly)``."""
    from .parsing import parse_poly

    s = text.strip()
    if not (s.startswith("PCF(") and s.endswith(")")):
        raise ValueError(f"expected PCF(a; b), got {text!r}")
    body = s[4:-1]
    if ";" not in body:
        raise ValueError("expected ';' separating the two polynomials")
    a_txt, b_txt = body.split(";", 1)
    return PCF(parse_poly(a_txt), parse_poly(b_txt))


# -- limit evaluation -----------------------------------------------------------


def _to_mpf(x: Fraction) -> mp.mpf:
    return mp.mpf(x.numerator) / mp.mpf(x.denominator)


def _richardson_parity(pairs, dps):
    """Richardson-extrapolate even/odd subsequences; their gap is the error bound.

    ``pairs`` holds unreduced (numerator, denominator) convergents.
    """
    with mp.workdps(dps):
        vals = [mp.mpf(p) / mp.mpf(q) for p, q in pairs if q]
        v1, _ = mp.richardson(vals[0::2])
        v2, _ = mp.richardson(vals[1::2])
        return (v1 + v2) / 2, abs(v1 - v2)


def evaluate_limit(
    pcf: PCF,
    init: InitialConditions | None = None,
    depth: int = 4000,
    precision_digits: int = 250,
    accelerate: bool | None = None,
) -> ApproxValue:
    """Limit of the convergents, as a high-precision float with an error bound.

    The convergents are computed exactly and rounded once.  The error bound is
    the heuristic inter-depth difference |x_depth - x_{depth/2}|.  When that
    bound cannot reach the requested precision (polynomially converging
    fractions) and ``accelerate`` is not disabled, Richardson extrapolation of
    the even/odd convergent subsequences is used instead, with the agreement
    of the two as the bound.
    """
    if depth < 2:
        raise ValueError("depth must be at least 2")
    start = pcf.first_valid_index()
    for _ in range(16):
        try:
            return _evaluate_limit_from(
                pcf, init, depth, precision_digits, accelerate, start
            )
        except PoleError as exc:
            start = exc.index + 1
    raise PoleError(start)


def _evaluate_limit_from(pcf, init, depth, precision_digits, accelerate, start):
    cm = pcf.companion()
    q1 = step_product(cm, start, start + depth // 4 - 1)
    q2 = step_product(cm, start + depth // 4, start + depth // 2 - 1)
    rest = step_product(cm, start + depth // 2, start + depth - 1)
    base = init.matrix if init is not None else identity(2)
    m_quarter = base * q1.matrix
    m_half = m_quarter * q2.matrix
    m_full = m_half * rest.matrix
    x_quarter = mobius_apply(m_quarter, Fraction(0))
    x_half = mobius_apply(m_half, Fraction(0))
    x_full = mobius_apply(m_full, Fraction(0))
    if INF in (x_quarter, x_half, x_full):
        raise ZeroDivisionError("zero denominator while evaluating the limit")

    workdps = precision_digits + 15
    with mp.workdps(workdps):
        raw_bound = abs(_to_mpf(x_full - x_half))
        prev_gap = abs(_to_mpf(x_half - x_quarter))
        raw_value = _to_mpf(x_full)
    target = mp.mpf(10) ** (-precision_digits)
    converged = raw_bound <= prev_gap or raw_bound < target
    raw = ApproxValue(raw_value, precision_digits, raw_bound, converged=converged)

    if accelerate is False or (accelerate is None and raw_bound < target):
        return raw
    if not converged:
        return raw  # diverging: acceleration would only hide it
    # geometric convergence: the exact convergent is already the best value;
    # extrapolation only pays off below the paper's slow-convergence threshold
    if accelerate is None and raw_bound > 0:
        est_rate = float(-mp.log(raw_bound) / depth)
        if est_rate >= 0.05:
            return raw

    # polynomial-convergence path: parity-split Richardson on exact convergents.
    # For clean 1/n asymptotics a few hundred terms give hundreds of digits;
    # balanced fractions have divergent (Gevrey) expansions whose optimal
    # truncation improves only linearly with the sample count, so the window
    # grows until the bound suffices or stalls.
    nterms = min(max(2 * int(precision_digits / 0.6) + 40, 80), 1400)
    best_value, best_bound = None, None
    prev_value = None
    stalled = False
    while True:
        pairs = convergent_pairs(pcf, nterms, init, start)
        value, bound = _richardson_parity(pairs, precision_digits + nterms)
        with mp.workdps(workdps):
            value = +value
            bound = +bound
            if prev_value is not None:
                # expansions with non-integer powers stall the extrapolation
                # and make the parity gap optimistic; the inter-pass drift is
                # the honest scale then
                drift = abs(value - prev_value)
                if bound < drift:
                    bound = drift
                    stalled = True
        if best_bound is None or bound < best_bound:
            best_value, best_bound = value, bound
        if bound < target or bound < mp.mpf(10) ** -120 or nterms >= 4200 or stalled:
            break
        prev_value = value
        nterms *= 2
    if best_bound < raw_bound:
        return ApproxValue(best_value, precision_digits, best_bound, converged=True)
    return raw
