"""Dynamical metrics of converging recurrences.

The finite-depth irrationality measure is

    delta_n = -1 - log|L - p_n/q_n| / log|q_n|

and the convergence rate is |log|L - x_n|| / n, thresholded to 0 below
5e-2 (slow, polynomially-converging fractions).  Natural logarithms
throughout; the 0.69 / 1.38 rate fixtures (= ln 2, 2 ln 2) pin that down.

Both metrics are computed from exact rational convergents, with the
reference limit taken at twice the metric depth, so the only floating
point involved is the final logarithm of exact big integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .matrix import identity
from .recurrence import INF, PCF, InitialConditions, PoleError, mobius_apply, step_product

RATE_ZERO_THRESHOLD = 0.05


@dataclass(frozen=True)
class DeltaEstimate:
    delta: float
    depth: int
    defined: bool = True


@dataclass(frozen=True)
class RateEstimate:
    rate: float  # thresholded: exactly 0.0 below RATE_ZERO_THRESHOLD
    raw: float
    depth: int
    defined: bool = True


def _log_abs(x: Fraction) -> float:
    """Natural log of |x| for an exact rational, safe for huge numerators."""
    if x == 0:
        raise ValueError("log of zero")
    return math.log(abs(x.numerator)) - math.log(x.denominator)


def _exact_points(pcf: PCF, depth: int, init: InitialConditions | None):
    """(p_depth/q_depth, q_depth, L~x_{2*depth}) computed exactly, pole-safe."""
    start = pcf.first_valid_index()
    for _ in range(16):
        try:
            cm = pcf.companion()
            first = step_product(cm, start, start + depth - 1)
            second = step_product(cm, start + depth, start + 2 * depth - 1)
            base = init.matrix if init is not None else identity(2)
            m_depth = base * first.matrix
            m_full = m_depth * second.matrix
            x_n = mobius_apply(m_depth, Fraction(0))
            limit = mobius_apply(m_full, Fraction(0))
            q_n = m_depth[1, 1]
            return x_n, q_n, limit
        except PoleError as exc:
            start = exc.index + 1
    raise PoleError(start)


def irrationality_delta(
    pcf: PCF, depth: int = 2000, init: InitialConditions | None = None
) -> DeltaEstimate:
    """Finite-depth irrationality measure with L taken from depth 2*depth.

    The denominator entering the measure is that of the convergent in lowest
    terms (the Diophantine quality of the raw matrix entries would be
    arbitrarily inflatable); the published cluster values pin this reading.
    """
    x_n, _q_raw, limit = _exact_points(pcf, depth, init)
    if x_n is INF or limit is INF:
        return DeltaEstimate(math.nan, depth, defined=False)
    q_n = x_n.denominator  # Fraction keeps it reduced
    if q_n <= 1:
        return DeltaEstimate(math.nan, depth, defined=False)
    gap = limit - x_n
    if gap == 0:
        # exact hit: rational limit, delta undefined (flagged, not NaN-silent)
        return DeltaEstimate(math.inf, depth, defined=False)
    delta = -1 - _log_abs(gap) / math.log(q_n)
    return DeltaEstimate(delta, depth)


def convergence_rate(
    pcf: PCF, depth: int = 2000, init: InitialConditions | None = None
) -> RateEstimate:
    """|log|L - x_depth|| / depth, thresholded to 0 below 5e-2."""
    x_n, _q, limit = _exact_points(pcf, depth, init)
    if x_n is INF or limit is INF:
        return RateEstimate(math.nan, math.nan, depth, defined=False)
    gap = limit - x_n
    if gap == 0:
        return RateEstimate(0.0, 0.0, depth, defined=False)
    raw = _log_abs(gap) / depth
    rate = abs(raw)
    if rate < RATE_ZERO_THRESHOLD:
        rate = 0.0
    return RateEstimate(rate, raw, depth)


def rate_ratio(r_a: RateEstimate, r_b: RateEstimate, max_den: int = 12, tol: float = 0.02):
    """|r_A|/|r_B| as a small-denominator Fraction; 0 when either rate is 0.

    Returns None (no-match signal) when no denominator-<=max_den rational
    approximates the ratio within tol.
    """
    if r_a.rate == 0.0 or r_b.rate == 0.0:
        return Fraction(0)
    ratio = abs(r_a.rate) / abs(r_b.rate)
    approx = Fraction(ratio).limit_denominator(max_den)
    if approx <= 0 or abs(float(approx) - ratio) > tol:
        return None
    return approx
