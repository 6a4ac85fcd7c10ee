"""Exact linear algebra for the fitting and guessing steps.

Homogeneous systems are solved over the rationals with fraction-free
(Bareiss-style) elimination on integer-cleared rows, so there are no
numeric false positives.  Because most candidate systems in the degree
searches have no solution at all, a cheap modular prefilter (Gaussian
elimination mod a word-sized prime, vectorized with numpy) rejects them
before any big-integer work: a nontrivial rational nullspace always
survives reduction mod p, so an empty mod-p nullspace is a proof of
rational infeasibility.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np

# Large prime below 2^31 so products of two residues fit in int64.
_FILTER_PRIME = 2_147_483_647


def _clear_row(row):
    """Scale a row of Fractions to coprime integers."""
    den = 1
    for x in row:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def nullspace_dim_mod_p(rows, p: int = _FILTER_PRIME) -> int:
    """Nullspace dimension of the system reduced mod p (>= rational dimension).

    Rows whose denominators vanish mod p are dropped, which can only enlarge
    the modular nullspace, keeping the filter conservative.
    """
    ncols = len(rows[0])
    red = []
    for row in rows:
        r = []
        for x in row:
            d = x.denominator % p
            if d == 0:
                r = None
                break
            r.append(x.numerator % p * pow(d, -1, p) % p)
        if r is not None:
            red.append(r)
    if not red:
        return ncols
    a = np.array(red, dtype=np.int64) % p
    rank = 0
    col = 0
    nrows = a.shape[0]
    while rank < nrows and col < ncols:
        piv = None
        for i in range(rank, nrows):
            if a[i, col] % p:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        mask = np.arange(nrows) != rank
        factors = a[mask, col].copy()
        a[mask] = (a[mask] - factors[:, None] * a[rank][None, :]) % p
        rank += 1
        col += 1
    return ncols - rank


def nullspace(rows) -> list[list[Fraction]]:
    """Basis of the rational nullspace of a homogeneous system.

    ``rows`` is a sequence of equation coefficient rows (Fractions or ints).
    The basis is in reduced echelon order, each vector scaled to coprime
    integers with its first nonzero entry positive, so results are
    deterministic.
    """
    rows = [[Fraction(x) for x in row] for row in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    mat = [_clear_row(r) for r in rows if any(r)]
    if not mat:
        return [_unit(ncols, j) for j in range(ncols)]

    # fraction-free (Bareiss) echelon form; the uniform update rule keeps all
    # intermediate entries integral
    pivots = []  # (row, col)
    r = 0
    prev_piv = 1
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pr = mat[r]
        pc_val = pr[c]
        for i in range(r + 1, len(mat)):
            ri = mat[i]
            f = ri[c]
            mat[i] = [(pc_val * ri[j] - f * pr[j]) // prev_piv for j in range(ncols)]
        prev_piv = pc_val
        pivots.append((r, c))
        r += 1
        if r == len(mat):
            break

    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        # back substitution in echelon order
        for (pr_i, pc) in reversed(pivots):
            row = mat[pr_i]
            s = sum((Fraction(row[j]) * vec[j] for j in range(pc + 1, ncols)), Fraction(0))
            vec[pc] = -s / row[pc]
        basis.append(_integerize(vec))
    return basis


def _integerize(vec):
    den = 1
    for x in vec:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return [Fraction(v) for v in ints]


def _unit(n, j):
    v = [Fraction(0)] * n
    v[j] = Fraction(1)
    return v


def nullspace_with_prefilter(rows) -> list[list[Fraction]]:
    """nullspace(), but returning [] fast when the mod-p filter proves emptiness."""
    rows = [list(map(Fraction, r)) for r in rows]
    if not rows:
        return []
    if nullspace_dim_mod_p(rows) == 0:
        return []
    return nullspace(rows)
