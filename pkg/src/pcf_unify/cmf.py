"""Conservative matrix fields: conserving-property checks, trajectory
matrices, companion conversion, and direction scans.

A d-dimensional field of rank m is one matrix of multivariate rational
functions per axis, with every pair satisfying the path-independence
identity

    M_i(p) * M_j(p + e_i)  =  M_j(p) * M_i(p + e_j).

Displacements compose along a canonical path (axes in order, positive
steps before negative ones); the trajectory matrix of a start point and an
integer direction is the displacement restricted to the line through the
point, a 2x2 matrix over Q(n) that reduces to a recurrence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import gcd

from .matrix import Mat, projective_eq
from .metrics import irrationality_delta
from .multivar import MPoly
from .parsing import parse_mrat
from .transforms import TransformTrace, companion_reduce, to_pcf_canonical


@dataclass(frozen=True)
class CMF:
    variables: tuple[str, ...]
    matrices: dict  # axis name -> Mat of MRat
    rank: int = 2

    @property
    def dim(self) -> int:
        return len(self.variables)

    @staticmethod
    def from_json(data: dict) -> "CMF":
        names = tuple(data["variables"])
        mats = {}
        for axis, rows in data["matrices"].items():
            if axis not in names:
                raise ValueError(f"matrix axis {axis!r} is not a declared variable")
            mats[axis] = Mat(
                [[parse_mrat(e, names) for e in row] for row in rows]
            )
        return CMF(variables=names, matrices=mats, rank=int(data.get("rank", 2)))

    @staticmethod
    def load(path) -> "CMF":
        with open(path) as f:
            return CMF.from_json(json.load(f))


def pi_cmf() -> CMF:
    """The bundled 3D rank-2 field generating the pi formula families."""
    raw = resources.files("pcf_unify.data").joinpath("pi_cmf.json").read_text()
    return CMF.from_json(json.loads(raw))


# -- conserving property ---------------------------------------------------------


def _shift_axis(m: Mat, names, axis: str) -> Mat:
    one = MPoly.var(names, axis) + MPoly.const(names, 1)
    return m.map(lambda e: e.subst({axis: one}))


def check_conserving(cmf: CMF):
    """Pairwise path-independence; returns [] or the list of violating pairs."""
    violations = []
    names = cmf.variables
    for i in range(cmf.dim):
        for j in range(i + 1, cmf.dim):
            ai, aj = names[i], names[j]
            mi, mj = cmf.matrices[ai], cmf.matrices[aj]
            lhs = mi * _shift_axis(mj, names, ai)
            rhs = mj * _shift_axis(mi, names, aj)
            if not projective_eq(lhs, rhs):
                violations.append((ai, aj))
    return violations


# -- displacements and trajectories --------------------------------------------------


class TrajectorySingularity(ArithmeticError):
    pass


def _path_steps(cmf: CMF, direction) -> list[tuple[str, int]]:
    """Canonical step order: axes ascending, positive steps, then negatives."""
    steps = []
    for name, v in zip(cmf.variables, direction):
        for _ in range(max(0, int(v))):
            steps.append((name, +1))
    for name, v in zip(cmf.variables, direction):
        for _ in range(max(0, -int(v))):
            steps.append((name, -1))
    return steps


def displacement(cmf: CMF, point, direction) -> Mat:
    """Exact rational matrix carrying the walk from point to point+direction."""
    if len(point) != cmf.dim or len(direction) != cmf.dim:
        raise ValueError("point/direction length mismatch")
    pos = {name: Fraction(p) for name, p in zip(cmf.variables, point)}
    out = None
    for axis, sgn in _path_steps(cmf, direction):
        if sgn < 0:
            pos[axis] -= 1
        try:
            vals = cmf.matrices[axis].map(lambda e: e.eval(pos))
        except ZeroDivisionError as exc:
            raise TrajectorySingularity(f"pole at {dict(pos)} on axis {axis}") from exc
        if sgn < 0:
            det = vals[0, 0] * vals[1, 1] - vals[0, 1] * vals[1, 0]
            if det == 0:
                raise TrajectorySingularity(f"singular step at {dict(pos)}")
            vals = Mat([[vals[1, 1], -vals[0, 1]], [-vals[1, 0], vals[0, 0]]])
        else:
            pos[axis] += 1
        out = vals if out is None else out * vals
    if out is None:
        from .matrix import identity

        out = identity(cmf.rank)
    return out


@dataclass(frozen=True)
class TrajectoryMatrix:
    matrix: Mat  # entries in Q(n)
    origin: tuple
    direction: tuple


def _line_product(cmf: CMF, point, line_direction, step_direction) -> Mat:
    """Displacement by ``step_direction`` with its base sliding along the line
    point + (n-1)*line_direction, as a matrix over Q(n).

    Built factor by factor: each step of the canonical path is substituted
    onto the line first (a univariate matrix in n), then multiplied.
    """
    point = [Fraction(p) for p in point]
    line = [int(v) for v in line_direction]
    offsets = {name: Fraction(0) for name in cmf.variables}
    out = None
    for axis, sgn in _path_steps(cmf, step_direction):
        if sgn < 0:
            offsets[axis] -= 1
        base = [p + offsets[name] for name, p in zip(cmf.variables, point)]
        try:
            factor = cmf.matrices[axis].map(
                lambda e: e.substitute_affine(base, line)
            )
        except ZeroDivisionError as exc:
            raise TrajectorySingularity(str(exc)) from exc
        if sgn < 0:
            det = factor[0, 0] * factor[1, 1] - factor[0, 1] * factor[1, 0]
            if det.is_zero():
                raise TrajectorySingularity("identically singular step")
            factor = Mat(
                [[factor[1, 1], -factor[0, 1]], [-factor[1, 0], factor[0, 0]]]
            )
        else:
            offsets[axis] += 1
        out = factor if out is None else out * factor
    if out is None:
        raise ValueError("step direction must be nonzero")
    return out


def trajectory_matrix(cmf: CMF, point, direction) -> TrajectoryMatrix:
    """T(n) = M_v(point + (n-1) v): one step of the trajectory at time n."""
    if all(int(v) == 0 for v in direction):
        raise ValueError("direction must be nonzero")
    m = _line_product(cmf, point, direction, direction)
    return TrajectoryMatrix(m, tuple(Fraction(p) for p in point), tuple(map(int, direction)))


def parallel_gauge(cmf: CMF, point, line_direction, offset_direction) -> Mat:
    """U(n) = M_w(point + (n-1) v): the coboundary transform between the
    v-trajectories based at ``point`` and at ``point + w``."""
    return _line_product(cmf, point, line_direction, offset_direction)


def to_companion(traj: TrajectoryMatrix):
    """Gauge the trajectory matrix to companion form; returns
    (recurrence, gauge, trace) as in the reduction lemma."""
    return companion_reduce(traj.matrix)


def trajectory_pcf(cmf: CMF, point, direction, max_start_shifts: int = 8):
    """Canonical PCF of a trajectory, applying the start-shift rule on
    singularities (move the base point one direction-step forward)."""
    point = [Fraction(p) for p in point]
    direction = [int(v) for v in direction]
    trace = TransformTrace()
    for k in range(max_start_shifts):
        try:
            traj = trajectory_matrix(cmf, point, direction)
            rec, _gauge, t1 = to_companion(traj)
            pcf, t2 = to_pcf_canonical(rec)
            if k:
                trace.record("start-shift", steps=k)
            trace.extend(t1)
            trace.extend(t2)
            return pcf, trace
        except (TrajectorySingularity, ZeroDivisionError, ValueError):
            point = [p + v for p, v in zip(point, direction)]
    raise TrajectorySingularity(
        f"no regular start point along {direction} after {max_start_shifts} shifts"
    )


def canonical_directions(radius: int, dim: int = 3, primitive_only: bool = True):
    """Nonzero directions up to sign, lexicographic order, |coord| <= radius."""
    out = []

    def rec(prefix):
        if len(prefix) == dim:
            v = tuple(prefix)
            if all(c == 0 for c in v):
                return
            lead = next(c for c in v if c != 0)
            if lead < 0:
                return  # keep the sign-canonical representative
            if primitive_only:
                g = 0
                for c in v:
                    g = gcd(g, abs(c))
                if g != 1:
                    return
            out.append(v)
            return
        for c in range(-radius, radius + 1):
            rec(prefix + [c])

    rec([])
    return out


def scan_trajectories(
    cmf: CMF,
    start,
    radius: int = 10,
    metric_depth: int = 2000,
    directions=None,
    primitive_only: bool = True,
):
    """Canonical PCFs and deltas for all directions in the scan box.

    Returns a list of (direction, PCF, DeltaEstimate) in deterministic
    direction order; directions whose trajectory stays singular are skipped
    with a (direction, None, None) placeholder.
    """
    if directions is None:
        directions = canonical_directions(radius, cmf.dim, primitive_only)
    results = []
    for v in directions:
        try:
            pcf, _trace = trajectory_pcf(cmf, start, v)
        except TrajectorySingularity:
            results.append((tuple(v), None, None))
            continue
        delta = irrationality_delta(pcf, metric_depth)
        results.append((tuple(v), pcf, delta))
    return results
