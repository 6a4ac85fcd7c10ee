"""Trajectories of the conservative matrix field behind the pi formulas.

The bundled 3D field assigns a 2x2 matrix of rational functions to each
axis; the pairwise conserving property makes displacement path-independent.
Every integer direction through a base point carries a recurrence, and
parallel trajectories are provably coboundary-equivalent.
"""

from fractions import Fraction

from pcf_unify.cmf import (
    check_conserving,
    parallel_gauge,
    pi_cmf,
    scan_trajectories,
    trajectory_matrix,
    trajectory_pcf,
)
from pcf_unify.coboundary import verify_coboundary

field = pi_cmf()
print("conserving property violations:", check_conserving(field))

half = Fraction(1, 2)
start = (half, half, half)

print("\nscan of primitive directions, radius 1 (delta at depth 600):")
for v, pcf, delta in scan_trajectories(field, start, radius=1, metric_depth=600):
    if pcf is None:
        print(f"  {v}: singular trajectory")
    else:
        tag = f"delta ~ {delta.delta:+.3f}" if delta.defined else "delta undefined"
        print(f"  {v}: {pcf}   {tag}")

print("\nEuler's fraction as the (0,0,1) trajectory from (1/2, -1/2, 3/2):")
pcf, trace = trajectory_pcf(field, (half, -half, Fraction(3, 2)), (0, 0, 1))
print("  ->", pcf)

print("\nparallel trajectories are coboundary (a machine-checked proof):")
v, w = (1, 0, 0), (0, 1, 0)
base = (half, Fraction(1, 3), Fraction(1, 4))
t1 = trajectory_matrix(field, base, v)
t2 = trajectory_matrix(field, tuple(a + b for a, b in zip(base, w)), v)
gauge = parallel_gauge(field, base, v, w)
cert = verify_coboundary(t1.matrix, t2.matrix, gauge)
print("  verified:", cert.verified, "| externals:", cert.p_a, "/", cert.p_b)
