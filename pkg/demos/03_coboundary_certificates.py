"""Discovering and verifying a coboundary equivalence.

Two recurrences A(n), B(n) are equivalent when polynomials U(n), p_A, p_B
satisfy p_A(n) A(n) U(n+1) = p_B(n) U(n) B(n) exactly.  The solver finds U
heuristically (limit Moebius relation -> propagation -> rational fit) and
then proves the identity symbolically; the printed certificate is an
independently checkable proof object.
"""

import json

from pcf_unify.coboundary import MatchContext, match_pair, verify_coboundary
from pcf_unify.recurrence import parse_pcf

# Gauss's 1813 fraction for 4/pi and a 2021 machine-discovered one
gauss = parse_pcf("PCF(2n+1; n^2)")
machine = parse_pcf("PCF(2n+3; n(n+2))")

ctx = MatchContext(constant="pi")
result = match_pair(gauss, machine, ctx)
print("status:", result.status)
cert = result.certificate
print("U(n) =", cert.u)
print("p_A  =", cert.p_a, "   p_B =", cert.p_b)
print("\ncertificate JSON:")
print(json.dumps(cert.to_json(pair=("gauss-1813", "machine-2021")), indent=2)[:400], "...")

# verification is separate from discovery: feed any U and it either proves
# the identity or rejects it
fresh = verify_coboundary(gauss.companion().matrix, machine.companion().matrix, cert.u)
print("\nre-verified:", fresh.verified, "| identity hash:", fresh.identity_hash()[:16])

# a perturbed matrix must fail
from pcf_unify.coboundary import VerificationError
from pcf_unify.matrix import Mat

bad = Mat([[cert.u[0, 0] + 1, cert.u[0, 1]], [cert.u[1, 0], cert.u[1, 1]]])
try:
    verify_coboundary(gauss.companion().matrix, machine.companion().matrix, bad)
except VerificationError as exc:
    print("perturbed matrix rejected:", exc)
