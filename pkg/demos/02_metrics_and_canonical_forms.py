"""Dynamical metrics and canonical forms.

Different-looking series can share one canonical recurrence; the
irrationality measure delta and the convergence rate summarize a formula's
dynamics and drive the clustering heuristics.
"""

from pcf_unify.guess import eval_series_terms, guess_recurrence
from pcf_unify.metrics import convergence_rate, irrationality_delta, rate_ratio
from pcf_unify.recurrence import parse_pcf
from pcf_unify.transforms import to_pcf_canonical

series = {
    "sum n! / prod(2i+1)": ("factorial(n) / (rising_factorial(3/2, n) * 2^n)", 0),
    "sum 2^n / (n C(2n,n))": ("2^n / (n * binom(2n, n))", 1),
    "sum 4^n (12n-5)/((2n-1) C(4n,2n))": ("4^n (12n-5) / ((2n-1) * binom(4n, 2n))", 1),
}

canonicals = {}
for name, (term, start) in series.items():
    sums = eval_series_terms(term, start, 200)
    fit = guess_recurrence(sums, max_order=2, max_degree=12)
    canon, _ = to_pcf_canonical(fit.recurrence)
    canonicals[name] = canon
    print(f"{name}\n  -> {canon}")

print("\nfirst two collapse to the same canonical form:",
      canonicals["sum n! / prod(2i+1)"] == canonicals["sum 2^n / (n C(2n,n))"])

a = canonicals["sum n! / prod(2i+1)"]
b = canonicals["sum 4^n (12n-5)/((2n-1) C(4n,2n))"]
da, db = irrationality_delta(a, 2000), irrationality_delta(b, 2000)
ra, rb = convergence_rate(a, 2000), convergence_rate(b, 2000)
print(f"\ndelta: {da.delta:.3f} vs {db.delta:.3f}  (equal deltas hint at equivalence)")
print(f"rates: {ra.rate:.3f} vs {rb.rate:.3f}  ratio -> {rate_ratio(ra, rb)}")
print("a rate ratio of 1/2 says: fold the slower one by 2 before matching")

slow = parse_pcf("PCF(2; (2n-1)^2)")
print(f"\nLeibniz-type fraction: rate {convergence_rate(slow, 2000).rate} "
      "(below threshold: polynomial convergence)")
