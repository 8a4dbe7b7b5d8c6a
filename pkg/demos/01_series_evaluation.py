"""Evaluating generalized hypergeometric series.

pFq(a; b; z) is summed directly from its coefficients
c_k = (a)_k / ((b)_k k!).  Exact integer parameters drive the structural
decisions: termination, singular lower parameters, convergence class.
"""

import math

from hypderiv import (
    HypSpec,
    classify_convergence,
    evaluate,
    termination_order,
)

# 2F1(1,1;2;z) = -log(1-z)/z, a classic closed form to check against
spec = HypSpec.of([1, 1], [2])
res = evaluate(spec, 0.5)
print("2F1(1,1;2;1/2)      =", res.value.real)
print("  closed form 2ln2  =", 2 * math.log(2))
print("  terms used        =", res.terms_used)

# an exact nonpositive upper parameter terminates the series: a polynomial
spec = HypSpec.of([-3, 2], [1])
res = evaluate(spec, 0.5)
print("\n2F1(-3,2;1;1/2)     =", res.value.real, "(terminated:", res.terminated, ")")
print("  valid even at z=2 :", evaluate(spec, 2.0).value.real)

# the same value written as -3.0 is *numeric*: no termination is inferred
print("  exact -3 order    =", termination_order(HypSpec.of([-3, 2], [1])))
print("  numeric -3.0 order=", termination_order(HypSpec.of([-3.0, 2], [1])))

# convergence classes across the (p, q) landscape
cases = [
    (HypSpec.of([0.5], [1.3]), 100.0),   # p < q+1: entire
    (HypSpec.of([0.5, 2 / 3], [2]), 0.7),  # p = q+1: unit disk
    (HypSpec.of([0.5, 2 / 3], [2]), 1.0),  # boundary, Re(sum b - sum a) > 0
    (HypSpec.of([1, 1], [2]), 1.0),        # boundary, marginal: divergent
    (HypSpec.of([0.5, 0.7, 0.9], [1.2]), 0.5),  # p > q+1
]
print("\nconvergence classes:")
for s, z in cases:
    print(f"  {s.p}F{s.q} at z={z:g}: {classify_convergence(s, z).value}")
