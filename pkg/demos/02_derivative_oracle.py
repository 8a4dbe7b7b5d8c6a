"""The truncated-Taylor-jet derivative oracle.

A jet of order K at z0 carries the Taylor coefficients c_0..c_K; products,
powers, exponentials and hypergeometric series compose coefficientwise, so
the n-th derivative of any product expression comes out as n! * c_n with no
step-size loss (finite differences would shed half the digits per order).
"""

import math

from hypderiv import (
    HypSpec,
    derivative,
    eval_expr_jet,
    expr,
    expz,
    hyp,
    jet_exp,
    jet_mul,
    jet_pow,
    jet_variable,
    nth_derivative,
    param,
    pow1mz,
    powz,
    term,
)

# d^2/dz^2 sqrt(z) at 1 = -1/4
j = jet_pow(jet_variable(1.0, 2), 0.5)
print("sqrt(z) jet at 1:", j.coeffs)
print("second derivative:", derivative(j, 2).real, "(exact -0.25)")

# jets compose: e^z * e^{-z} collapses to the unit jet
v = jet_variable(0.4, 4)
u = jet_mul(jet_exp(v, 1), jet_exp(v, -1))
print("\ne^z * e^-z jet:", [round(abs(c), 15) for c in u.coeffs])

# d^4/dz^4 [z^2 (1-z)^{1/2} e^{-z} 2F1(1/2,2/3;2;z)] at z = 1/3,
# checked against the Leibniz expansion of the jet itself
e = expr(
    term(
        1,
        powz(param(2)),
        pow1mz(param(0.5)),
        expz(-1),
        hyp(HypSpec.of([0.5, 2 / 3], [2])),
    )
)
val = nth_derivative(e, 4, 1 / 3)
print("\n4th derivative of the product expression:", val.real)

jet = eval_expr_jet(e, 1 / 3, 6)
print("full jet (derivatives 0..6):")
for n in range(7):
    print(f"  d^{n} =", (math.factorial(n) * jet.coeffs[n]).real)
