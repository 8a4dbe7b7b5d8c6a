"""Kummer-type rewrites and how the corollary identities arise from them.

kummer1 flips 1F1 through the exponential transform, kummer2 is the Euler
transform of 2F1, kummer3 the Pfaff transform with argument z/(z-1).  Each
rewrite preserves the value; composing one with a theorem-line right-hand
side reproduces the corresponding corollary line mechanically.
"""

import random

from hypderiv import (
    HypSpec,
    entry,
    eval_expr,
    expr,
    format_expr,
    hyp,
    kummer1,
    kummer2,
    kummer3,
    term,
    theorem_composition,
)

z = 1 / 3
e11 = expr(term(1, hyp(HypSpec.of([0.5], [2.0]))))
e21 = expr(term(1, hyp(HypSpec.of([0.5, 2 / 3], [2.0]))))

for name, rewrite, base in (
    ("kummer1 (exponential)", kummer1, e11),
    ("kummer2 (Euler)", kummer2, e21),
    ("kummer3 (Pfaff)", kummer3, e21),
):
    out = rewrite(base)
    before, after = eval_expr(base, z), eval_expr(out, z)
    print(name)
    print("  before:", format_expr(base))
    print("  after: ", format_expr(out))
    print(f"  values: {before.real:.15g} vs {after.real:.15g}")
    print()

# a corollary line rebuilt from its theorem source
cid = "Co2-5"
e = entry(cid)
p = e.draw(random.Random(0))
direct = eval_expr(e.rhs(p), z)
composed = eval_expr(theorem_composition(cid, p), z)
print(f"{cid}: catalog RHS {direct:.15g}")
print(f"{cid}: composed   {composed:.15g}")
