"""Verify every catalog identity line against the jet oracle.

Each of the 37 case-line entries draws admissible random parameters
(seeded, reproducible), evaluates the left side through the jet oracle and
the right side by direct summation, and records the worst relative error.
"""

import time

from hypderiv import catalog_entries, format_report, verify_entry

t0 = time.time()
reports = [verify_entry(e, trials=50, seed=0, tol=1e-8) for e in catalog_entries()]
elapsed = time.time() - t0

for r in reports:
    print(format_report(r))

worst = max(r.max_rel_err for r in reports)
failed = [r.id for r in reports if not r.passed]
print(f"\n{len(reports)} entries, worst relative error {worst:.3e}, {elapsed:.1f} s")
print("all passed" if not failed else f"FAILED: {failed}")
