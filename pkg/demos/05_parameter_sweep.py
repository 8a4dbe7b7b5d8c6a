"""Sweep of f_L, f_R1, f_R2 over real c (the data behind the crossing plot).

Away from integers both identity lines are finite curves; f_R1 equals the
derivative f_L wherever it is regular, and the two lines cross at c = 5.
Integer poles show up as empty cells.  The CSV is written for external
plotting.
"""

from hypderiv import figure1_rows

rows = figure1_rows(c_min=0.5, c_max=7.5, step=0.05)

with open("figure1.csv", "w") as fh:
    fh.write("c,f_L,f_R1,f_R2,f_R1-f_R2\n")
    for c, f_l, f_r1, f_r2, diff in rows:
        cells = ["" if v is None else f"{v:.15g}" for v in (f_l, f_r1, f_r2, diff)]
        fh.write(f"{c:.10g}," + ",".join(cells) + "\n")
print(f"wrote figure1.csv ({len(rows)} rows)")

print("\nselected rows:")
print(f"{'c':>5} {'f_L':>18} {'f_R1':>18} {'f_R2':>18}")
for c, f_l, f_r1, f_r2, diff in rows:
    if c in (1.0, 2.5, 4.5, 5.0, 6.0, 7.0):
        cells = ["      (pole)      " if v is None else f"{v:18.12g}" for v in (f_l, f_r1, f_r2)]
        print(f"{c:5.2f} {cells[0]} {cells[1]} {cells[2]}")

crossing = min(
    (r for r in rows if r[4] is not None),
    key=lambda r: abs(r[4]),
)
print(f"\nsmallest |f_R1 - f_R2| on the grid: {abs(crossing[4]):.3e} at c = {crossing[0]:g}")
