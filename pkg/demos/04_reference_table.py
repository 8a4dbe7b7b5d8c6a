"""The reference derivative table: n=4, a=1/2, b=2/3, z=1/3.

f_L is the derivative itself (jet oracle); f_R1 is the regular identity
line, singular at exact c = 1..4; f_R2 is the exceptional line, singular at
exact c >= 6.  Each row shows the applicable line(s) matching f_L to all 15
printed digits; blank cells mark the singular side.
"""

from hypderiv import table1_csv, table1_values

print(table1_csv(), end="")

print("complementarity:")
for c in range(1, 8):
    f_l, f_r1, f_r2 = table1_values(c)
    which = [name for name, v in (("regular", f_r1), ("exceptional", f_r2)) if v is not None]
    print(f"  c={c}: applicable lines: {', '.join(which)}")
