"""Deciding whether the characteristic polynomial splits over the reals.

The quartic always has 1 as a root; the cubic factor splits exactly when its
discriminant is nonnegative, and that is equivalent to three integer
inequalities in n, h and f3.  Floors and ceilings of the square-root
expressions are computed by integer-sqrt bracketing, never floating point.
"""

from arr4 import char_poly_formula, real_roots_test
from arr4.catalogue import catalogue_rows

# A size-15 catalogue row attains every bound with equality.
report = real_roots_test(n=15, h=79, f3=180)
print("15-hyperplane extreme row:")
for check in report.checks:
    print(f"   {check}")
print("   discriminant:", report.discriminant)
cubic = char_poly_formula(15, 79, 180).reduced_cubic()
print("   cubic factor coefficients:", cubic.coefficients())
print("   quartic roots:", char_poly_formula(15, 79, 180).integer_roots())

# A failing example: push h past the first cap and the polynomial picks up
# complex roots; both routes agree.
bad = real_roots_test(n=5, h=20, f3=10)
print("\noverloaded h:", "real-rooted" if bad.real_rooted else "not real-rooted",
      "| discriminant:", bad.discriminant)

# Every catalogue row splits, and the caps leave little slack.
print("\nper-row slack in the chamber-count cap:")
for row in catalogue_rows():
    data = row.data()
    rep = real_roots_test(data.n, data.h_total, data.f[3])
    slack = rep.chamber_count_cap.rhs - data.f[3]
    print(f"   {row.label:<12} f3 = {data.f[3]:>5}  cap slack = {slack}")
