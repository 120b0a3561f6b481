"""
Closed-form digit probabilities
===============================

Each monotone family spends a different share of its domain on each
leading digit. Print the nine probabilities side by side.
"""
import math

from firstdigit import analytic as an
from firstdigit.report import distribution_table

families = {
    "exp": an.Exponential(math.e, 300, 0.4),
    "x^2": an.Power(2),
    "5x": an.Linear(5),
    "sqrt": an.Root(2),
    "log2": an.Logarithmic(2),
    "50/x": an.Reciprocal(50),
}
columns = {name: an.analytic_distribution(f) for name, f in families.items()}
header, rows = distribution_table(columns, 5)
print("  ".join(f"{h:>7}" for h in header))
for row in rows:
    print("  ".join(f"{c:>7}" for c in row))

# %%
# Curvature decides the direction: convex curves favour small digits.
for name, f in families.items():
    print(f"{name:>5}: {an.trend_classify(f).value}")

# %%
# The logarithm is the one family whose answer depends on the decade.
# Beyond the first decade almost all the mass lands on digit 9.
for n in (1, 2, 3):
    print(n, [f"{an.log_pk(2, n, k):.3g}" for k in (1, 5, 9)])

# %%
# The generic inverse-image formula reproduces every closed form.
sq = an.Power(2)
print(an.generic_pk(sq.inverse, 3, 1), an.power_pk(2, 1))
print(an.generic_pk_forward(lambda x: x**2, 3, 1, (0.0, 100.0)))
