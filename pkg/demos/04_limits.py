"""
Limits behind the patterns
==========================

Why steep powers, Fibonacci numbers and factorials all drift towards
Benford: each one behaves more and more like an exponential.
"""
from firstdigit import analytic as an
from firstdigit import sequences as sq

# P_1 of x**a climbs towards log10(2) as the exponent grows.
for a in (2, 3, 10, 100, 1e4, 1e6):
    print(f"a={a:>9g}  P1={an.power_p1(a):.10f}  gap={an.LOG10_2 - an.power_p1(a):.2e}")

# %%
# Consecutive Fibonacci ratios settle on the golden ratio, so F_n grows
# like phi**n.
for n in (2, 5, 10, 20, 40, 500):
    r = sq.fibonacci_ratio(n)
    print(f"n={n:>3}  ratio={r:.15f}  gap={abs(r - sq.GOLDEN_RATIO):.2e}")

# %%
# Stirling's approximation tightens, so x! follows an exponential-type curve.
for x in (1, 10, 100, 1000, 2000):
    print(f"x={x:>4}  ratio={sq.stirling_ratio(x):.8f}  1+1/(12x)={1 + 1 / (12 * x):.8f}")
