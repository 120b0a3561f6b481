"""
Primes, Fibonacci numbers and factorials
========================================

Integer sequences measured exactly. Fibonacci and factorial track
Benford; primes drift towards uniform as the range grows.
"""
import math

from firstdigit import sequences as sq
from firstdigit.analytic import benford_pk
from firstdigit.digitcore import DIGITS, counts_to_distribution

for limit in (100, 10**4, 10**6):
    dist = counts_to_distribution(sq.prime_digit_counts(limit))
    print(f"primes < {limit:>8}:", " ".join(f"{p:.3f}" for p in dist))
print(" " * 19, " ".join(f"{1 / 9:.3f}" for _ in DIGITS), "(uniform)")

# %%
fib = counts_to_distribution(sq.sequence_digit_counts(sq.Fibonacci(500)))
fact = counts_to_distribution(sq.sequence_digit_counts(sq.Factorial(2000)))
print("digit  fib500   fact2000  benford")
for k in DIGITS:
    print(f"{k:5d}  {fib[k]:.5f}  {fact[k]:.5f}   {benford_pk(k):.5f}")

# %%
# The floating log-sum shortcut agrees with exact arithmetic here,
# and it says where it would be unsure. 1!, 2! and 3! = 6 sit exactly on
# digit edges, so they are flagged even though their digits are right.
logsum = sq.factorial_logsum_digits(2000)
print(logsum.digits == sq.factorial_leading_digits(2000), logsum.low_confidence)

# %%
*_, big = sq.factorials(2000)
print(repr(big), big.num_digits(), int(big) == math.factorial(2000))
