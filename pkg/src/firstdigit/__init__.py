"""First-digit probabilities of continuous functions and integer sequences."""
from .analytic import (Exponential, Linear, Logarithmic, Power, Reciprocal, Root,
                       TrendClass, analytic_distribution, benford_pk, generic_pk,
                       generic_pk_forward, invert_monotone, linear_pk, log_pk, power_p1,
                       power_pk, reciprocal_pk, root_pk, trend_classify)
from .bignat import BigNat, bignat_add, bignat_mul_small
from .digitcore import (DigitCounts, DigitDistribution, counts_to_distribution,
                        decade_subinterval, leading_digit, leading_digit_of_bignat)
from .empirical import RangeFilter, SampleSpec, sample_digit_counts, sample_table
from .report import chi_square, compare, comparison_table, l1_distance, max_abs_diff
from .scenarios import ScenarioId, run_scenario, scenario_definition
from .sequences import (Factorial, Fibonacci, Primes, factorial_leading_digits,
                        fibonacci_leading_digits, fibonacci_ratio, prime_digit_counts,
                        sequence_digit_counts, sieve_primes, stirling_ratio)

__version__ = "0.1.0"
