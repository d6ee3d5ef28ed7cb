"""totient-lab: Euler totient values by independent routes, reduced-fraction
counting with bounded denominators, and generating-series coefficients."""

from .core import (
    BRUTEFORCE_BOUND,
    INT_CEILING,
    Convention,
    Factorization,
    coprime_numerators,
    factorize,
    gcd,
    is_prime,
    numbers_with_prime_support,
    totient,
    totient_bruteforce,
    totient_from_factorization,
)
from .farey import (
    ENUMERATION_BOUND,
    FAREY_MATERIALIZE_BOUND,
    FareyCountReport,
    ReducedFraction,
    count_by_enumeration,
    count_by_exclusion,
    count_by_totient_sum,
    count_reducible,
    farey_sequence,
    iter_farey_sequence,
)
from .series import (
    CoefficientGroup,
    ExactRational,
    group_by_coefficient,
    integrated_series_coefficients,
    phi_over_n,
    radical,
    series_coefficients,
)
from .sieve import (
    SIEVE_LIMIT,
    BenchReport,
    CumulativeCountRow,
    MethodResult,
    TotientTable,
    bench_totient_methods,
    cumulative_counts,
    primes_up_to,
    totient_sieve,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTEFORCE_BOUND",
    "BenchReport",
    "CoefficientGroup",
    "Convention",
    "CumulativeCountRow",
    "ENUMERATION_BOUND",
    "ExactRational",
    "FAREY_MATERIALIZE_BOUND",
    "Factorization",
    "FareyCountReport",
    "INT_CEILING",
    "MethodResult",
    "ReducedFraction",
    "SIEVE_LIMIT",
    "TotientTable",
    "bench_totient_methods",
    "coprime_numerators",
    "count_by_enumeration",
    "count_by_exclusion",
    "count_by_totient_sum",
    "count_reducible",
    "cumulative_counts",
    "factorize",
    "farey_sequence",
    "gcd",
    "group_by_coefficient",
    "integrated_series_coefficients",
    "is_prime",
    "iter_farey_sequence",
    "numbers_with_prime_support",
    "phi_over_n",
    "primes_up_to",
    "radical",
    "series_coefficients",
    "totient",
    "totient_bruteforce",
    "totient_from_factorization",
    "totient_sieve",
]
