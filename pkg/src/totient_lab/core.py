"""Exact integer arithmetic: gcd, trial-division factorization, and the
totient computed both by the closed-form prime product and by definitional
brute force.

Every function here is pure and works on plain Python ints.  Inputs above
``INT_CEILING`` (the unsigned 64-bit range) raise OverflowError so callers
never depend on silently unbounded arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

#: Largest accepted input value (unsigned 64-bit range).
INT_CEILING = 2**64 - 1

#: totient_bruteforce and coprime_numerators are O(n log n) per call and
#: refuse n above this rather than running for minutes.
BRUTEFORCE_BOUND = 10**6


class Convention(Enum):
    """Value assigned to the totient at n = 1.

    MODERN counts 1 as coprime to itself (value 1).  EULER counts only the
    integers strictly below n, so the value at 1 is 0.  The two agree for
    every n >= 2.
    """

    MODERN = "modern"
    EULER = "euler"

    @property
    def value_at_one(self) -> int:
        return 1 if self is Convention.MODERN else 0


def _check_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")
    if n > INT_CEILING:
        raise OverflowError(f"{name}={n} exceeds the 64-bit ceiling {INT_CEILING}")


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers, not both zero."""
    if a < 0 or b < 0:
        raise ValueError(f"gcd needs nonnegative arguments, got ({a}, {b})")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """Ordered prime-power decomposition of a positive integer.

    ``factors`` holds (prime, exponent) pairs with strictly increasing
    primes and exponents >= 1; it is empty exactly when n == 1.  The
    invariants are enforced on construction.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        _check_positive(self.n)
        product = 1
        previous = 0
        for prime, exponent in self.factors:
            if prime <= previous:
                raise ValueError("factor primes must be strictly increasing")
            if exponent < 1:
                raise ValueError(f"exponent of prime {prime} must be >= 1")
            if not is_prime(prime):
                raise ValueError(f"{prime} is not prime")
            product *= prime**exponent
            previous = prime
        if product != self.n:
            raise ValueError(f"factors multiply to {product}, not {self.n}")

    @property
    def distinct_primes(self) -> tuple[int, ...]:
        return tuple(prime for prime, _ in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(
            f"{p}^{e}" if e > 1 else f"{p}" for p, e in self.factors
        )


def factorize(n: int) -> Factorization:
    """Factor n by trial division: strip 2, then odd candidates up to sqrt."""
    _check_positive(n)
    remaining = n
    factors: list[tuple[int, int]] = []
    exponent = 0
    while remaining % 2 == 0:
        remaining //= 2
        exponent += 1
    if exponent:
        factors.append((2, exponent))
    candidate = 3
    while candidate * candidate <= remaining:
        if remaining % candidate == 0:
            exponent = 0
            while remaining % candidate == 0:
                remaining //= candidate
                exponent += 1
            factors.append((candidate, exponent))
        candidate += 2
    if remaining > 1:
        factors.append((remaining, 1))
    return Factorization(n, tuple(factors))


def totient_from_factorization(
    factorization: Factorization, convention: Convention = Convention.MODERN
) -> int:
    """Totient from a known factorization: prod p^(e-1) * (p-1) over factors."""
    if factorization.n == 1:
        return convention.value_at_one
    result = 1
    for prime, exponent in factorization.factors:
        result *= prime ** (exponent - 1) * (prime - 1)
    return result


def totient(n: int, convention: Convention = Convention.MODERN) -> int:
    """Totient of n by the closed-form product over distinct prime divisors.

    Only the distinct primes matter: the running value is updated as
    value // p * (p - 1) per prime, in ascending order.  Dividing before
    multiplying keeps every intermediate at most n (p always divides the
    running value exactly).
    """
    _check_positive(n)
    if n == 1:
        return convention.value_at_one
    result = n
    remaining = n
    if remaining % 2 == 0:
        result //= 2
        while remaining % 2 == 0:
            remaining //= 2
    candidate = 3
    while candidate * candidate <= remaining:
        if remaining % candidate == 0:
            result = result // candidate * (candidate - 1)
            while remaining % candidate == 0:
                remaining //= candidate
        candidate += 2
    if remaining > 1:
        result = result // remaining * (remaining - 1)
    return result


def totient_bruteforce(n: int) -> int:
    """Count 1 <= k < n with gcd(k, n) = 1, straight from the definition.

    Deliberately naive; this is the independent oracle for totient().  The
    value at n = 1 is 0 (no k exists).  Refuses n above BRUTEFORCE_BOUND
    instead of being silently slow.
    """
    _check_positive(n)
    if n > BRUTEFORCE_BOUND:
        raise ValueError(
            f"totient_bruteforce is O(n log n) per call; "
            f"n={n} exceeds the bound {BRUTEFORCE_BOUND}"
        )
    g = math.gcd
    return sum(1 for k in range(1, n) if g(k, n) == 1)


def coprime_numerators(d: int) -> list[int]:
    """All admissible numerators for denominator d: k < d with gcd(k, d) = 1.

    Returned ascending; the length equals totient(d) under the EULER
    convention.
    """
    if d < 2:
        raise ValueError(f"denominator must be >= 2, got {d}")
    if d > INT_CEILING:
        raise OverflowError(f"d={d} exceeds the 64-bit ceiling {INT_CEILING}")
    if d > BRUTEFORCE_BOUND:
        raise ValueError(
            f"coprime_numerators materializes O(d) values; "
            f"d={d} exceeds the bound {BRUTEFORCE_BOUND}"
        )
    g = math.gcd
    return [k for k in range(1, d) if g(k, d) == 1]


def numbers_with_prime_support(primes: Iterable[int], limit: int) -> list[int]:
    """All n <= limit whose set of distinct prime divisors is exactly `primes`.

    Enumerates products with every exponent >= 1, so the cost is the size
    of the answer, not a scan of 1..limit.
    """
    support = sorted(set(primes))
    if not support:
        raise ValueError("the prime support set must be nonempty")
    for p in support:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    _check_positive(limit, "limit")

    found: list[int] = []

    def grow(index: int, value: int) -> None:
        if index == len(support):
            found.append(value)
            return
        multiple = value * support[index]
        while multiple <= limit:
            grow(index + 1, multiple)
            multiple *= support[index]

    grow(0, 1)
    found.sort()
    return found
