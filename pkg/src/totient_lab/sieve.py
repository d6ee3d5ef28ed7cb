"""Bulk totient tables, cumulative reduced-fraction counts, and a benchmark
comparing the three totient routes.

Tables are numpy uint64 arrays built with an in-place product sieve, not
max_n independent factorizations, so 10**7 entries take about two seconds.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import isqrt
from typing import IO, Sequence

import numpy as np

from .core import Convention, totient, totient_bruteforce

#: Practical table-size limit.  A full table costs 8 bytes per entry, so
#: the limit corresponds to roughly 800 MB; larger requests are refused.
SIEVE_LIMIT = 10**8

#: The cumulative fraction count grows like 3 N^2 / pi^2 and would wrap a
#: 64-bit accumulator near N = 2.4e9.  SIEVE_LIMIT keeps sums far below
#: that, but the guard stays in case the limits ever move.
_SUM_OVERFLOW_N = 2_400_000_000

#: Per-method input bounds for the benchmark.  The brute-force route costs
#: O(max_n^2 log max_n) total and the per-value factorization route
#: O(max_n^1.5); beyond these bounds the method is skipped, not run.
BENCH_BRUTEFORCE_BOUND = 10**4
BENCH_FACTORIZATION_BOUND = 10**6

_UINT64_MASK = 2**64 - 1


def primes_up_to(n: int) -> np.ndarray:
    """Primes <= n via a boolean Eratosthenes sieve."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(n + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.nonzero(flags)[0]


@dataclass(frozen=True)
class TotientTable:
    """Dense totient values for 1..max_n.

    ``values`` has length exactly max_n and ``values[i]`` holds the totient
    of i + 1; use phi(n) for 1-based access.  The array is read-only, so a
    finished table is safe to share across threads.
    """

    max_n: int
    convention: Convention
    values: np.ndarray

    def phi(self, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise ValueError(f"n={n} outside table range 1..{self.max_n}")
        return int(self.values[n - 1])

    def checksum(self) -> int:
        """Sum of all table values, reduced mod 2**64."""
        return int(self.values.sum(dtype=np.uint64))

    def write_csv(self, stream: IO[str]) -> None:
        """Write the table as `n,phi` rows with a header, LF line endings."""
        stream.write("n,phi\n")
        for n, value in enumerate(self.values.tolist(), start=1):
            stream.write(f"{n},{value}\n")

    def json_values(self) -> list[int]:
        """The table as a plain list, index i holding the value for n=i+1."""
        return self.values.tolist()


def totient_sieve(
    max_n: int, convention: Convention = Convention.MODERN, threads: int = 1
) -> TotientTable:
    """Totient table for 1..max_n via the in-place product sieve.

    Start with value[n] = n; for each prime p, update the whole stride at
    once: value -= value // p (that is, multiply by 1 - 1/p).  Every step
    is exact because p still divides the running value wherever p divides
    n.  Primes above max_n/2 have no second multiple in range, so they are
    handled in one vectorized decrement.  Total work is
    O(max_n log log max_n).

    ``threads`` is accepted for interface stability and validated, but
    construction is single-threaded (the numpy strides are already memory
    bound); any thread count produces a bit-identical table.
    """
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    if max_n < 1:
        raise ValueError(f"max_n must be a positive integer, got {max_n}")
    if max_n > SIEVE_LIMIT:
        raise ValueError(
            f"max_n={max_n} exceeds the documented table limit {SIEVE_LIMIT} "
            f"(about 800 MB of values)"
        )
    # MemoryError from the allocation is the resource-failure signal.
    phi = np.arange(max_n + 1, dtype=np.uint64)
    if max_n >= 2:
        primes = primes_up_to(max_n)
        split = int(np.searchsorted(primes, max_n // 2, side="right"))
        for p in primes[:split].tolist():
            stride = phi[p::p]
            stride -= stride // p
        phi[primes[split:]] -= 1  # lone multiples: value p becomes p - 1
    phi[1] = convention.value_at_one
    phi.flags.writeable = False
    return TotientTable(max_n=max_n, convention=convention, values=phi[1:])


@dataclass(frozen=True)
class CumulativeCountRow:
    """Count of reduced fractions in (0, 1) with denominator <= max_denominator."""

    max_denominator: int
    fraction_count: int


def cumulative_counts(checkpoints: Sequence[int]) -> list[CumulativeCountRow]:
    """Cumulative fraction counts at each checkpoint D.

    Each row carries the sum of totient(k) for k = 2..D (EULER convention,
    so the k = 1 term is 0).  Checkpoints must be strictly ascending.
    """
    checkpoints = list(checkpoints)
    if not checkpoints:
        raise ValueError("checkpoints must be nonempty")
    if checkpoints[0] < 1:
        raise ValueError(f"checkpoints must be positive, got {checkpoints[0]}")
    if any(b <= a for a, b in zip(checkpoints, checkpoints[1:])):
        raise ValueError("checkpoints must be strictly ascending")
    top = checkpoints[-1]
    if top > _SUM_OVERFLOW_N:
        raise OverflowError(
            f"cumulative count at {top} would overflow the 64-bit accumulator"
        )
    table = totient_sieve(top, Convention.EULER)
    running = np.cumsum(table.values, dtype=np.uint64)
    return [
        CumulativeCountRow(max_denominator=d, fraction_count=int(running[d - 1]))
        for d in checkpoints
    ]


@dataclass(frozen=True)
class MethodResult:
    """Outcome of one benchmark method: timing and checksum, or skip reason."""

    method: str
    executed: bool
    seconds: float | None = None
    checksum: int | None = None
    skip_reason: str | None = None


@dataclass(frozen=True)
class BenchReport:
    max_n: int
    results: tuple[MethodResult, ...]

    def executed_checksums(self) -> list[int]:
        return [r.checksum for r in self.results if r.executed and r.checksum is not None]

    def checksums_agree(self) -> bool:
        return len(set(self.executed_checksums())) <= 1


def bench_totient_methods(max_n: int) -> BenchReport:
    """Time the three totient routes over 1..max_n (EULER convention).

    Methods whose documented bound is exceeded are skipped and marked,
    never run.  Checksums (sum of all values mod 2**64) of every executed
    method must agree; the report exposes that check but does not raise,
    so callers decide how to surface a mismatch.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be a positive integer, got {max_n}")
    results: list[MethodResult] = []

    if max_n > BENCH_BRUTEFORCE_BOUND:
        results.append(
            MethodResult(
                method="bruteforce-oracle",
                executed=False,
                skip_reason=f"max_n exceeds brute-force bound {BENCH_BRUTEFORCE_BOUND}",
            )
        )
    else:
        start = time.perf_counter()
        total = 0
        for n in range(1, max_n + 1):
            total += totient_bruteforce(n)
        elapsed = time.perf_counter() - start
        results.append(
            MethodResult(
                method="bruteforce-oracle",
                executed=True,
                seconds=elapsed,
                checksum=total & _UINT64_MASK,
            )
        )

    if max_n > BENCH_FACTORIZATION_BOUND:
        results.append(
            MethodResult(
                method="per-n-factorization",
                executed=False,
                skip_reason=f"max_n exceeds factorization bound {BENCH_FACTORIZATION_BOUND}",
            )
        )
    else:
        start = time.perf_counter()
        total = 0
        for n in range(1, max_n + 1):
            total += totient(n, Convention.EULER)
        elapsed = time.perf_counter() - start
        results.append(
            MethodResult(
                method="per-n-factorization",
                executed=True,
                seconds=elapsed,
                checksum=total & _UINT64_MASK,
            )
        )

    if max_n > SIEVE_LIMIT:
        results.append(
            MethodResult(
                method="sieve",
                executed=False,
                skip_reason=f"max_n exceeds sieve limit {SIEVE_LIMIT}",
            )
        )
    else:
        start = time.perf_counter()
        checksum = totient_sieve(max_n, Convention.EULER).checksum()
        elapsed = time.perf_counter() - start
        results.append(
            MethodResult(
                method="sieve", executed=True, seconds=elapsed, checksum=checksum
            )
        )

    return BenchReport(max_n=max_n, results=tuple(results))
