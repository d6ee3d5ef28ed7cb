import io

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from totient_lab import (
    SIEVE_LIMIT,
    Convention,
    bench_totient_methods,
    cumulative_counts,
    primes_up_to,
    totient,
    totient_sieve,
)
from totient_lab.sieve import BENCH_BRUTEFORCE_BOUND
from reference_values import (
    CUMULATIVE_COMPUTED,
    CUMULATIVE_PRINTED,
    TOTIENT_1_TO_100,
    small_primes,
    totient_by_gcd_count,
)

EULER = Convention.EULER
MODERN = Convention.MODERN


@pytest.fixture(scope="module")
def table_5000():
    return totient_sieve(5000, EULER)


class TestTotientSieve:
    def test_reference_table_to_100(self):
        assert totient_sieve(100, EULER).json_values() == TOTIENT_1_TO_100

    def test_progression_to_12(self):
        assert totient_sieve(12, EULER).json_values() == [0, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]

    def test_spot_values(self):
        table = totient_sieve(100, EULER)
        assert table.phi(40) == 16
        assert table.phi(100) == 40

    def test_single_entry_by_convention(self):
        assert totient_sieve(1, MODERN).json_values() == [1]
        assert totient_sieve(1, EULER).json_values() == [0]

    def test_prime_entries(self):
        table = totient_sieve(2000, MODERN)
        for p in small_primes(2000):
            assert table.phi(p) == p - 1

    def test_matches_closed_form_to_1e5(self):
        values = totient_sieve(10**5, EULER).json_values()
        for n in range(1, 10**5 + 1):
            assert values[n - 1] == totient(n, EULER)

    def test_divisor_sum_identity_to_1e4(self):
        # sum of totient(d) over the divisors d of n equals n (MODERN,
        # since the d = 1 term must contribute 1)
        limit = 10**4
        values = totient_sieve(limit, MODERN).values
        acc = np.zeros(limit + 1, dtype=np.uint64)
        for d in range(1, limit + 1):
            acc[d::d] += values[d - 1]
        assert np.array_equal(acc[1:], np.arange(1, limit + 1, dtype=np.uint64))

    def test_values_length_and_readonly(self):
        table = totient_sieve(50, EULER)
        assert len(table.values) == 50
        with pytest.raises(ValueError):
            table.values[0] = 99

    def test_phi_bounds_checked(self):
        table = totient_sieve(10, EULER)
        with pytest.raises(ValueError):
            table.phi(0)
        with pytest.raises(ValueError):
            table.phi(11)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            totient_sieve(0)

    def test_above_limit_rejected(self):
        with pytest.raises(ValueError, match="limit"):
            totient_sieve(SIEVE_LIMIT + 1)

    def test_thread_count_does_not_change_table(self):
        serial = totient_sieve(3000, EULER, threads=1)
        parallel = totient_sieve(3000, EULER, threads=4)
        assert np.array_equal(serial.values, parallel.values)

    def test_bad_thread_count_rejected(self):
        with pytest.raises(ValueError):
            totient_sieve(10, threads=0)

    @given(n=st.integers(1, 5000))
    def test_entries_match_core(self, table_5000, n):
        assert table_5000.phi(n) == totient(n, EULER)


class TestTableExport:
    def test_csv_shape(self):
        buffer = io.StringIO()
        totient_sieve(3, EULER).write_csv(buffer)
        assert buffer.getvalue() == "n,phi\n1,0\n2,1\n3,2\n"

    def test_json_values_roundtrip(self):
        table = totient_sieve(40, MODERN)
        values = table.json_values()
        assert isinstance(values, list)
        assert all(isinstance(v, int) for v in values)
        assert values == [table.phi(n) for n in range(1, 41)]

    def test_checksum_mod_2_64(self):
        table = totient_sieve(1000, EULER)
        assert table.checksum() == sum(table.json_values()) % 2**64


class TestCumulativeCounts:
    def test_first_three_rows(self):
        rows = cumulative_counts([10, 20, 30])
        assert [r.fraction_count for r in rows] == [31, 127, 277]
        assert [r.max_denominator for r in rows] == [10, 20, 30]

    def test_row_100(self):
        assert cumulative_counts([100])[0].fraction_count == 3043

    def test_trivial_denominator_2(self):
        assert cumulative_counts([2])[0].fraction_count == 1

    def test_checkpoint_1_counts_nothing(self):
        assert cumulative_counts([1])[0].fraction_count == 0

    def test_matches_gcd_count_oracle_by_tens(self):
        # The in-repo fixture cumulative.csv preserves the printed table verbatim,
        # where the 80 and 90 rows are off by 10 from the column sums of
        # the totient table; the definitional sums below are authoritative.
        rows = cumulative_counts(list(range(10, 101, 10)))
        expected = [
            sum(totient_by_gcd_count(k) for k in range(2, d + 1))
            for d in range(10, 101, 10)
        ]
        assert expected == CUMULATIVE_COMPUTED
        assert [r.fraction_count for r in rows] == expected
        assert [r.fraction_count for r in rows] != CUMULATIVE_PRINTED

    def test_nondecreasing(self):
        rows = cumulative_counts(list(range(1, 300)))
        counts = [r.fraction_count for r in rows]
        assert counts == sorted(counts)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            cumulative_counts([])

    def test_unsorted_rejected(self):
        with pytest.raises(ValueError):
            cumulative_counts([10, 5])

    def test_duplicate_rejected(self):
        with pytest.raises(ValueError):
            cumulative_counts([10, 10])

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError):
            cumulative_counts([0, 3])


class TestBench:
    def test_all_methods_agree_small(self):
        report = bench_totient_methods(300)
        assert [r.method for r in report.results] == [
            "bruteforce-oracle",
            "per-n-factorization",
            "sieve",
        ]
        assert all(r.executed for r in report.results)
        assert report.checksums_agree()
        assert len(set(report.executed_checksums())) == 1

    def test_trivial_run(self):
        report = bench_totient_methods(1)
        assert report.checksums_agree()
        assert report.executed_checksums() == [0, 0, 0]  # EULER value at 1

    def test_bruteforce_skipped_above_bound(self):
        report = bench_totient_methods(BENCH_BRUTEFORCE_BOUND + 1)
        by_method = {r.method: r for r in report.results}
        oracle = by_method["bruteforce-oracle"]
        assert not oracle.executed
        assert oracle.checksum is None
        assert "bound" in oracle.skip_reason
        assert by_method["per-n-factorization"].executed
        assert by_method["sieve"].executed
        assert report.checksums_agree()

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            bench_totient_methods(0)

    def test_checksum_value(self):
        report = bench_totient_methods(100)
        expected = sum(TOTIENT_1_TO_100) % 2**64
        assert set(report.executed_checksums()) == {expected}


class TestPrimesUpTo:
    def test_matches_reference_sieve(self):
        assert primes_up_to(2000).tolist() == small_primes(2000)

    def test_degenerate(self):
        assert primes_up_to(1).tolist() == []
