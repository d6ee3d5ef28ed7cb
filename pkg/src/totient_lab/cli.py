"""Command-line front end: totient values, bulk tables, reduced-fraction
counts, the fraction sequence itself, series coefficients, and the method
benchmark.

Output discipline: plain is human-readable ASCII; csv and json are
byte-stable for identical inputs.  Exit codes: 0 success, 2 usage or
domain error, 3 internal cross-check failure.
"""

from __future__ import annotations

import dataclasses
import functools
import json
import re
from fractions import Fraction

import click

from .core import Convention, factorize, totient
from .farey import (
    ENUMERATION_BOUND,
    FAREY_MATERIALIZE_BOUND,
    FareyCountReport,
    count_by_enumeration,
    count_by_exclusion,
    count_by_totient_sum,
    iter_farey_sequence,
)
from .series import (
    group_by_coefficient,
    integrated_series_coefficients,
    series_coefficients,
)
from .sieve import bench_totient_methods, totient_sieve

_DECIMAL_RE = re.compile(r"[0-9]+")


class DomainError(click.ClickException):
    exit_code = 2


class CrossCheckError(click.ClickException):
    exit_code = 3


class DecimalInt(click.ParamType):
    """Plain base-10 integer: no sign, no whitespace, no hex."""

    name = "integer"

    def convert(self, value, param, ctx):
        if isinstance(value, int):
            return value
        if not _DECIMAL_RE.fullmatch(value):
            self.fail(f"{value!r} is not a plain decimal integer", param, ctx)
        return int(value)


DECIMAL = DecimalInt()

_convention_option = click.option(
    "--convention",
    type=click.Choice(["modern", "euler"]),
    default="modern",
    show_default=True,
    help="Value of the totient at n = 1 (the conventions agree for n >= 2).",
)
_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["plain", "csv", "json"]),
    default="plain",
    show_default=True,
    help="Output format.",
)


def _lib_errors(fn):
    """Map library domain, overflow, and allocation errors to exit code 2."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ValueError, OverflowError) as exc:
            raise DomainError(str(exc)) from exc
        except MemoryError as exc:
            raise DomainError("allocation failed; request a smaller range") from exc

    return wrapper


def _emit(text: str) -> None:
    click.echo(text, nl=False)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


@click.group()
@click.version_option(package_name="totient-lab")
def main() -> None:
    """Totient values, reduced-fraction counts, and series coefficients."""


@main.command("totient")
@click.argument("n", type=DECIMAL)
@_convention_option
@_format_option
@click.option("--verbose", is_flag=True, help="Show the factorization and the product-formula derivation.")
@_lib_errors
def cmd_totient(n: int, convention: str, fmt: str, verbose: bool) -> None:
    """Totient of N: how many positive integers below N are coprime to it."""
    conv = Convention(convention)
    value = totient(n, conv)
    if fmt == "csv":
        _emit(f"n,phi\n{n},{value}\n")
        return
    factorization = factorize(n) if verbose else None
    if fmt == "json":
        payload: dict = {"n": n, "convention": conv.value, "phi": value}
        if factorization is not None:
            payload["factorization"] = [list(pair) for pair in factorization.factors]
            payload["distinct_primes"] = list(factorization.distinct_primes)
        _emit(_json_text(payload))
        return
    if not verbose:
        _emit(f"{value}\n")
        return
    primes = factorization.distinct_primes
    lines = [
        f"phi({n}) = {value}",
        f"factorization: {factorization}",
        f"distinct primes: {', '.join(str(p) for p in primes) if primes else '(none)'}",
    ]
    if primes:
        product = " * ".join(f"{p - 1}/{p}" for p in primes)
        lines.append(f"product: {n} * {product} = {value}")
    _emit("\n".join(lines) + "\n")


@main.command("table")
@click.argument("max_n", type=DECIMAL)
@_convention_option
@_format_option
@click.option("--threads", type=DECIMAL, default=1, show_default=True,
              help="Worker threads for table construction (result is bit-identical for any count).")
@_lib_errors
def cmd_table(max_n: int, convention: str, fmt: str, threads: int) -> None:
    """Totient values for every n in 1..MAX_N."""
    table = totient_sieve(max_n, Convention(convention), threads=threads)
    if fmt == "json":
        _emit(_json_text(table.json_values()))
        return
    values = table.json_values()
    if fmt == "csv":
        rows = [f"{n},{v}" for n, v in enumerate(values, start=1)]
        _emit("n,phi\n" + "\n".join(rows) + "\n")
        return
    _emit("".join(f"{n} {v}\n" for n, v in enumerate(values, start=1)))


def _report_payload(report: FareyCountReport) -> dict:
    return {
        "max_denominator": report.max_denominator,
        "total_unreduced": report.total_unreduced,
        "excluded": report.excluded,
        "count_by_exclusion": report.count_by_exclusion,
        "count_by_totient_sum": report.count_by_totient_sum,
        "count_by_enumeration": report.count_by_enumeration,
    }


@main.command("count")
@click.argument("max_denominator", type=DECIMAL)
@click.option("--method", type=click.Choice(["sum", "exclusion", "enumerate", "all"]),
              default="all", show_default=True,
              help="Counting route; `all` runs every route and cross-checks.")
@_format_option
@_lib_errors
def cmd_count(max_denominator: int, method: str, fmt: str) -> None:
    """Count the reduced fractions in (0, 1) with denominator <= MAX_DENOMINATOR."""
    d = max_denominator
    if method in ("sum", "enumerate"):
        count = count_by_totient_sum(d) if method == "sum" else count_by_enumeration(d)
        if fmt == "csv":
            _emit(f"max_denominator,method,count\n{d},{method},{count}\n")
        elif fmt == "json":
            _emit(_json_text({"max_denominator": d, "method": method, "count": count}))
        else:
            _emit(f"{count}\n")
        return

    report = count_by_exclusion(d)
    enumeration_note = None
    if method == "all":
        if d <= ENUMERATION_BOUND:
            report = dataclasses.replace(
                report, count_by_enumeration=count_by_enumeration(d)
            )
        else:
            enumeration_note = f"skipped (D exceeds {ENUMERATION_BOUND})"

    if fmt == "json":
        _emit(_json_text(_report_payload(report)))
    elif fmt == "csv":
        enum_field = "" if report.count_by_enumeration is None else str(report.count_by_enumeration)
        _emit(
            "max_denominator,total_unreduced,excluded,"
            "count_by_exclusion,count_by_totient_sum,count_by_enumeration\n"
            f"{report.max_denominator},{report.total_unreduced},{report.excluded},"
            f"{report.count_by_exclusion},{report.count_by_totient_sum},{enum_field}\n"
        )
    else:
        lines = [
            f"max_denominator: {report.max_denominator}",
            f"total_unreduced: {report.total_unreduced}",
            f"excluded: {report.excluded}",
            f"count_by_exclusion: {report.count_by_exclusion}",
            f"count_by_totient_sum: {report.count_by_totient_sum}",
        ]
        if report.count_by_enumeration is not None:
            lines.append(f"count_by_enumeration: {report.count_by_enumeration}")
        elif enumeration_note is not None:
            lines.append(f"count_by_enumeration: {enumeration_note}")
        _emit("\n".join(lines) + "\n")

    if not report.consistent():
        raise CrossCheckError(
            f"counting routes disagree at D={d}: {_report_payload(report)}"
        )


@main.command("farey")
@click.argument("max_denominator", type=DECIMAL)
@_format_option
@_lib_errors
def cmd_farey(max_denominator: int, fmt: str) -> None:
    """The reduced fractions in (0, 1) with denominator <= MAX_DENOMINATOR,
    in increasing order."""
    d = max_denominator
    if d > FAREY_MATERIALIZE_BOUND:
        raise DomainError(
            f"D={d} exceeds the sequence bound {FAREY_MATERIALIZE_BOUND}"
        )
    if fmt == "json":
        fractions = [
            {"numerator": f.numerator, "denominator": f.denominator}
            for f in iter_farey_sequence(d)
        ]
        _emit(_json_text({
            "max_denominator": d,
            "count": len(fractions),
            "fractions": fractions,
        }))
        return
    if fmt == "csv":
        rows = [f"{f.numerator},{f.denominator}" for f in iter_farey_sequence(d)]
        _emit("numerator,denominator\n" + "\n".join(rows) + "\n")
        return
    count = 0
    chunks = []
    for f in iter_farey_sequence(d):
        chunks.append(f"{f}\n")
        count += 1
    chunks.append(f"count: {count}\n")
    _emit("".join(chunks))


@main.command("series")
@click.argument("max_n", type=DECIMAL)
@click.option("--grouped", is_flag=True,
              help="Group n = 2..MAX_N by equal coefficient totient(n)/n.")
@_format_option
@_lib_errors
def cmd_series(max_n: int, grouped: bool, fmt: str) -> None:
    """Series coefficients: totient(n) and the reduced rational totient(n)/n
    for n = 2..MAX_N."""
    if grouped:
        groups = group_by_coefficient(max_n)
        if fmt == "json":
            payload = [
                {
                    "radical": g.radical,
                    "coefficient": {
                        "num": g.coefficient.numerator,
                        "den": g.coefficient.denominator,
                    },
                    "members": list(g.members),
                }
                for g in groups
            ]
            _emit(_json_text(payload))
        elif fmt == "csv":
            rows = [
                f"{g.radical},{_fraction_str(g.coefficient)},{m}"
                for g in groups
                for m in g.members
            ]
            _emit("radical,coefficient,member\n" + "\n".join(rows) + "\n")
        else:
            _emit("".join(
                f"radical {g.radical}: coefficient {_fraction_str(g.coefficient)}, "
                f"members {' '.join(str(m) for m in g.members)}\n"
                for g in groups
            ))
        return

    values = series_coefficients(max_n)
    coefficients = integrated_series_coefficients(max_n)
    rows = [
        (n, values[n - 1], coeff) for n, coeff in enumerate(coefficients, start=2)
    ]
    if fmt == "json":
        payload = [
            {
                "n": n,
                "phi": phi,
                "coefficient": {"num": coeff.numerator, "den": coeff.denominator},
            }
            for n, phi, coeff in rows
        ]
        _emit(_json_text(payload))
    elif fmt == "csv":
        _emit(
            "n,phi,phi_over_n\n"
            + "\n".join(f"{n},{phi},{_fraction_str(c)}" for n, phi, c in rows)
            + "\n"
        )
    else:
        _emit("".join(f"{n} {phi} {_fraction_str(c)}\n" for n, phi, c in rows))


@main.command("bench")
@click.argument("max_n", type=DECIMAL)
@_format_option
@_lib_errors
def cmd_bench(max_n: int, fmt: str) -> None:
    """Time the totient routes over 1..MAX_N and cross-check their checksums."""
    report = bench_totient_methods(max_n)
    if fmt == "json":
        payload = {
            "max_n": report.max_n,
            "results": [
                {
                    "method": r.method,
                    "executed": r.executed,
                    "seconds": r.seconds,
                    "checksum": r.checksum,
                    "skip_reason": r.skip_reason,
                }
                for r in report.results
            ],
            "checksums_agree": report.checksums_agree(),
        }
        _emit(_json_text(payload))
    elif fmt == "csv":
        rows = []
        for r in report.results:
            seconds = "" if r.seconds is None else f"{r.seconds:.6f}"
            checksum = "" if r.checksum is None else str(r.checksum)
            reason = r.skip_reason or ""
            rows.append(
                f"{r.method},{str(r.executed).lower()},{seconds},{checksum},{reason}"
            )
        _emit("method,executed,seconds,checksum,skip_reason\n" + "\n".join(rows) + "\n")
    else:
        lines = []
        for r in report.results:
            if r.executed:
                lines.append(f"{r.method}: {r.seconds:.6f} s, checksum {r.checksum}")
            else:
                lines.append(f"{r.method}: skipped ({r.skip_reason})")
        lines.append(
            "checksums agree: " + ("yes" if report.checksums_agree() else "NO")
        )
        _emit("\n".join(lines) + "\n")

    if not report.checksums_agree():
        raise CrossCheckError(
            f"method checksums disagree at max_n={max_n}: "
            + ", ".join(
                f"{r.method}={r.checksum}" for r in report.results if r.executed
            )
        )


if __name__ == "__main__":
    main()
