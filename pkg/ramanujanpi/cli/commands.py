import logging
import sys
import time
from contextlib import contextmanager
from typing import Iterator, TextIO, Tuple

import pandas as pd

from ramanujanpi.cli.config import AGM_METHOD, RunConfig
from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.series import EvaluationReport, SeriesSpec
from ramanujanpi.functions.elliptic import pi_agm
from ramanujanpi.io.digits import common_prefix, format_plain, truncated_digits
from ramanujanpi.io.utils import dump_json
from ramanujanpi.series.catalog import catalog, get_spec
from ramanujanpi.series.elementary import (
    elementary_float_sum,
    estimated_elementary_terms,
    float_digits,
)
from ramanujanpi.series.evaluate import digits_per_term, evaluate_direct
from ramanujanpi.series.splitting import evaluate_binary_splitting, terms_for_digits
from ramanujanpi.settings import (
    BENCH_TERM_BUDGET,
    COMPUTE_EXTRA_DIGITS,
    VERIFY_DIGITS,
    VERIFY_MIN_DIGITS,
)
from ramanujanpi.verification.suite import run_suite

logger = logging.getLogger(__name__)

# recompute-and-compare rounds before giving up on a run of 9s
CONFIRM_ROUNDS = 3
BENCH_DIGITS = 1000


@contextmanager
def _output(cfg: RunConfig) -> Iterator[TextIO]:
    if cfg.output_path is None:
        yield sys.stdout
    else:
        with open(cfg.output_path, "w", encoding="utf-8") as f:
            yield f


def evaluate_pi(
    method: str, ctx: PrecisionContext, workers: int = 1
) -> EvaluationReport:
    """Evaluates one method at working precision.

    Rational hypergeometric specs are summed by binary splitting, all other catalog
    specs term by term. ``"agm"`` runs the AGM iteration and reports no terms.

    Returns
    -------
    report: EvaluationReport
        Its :meth:`~EvaluationReport.pi_value` is the approximation of pi.
    """
    if method == AGM_METHOD:
        started = time.perf_counter()
        value = pi_agm(ctx)
        return EvaluationReport(
            key=AGM_METHOD,
            value=value,
            terms_used=None,
            error_bound=ctx.eps,
            digits_per_term=None,
            target="pi",
            method="agm",
            seconds=time.perf_counter() - started,
        )

    spec = get_spec(method)
    if spec.is_rational:
        n_terms = terms_for_digits(spec, ctx.working_digits)
        return evaluate_binary_splitting(spec, n_terms, ctx, workers)

    return evaluate_direct(spec, ctx)


def compute_digits(
    method: str, digits: int, workers: int = 1
) -> Tuple[str, str, EvaluationReport]:
    """Digits of pi by one method, confirmed by a second run at higher precision.

    The value is computed with 20 extra digits and again with 40, and both are
    truncated to `digits` decimals. If they disagree (a long run of 9s or 0s after
    the last printed decimal), the extra precision is doubled.

    Returns
    -------
    digits: Tuple[str, str, EvaluationReport]
        Integer part, decimals and the report of the first run.

    Raises
    ------
    ArithmeticError
        If the two runs still disagree after three rounds.
    """
    extra = COMPUTE_EXTRA_DIGITS
    for _ in range(CONFIRM_ROUNDS):
        ctx = PrecisionContext(digits + extra)
        check_ctx = PrecisionContext(digits + 2 * extra)
        report = evaluate_pi(method, ctx, workers)
        check = evaluate_pi(method, check_ctx, workers)
        first = truncated_digits(report.pi_value(), digits, ctx)
        second = truncated_digits(check.pi_value(), digits, check_ctx)
        if first == second:
            return first[0], first[1], report
        logger.debug(
            "%s: runs at %d and %d extra digits agree on %d decimals only",
            method,
            extra,
            2 * extra,
            common_prefix(first[1], second[1]),
        )
        extra *= 2

    raise ArithmeticError(
        f"Digits of {method!r} did not stabilize after {CONFIRM_ROUNDS} rounds."
    )


def cmd_compute(cfg: RunConfig) -> int:
    """Writes pi to ``cfg.digits`` decimals, plain or as JSON."""
    started = time.perf_counter()
    integer_part, decimals, report = compute_digits(
        cfg.method, cfg.digits, cfg.workers
    )
    seconds = time.perf_counter() - started
    logger.info(
        "%s: %d decimals in %.3f s (%s)", cfg.method, cfg.digits, seconds, report
    )

    with _output(cfg) as stream:
        if cfg.format == "json":
            dump_json(
                {
                    "method": cfg.method,
                    "digits": cfg.digits,
                    "terms": report.terms_used,
                    "seconds": seconds,
                    "value": f"{integer_part}.{decimals}",
                },
                stream,
            )
        else:
            stream.write(format_plain(integer_part, decimals))

    return 0


def cmd_verify(cfg: RunConfig) -> int:
    """Runs the verification suite; 0 if every check passes, 1 otherwise."""
    digits = cfg.digits if cfg.digits is not None else VERIFY_DIGITS
    if digits < VERIFY_MIN_DIGITS:
        raise ValueError("precision too low for table suite")
    report = run_suite(PrecisionContext(digits), cfg.tables)
    for name in report.failures:
        logger.warning("check failed: %s", name)

    with _output(cfg) as stream:
        if cfg.format == "json":
            payload = report.to_dict()
            payload["method"] = "verify"
            payload["groups"] = report.summary().reset_index().to_dict(
                orient="records"
            )
            dump_json(payload, stream)
        else:
            stream.write(report.summary().to_string() + "\n")
            if report.passed:
                stream.write(f"all {len(report)} checks passed\n")
            else:
                stream.write("failed checks:\n")
                for name in report.failures:
                    stream.write(f"  {name}\n")

    return 0 if report.passed else 1


def _catalog_record(spec: SeriesSpec) -> dict:
    record = spec.to_record()
    record["digits_per_term"] = digits_per_term(spec) if spec.is_geometric else None
    return record


def cmd_catalog(cfg: RunConfig) -> int:
    """Writes every catalog record with its digits per term."""
    records = [_catalog_record(spec) for spec in catalog()]
    with _output(cfg) as stream:
        if cfg.format == "json":
            dump_json(records, stream)
        else:
            table = pd.DataFrame(records)
            columns = ["key", "family", "A", "B", "digits_per_term", "provenance"]
            stream.write(table[columns].to_string(index=False) + "\n")

    return 0


def _bench_row(spec: SeriesSpec, digits: int, ctx: PrecisionContext) -> dict:
    if not spec.is_geometric:
        n_terms = min(estimated_elementary_terms(spec.kind, digits), BENCH_TERM_BUDGET)
        started = time.perf_counter()
        value = elementary_float_sum(spec.kind, n_terms)
        seconds = time.perf_counter() - started
        target = float(spec.target_value(ctx))
        return {
            "method": spec.key,
            "terms": n_terms,
            "digits": float_digits(value, target),
            "seconds": seconds,
            "digits_per_term": None,
        }

    if spec.is_rational:
        n_terms = terms_for_digits(spec, digits)
        report = evaluate_binary_splitting(spec, n_terms, ctx)
    else:
        report = evaluate_direct(spec, ctx)
    reached = report.digits_correct(spec.target_value(ctx))

    return {
        "method": spec.key,
        "terms": report.terms_used,
        "digits": min(reached, digits),
        "seconds": report.seconds,
        "digits_per_term": digits_per_term(spec),
    }


def bench_table(digits: int) -> pd.DataFrame:
    """Terms, digits reached and wall time of every catalog series at a target.

    Geometric series are evaluated to `digits`; elementary series are summed in
    double precision with at most 10^7 terms and report the digits they reach.
    Rows are sorted by digits per term, fastest first.
    """
    ctx = PrecisionContext(digits + COMPUTE_EXTRA_DIGITS)
    rows = []
    for spec in catalog():
        rows.append(_bench_row(spec, digits, ctx))
        logger.debug("benchmarked %s", spec.key)
    table = pd.DataFrame(rows)

    return table.sort_values(
        "digits_per_term", ascending=False, na_position="last", kind="stable"
    ).reset_index(drop=True)


def cmd_bench(cfg: RunConfig) -> int:
    """Writes the benchmark table for ``cfg.digits`` (default 1000)."""
    digits = cfg.digits if cfg.digits is not None else BENCH_DIGITS
    table = bench_table(digits)
    with _output(cfg) as stream:
        if cfg.format == "json":
            records = table.astype(object).where(table.notna(), None)
            dump_json(records.to_dict(orient="records"), stream)
        else:
            stream.write(table.to_string(index=False) + "\n")

    return 0


COMMAND_HANDLERS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "catalog": cmd_catalog,
    "bench": cmd_bench,
}
