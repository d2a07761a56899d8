import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Tuple

import gmpy2
import mpmath

from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.series import EvaluationReport, SeriesSpec
from ramanujanpi.core.surd import exact_rational
from ramanujanpi.series.evaluate import RATE_WINDOW, RATIO_MARGIN, digits_per_term

logger = logging.getLogger(__name__)

Triple = Tuple[gmpy2.mpz, gmpy2.mpz, gmpy2.mpz]


class _Recurrence:
    """Integer data of t_{j+1}/t_j = p(j)/q(j) and of A + n B = (a + n b)/d.

    With Pochhammer parameters u_i/v_i and ratio w = w_num/w_den of the base power,
    p(j) = w_num prod_i (v_i j + u_i) and q(j) = w_den prod_i v_i (j + 1)^3. The
    object holds plain ints only, so it pickles into worker processes.
    """

    def __init__(self, spec: SeriesSpec):
        if not spec.is_rational:
            raise TypeError(
                f"Expected a spec with rational A, B and base and a hypergeometric "
                f"family for binary splitting, got {spec.key!r}."
            )
        A = exact_rational(spec.A)
        B = exact_rational(spec.B)
        w = spec.scale * exact_rational(spec.base) ** spec.slope
        if spec.alternating:
            w = -w

        self.parameters = [(p.numerator, p.denominator) for p in spec.family.pochhammer]
        self.w_num = w.numerator
        self.w_den = w.denominator * math.prod(v for _, v in self.parameters)
        self.denominator = math.lcm(A.denominator, B.denominator)
        self.a = A.numerator * (self.denominator // A.denominator)
        self.b = B.numerator * (self.denominator // B.denominator)

    def p(self, j: int) -> gmpy2.mpz:
        value = gmpy2.mpz(self.w_num)
        for u, v in self.parameters:
            value *= v * j + u
        return value

    def q(self, j: int) -> gmpy2.mpz:
        return gmpy2.mpz(self.w_den) * (j + 1) ** 3

    def linear(self, n: int) -> gmpy2.mpz:
        return gmpy2.mpz(self.a + n * self.b)


def _split(recurrence: _Recurrence, start: int, stop: int) -> Triple:
    """(P, Q, T) over the term indices start <= n < stop."""
    if stop - start == 1:
        n = start
        if n == 0:
            P = Q = gmpy2.mpz(1)
        else:
            P, Q = recurrence.p(n - 1), recurrence.q(n - 1)
        return P, Q, P * recurrence.linear(n)

    middle = (start + stop) // 2
    P1, Q1, T1 = _split(recurrence, start, middle)
    P2, Q2, T2 = _split(recurrence, middle, stop)

    return P1 * P2, Q1 * Q2, T1 * Q2 + P1 * T2


def _split_chunk(arguments: Tuple[_Recurrence, int, int]) -> Triple:
    recurrence, start, stop = arguments
    return _split(recurrence, start, stop)


def _merge(triples: List[Triple]) -> Triple:
    P, Q, T = triples[0]
    for P2, Q2, T2 in triples[1:]:
        P, Q, T = P * P2, Q * Q2, T * Q2 + P * T2
    return P, Q, T


def _chunks(n_terms: int, workers: int) -> List[Tuple[int, int]]:
    bounds = [n_terms * i // workers for i in range(workers + 1)]
    return [(a, b) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


def terms_for_digits(spec: SeriesSpec, digits: int) -> int:
    """Number of terms after which the tail of a geometric spec is below 10^-digits."""
    return math.ceil(digits / digits_per_term(spec)) + 1


def evaluate_binary_splitting(
    spec: SeriesSpec, n_terms: int, ctx: PrecisionContext, workers: int = 1
) -> EvaluationReport:
    """Partial sum of the first n_terms terms by binary splitting.

    The terms t_n = a_n (A + n B) w^n satisfy t_{n+1}/t_n = p(n)/q(n) (A + (n+1) B) /
    (A + n B) with integer polynomials p and q, so the partial sum is T / (Q d) for
    big integers (P, Q, T) computed by divide and conquer. A single division at
    working precision and the folded multiplier (square roots included) are applied
    at the end.

    Parameters
    ----------
    spec: SeriesSpec
        Spec with rational A, B and base and a hypergeometric coefficient family.
    n_terms: int
        Number of terms, at least 1.
    ctx: PrecisionContext
        Working precision of the final division.
    workers: int, optional
        Number of processes. The index range is cut into contiguous chunks that are
        split independently and merged left to right, so the result does not depend
        on the number of workers.

    Returns
    -------
    report: EvaluationReport
        Value, terms used, tail bound |t_N| / (1 - r) and measured digits per term.

    Raises
    ------
    TypeError
        If the spec is not rational.

    Examples
    --------
    >>> import mpmath
    >>> from ramanujanpi.core.precision import PrecisionContext
    >>> from ramanujanpi.series.catalog import get_spec
    >>> from ramanujanpi.series.splitting import evaluate_binary_splitting
    >>> ctx = PrecisionContext(30)
    >>> report = evaluate_binary_splitting(get_spec("chudnovsky"), 3, ctx)
    >>> mpmath.nstr(report.pi_value(), 30)
    '3.14159265358979323846264338328'
    """
    recurrence = _Recurrence(spec)
    if isinstance(n_terms, bool) or not isinstance(n_terms, int) or n_terms < 1:
        raise ValueError(
            f"Expected n_terms to be a positive integer, got {n_terms!r}."
        )
    if workers < 1:
        raise ValueError(f"Expected workers to be positive, got {workers}.")
    started = time.perf_counter()

    chunks = _chunks(n_terms, workers)
    if len(chunks) == 1:
        P, Q, T = _split(recurrence, 0, n_terms)
    else:
        with ProcessPoolExecutor(max_workers=len(chunks)) as executor:
            arguments = [(recurrence, a, b) for a, b in chunks]
            triples = list(executor.map(_split_chunk, arguments))
        P, Q, T = _merge(triples)
    logger.debug(
        "%s: binary splitting over %d terms in %d chunk(s), T has %d bits",
        spec.key,
        n_terms,
        len(chunks),
        T.bit_length(),
    )

    mp = ctx.mp
    folded = spec.numeric_fields(ctx)[0]
    value = folded * mp.mpf(int(T)) / (mp.mpf(int(Q)) * recurrence.denominator)

    bound, rate = _tail(recurrence, spec, P, Q, n_terms, ctx)
    seconds = time.perf_counter() - started

    return EvaluationReport(
        key=spec.key,
        value=value,
        terms_used=n_terms,
        error_bound=abs(folded) * bound,
        digits_per_term=rate,
        target=spec.target,
        method="binary_splitting",
        seconds=seconds,
    )


def _tail(
    recurrence: _Recurrence,
    spec: SeriesSpec,
    P: gmpy2.mpz,
    Q: gmpy2.mpz,
    n_terms: int,
    ctx: PrecisionContext,
) -> Tuple[mpmath.mpf, float]:
    mp = ctx.mp
    N = n_terms
    d = recurrence.denominator

    def ratio(n: int) -> mpmath.mpf:
        # |t_n / t_{n-1}|
        linear_prev = recurrence.linear(n - 1)
        if linear_prev == 0:
            return mp.inf
        return abs(
            mp.mpf(int(recurrence.p(n - 1) * recurrence.linear(n)))
            / mp.mpf(int(recurrence.q(n - 1) * linear_prev))
        )

    # |t_N| = prod_{j<N} |p(j)/q(j)| |A + N B|
    next_term = abs(
        mp.mpf(int(P * recurrence.p(N - 1) * recurrence.linear(N)))
        / (mp.mpf(int(Q * recurrence.q(N - 1))) * d)
    )
    limit = RATIO_MARGIN * mp.mpf(10) ** (-digits_per_term(spec))
    ratio_bound = max(RATIO_MARGIN * ratio(N), limit)
    bound = next_term / (1 - ratio_bound) if ratio_bound < 1 else mp.inf

    rates = [-mp.log10(ratio(n)) for n in range(max(1, N - RATE_WINDOW), N)]
    rate = float(mp.fsum(rates) / len(rates)) if rates else None

    return bound, rate
