import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterator, List, Tuple, Union

import mpmath
import numpy as np

from ramanujanpi.core.definitions import coefficient_families
from ramanujanpi.core.modulus import Modulus
from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.report import VerificationReport
from ramanujanpi.core.series import CoefficientFamily, SeriesSpec
from ramanujanpi.core.singular import SingularData
from ramanujanpi.functions.elliptic import (
    legendre_defect,
    modulus_from_nome,
    nome,
    pi_agm,
)
from ramanujanpi.functions.hypergeometric import clausen_defect, kummer_defect
from ramanujanpi.functions.transformations import check_transformations
from ramanujanpi.invariants.classinv import class_invariants
from ramanujanpi.invariants.lattice import (
    lattice_sum_brute,
    lattice_sum_g,
    lattice_sum_k,
)
from ramanujanpi.invariants.singular import (
    alpha_convergence_bound,
    alpha_convergence_check,
    lambda_star,
    singular_ratio_defect,
    surd_eval,
)
from ramanujanpi.invariants.tables import Check, verify_tables
from ramanujanpi.io.tables import read_singular_values, singular_values_by_index
from ramanujanpi.series.builder import build_series
from ramanujanpi.series.catalog import BUILT_FORMS, get_spec, rebuild_catalog_spec
from ramanujanpi.series.coefficients import integral_coefficients
from ramanujanpi.series.evaluate import evaluate_direct
from ramanujanpi.series.identity import (
    reciprocal_pi_identity_check,
    representation_defect,
)
from ramanujanpi.settings import RANDOM_SEED, VERIFY_MIN_DIGITS

logger = logging.getLogger(__name__)

RANDOM_MODULI = 20
TRANSFORMATION_MODULI = ("0.05", "0.1", "0.19", "0.35", "0.6")
LATTICE_INDICES = (2, 6, 10, 58)
BRUTE_FORCE_INDICES = (2, 6, 10)
BRUTE_FORCE_TOLERANCE = 1e-5
K58_RECIPROCAL_SUM = "198*sqrt(2)*(13*sqrt(29) + 70)"
LEMMA_INDICES = 200
NESTED_INTEGRALITY_INDICES = 50
# integer recovery of 396^4 needs about 60 digits
RECOVERY_DIGITS = 60
# (family, N) pairs summed from the table to 1/pi
FAMILY_SAMPLES = (
    ("G", 3),
    ("G", 7),
    ("G", 37),
    ("g", 10),
    ("g", 58),
    ("g4N", 2),
    ("g4N", 6),
    ("g4N", 10),
    ("xN", 22),
    ("xN", 58),
    ("yN", 7),
    ("yN", 37),
    ("JN", 3),
    ("JN", 7),
)
CLOSED_FORM_SAMPLES = (("g4N", 2), ("G", 7), ("xN", 58))
COMPARED_FIELDS = (
    "family",
    "multiplier",
    "A",
    "B",
    "base",
    "alternating",
    "pattern",
    "scale",
)


def _random_moduli(ctx: PrecisionContext) -> List[Modulus]:
    rng = np.random.default_rng(RANDOM_SEED)
    values = rng.uniform(0.01, 0.99, size=RANDOM_MODULI)
    return [Modulus.from_k(value, ctx) for value in values]


def elliptic_checks(ctx: PrecisionContext) -> Iterator[Check]:
    """Legendre's relation and the nome round trip at seeded random moduli."""
    for m in _random_moduli(ctx):
        label = f"k={mpmath.nstr(m.k, 6)}"
        tolerance = ctx.tolerance(2)
        yield "legendre", f"{label} legendre", legendre_defect(m, ctx), tolerance
        round_trip = modulus_from_nome(nome(m, ctx), ctx)
        defect = abs(round_trip.k - m.k)
        yield "legendre", f"{label} nome", defect, ctx.tolerance(4)

    defect = abs(pi_agm(ctx) - ctx.pi)
    yield "legendre", "pi from the AGM", defect, ctx.tolerance(2)


def transformation_checks(ctx: PrecisionContext) -> Iterator[Check]:
    """The hypergeometric representations of K with Clausen's and Kummer's rules."""
    tolerance = ctx.tolerance(4)
    half = 1 / ctx.mp.sqrt(2)
    moduli = [(f"k={k}", Modulus.from_k(k, ctx)) for k in TRANSFORMATION_MODULI]
    moduli.append(("k=1/sqrt(2)", Modulus(half, half)))
    for label, m in moduli:
        for identity in check_transformations(m, ctx):
            name = f"{label} {identity.name}"
            yield "transformations", name, identity.defect, tolerance
        yield "transformations", f"{label} clausen", clausen_defect(m, ctx), tolerance
    yield (
        "transformations",
        "kummer a=b=1/4 at z=1/10",
        kummer_defect(Fraction(1, 4), Fraction(1, 4), "1/10", ctx),
        tolerance,
    )


def lattice_checks(ctx: PrecisionContext) -> Iterator[Check]:
    """Row-reduced lattice sums against class invariants and brute-force truncation."""
    mp = ctx.mp
    pi = ctx.pi
    for r in LATTICE_INDICES:
        _, g = class_invariants(lambda_star(r, ctx), ctx)
        expected = -pi / mp.sqrt(r) * mp.log(2 * g**4)
        defect = abs(lattice_sum_g(r, ctx) - expected)
        yield "lattice", f"r={r} sum vs log(2 g^4)", defect, ctx.tolerance(6)

    for r in BRUTE_FORCE_INDICES:
        brute = lattice_sum_brute(float(r))
        defect = abs(brute - float(lattice_sum_g(r, ctx)))
        yield "lattice", f"r={r} brute force", defect, BRUTE_FORCE_TOLERANCE

    # S(58) - 4 S(232) = -(pi / sqrt(58)) log(k_58 / 4)
    k58 = 4 * mp.exp(-mp.sqrt(58) * lattice_sum_k(29, ctx) / pi)
    defect = abs(k58 + 1 / k58 - surd_eval(K58_RECIPROCAL_SUM, ctx))
    yield "lattice", "k_58 + 1/k_58", defect, ctx.tolerance(10)


def singular_checks(
    records: List[SingularData], ctx: PrecisionContext
) -> Iterator[Check]:
    """The theta route hits K'/K = sqrt(N), and alpha(N) - 1/pi lies in its bound."""
    for data in records:
        yield (
            "singular",
            f"{data.label} K'/K",
            abs(singular_ratio_defect(data.N, ctx)),
            ctx.tolerance(6),
        )
        if data.N >= 1:
            gap = alpha_convergence_check(data.N, ctx)
            bound = alpha_convergence_bound(data.N, ctx)
            outside = ctx.mp.zero if 0 < gap <= bound else abs(gap)
            yield "singular", f"{data.label} alpha - 1/pi", outside, ctx.mp.zero


def coefficient_checks(ctx: PrecisionContext) -> Iterator[Check]:
    """Recurrence, factorial and Pochhammer forms of a_n agree exactly."""
    exact = ctx.mp.zero
    for tag in ("halfCubed", "quarterHalfThreeQuarter", "sixthHalfFiveSixth"):
        family = CoefficientFamily(tag)
        mismatches = 0
        for n, value in enumerate(family.coefficients(LEMMA_INDICES + 1)):
            if value != family.closed_form(n) or value != family.pochhammer_form(n):
                mismatches += 1
        name = f"{tag} closed forms, n <= {LEMMA_INDICES}"
        yield "coefficients", name, mismatches, exact

    for tag in coefficient_families:
        try:
            integral_coefficients(tag, NESTED_INTEGRALITY_INDICES + 1)
            defect = 0
        except ArithmeticError as error:
            logger.debug("integrality check failed: %s", error)
            defect = 1
        yield (
            "coefficients",
            f"{tag} integral, n <= {NESTED_INTEGRALITY_INDICES}",
            defect,
            exact,
        )


def _field_mismatches(built: SeriesSpec, published: SeriesSpec) -> int:
    return sum(
        getattr(built, name) != getattr(published, name) for name in COMPARED_FIELDS
    )


def builder_checks(
    rows: Dict[Fraction, SingularData], ctx: PrecisionContext
) -> Iterator[Check]:
    """Series built from the table sum to 1/pi and reproduce the published integers."""
    for family_tag, N in FAMILY_SAMPLES:
        name = f"{family_tag} series N={N}"
        try:
            spec = build_series(family_tag, rows[Fraction(N)], ctx, check=False)
            defect = abs(evaluate_direct(spec, ctx).value - 1 / ctx.pi)
        except (KeyError, ValueError, ArithmeticError) as error:
            logger.debug("%s failed: %s", name, error)
            defect = ctx.mp.inf
        yield "builder", name, defect, ctx.tolerance(8)

    recovery_ctx = PrecisionContext(max(ctx.digits, RECOVERY_DIGITS))
    for key in BUILT_FORMS:
        try:
            built = rebuild_catalog_spec(key, recovery_ctx, rows)
            defect = _field_mismatches(built, get_spec(key))
        except (KeyError, ValueError, ArithmeticError) as error:
            logger.debug("rebuilding %s failed: %s", key, error)
            defect = len(COMPARED_FIELDS)
        yield "builder", f"{key} integer recovery", defect, ctx.mp.zero


def closed_form_checks(
    rows: Dict[Fraction, SingularData], ctx: PrecisionContext
) -> Iterator[Check]:
    """The closed form for 1/pi and the family's 3F2 form of ((2/pi) K)^2."""
    for family_tag, N in CLOSED_FORM_SAMPLES:
        data = rows.get(Fraction(N))
        if data is None:
            name = f"N={N} missing from table"
            yield "closed form", name, ctx.mp.inf, ctx.mp.zero
            continue
        yield (
            "closed form",
            f"{data.label} 1/pi ({family_tag})",
            reciprocal_pi_identity_check(data, family_tag, ctx),
            ctx.tolerance(6),
        )
        yield (
            "closed form",
            f"{data.label} 3F2 form ({family_tag})",
            representation_defect(data, family_tag, ctx),
            ctx.tolerance(6),
        )


def run_suite(
    ctx: PrecisionContext, tables_path: Union[str, Path] = None
) -> VerificationReport:
    """Runs every verification check of the package.

    Groups: ``"legendre"`` (Legendre's relation at 20 seeded random moduli, nome
    round trip, AGM pi), ``"transformations"`` (the twelve hypergeometric
    representations of K), ``"tables"`` and ``"units"`` (the singular-value table),
    ``"singular"``, ``"lattice"``, ``"coefficients"`` (closed forms of a_n),
    ``"builder"`` (series built from the table, published integers recovered) and
    ``"closed form"`` (the series-free identity for 1/pi).

    Parameters
    ----------
    ctx: PrecisionContext
        Working precision, at least 30 digits.
    tables_path: str or Path, optional
        Singular-value table to verify, defaults to the packaged table.

    Returns
    -------
    report: VerificationReport

    Raises
    ------
    ValueError
        If the precision is below 30 digits.
    """
    if ctx.digits < VERIFY_MIN_DIGITS:
        raise ValueError("precision too low for table suite")
    records = read_singular_values(tables_path)
    rows = singular_values_by_index(records)

    report = verify_tables(ctx, records)
    suites: List[Tuple[str, Iterator[Check]]] = [
        ("elliptic", elliptic_checks(ctx)),
        ("transformations", transformation_checks(ctx)),
        ("singular", singular_checks(records, ctx)),
        ("lattice", lattice_checks(ctx)),
        ("coefficients", coefficient_checks(ctx)),
        ("builder", builder_checks(rows, ctx)),
        ("closed form", closed_form_checks(rows, ctx)),
    ]
    for name, checks in suites:
        report = report + VerificationReport.from_checks(checks, ctx.digits)
        logger.debug("%s suite done", name)

    logger.debug(
        "verification: %d checks, %d failed", len(report), len(report.failures)
    )

    return report
