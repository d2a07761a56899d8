import logging
from typing import Iterator, List, Tuple

import mpmath

from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.report import VerificationReport
from ramanujanpi.core.singular import SingularData
from ramanujanpi.invariants.classinv import class_invariants
from ramanujanpi.invariants.singular import alpha, lambda_star
from ramanujanpi.invariants.units import fundamental_unit
from ramanujanpi.io.tables import read_singular_values
from ramanujanpi.utils.arithmetic import squarefree_kernel

logger = logging.getLogger(__name__)

# rows whose class invariant is a power of the unit: G^4 = u_N, g^2 = u_N/2
UNIT_POWER_REMARKS = {
    5: ("unit", 4),
    13: ("unit", 4),
    37: ("unit", 4),
    58: ("unit_half", 2),
}

Check = Tuple[str, str, mpmath.mpf, mpmath.mpf]


def _row_checks(data: SingularData, ctx: PrecisionContext) -> Iterator[Check]:
    tolerance = ctx.tolerance(8)
    label = data.label
    m = lambda_star(data.N, ctx)
    G, g = class_invariants(m, ctx)
    invariant = G if data.invariant == "G" else g

    yield "tables", f"{label} k", abs(data.k_value(ctx) - m.k), tolerance
    yield (
        "tables",
        f"{label} 1/{data.invariant}^12",
        abs(data.inverse_invariant_12.evaluate(ctx) - invariant ** (-12)),
        tolerance,
    )
    alpha_defect = abs(data.alpha_value(ctx) - alpha(data.N, ctx))
    yield "tables", f"{label} alpha", alpha_defect, tolerance


def _unit_checks(data: SingularData, ctx: PrecisionContext) -> Iterator[Check]:
    # unit columns refer to the square-free part of N (and of N/2)
    exact = ctx.mp.zero
    columns = (("unit", data.N), ("unit_half", data.N / 2))
    for column, index in columns:
        unit = getattr(data, column)
        if unit is None:
            continue
        if index.denominator != 1:
            raise ValueError(
                f"Expected an integer index for the {column} column of {data.label}, "
                f"got {index}."
            )
        expected = fundamental_unit(squarefree_kernel(int(index)))
        defect = 0 if unit == expected else 1
        yield "units", f"{data.label} {column}", defect, exact

    remark = UNIT_POWER_REMARKS.get(int(data.N)) if data.N.denominator == 1 else None
    if remark is not None and getattr(data, remark[0]) is not None:
        column, power = remark
        unit = getattr(data, column)
        defect = abs(data.invariant_value(ctx) ** power - unit.evaluate(ctx))
        yield (
            "units",
            f"{data.label} {data.invariant}^{power} = {column}",
            defect,
            ctx.tolerance(8),
        )


def verify_tables(
    ctx: PrecisionContext, records: List[SingularData] = None
) -> VerificationReport:
    """Verifies every singular-value table row against independent computation.

    For each row, the transcribed k_N, 1/G_N^12 (or 1/g_N^12) and alpha(N) are
    evaluated and compared with lambda*(N) from theta functions, the class invariant
    of that modulus and alpha(N) from elliptic integrals, to 10^(-digits+8). Unit
    columns are compared exactly with the output of the Pell solver, and the unit
    power remarks G_N^4 = u_N (N = 5, 13, 37) and g_58^2 = u_29 are checked
    numerically.

    Parameters
    ----------
    ctx: PrecisionContext
        Working precision, usually at least 30 digits.
    records: List[SingularData], optional
        Rows to verify. Defaults to the table shipped with the package.

    Returns
    -------
    report: VerificationReport
        One check per table entry, grouped into ``"tables"`` and ``"units"``.
    """
    if records is None:
        records = read_singular_values()

    checks: List[Check] = []
    for data in records:
        try:
            checks.extend(_row_checks(data, ctx))
        except (ValueError, ZeroDivisionError) as error:
            logger.debug("table row %s failed to evaluate: %s", data.label, error)
            checks.append(
                ("tables", f"{data.label} evaluation", ctx.mp.inf, ctx.tolerance(8))
            )
        checks.extend(_unit_checks(data, ctx))
        logger.debug("verified table row %s", data.label)

    return VerificationReport.from_checks(checks, ctx.digits)
