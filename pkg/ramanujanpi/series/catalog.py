import logging
from fractions import Fraction
from typing import Dict, List

from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.series import CoefficientFamily, SeriesSpec
from ramanujanpi.core.singular import SingularData
from ramanujanpi.core.surd import SurdExpr
from ramanujanpi.io.tables import singular_values_by_index
from ramanujanpi.series.builder import build_series, normalize_series

logger = logging.getLogger(__name__)

# catalog key -> (family tag, N, published multiplier, scale) of the built form
BUILT_FORMS = {
    "ramanujan7g": ("G", 7, Fraction(1, 16), 64),
    "ramanujan7y": ("yN", 7, "1/(9*sqrt(7))", 256),
    "ramanujan7j": ("JN", 7, "18/85*sqrt(3/85)", 1728),
    "ramanujan37": ("yN", 37, Fraction(1, 3528), 256),
    "ramanujan58": ("xN", 58, "sqrt(8)/9801", 256),
}


def catalog() -> List[SeriesSpec]:
    """The built-in series, each verified against 1/pi or its target constant.

    Returns
    -------
    specs: List[SeriesSpec]
        Five series derived from singular values (N = 7 in three forms, N = 37 and
        N = 58), the Chudnovsky and Chan-Cooper series, and the elementary
        benchmarks of Gregory, Euler and Brouncker.

    Notes
    -----
    The published forms use integer coefficients s^n a_n: 64^n a_n for the
    halfCubed family, 256^n a_n = (4n)!/(n!)^4 for the quarter family and
    1728^n a_n = (6n)!/((3n)! (n!)^3) for the sixth family. Bases are stored per
    index, e.g. 1/396^4 for sum (1103 + 26390 n)/396^(4n).
    """
    half = CoefficientFamily("halfCubed")
    quarter = CoefficientFamily("quarterHalfThreeQuarter")
    sixth = CoefficientFamily("sixthHalfFiveSixth")

    return [
        SeriesSpec(
            key="ramanujan7g",
            family=half,
            multiplier=Fraction(1, 16),
            A=5,
            B=42,
            base=Fraction(1, 64**2),
            pattern="n",
            scale=64,
            provenance="G series, N=7: sum (5 + 42 n) (2n)!^3 / (n!^6 2^(12n)) "
            "= 16/pi; Ramanujan (1914)",
        ),
        SeriesSpec(
            key="ramanujan7y",
            family=quarter,
            multiplier=SurdExpr.parse("1/(9*sqrt(7))"),
            A=8,
            B=65,
            base=Fraction(1, 63**2),
            alternating=True,
            pattern="n",
            scale=256,
            provenance="yN series, N=7: sum (-1)^n (8 + 65 n) (4n)!/(n!^4 63^(2n)) "
            "= 9 sqrt(7)/pi; Ramanujan (1914)",
        ),
        SeriesSpec(
            key="ramanujan7j",
            family=sixth,
            multiplier=SurdExpr.parse("18/85*sqrt(3/85)"),
            A=8,
            B=133,
            base=Fraction(1, 255**3),
            pattern="n",
            scale=1728,
            provenance="JN series, N=7: sum (8 + 133 n) (6n)!/((3n)! n!^3 255^(3n)); "
            "Ramanujan (1914)",
        ),
        SeriesSpec(
            key="ramanujan37",
            family=quarter,
            multiplier=Fraction(1, 3528),
            A=1123,
            B=21460,
            base=Fraction(1, 14112**2),
            alternating=True,
            pattern="n",
            scale=256,
            provenance="yN series, N=37: sum (-1)^n (1123 + 21460 n) "
            "(4n)!/(n!^4 14112^(2n)) = 3528/pi; Ramanujan (1914)",
        ),
        SeriesSpec(
            key="ramanujan58",
            family=quarter,
            multiplier=SurdExpr.parse("sqrt(8)/9801"),
            A=1103,
            B=26390,
            base=Fraction(1, 396**4),
            pattern="n",
            scale=256,
            provenance="xN series, N=58: sum (1103 + 26390 n) (4n)!/(n!^4 396^(4n)) "
            "= 9801/(sqrt(8) pi); Ramanujan (1914)",
        ),
        SeriesSpec(
            key="chudnovsky",
            family=sixth,
            multiplier=12,
            A=13591409,
            B=545140134,
            base=Fraction(1, 640320),
            alternating=True,
            pattern="3(n+1/2)",
            scale=1728,
            provenance="JN series, N=163: 12 sum (-1)^n (13591409 + 545140134 n) "
            "(6n)!/((3n)! n!^3 640320^(3n+3/2)); Chudnovsky and Chudnovsky (1988)",
        ),
        SeriesSpec(
            key="chancooper",
            family=CoefficientFamily("chanCooperNested"),
            multiplier=SurdExpr.parse("2*sqrt(2)"),
            A=SurdExpr.parse("-24184 + 9801*sqrt(29)/2"),
            B=SurdExpr.parse("9801*sqrt(29)"),
            base=SurdExpr.parse("(sqrt(29) - 5)/2"),
            pattern="12(n+1/2)",
            provenance="Nested series: 2 sqrt(2) sum a_n (-24184 + "
            "9801 sqrt(29) (n + 1/2)) ((sqrt(29) - 5)/2)^(12n+6); Chan and Cooper "
            "(2012)",
        ),
        SeriesSpec(
            key="gregory",
            kind="gregory",
            target="pi/4",
            provenance="sum (-1)^n/(2n+1) = pi/4; James Gregory (1671)",
        ),
        SeriesSpec(
            key="euler",
            kind="euler",
            target="pi^2/6",
            provenance="sum_{n>=1} 1/n^2 = pi^2/6; Leonhard Euler (1734)",
        ),
        SeriesSpec(
            key="brouncker",
            kind="brouncker",
            target="4/pi",
            provenance="1 + 1^2/(2 + 3^2/(2 + 5^2/(2 + ...))) = 4/pi; "
            "William Brouncker (1655)",
        ),
    ]


def catalog_by_key() -> Dict[str, SeriesSpec]:
    return {spec.key: spec for spec in catalog()}


def get_spec(key: str) -> SeriesSpec:
    """Catalog entry by key, e.g. ``"ramanujan58"``.

    Raises
    ------
    ValueError
        If the key is not in the catalog.
    """
    specs = catalog_by_key()
    if key not in specs:
        raise ValueError(f"Expected key to be one of {list(specs)}, got {key!r}.")

    return specs[key]


def rebuild_catalog_spec(
    key: str, ctx: PrecisionContext, records: Dict[Fraction, SingularData] = None
) -> SeriesSpec:
    """Derives a catalog entry from the singular-value table.

    Builds the raw series with :func:`~ramanujanpi.series.builder.build_series` and
    converts it with :func:`~ramanujanpi.series.builder.normalize_series`. The result
    equals the catalog entry field by field when the table and the builder are
    right.

    Parameters
    ----------
    key: str
        One of the keys of ``BUILT_FORMS``.
    ctx: PrecisionContext
        Working precision, at least 60 digits for the recovery of 396^4.
    records: Dict[Fraction, SingularData], optional
        Table rows keyed by N, defaults to the packaged table.
    """
    if key not in BUILT_FORMS:
        raise ValueError(
            f"Expected key to be one of {list(BUILT_FORMS)}, got {key!r}."
        )
    family_tag, N, multiplier, scale = BUILT_FORMS[key]
    if records is None:
        records = singular_values_by_index()
    raw = build_series(family_tag, records[Fraction(N)], ctx)
    logger.debug("rebuilding %s from %s", key, raw.key)

    return normalize_series(raw, multiplier, scale, ctx, key=key)
