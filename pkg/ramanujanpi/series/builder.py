import logging
from fractions import Fraction
from typing import Tuple, Union

import mpmath

from ramanujanpi.core.definitions import series_families
from ramanujanpi.core.modulus import Modulus
from ramanujanpi.core.precision import PrecisionContext, to_fraction
from ramanujanpi.core.series import CoefficientFamily, SeriesSpec
from ramanujanpi.core.singular import SingularData
from ramanujanpi.core.surd import Scalar, SurdExpr, as_surd
from ramanujanpi.invariants.classinv import (
    class_invariants,
    g4n_invariant,
    klein_j,
    x_invariant,
    y_invariant,
)
from ramanujanpi.series.evaluate import evaluate_direct

logger = logging.getLogger(__name__)

JN_MULTIPLIER = "1/(3*sqrt(3))"


def check_family(family_tag: str, N: Fraction) -> dict:
    """Rules of a series family, after checking that N lies in its range."""
    if family_tag not in series_families:
        raise ValueError(
            f"Expected familyTag to be one of {list(series_families)}, got "
            f"{family_tag!r}."
        )
    rules = series_families[family_tag]
    if not rules["is_valid"](N):
        raise ValueError(
            f"Expected N in the range {rules['valid_range']} of the {family_tag} "
            f"series, got N = {N}."
        )

    return rules


def _raw_fields(
    family_tag: str, data: SingularData, ctx: PrecisionContext
) -> Tuple[mpmath.mpf, mpmath.mpf, mpmath.mpf]:
    """A, B and the base of the raw series, computed from the table row."""
    mp = ctx.mp
    m = Modulus.from_k(data.k_value(ctx), ctx)
    k, kprime = m.k, m.kprime
    a = data.alpha_value(ctx)
    root_N = mp.sqrt(ctx.convert(data.N))
    G, g = class_invariants(m, ctx)

    if family_tag == "G":
        return a - root_N * k**2, root_N * (kprime**2 - k**2), G ** (-12)
    if family_tag == "g":
        return (
            a / kprime**2,
            root_N * (1 + k**2) / kprime**2,
            g ** (-12),
        )
    if family_tag == "g4N":
        return (
            (a - root_N * k**2 / 2) / kprime,
            root_N * (kprime + 1 / kprime),
            g4n_invariant(m, ctx) ** (-12),
        )
    if family_tag == "xN":
        x = x_invariant(m, ctx)
        g12 = g**12
        return (
            a / (x * (1 + k**2)) - root_N / (4 * g12),
            root_N * (g12 - 1 / g12) / 2,
            x,
        )
    if family_tag == "yN":
        y = y_invariant(m, ctx)
        G12 = G**12
        return (
            a / (y * (kprime**2 - k**2)) + root_N * k**2 * G12 / 2,
            root_N * (G12 + 1 / G12) / 2,
            y,
        )

    # JN
    G24 = G**24
    root_term = mp.sqrt(1 - 1 / G24)
    return (
        2 * (a - root_N * k**2) * (4 * G24 - 1) + root_N * root_term,
        2 * root_N * (8 * G24 + 1) * root_term,
        1 / mp.sqrt(klein_j(m, ctx)),
    )


def build_series(
    family_tag: str, data: SingularData, ctx: PrecisionContext, check: bool = True
) -> SeriesSpec:
    """Builds the raw series for 1/pi of one family from a singular-value row.

    The six families are sums of a_n (A + n B) z^(pattern) with the coefficient
    families, patterns and signs of
    :ref:`series_families <definitions target>`. A, B and z are computed at working
    precision from the row's k_N and alpha(N); the JN series carries the multiplier
    1/(3 sqrt(3)).

    Parameters
    ----------
    family_tag: str
        One of ``"G"``, ``"g"``, ``"g4N"``, ``"xN"``, ``"yN"`` and ``"JN"``.
    data: SingularData
        Table row providing N, k_N and alpha(N).
    ctx: PrecisionContext
        Working precision.
    check: bool, optional
        If True (default), the built series is summed and compared with 1/pi.

    Returns
    -------
    spec: SeriesSpec
        Raw spec with mpmath fields and scale 1. Use :func:`normalize_series` to
        convert it to a published integer form.

    Raises
    ------
    ValueError
        If N is outside the family's range or |z| >= 1.
    ArithmeticError
        If the series does not sum to 1/pi within 10^(-digits+8).
    """
    rules = check_family(family_tag, data.N)
    A, B, z = _raw_fields(family_tag, data, ctx)
    if abs(z) >= 1 - ctx.tolerance(4):
        raise ValueError(
            f"Expected |z| < 1 for the {family_tag} series at {data.label}, got "
            f"{mpmath.nstr(z, 15)}."
        )

    spec = SeriesSpec(
        key=f"{family_tag}-{data.N}",
        family=CoefficientFamily(rules["coefficients"]),
        multiplier=SurdExpr.parse(JN_MULTIPLIER) if family_tag == "JN" else 1,
        A=A,
        B=B,
        base=z,
        alternating=rules["alternating"],
        pattern=rules["pattern"],
        provenance=f"{family_tag} series, {data.label}",
    )
    logger.debug(
        "built %s: A = %s, B = %s, z = %s",
        spec.key,
        mpmath.nstr(A, 20),
        mpmath.nstr(B, 20),
        mpmath.nstr(z, 20),
    )

    if check:
        report = evaluate_direct(spec, ctx)
        defect = abs(report.value - 1 / ctx.pi)
        if defect > ctx.tolerance(8):
            raise ArithmeticError(
                f"The {family_tag} series at {data.label} sums to 1/pi only within "
                f"{mpmath.nstr(defect, 5)}."
            )

    return spec


def recover_integer(value: mpmath.mpf, ctx: PrecisionContext, name: str = "value"):
    """Rounds a high-precision real to the nearest integer.

    Raises
    ------
    ArithmeticError
        If the residual exceeds 10^(-digits+12).
    """
    nearest = ctx.mp.nint(value)
    residual = abs(value - nearest)
    if residual > ctx.tolerance(12):
        raise ArithmeticError(
            f"Expected {name} to be an integer, got {mpmath.nstr(value, 30)} "
            f"(residual {mpmath.nstr(residual, 5)})."
        )

    return int(nearest)


def _recover_base(z: mpmath.mpf, ctx: PrecisionContext) -> Fraction:
    candidate = to_fraction(z).limit_denominator(10 ** (ctx.digits // 3))
    if abs(ctx.convert(candidate) - z) > ctx.tolerance(12) * abs(z):
        raise ArithmeticError(
            f"Expected a rational base, got {mpmath.nstr(z, 30)} (nearest small "
            f"rational {candidate})."
        )

    return candidate


def normalize_series(
    raw: SeriesSpec,
    multiplier: Union[Scalar, str],
    scale: int,
    ctx: PrecisionContext,
    key: str = None,
) -> SeriesSpec:
    """Converts a raw built series to its published form with integer A and B.

    The raw sum M sum_n (+-1)^n a_n (A + n B) z^(p n + q) equals
    M' sum_n (+-1)^n s^n a_n (A' + n B') w^n with w = z^p / s and
    A' = M z^q A / M', B' = M z^q B / M'. The base w is recovered as a rational and
    A', B' as integers; each recovery is checked against 10^(-digits+12).

    Parameters
    ----------
    raw: SeriesSpec
        Output of :func:`build_series`.
    multiplier: Scalar or str
        Published multiplier M', e.g. ``"sqrt(8)/9801"``.
    scale: int
        Published integral scale s, e.g. 256 for the quarter family.
    ctx: PrecisionContext
        Working precision, ideally the one the raw spec was built at.
    key: str, optional
        Key of the published spec, defaults to the raw key.

    Returns
    -------
    spec: SeriesSpec
        Exact spec with pattern ``"n"``.

    Raises
    ------
    ArithmeticError
        If the base is not rational or A', B' are not integers within tolerance.

    Examples
    --------
    >>> from ramanujanpi.core.precision import PrecisionContext
    >>> from ramanujanpi.io.tables import singular_values_by_index
    >>> from ramanujanpi.series.builder import build_series, normalize_series
    >>> ctx = PrecisionContext(60)
    >>> raw = build_series("xN", singular_values_by_index()[58], ctx)
    >>> spec = normalize_series(raw, "sqrt(8)/9801", 256, ctx)
    >>> spec.A, spec.B
    (1103, 26390)
    """
    if isinstance(multiplier, str):
        multiplier = as_surd(multiplier)
    z = ctx.convert(raw.base)
    base = _recover_base(z**raw.slope / scale, ctx)

    factor = ctx.convert(raw.multiplier) / ctx.convert(multiplier)
    if raw.offset:
        factor *= ctx.mp.root(z, raw.offset.denominator) ** raw.offset.numerator
    A = recover_integer(factor * ctx.convert(raw.A), ctx, name=f"A of {raw.key}")
    B = recover_integer(factor * ctx.convert(raw.B), ctx, name=f"B of {raw.key}")
    logger.debug("normalized %s to A = %d, B = %d, base = %s", raw.key, A, B, base)

    return SeriesSpec(
        key=key or raw.key,
        family=raw.family,
        multiplier=multiplier,
        A=A,
        B=B,
        base=base,
        alternating=raw.alternating,
        pattern="n",
        scale=scale,
        target=raw.target,
        provenance=raw.provenance,
    )

