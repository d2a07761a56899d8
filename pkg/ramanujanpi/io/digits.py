import logging
from typing import Tuple

import gmpy2
import mpmath

from ramanujanpi.core.precision import PrecisionContext

logger = logging.getLogger(__name__)

LINE_WIDTH = 80


def truncated_digits(
    value: mpmath.mpf, places: int, ctx: PrecisionContext
) -> Tuple[str, str]:
    """Integer part and the first `places` decimals of a positive real, truncated.

    The scaled value floor(value 10^places) is taken as a gmpy2 integer, so the
    decimal string conversion stays fast at a million digits.

    Parameters
    ----------
    value: mpmath.mpf
        Positive real, known to more than `places` digits.
    places: int
        Number of decimals.
    ctx: PrecisionContext
        Context the value was computed in.

    Returns
    -------
    digits: Tuple[str, str]
        Integer part and decimals, e.g. ``("3", "14159")``.
    """
    if places < 1:
        raise ValueError(f"Expected places to be positive, got {places}.")
    if not value > 0:
        raise ValueError(f"Expected a positive value, got {mpmath.nstr(value, 15)}.")
    mp = ctx.mp
    scaled = gmpy2.mpz(int(mp.floor(value * mp.mpf(10) ** places)))
    text = gmpy2.digits(scaled).rjust(places + 1, "0")

    return text[:-places], text[-places:]


def format_plain(integer_part: str, decimals: str, width: int = LINE_WIDTH) -> str:
    """Digit file text: ``"<integer part>."`` on the first line, then the decimals in
    lines of `width`, with a trailing newline.

    Examples
    --------
    >>> from ramanujanpi.io.digits import format_plain
    >>> format_plain("3", "14159", width=3)
    '3.\\n141\\n59\\n'
    """
    lines = [f"{integer_part}."]
    lines += [decimals[i : i + width] for i in range(0, len(decimals), width)]

    return "\n".join(lines) + "\n"


def common_prefix(first: str, second: str) -> int:
    """Length of the longest common prefix of two digit strings."""
    for i, (a, b) in enumerate(zip(first, second)):
        if a != b:
            return i
    return min(len(first), len(second))
