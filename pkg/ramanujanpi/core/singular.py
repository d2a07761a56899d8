from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.quadratic import QuadraticSurd
from ramanujanpi.core.surd import SurdExpr


@dataclass(frozen=True)
class SingularData:
    """Singular-value record for one N, as transcribed in the table data file.

    Parameters
    ----------
    N: Fraction
        Positive rational index r of the singular modulus lambda*(N).
    k: SurdExpr
        Singular modulus k_N.
    invariant: str
        Either ``"G"`` or ``"g"``: which class invariant the record tabulates.
    inverse_invariant_12: SurdExpr
        The tabulated value 1/G_N^12 or 1/g_N^12.
    alpha: SurdExpr
        Singular value of the second kind alpha(N).
    unit_half: QuadraticSurd, optional
        Fundamental unit tabulated for N/2 (even N only).
    unit: QuadraticSurd, optional
        Fundamental unit tabulated for N, over the square-free part of N.

    Notes
    -----
    The derived quantities x_N, y_N and J_N are not stored; they follow from k_N
    through :mod:`ramanujanpi.invariants.classinv`.
    """

    N: Fraction
    k: SurdExpr
    invariant: str
    inverse_invariant_12: SurdExpr
    alpha: SurdExpr
    unit_half: Optional[QuadraticSurd] = None
    unit: Optional[QuadraticSurd] = None

    def __post_init__(self):
        object.__setattr__(self, "N", Fraction(self.N))
        if self.N <= 0:
            raise ValueError(f"Expected N to be positive, got {self.N}.")
        if self.invariant not in ("G", "g"):
            raise ValueError(
                f"Expected invariant to be one of ('G', 'g'), got {self.invariant!r}."
            )

    def __str__(self):
        return f"ramanujanpi SingularData object (N = {self.N})"

    @property
    def label(self) -> str:
        return f"N={self.N}"

    def k_value(self, ctx: PrecisionContext) -> mpmath.mpf:
        return self.k.evaluate(ctx)

    def alpha_value(self, ctx: PrecisionContext) -> mpmath.mpf:
        return self.alpha.evaluate(ctx)

    def invariant_value(self, ctx: PrecisionContext) -> mpmath.mpf:
        """G_N or g_N, recovered from the tabulated twelfth power."""
        return ctx.mp.root(1 / self.inverse_invariant_12.evaluate(ctx), 12)
