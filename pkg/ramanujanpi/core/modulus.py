from dataclasses import dataclass

import mpmath

from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.utils.types import Numeric


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus k together with its complementary modulus k'.

    Parameters
    ----------
    k: mpmath.mpf
        Modulus in the open interval (0, 1).
    kprime: mpmath.mpf
        Complementary modulus sqrt(1 - k^2), also in (0, 1).

    Notes
    -----
    Construct instances with :meth:`from_k` or :meth:`from_kprime`, which compute the
    partner at working precision. The endpoints k = 0 and k = 1 are rejected; the
    operations that document a limit value at an endpoint accept a bare number instead
    of a Modulus.
    """

    k: mpmath.mpf
    kprime: mpmath.mpf

    def __post_init__(self):
        for name, value in (("k", self.k), ("kprime", self.kprime)):
            if not 0 < value < 1:
                raise ValueError(
                    f"Expected {name} to be in the open interval (0, 1), got "
                    f"{mpmath.nstr(value, 15)}."
                )

    def __str__(self):
        return f"ramanujanpi Modulus object (k = {mpmath.nstr(self.k, 20)})"

    @classmethod
    def from_k(cls, k: Numeric, ctx: PrecisionContext) -> "Modulus":
        k = ctx.convert(k)
        if not 0 < k < 1:
            raise ValueError(
                f"Expected k to be in the open interval (0, 1), got "
                f"{mpmath.nstr(k, 15)}."
            )
        return cls(k, ctx.mp.sqrt((1 - k) * (1 + k)))

    @classmethod
    def from_kprime(cls, kprime: Numeric, ctx: PrecisionContext) -> "Modulus":
        kprime = ctx.convert(kprime)
        if not 0 < kprime < 1:
            raise ValueError(
                f"Expected kprime to be in the open interval (0, 1), got "
                f"{mpmath.nstr(kprime, 15)}."
            )
        return cls(ctx.mp.sqrt((1 - kprime) * (1 + kprime)), kprime)

    def complement(self) -> "Modulus":
        """Returns the modulus with k and k' swapped."""
        return Modulus(self.kprime, self.k)

    def defect(self) -> mpmath.mpf:
        """Returns k^2 + k'^2 - 1."""
        return self.k**2 + self.kprime**2 - 1


@dataclass(frozen=True)
class ThetaTriple:
    """Values of the Jacobi theta functions theta_2, theta_3, theta_4 at one nome."""

    t2: mpmath.mpf
    t3: mpmath.mpf
    t4: mpmath.mpf

    def jacobi_defect(self) -> mpmath.mpf:
        """Returns t3^4 - t2^4 - t4^4, zero by Jacobi's quartic identity."""
        return self.t3**4 - self.t2**4 - self.t4**4
