from .core.modulus import Modulus, ThetaTriple
from .core.precision import PrecisionContext
from .core.quadratic import QuadraticSurd
from .core.report import VerificationReport
from .core.series import CoefficientFamily, EvaluationReport, SeriesSpec
from .core.singular import SingularData
from .core.surd import SurdExpr

__all__ = [
    "__version__",
    "__doc__",
    "CoefficientFamily",
    "EvaluationReport",
    "Modulus",
    "PrecisionContext",
    "QuadraticSurd",
    "SeriesSpec",
    "SingularData",
    "SurdExpr",
    "ThetaTriple",
    "VerificationReport",
]

__version__ = "0.1.0"

__doc__ = """
Ramanujan-type series for 1/pi at arbitrary precision
=====================================================

**ramanujanpi** builds, verifies and evaluates the rapidly convergent series for 1/pi
that come from singular values of complete elliptic integrals. It is built upon
*mpmath* for arbitrary precision reals and *gmpy2* for big integers.

Compute complete elliptic integrals by the AGM, check their hypergeometric
transformations, evaluate class invariants and singular moduli from theta functions,
verify a transcribed table of singular values, and derive from each table row a
family of series whose integer coefficients reproduce the classical forms. Series are
summed term by term or by binary splitting, and the ``pi`` command prints digits of
pi, runs the full verification suite and compares convergence rates.
"""
