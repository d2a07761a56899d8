from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import mpmath
import pandas as pd

from ramanujanpi.core.definitions import report_columns


@dataclass
class VerificationReport:
    """Outcome of a verification run. Core class of ramanujanpi.

    Each row of the underlying `pandas` ``DataFrame`` is one check: an identity
    defect, a table-row comparison or an exact equality, with the tolerance it was
    held to. The report is the common return type of every verifier of the package
    and is what ``pi verify`` serializes.

    Parameters
    ----------
    checks: pd.DataFrame
        DataFrame with the columns ``"group"``, ``"check"``, ``"defect"``,
        ``"tolerance"`` and ``"passed"`` (see
        :ref:`report_columns <definitions target>`).
    digits: int, optional
        Working precision the checks were run at.

    Attributes
    ----------
    passed: bool
        True if every check passed (and there is at least one check).
    failures: list
        Names of the failed checks.
    groups: list
        Distinct check groups in order of appearance.
    """

    checks: pd.DataFrame
    digits: Optional[int] = None

    def __post_init__(self):
        missing = [col for col in report_columns if col not in self.checks.columns]
        if missing:
            raise ValueError(
                f"ramanujanpi VerificationReport object is missing the column(s) "
                f"{missing}!"
            )

    def __str__(self):
        return f"ramanujanpi VerificationReport object of shape {self.checks.shape}"

    def __len__(self):
        return len(self.checks)

    def __getitem__(self, key):
        return self.checks[key]

    def __add__(self, other: "VerificationReport") -> "VerificationReport":
        checks = pd.concat([self.checks, other.checks], ignore_index=True)
        return VerificationReport(checks, self.digits or other.digits)

    @classmethod
    def from_checks(
        cls,
        rows: Iterable[Tuple[str, str, mpmath.mpf, mpmath.mpf]],
        digits: Optional[int] = None,
    ) -> "VerificationReport":
        """Builds a report from (group, check, defect, tolerance) tuples.

        Pass/fail is decided on the high-precision values before they are stored as
        float64 (tiny defects may underflow to 0.0 in the stored column).
        """
        records = []
        for group, check, defect, tolerance in rows:
            records.append(
                {
                    "group": group,
                    "check": check,
                    "defect": float(defect),
                    "tolerance": float(tolerance),
                    "passed": bool(abs(defect) <= tolerance),
                }
            )

        return cls(pd.DataFrame(records, columns=list(report_columns)), digits)

    @property
    def passed(self) -> bool:
        return len(self.checks) > 0 and bool(self.checks["passed"].all())

    @property
    def failures(self) -> List[str]:
        if self.checks.empty:
            return []
        return list(self.checks.loc[~self.checks["passed"], "check"])

    @property
    def groups(self) -> List[str]:
        return list(dict.fromkeys(self.checks["group"]))

    def max_defect(self, group: str = None) -> float:
        """Largest absolute defect, optionally within one group."""
        checks = self.checks
        if group is not None:
            checks = checks[checks["group"] == group]
        if checks.empty:
            raise ValueError(f"Expected checks in group {group!r}, got none.")

        return float(checks["defect"].abs().max())

    def summary(self) -> pd.DataFrame:
        """Per-group check count, failure count and max defect."""
        grouped = self.checks.groupby("group", sort=False)
        summary = pd.DataFrame(
            {
                "checks": grouped.size(),
                "failed": grouped["passed"].apply(lambda passed: int((~passed).sum())),
                "max_defect": grouped["defect"].apply(lambda d: float(d.abs().max())),
            }
        )

        return summary

    def to_dict(self) -> dict:
        return {
            "digits": self.digits,
            "passed": self.passed,
            "checks": self.checks.to_dict(orient="records"),
        }
