from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Union

from ramanujanpi.series.catalog import catalog_by_key
from ramanujanpi.settings import DIGITS_CAP

COMMANDS = ("compute", "verify", "catalog", "bench")
FORMATS = ("plain", "json")
AGM_METHOD = "agm"


def available_methods() -> List[str]:
    """Catalog keys plus ``"agm"``."""
    return list(catalog_by_key()) + [AGM_METHOD]


@dataclass
class RunConfig:
    """Configuration of one ``pi`` command.

    Parameters
    ----------
    command: str
        One of ``"compute"``, ``"verify"``, ``"catalog"`` and ``"bench"``.
    method: str, optional
        Catalog key or ``"agm"``, required for ``compute``.
    digits: int, optional
        Decimal digits, at most the cap of
        :data:`ramanujanpi.settings.DIGITS_CAP` (environment variable
        ``RAMANUJANPI_DIGITS_CAP``).
    output_path: str or Path, optional
        File to write to instead of standard output.
    format: str, optional
        ``"plain"`` (default) or ``"json"``.
    tables: str or Path, optional
        Singular-value table file for ``verify``, defaults to the packaged table.
    workers: int, optional
        Processes used by binary splitting in ``compute``.
    verbose: bool, optional
        Debug logging.
    """

    command: str
    method: Optional[str] = None
    digits: Optional[int] = None
    output_path: Optional[Union[str, Path]] = None
    format: str = "plain"
    tables: Optional[Union[str, Path]] = None
    workers: int = 1
    verbose: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(
                f"Expected command to be one of {list(COMMANDS)}, got "
                f"{self.command!r}."
            )
        if self.format not in FORMATS:
            raise ValueError(
                f"Expected format to be one of {list(FORMATS)}, got {self.format!r}."
            )
        if self.digits is not None:
            if isinstance(self.digits, bool) or not isinstance(self.digits, int):
                raise ValueError(
                    f"Expected digits to be an integer, got {self.digits!r}."
                )
            if not 1 <= self.digits <= DIGITS_CAP:
                raise ValueError(
                    f"Expected digits to be between 1 and {DIGITS_CAP}, got "
                    f"{self.digits}."
                )
        if self.command == "compute":
            if self.digits is None:
                raise ValueError("Expected digits for compute, got none.")
            if self.method not in available_methods():
                raise ValueError(
                    f"Expected method to be one of {available_methods()}, got "
                    f"{self.method!r}."
                )
        if self.workers < 1:
            raise ValueError(f"Expected workers to be positive, got {self.workers}.")

    def __str__(self):
        return f"ramanujanpi RunConfig object ({self.command})"
