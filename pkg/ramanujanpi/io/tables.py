import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Union

from ramanujanpi.core.quadratic import QuadraticSurd
from ramanujanpi.core.singular import SingularData
from ramanujanpi.core.surd import SurdExpr
from ramanujanpi.io.utils import dump_json, get_and_convert
from ramanujanpi.settings import SINGULAR_VALUES_FILE

logger = logging.getLogger(__name__)

TABLE_FORMAT = "ramanujanpi-singular-values"
TABLE_VERSION = 1


def singular_data_from_dict(record: dict) -> SingularData:
    """Builds a SingularData object from one record of the table file.

    Parameters
    ----------
    record: dict
        Record with keys ``"N"``, ``"invariant"``, ``"k"``, ``"inverse_invariant_12"``
        and ``"alpha"``, and optionally ``"unit_half"`` and ``"unit"``. Expression
        entries use the :class:`~ramanujanpi.core.surd.SurdExpr` text notation, units
        are ``{"a": "p/q", "b": "p/q", "d": int}`` objects.

    Returns
    -------
    data: SingularData
    """
    missing = [
        key
        for key in ("N", "invariant", "k", "inverse_invariant_12", "alpha")
        if key not in record
    ]
    if missing:
        raise ValueError(f"Singular value record is missing the key(s) {missing}!")

    N = get_and_convert(record, "N", str)
    units = {}
    for key in ("unit_half", "unit"):
        if record.get(key) is not None:
            units[key] = QuadraticSurd.from_dict(record[key])

    return SingularData(
        N=Fraction(N),
        k=SurdExpr.parse(record["k"]),
        invariant=record["invariant"],
        inverse_invariant_12=SurdExpr.parse(
            get_and_convert(record, "inverse_invariant_12", str)
        ),
        alpha=SurdExpr.parse(record["alpha"]),
        **units,
    )


def singular_data_to_dict(data: SingularData) -> dict:
    record = {
        "N": int(data.N) if data.N.denominator == 1 else str(data.N),
        "invariant": data.invariant,
        "k": str(data.k),
        "inverse_invariant_12": str(data.inverse_invariant_12),
        "alpha": str(data.alpha),
    }
    if data.unit_half is not None:
        record["unit_half"] = data.unit_half.to_dict()
    if data.unit is not None:
        record["unit"] = data.unit.to_dict()

    return record


def read_singular_values(filepath: Union[str, Path] = None) -> List[SingularData]:
    """Reads a singular-value table file.

    Parameters
    ----------
    filepath: str or Path, optional
        Path to a JSON table file. Defaults to the table shipped with the package.

    Returns
    -------
    records: List[SingularData]
        Records in file order.

    Notes
    -----
    The file is a JSON object with the keys ``"format"``
    (``"ramanujanpi-singular-values"``), ``"version"`` (currently 1) and ``"records"``,
    a list of records as described in :func:`singular_data_from_dict`.
    """
    filepath = Path(filepath) if filepath is not None else SINGULAR_VALUES_FILE
    with open(filepath, "r", encoding="utf-8") as f:
        content = json.load(f)

    if content.get("format") != TABLE_FORMAT:
        raise ValueError(
            f"Expected a table file of format {TABLE_FORMAT!r}, got "
            f"{content.get('format')!r}."
        )
    version = get_and_convert(content, "version", int)
    if version != TABLE_VERSION:
        raise ValueError(
            f"Expected table file version {TABLE_VERSION}, got {version!r}."
        )
    records = [singular_data_from_dict(record) for record in content["records"]]
    logger.debug("read %d singular value records from %s", len(records), filepath)

    return records


def write_singular_values(
    records: List[SingularData], filepath: Union[str, Path]
) -> None:
    """Writes records to a table file readable by :func:`read_singular_values`."""
    dump_json(
        {
            "format": TABLE_FORMAT,
            "version": TABLE_VERSION,
            "records": [singular_data_to_dict(data) for data in records],
        },
        filepath,
    )


def singular_values_by_index(
    records: List[SingularData] = None,
) -> Dict[Fraction, SingularData]:
    """Table records keyed by N, read from the packaged table if none are given."""
    if records is None:
        records = read_singular_values()

    return {data.N: data for data in records}
