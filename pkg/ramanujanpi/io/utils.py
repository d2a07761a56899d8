import json
from fractions import Fraction
from pathlib import Path
from typing import Any, TextIO, Union

import mpmath
import numpy as np


def get_and_convert(dic: dict, key: Any, value_type: type, default: Any = None) -> Any:
    """Performs dictionary get and type conversion simultaneously.

    Parameters
    ----------
    dic: dict
        Dictionary to be queried.
    key: Any
        Key to be looked up.
    value_type: type
        Desired output type the value should be cast into.
    default: Any, optional
        Return value if key is not in dic, defaults to None.

    Returns
    -------
    value: value_type
        Returns the value for key if key is in dic, else default. Tries type conversion
        to `type(value) = value_type`. If type conversion fails, e.g. by trying to force
        something like `Fraction(None)` due to a missing dic entry, value is returned
        in its original data type.
    """
    value = dic.get(key, default)
    try:
        value = value_type(value)
    except TypeError:
        pass
    except ValueError:
        pass

    return value


def _to_json_native(obj: Any) -> Any:
    if isinstance(obj, mpmath.mpf):
        return mpmath.nstr(obj, 20)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable.")


def dump_json(obj: Any, target: Union[str, Path, TextIO]) -> None:
    """Writes obj as indented JSON to a path or an open text stream.

    mpmath reals are written as 20-digit strings, Fractions as "p/q" strings and numpy
    scalars as their Python counterparts.
    """
    if isinstance(target, (str, Path)):
        with open(target, "w", encoding="utf-8") as f:
            json.dump(obj, f, indent=2, default=_to_json_native)
            f.write("\n")
    else:
        json.dump(obj, target, indent=2, default=_to_json_native)
        target.write("\n")
