from fractions import Fraction
from typing import Union

import mpmath
import numpy as np


Numeric = Union[int, float, np.number, Fraction, mpmath.mpf]
"""Numeric data types accepted wherever a real input is expected"""

Rational = Union[int, Fraction, str]
"""Exact rational inputs (strings are parsed by ``fractions.Fraction``)"""
