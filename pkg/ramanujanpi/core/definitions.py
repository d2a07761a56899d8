from fractions import Fraction


# fmt: off
coefficient_families = {
    "halfCubed": {
        "definition": "a_n = ((1/2)_n / n!)^3 = (binom(2n, n) / 4^n)^3",
        "pochhammer": (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
        "integral_scale": 64,
    },
    "quarterHalfThreeQuarter": {
        "definition": "a_n = (1/4)_n (1/2)_n (3/4)_n / (n!)^3 "
                      "= (4n)! / (4^(4n) (n!)^4)",
        "pochhammer": (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)),
        "integral_scale": 256,
    },
    "sixthHalfFiveSixth": {
        "definition": "a_n = (1/6)_n (1/2)_n (5/6)_n / (n!)^3 "
                      "= (6n)! / (12^(3n) (3n)! (n!)^3)",
        "pochhammer": (Fraction(1, 6), Fraction(1, 2), Fraction(5, 6)),
        "integral_scale": 1728,
    },
    "chanCooperNested": {
        "definition": "a_n = sum_{m=0}^{n} (-1)^(n-m) / 64^m (4m)! / (m!)^4 "
                      "binom(n+m, n-m)",
        "pochhammer": None,
        "integral_scale": 64,
    },
}

exponent_patterns = {
    "n": {
        "definition": "z^n",
        "slope": 1,
        "offset": Fraction(0),
    },
    "2n": {
        "definition": "z^(2n)",
        "slope": 2,
        "offset": Fraction(0),
    },
    "2n+1": {
        "definition": "z^(2n+1)",
        "slope": 2,
        "offset": Fraction(1),
    },
    "3n": {
        "definition": "z^(3n)",
        "slope": 3,
        "offset": Fraction(0),
    },
    "3(n+1/2)": {
        "definition": "z^(3n + 3/2), the half power is folded into the multiplier",
        "slope": 3,
        "offset": Fraction(3, 2),
    },
    "12(n+1/2)": {
        "definition": "z^(12n + 6), z^6 is folded into the multiplier",
        "slope": 12,
        "offset": Fraction(6),
    },
}

series_targets = {
    "pi": {
        "definition": "pi itself (AGM iteration)",
        "from_pi": lambda pi: pi,
        "to_pi": lambda value: value,
    },
    "1/pi": {
        "definition": "Reciprocal of pi",
        "from_pi": lambda pi: 1 / pi,
        "to_pi": lambda value: 1 / value,
    },
    "pi/4": {
        "definition": "A quarter of pi (Gregory's series)",
        "from_pi": lambda pi: pi / 4,
        "to_pi": lambda value: 4 * value,
    },
    "pi^2/6": {
        "definition": "zeta(2) (Euler's series)",
        "from_pi": lambda pi: pi**2 / 6,
        "to_pi": lambda value: (6 * value) ** 0.5,
    },
    "4/pi": {
        "definition": "Four over pi (Brouncker's continued fraction)",
        "from_pi": lambda pi: 4 / pi,
        "to_pi": lambda value: 4 / value,
    },
}

series_kinds = {
    "geometric": "Sum of M (+-1)^n s^n a_n (A + nB) z^(pattern) with |z| < 1",
    "gregory": "sum_{n>=0} (-1)^n / (2n+1)",
    "euler": "sum_{n>=1} 1 / n^2",
    "brouncker": "1 + 1^2/(2 + 3^2/(2 + 5^2/(2 + ...)))",
}
# fmt: on

report_columns = {
    "group": {
        "definition": "Verification suite the check belongs to",
        "dtypes": [str],
    },
    "check": {
        "definition": "Name of the check, e.g. a table row 'N=58 alpha'",
        "dtypes": [str],
    },
    "defect": {
        "definition": "Absolute defect |computed - expected| or identity residual",
        "dtypes": [float],
        "value_range": [0, None],
    },
    "tolerance": {
        "definition": "Largest defect accepted for the check",
        "dtypes": [float],
        "value_range": [0, None],
    },
    "passed": {
        "definition": "Whether the defect is within tolerance",
        "dtypes": [bool],
    },
}

# fmt: off
series_families = {
    "G": {
        "definition": "sum a_n [alpha - sqrt(N) k^2 + n sqrt(N) (k'^2 - k^2)] "
                      "(1/G^12)^(2n)",
        "coefficients": "halfCubed",
        "pattern": "2n",
        "alternating": False,
        "valid_range": "N > 1",
        "is_valid": lambda N: N > 1,
    },
    "g": {
        "definition": "sum (-1)^n a_n [alpha/k'^2 + n sqrt(N) (1 + k^2)/k'^2] "
                      "(1/g^12)^(2n)",
        "coefficients": "halfCubed",
        "pattern": "2n",
        "alternating": True,
        "valid_range": "|1/g^12| < 1",
        "is_valid": lambda N: True,
    },
    "g4N": {
        "definition": "sum (-1)^n a_n [(alpha - sqrt(N) k^2/2)/k' "
                      "+ n sqrt(N) (k' + 1/k')] (1/g_4N^12)^(2n)",
        "coefficients": "halfCubed",
        "pattern": "2n",
        "alternating": True,
        "valid_range": "|1/g_4N^12| < 1",
        "is_valid": lambda N: True,
    },
    "xN": {
        "definition": "sum a_n [alpha/(x (1 + k^2)) - sqrt(N)/(4 g^12) "
                      "+ n sqrt(N) (g^12 - g^-12)/2] x^(2n+1)",
        "coefficients": "quarterHalfThreeQuarter",
        "pattern": "2n+1",
        "alternating": False,
        "valid_range": "|x_N| < 1",
        "is_valid": lambda N: True,
    },
    "yN": {
        "definition": "sum (-1)^n a_n [alpha/(y (k'^2 - k^2)) + sqrt(N) k^2 G^12/2 "
                      "+ n sqrt(N) (G^12 + G^-12)/2] y^(2n+1)",
        "coefficients": "quarterHalfThreeQuarter",
        "pattern": "2n+1",
        "alternating": True,
        "valid_range": "N >= 4",
        "is_valid": lambda N: N >= 4,
    },
    "JN": {
        "definition": "1/(3 sqrt(3)) sum a_n {2 (alpha - sqrt(N) k^2) (4 G^24 - 1) "
                      "+ sqrt(N) sqrt(1 - G^-24) + 2n sqrt(N) (8 G^24 + 1) "
                      "sqrt(1 - G^-24)} (J^(-1/2))^(2n+1)",
        "coefficients": "sixthHalfFiveSixth",
        "pattern": "2n+1",
        "alternating": False,
        "valid_range": "N > 1",
        "is_valid": lambda N: N > 1,
    },
}
# fmt: on
