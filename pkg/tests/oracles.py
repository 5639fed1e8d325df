"""Independent reference computations used to pin expected values.

These deliberately avoid the code paths they check: the Bessel oracle is a
fixed-length series in exact rational arithmetic, and the matrix exponential
is scaling-and-squaring on the raw series.
"""

from fractions import Fraction
from math import factorial

import numpy as np


def j0_series_oracle(x: float, terms: int = 60) -> float:
    """Zeroth-order Bessel function by a 60-term power series in exact
    rational arithmetic (error < 1e-15 for |x| <= 12)."""
    q = Fraction(x) ** 2 / 4
    total = Fraction(0)
    for k in range(terms):
        total += (-1) ** k * q**k / Fraction(factorial(k)) ** 2
    return float(total)


def j0_first_zero_oracle() -> float:
    """First positive root of J0 by bisection on the series oracle."""
    lo, hi = 2.0, 3.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if j0_series_oracle(mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15:
            break
    return 0.5 * (lo + hi)


def expm_scaling_squaring(a: np.ndarray, order: int = 16) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring on the Taylor series."""
    a = np.asarray(a, dtype=complex)
    norm = np.linalg.norm(a, ord=np.inf)
    s = max(0, int(np.ceil(np.log2(max(norm, 1e-16)))) + 4)
    b = a / 2**s
    result = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for k in range(1, order + 1):
        term = term @ b / k
        result = result + term
    for _ in range(s):
        result = result @ result
    return result
