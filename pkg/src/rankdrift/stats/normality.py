"""Shapiro-Wilk W test using Royston's (1995) AS R94 approximation."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from ..errors import DegenerateSampleError, DomainError
from .special import normal_ppf, normal_sf
from .ttest import TestResult

# polynomial coefficients, highest power first (numpy.polyval order)
_C1 = (-2.706056, 4.434685, -2.071190, -0.147981, 0.221157, 0.0)
_C2 = (-3.582633, 5.682633, -1.752461, -0.293762, 0.042981, 0.0)
_C3 = (-0.0006714, 0.025054, -0.39978, 0.5440)
_C4 = (-0.0020322, 0.062767, -0.77857, 1.3822)
_C5 = (0.0038915, -0.083751, -0.31082, -1.5861)
_C6 = (0.0030302, -0.082676, -0.4803)
_G = (0.459, -2.273)

MIN_N, MAX_N = 3, 5000


def swilk_coefficients(n: int) -> np.ndarray:
    """Antisymmetric weights ``a_1..a_n`` for a sample of size ``n``."""
    if n == 3:
        h = math.sqrt(0.5)
        return np.array([-h, 0.0, h])
    i = np.arange(1, n + 1)
    m = np.array([normal_ppf(q) for q in (i - 0.375) / (n + 0.25)])
    # exact antisymmetry of the scores
    m = (m - m[::-1]) / 2.0
    summ2 = float(np.dot(m, m))
    ssumm2 = math.sqrt(summ2)
    u = 1.0 / math.sqrt(n)

    a = m / ssumm2
    an = np.polyval(_C1, u) + m[-1] / ssumm2
    if n > 5:
        an1 = np.polyval(_C2, u) + m[-2] / ssumm2
        phi = (summ2 - 2 * m[-1] ** 2 - 2 * m[-2] ** 2) / (1 - 2 * an ** 2 - 2 * an1 ** 2)
        a = m / math.sqrt(phi)
        a[-1], a[-2] = an, an1
        a[0], a[1] = -an, -an1
    else:
        phi = (summ2 - 2 * m[-1] ** 2) / (1 - 2 * an ** 2)
        a = m / math.sqrt(phi)
        a[-1], a[0] = an, -an
    return a


def _p_value(w1: float, n: int) -> float:
    """Upper-tail p-value from ``w1 = 1 - W``."""
    if n == 3:
        # exact null distribution; asin(sqrt(W)) = pi/2 - asin(sqrt(1 - W))
        p = 1.0 - 6.0 / math.pi * math.asin(math.sqrt(w1))
        return min(1.0, max(0.0, p))
    if w1 <= 0.0:
        return 1.0
    y = math.log(w1)
    if n <= 11:
        gamma = np.polyval(_G, n)
        if y >= gamma:
            return 0.0
        y = -math.log(gamma - y)
        mu = np.polyval(_C3, n)
        sigma = math.exp(np.polyval(_C4, n))
    else:
        ln = math.log(n)
        mu = np.polyval(_C5, ln)
        sigma = math.exp(np.polyval(_C6, ln))
    return min(1.0, max(0.0, normal_sf((y - mu) / sigma)))


def shapiro_wilk(xs: Sequence[float]) -> TestResult:
    x = np.sort(np.asarray(xs, dtype=float))
    n = x.size
    if not MIN_N <= n <= MAX_N:
        raise DomainError(f"Shapiro-Wilk needs {MIN_N} <= n <= {MAX_N}, got {n}")
    if not np.all(np.isfinite(x)):
        raise DomainError("observations must be finite")
    spread = x[-1] - x[0]
    if spread <= 1e-12 * max(abs(x[0]), abs(x[-1])) or spread == 0.0:
        raise DegenerateSampleError("all observations are (numerically) identical")

    # centre and rescale so W does not depend on the data's location or units
    z = (x - x.mean()) / spread
    z -= z.mean()
    a = swilk_coefficients(n)
    a /= math.sqrt(float(np.dot(a, a)))
    den = float(np.dot(z, z))
    # 1 - W as a residual norm: no cancellation when W is close to 1
    resid = z - float(np.dot(a, z)) * a
    w1 = min(1.0, float(np.dot(resid, resid)) / den)
    return TestResult(statistic=1.0 - w1, p_value=_p_value(w1, n), df=None, method="shapiro_wilk")
