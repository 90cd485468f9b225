"""Two-sided Student t-tests (paired, pooled two-sample, Welch)."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import asdict, dataclass

from ..errors import DegenerateSampleError, StructuralError
from .descriptive import _checked, mean, sample_variance
from .special import t_two_sided_p


@dataclass(frozen=True)
class TestResult:
    statistic: float
    p_value: float
    df: float | None
    method: str

    __test__ = False  # not a pytest class

    def to_dict(self) -> dict:
        return asdict(self)


def t_test_paired(xs: Sequence[float], ys: Sequence[float]) -> TestResult:
    if len(xs) != len(ys):
        raise StructuralError(f"paired samples differ in length: {len(xs)} != {len(ys)}")
    d = _checked([x - y for x, y in zip(xs, ys)])
    n = len(d)
    var = sample_variance(d)
    if var == 0.0:
        raise DegenerateSampleError("differences have zero variance; the paired t statistic is undefined")
    t = mean(d) / math.sqrt(var / n)
    return TestResult(t, t_two_sided_p(t, n - 1), float(n - 1), "t_paired")


def t_test_two_sample_pooled(xs: Sequence[float], ys: Sequence[float]) -> TestResult:
    xs, ys = _checked(xs), _checked(ys)
    n1, n2 = len(xs), len(ys)
    df = n1 + n2 - 2
    pooled = ((n1 - 1) * sample_variance(xs) + (n2 - 1) * sample_variance(ys)) / df
    if pooled == 0.0:
        raise DegenerateSampleError("pooled variance is zero")
    t = (mean(xs) - mean(ys)) / math.sqrt(pooled * (1.0 / n1 + 1.0 / n2))
    return TestResult(t, t_two_sided_p(t, df), float(df), "t_pooled")


def t_test_welch(xs: Sequence[float], ys: Sequence[float]) -> TestResult:
    xs, ys = _checked(xs), _checked(ys)
    n1, n2 = len(xs), len(ys)
    q1, q2 = sample_variance(xs) / n1, sample_variance(ys) / n2
    if q1 + q2 == 0.0:
        raise DegenerateSampleError("both samples have zero variance")
    t = (mean(xs) - mean(ys)) / math.sqrt(q1 + q2)
    # Welch-Satterthwaite degrees of freedom
    df = (q1 + q2) ** 2 / (q1 ** 2 / (n1 - 1) + q2 ** 2 / (n2 - 1))
    return TestResult(t, t_two_sided_p(t, df), df, "t_welch")
