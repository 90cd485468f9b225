"""Descriptive summaries: mean, sample standard deviation, five-number summary."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import asdict, dataclass

from ..errors import DegenerateSampleError, DomainError


@dataclass(frozen=True)
class StatSummary:
    n: int
    mean: float
    sample_std: float
    min: float
    q1: float
    median: float
    q3: float
    max: float

    def five_numbers(self) -> tuple[float, float, float, float, float]:
        return (self.min, self.q1, self.median, self.q3, self.max)

    def to_dict(self) -> dict:
        return asdict(self)


def _checked(xs: Sequence[float], min_n: int = 2) -> list[float]:
    xs = [float(x) for x in xs]
    if len(xs) < min_n:
        raise DomainError(f"need at least {min_n} observations, got {len(xs)}")
    if not all(math.isfinite(x) for x in xs):
        raise DomainError("observations must be finite")
    return xs


def quantile(sorted_xs: Sequence[float], q: float) -> float:
    """Linear interpolation between order statistics at ``(n - 1) q``."""
    h = (len(sorted_xs) - 1) * q
    lo = math.floor(h)
    hi = min(lo + 1, len(sorted_xs) - 1)
    return sorted_xs[lo] + (h - lo) * (sorted_xs[hi] - sorted_xs[lo])


def mean(xs: Sequence[float]) -> float:
    return math.fsum(xs) / len(xs)


def sample_variance(xs: Sequence[float]) -> float:
    """Corrected two-pass variance with divisor ``n - 1``."""
    xs = _checked(xs)
    mu = mean(xs)
    dev = [x - mu for x in xs]
    # second term cancels the error left by rounding the mean
    ss = math.fsum(d * d for d in dev) - math.fsum(dev) ** 2 / len(xs)
    return max(ss, 0.0) / (len(xs) - 1)


def summarize(xs: Sequence[float]) -> StatSummary:
    xs = _checked(xs)
    s = sorted(xs)
    return StatSummary(
        n=len(xs),
        mean=mean(xs),
        sample_std=math.sqrt(sample_variance(xs)),
        min=s[0],
        q1=quantile(s, 0.25),
        median=quantile(s, 0.5),
        q3=quantile(s, 0.75),
        max=s[-1],
    )


def variance_ratio(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Larger sample variance over the smaller one (always >= 1)."""
    vx, vy = sample_variance(xs), sample_variance(ys)
    hi, lo = max(vx, vy), min(vx, vy)
    if hi == 0.0:
        raise DegenerateSampleError("both samples have zero variance")
    if lo == 0.0:
        return math.inf
    return hi / lo
