from .descriptive import StatSummary, quantile, sample_variance, summarize, variance_ratio
from .ttest import TestResult, t_test_paired, t_test_two_sample_pooled, t_test_welch
from .normality import shapiro_wilk, swilk_coefficients
from .special import betainc, normal_cdf, normal_ppf, t_cdf, t_two_sided_p

__all__ = [
    "StatSummary",
    "TestResult",
    "betainc",
    "normal_cdf",
    "normal_ppf",
    "quantile",
    "sample_variance",
    "shapiro_wilk",
    "summarize",
    "swilk_coefficients",
    "t_cdf",
    "t_test_paired",
    "t_test_two_sample_pooled",
    "t_test_welch",
    "t_two_sided_p",
    "variance_ratio",
]
