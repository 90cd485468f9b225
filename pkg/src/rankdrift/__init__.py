"""Competitive balance of ranking series via Kendall-type coefficients."""

from .errors import (
    AllPairsIncomparable,
    DataError,
    DegenerateSampleError,
    DomainError,
    NoComparablePairs,
    ParseError,
    RankdriftError,
    StructuralError,
)
from .ranking import (
    ABSENT,
    NsResult,
    PairTally,
    PenaltyConfig,
    Ranking,
    RankingSeries,
    kendall_dist_p,
    kendall_tau_classic,
    normalized_strength,
    tally_pairs,
    tau_corrected_pair,
    tau_evolutive,
)

__version__ = "0.1.0"

__all__ = [
    "ABSENT", "AllPairsIncomparable", "DataError", "DegenerateSampleError", "DomainError",
    "NoComparablePairs", "NsResult", "PairTally", "ParseError", "PenaltyConfig", "Ranking",
    "RankingSeries", "RankdriftError", "StructuralError", "kendall_dist_p", "kendall_tau_classic",
    "normalized_strength", "tally_pairs", "tau_corrected_pair", "tau_evolutive",
]
