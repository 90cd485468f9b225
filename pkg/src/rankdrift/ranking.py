"""Kendall-type coefficients for incomplete rankings with ties.

A ranking over ``n`` entrants is stored as a tuple of positions, one slot per
entrant.  A slot is either a positive integer (equal integers are ties) or
``ABSENT`` (``None``) for an entrant that was not ranked.

The two-ranking coefficient only looks at *comparable* pairs, i.e. pairs of
entrants present in both rankings.  For a series of rankings the evolutive
coefficient is the mean of the two-ranking coefficients over consecutive
rankings, and the Normalized Strength is ``(1 - tau_ev) / 2``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import AllPairsIncomparable, DomainError, NoComparablePairs, StructuralError

ABSENT = None
DEFAULT_PENALTY = 0.5


@dataclass(frozen=True)
class Ranking:
    """Positions of ``n > 1`` entrants; ``None`` marks an absent entrant."""

    entries: tuple[int | None, ...]

    def __init__(self, entries: Iterable[int | None]):
        entries = tuple(entries)
        if len(entries) < 2:
            raise StructuralError(f"a ranking needs at least 2 entrants, got {len(entries)}")
        for i, pos in enumerate(entries):
            if pos is ABSENT:
                continue
            if isinstance(pos, bool) or not isinstance(pos, (int, np.integer)):
                raise DomainError(f"slot {i}: position must be a positive integer or None, got {pos!r}")
            if pos < 1:
                raise DomainError(f"slot {i}: position must be >= 1, got {pos}")
        object.__setattr__(self, "entries", tuple(None if p is None else int(p) for p in entries))

    @property
    def universe_size(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def is_complete(self) -> bool:
        return all(p is not ABSENT for p in self.entries)

    @property
    def has_ties(self) -> bool:
        present = [p for p in self.entries if p is not ABSENT]
        return len(set(present)) != len(present)

    def present_count(self) -> int:
        return sum(p is not ABSENT for p in self.entries)

    def permuted(self, perm: Sequence[int]) -> Ranking:
        """Relabel entrants: slot ``k`` of the result is slot ``perm[k]`` of self."""
        return Ranking(self.entries[i] for i in perm)

    def __str__(self) -> str:
        return "[" + ", ".join("•" if p is None else str(p) for p in self.entries) + "]"


@dataclass(frozen=True)
class RankingSeries:
    rankings: tuple[Ranking, ...]
    labels: tuple[str, ...] | None = None

    def __init__(self, rankings: Iterable[Ranking | Iterable[int | None]], labels: Iterable[str] | None = None):
        rankings = tuple(r if isinstance(r, Ranking) else Ranking(r) for r in rankings)
        if len(rankings) < 2:
            raise StructuralError(f"a ranking series needs at least 2 rankings, got {len(rankings)}")
        sizes = {r.universe_size for r in rankings}
        if len(sizes) != 1:
            raise StructuralError(f"rankings in a series must share one universe size, got {sorted(sizes)}")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != len(rankings):
                raise StructuralError(f"{len(labels)} labels for {len(rankings)} rankings")
        object.__setattr__(self, "rankings", rankings)
        object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return len(self.rankings)

    @property
    def n(self) -> int:
        return self.rankings[0].universe_size

    def __len__(self) -> int:
        return len(self.rankings)

    def __iter__(self):
        return iter(self.rankings)

    def __getitem__(self, i: int) -> Ranking:
        return self.rankings[i]

    def permuted(self, perm: Sequence[int]) -> RankingSeries:
        return RankingSeries((r.permuted(perm) for r in self.rankings), self.labels)


@dataclass(frozen=True)
class PenaltyConfig:
    """Cost charged to a pair tied in exactly one of the two rankings."""

    p: float = DEFAULT_PENALTY

    def __post_init__(self):
        p = float(self.p)
        if not 0.0 <= p <= 0.5:
            raise DomainError(f"penalty p must lie in [0, 1/2], got {self.p}")
        object.__setattr__(self, "p", p)


@dataclass(frozen=True)
class PairTally:
    concordant: int = 0
    discordant: int = 0
    tie_penalized: int = 0
    tied_both: int = 0
    comparable: int = 0


@dataclass(frozen=True)
class PairDetail:
    index: int
    label: str | None
    tau: float | None
    comparable: int
    skipped: bool


@dataclass(frozen=True)
class NsResult:
    tau_ev: float
    ns: float
    pair_details: list[PairDetail] = field(default_factory=list)
    skipped_pairs: int = 0


def _as_ranking(r) -> Ranking:
    return r if isinstance(r, Ranking) else Ranking(r)


def _as_penalty(cfg) -> PenaltyConfig:
    if cfg is None:
        return PenaltyConfig()
    if isinstance(cfg, PenaltyConfig):
        return cfg
    return PenaltyConfig(cfg)


def tally_pairs(a: Ranking | Sequence[int | None], b: Ranking | Sequence[int | None]) -> PairTally:
    """Classify every unordered pair of entrants present in both rankings."""
    a, b = _as_ranking(a), _as_ranking(b)
    if a.universe_size != b.universe_size:
        raise StructuralError(f"universe size mismatch: {a.universe_size} != {b.universe_size}")

    pa = np.array([0 if p is None else p for p in a.entries], dtype=np.int64)
    pb = np.array([0 if p is None else p for p in b.entries], dtype=np.int64)
    present = (pa > 0) & (pb > 0)
    pa, pb = pa[present], pb[present]
    if pa.size < 2:
        return PairTally()

    iu = np.triu_indices(pa.size, k=1)
    sa = np.sign(pa[:, None] - pa[None, :])[iu]
    sb = np.sign(pb[:, None] - pb[None, :])[iu]
    prod = sa * sb
    tie_a, tie_b = sa == 0, sb == 0
    return PairTally(
        concordant=int(np.count_nonzero(prod > 0)),
        discordant=int(np.count_nonzero(prod < 0)),
        tie_penalized=int(np.count_nonzero(tie_a ^ tie_b)),
        tied_both=int(np.count_nonzero(tie_a & tie_b)),
        comparable=int(sa.size),
    )


def kendall_tau_classic(a, b) -> float:
    """Kendall's tau ``2(P - Q) / (n(n - 1))`` for complete rankings without ties."""
    a, b = _as_ranking(a), _as_ranking(b)
    if a.universe_size != b.universe_size:
        raise StructuralError(f"universe size mismatch: {a.universe_size} != {b.universe_size}")
    for name, r in (("a", a), ("b", b)):
        if not r.is_complete or r.has_ties:
            raise DomainError(
                f"ranking {name} has ties or absent entrants; use tau_corrected_pair for partial rankings"
            )
    t = tally_pairs(a, b)
    n = a.universe_size
    return 2.0 * (t.concordant - t.discordant) / (n * (n - 1))


def distance_from_tally(t: PairTally, cfg: PenaltyConfig | float | None = None) -> float:
    cfg = _as_penalty(cfg)
    if t.comparable == 0:
        raise NoComparablePairs("no pair of entrants is present in both rankings")
    return (t.discordant + cfg.p * t.tie_penalized) / t.comparable


def kendall_dist_p(a, b, cfg: PenaltyConfig | float | None = None) -> float:
    """Normalized Kendall distance with tie penalty ``p``, in [0, 1]."""
    return distance_from_tally(tally_pairs(a, b), cfg)


def tau_corrected_pair(a, b, cfg: PenaltyConfig | float | None = None) -> float:
    return 1.0 - 2.0 * kendall_dist_p(a, b, cfg)


def tau_evolutive(series: RankingSeries | Sequence, cfg: PenaltyConfig | float | None = None) -> NsResult:
    """Mean corrected coefficient over the ``m - 1`` consecutive ranking pairs.

    Consecutive pairs sharing no comparable pair are skipped and counted.
    """
    if not isinstance(series, RankingSeries):
        series = RankingSeries(series)
    cfg = _as_penalty(cfg)
    labels = series.labels

    details: list[PairDetail] = []
    values: list[float] = []
    for k in range(series.m - 1):
        t = tally_pairs(series[k], series[k + 1])
        label = f"{labels[k]}->{labels[k + 1]}" if labels else None
        if t.comparable == 0:
            details.append(PairDetail(k, label, None, 0, True))
            continue
        tau = 1.0 - 2.0 * distance_from_tally(t, cfg)
        values.append(tau)
        details.append(PairDetail(k, label, tau, t.comparable, False))

    if not values:
        raise AllPairsIncomparable(f"none of the {series.m - 1} consecutive ranking pairs has a comparable pair")
    tau_ev = float(np.mean(values))
    # guard against mean rounding escaping [-1, 1]
    tau_ev = min(1.0, max(-1.0, tau_ev))
    return NsResult(
        tau_ev=tau_ev,
        ns=normalized_strength(tau_ev),
        pair_details=details,
        skipped_pairs=len(details) - len(values),
    )


def normalized_strength(tau_ev: float) -> float:
    if not -1.0 <= tau_ev <= 1.0:
        raise DomainError(f"tau_ev must lie in [-1, 1], got {tau_ev}")
    return (1.0 - tau_ev) / 2.0
