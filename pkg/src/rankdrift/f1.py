"""Formula 1 championship model: race points, driver and constructor rankings.

Driver rankings come straight from race classifications (non-finishers are
absent).  Constructor rankings are built from per-race team scores in one of
two ways:

* method 1: teams on zero points share the last place,
* method 2: teams on zero points are absent.

Positive scorers are dense-ranked by score in both methods.
"""

from __future__ import annotations

import enum
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from .errors import DataError, StructuralError
from .ranking import ABSENT, Ranking, RankingSeries

FIA_2010_POINTS = (25, 18, 15, 12, 10, 8, 6, 4, 2, 1)
FASTEST_LAP_FROM_YEAR = 2019


class Status(str, enum.Enum):
    FIN = "FIN"
    DNF = "DNF"
    DNS = "DNS"
    DSQ = "DSQ"


class SeriesMethod(str, enum.Enum):
    DRIVERS = "drivers"
    CONSTRUCTORS_M1 = "constructors_m1"
    CONSTRUCTORS_M2 = "constructors_m2"


@dataclass(frozen=True)
class PointsScheme:
    position_points: tuple[float, ...] = FIA_2010_POINTS
    fastest_lap_bonus: bool = False
    fastest_lap_requires_top10: bool = field(default=True, init=False)

    def __post_init__(self):
        if any(p < 0 for p in self.position_points):
            raise ValueError("points must be non-negative")

    @classmethod
    def for_year(cls, year: int, fastest_lap_bonus: bool | None = None) -> PointsScheme:
        if fastest_lap_bonus is None:
            fastest_lap_bonus = year >= FASTEST_LAP_FROM_YEAR
        return cls(fastest_lap_bonus=fastest_lap_bonus)

    def points_for_position(self, position: int) -> float:
        if 1 <= position <= len(self.position_points):
            return self.position_points[position - 1]
        return 0


@dataclass(frozen=True)
class RaceEntry:
    entrant_id: str
    status: Status
    position: int | None = None
    fastest_lap: bool = False
    name: str = ""

    def __post_init__(self):
        status = Status(self.status)
        object.__setattr__(self, "status", status)
        if (status is Status.FIN) != (self.position is not None):
            raise DataError(f"{self.entrant_id}: position must be given exactly when status is FIN")
        if self.position is not None and self.position < 1:
            raise DataError(f"{self.entrant_id}: position must be >= 1")


@dataclass(frozen=True)
class GpClassification:
    label: str
    entries: tuple[RaceEntry, ...]

    def __init__(self, label: str, entries: Sequence[RaceEntry]):
        entries = tuple(entries)
        ids = [e.entrant_id for e in entries]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise DataError(f"{label}: duplicate entrants {dupes}")
        positions = sorted(e.position for e in entries if e.status is Status.FIN)
        if not positions or positions != list(range(1, len(positions) + 1)):
            raise DataError(f"{label}: finishing positions must be 1..k without gaps or repeats, got {positions}")
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "entries", entries)

    def by_id(self) -> dict[str, RaceEntry]:
        return {e.entrant_id: e for e in self.entries}


@dataclass(frozen=True)
class Entrant:
    id: str
    name: str = ""
    team: str | None = None


@dataclass
class SeasonDataset:
    year: int
    entity: str
    races: list[GpClassification]
    roster: list[Entrant]
    scheme: PointsScheme
    teams: list[Entrant] = field(default_factory=list)

    def __post_init__(self):
        known = {e.id for e in self.roster}
        for gp in self.races:
            for entry in gp.entries:
                if entry.entrant_id not in known:
                    raise DataError(f"{gp.label}: entrant {entry.entrant_id!r} is not in the roster")
        if not self.teams:
            seen: dict[str, Entrant] = {}
            for e in self.roster:
                if e.team is not None and e.team not in seen:
                    seen[e.team] = Entrant(e.team, e.team)
            self.teams = list(seen.values())

    @property
    def team_of(self) -> dict[str, str]:
        return {e.id: e.team for e in self.roster if e.team is not None}

    @property
    def driver_ids(self) -> list[str]:
        return [e.id for e in self.roster]

    @property
    def team_ids(self) -> list[str]:
        return [t.id for t in self.teams]


def points_for_entry(entry: RaceEntry, scheme: PointsScheme) -> float:
    if entry.status is not Status.FIN:
        return 0
    pts = scheme.points_for_position(entry.position)
    if scheme.fastest_lap_bonus and entry.fastest_lap and entry.position <= 10:
        pts += 1
    return pts


def drivers_ranking(gp: GpClassification, roster: Sequence[str | Entrant]) -> Ranking:
    ids = [r.id if isinstance(r, Entrant) else r for r in roster]
    slot = {d: i for i, d in enumerate(ids)}
    entries: list[int | None] = [ABSENT] * len(ids)
    for e in gp.entries:
        if e.entrant_id not in slot:
            raise DataError(f"{gp.label}: entrant {e.entrant_id!r} is not in the roster")
        if e.status is Status.FIN:
            entries[slot[e.entrant_id]] = e.position
    return Ranking(entries)


def constructor_scores(
    gp: GpClassification,
    team_of: Mapping[str, str],
    scheme: PointsScheme,
    teams: Sequence[str] | None = None,
) -> dict[str, float]:
    """Per-team race score: the sum of the team's entries' points.

    ``teams`` fixes the key set (and order); teams without an entry score 0.
    """
    scores: dict[str, float] = {t: 0 for t in (teams if teams is not None else dict.fromkeys(team_of.values()))}
    for e in gp.entries:
        team = team_of.get(e.entrant_id)
        if team is None:
            raise DataError(f"{gp.label}: driver {e.entrant_id!r} is not mapped to a team")
        scores[team] = scores.get(team, 0) + points_for_entry(e, scheme)
    return scores


def _dense_ranks(scores: Mapping[str, float]) -> dict[str, int]:
    distinct = sorted({s for s in scores.values() if s > 0}, reverse=True)
    rank_of = {s: i + 1 for i, s in enumerate(distinct)}
    return {t: rank_of[s] for t, s in scores.items() if s > 0}


def constructors_ranking_m1(scores: Mapping[str, float], teams: Sequence[str] | None = None) -> Ranking:
    """Dense ranks for scorers; every zero-score team tied just after them."""
    teams = list(scores) if teams is None else list(teams)
    ranks = _dense_ranks(scores)
    last = len(set(ranks.values())) + 1
    return Ranking(ranks.get(t, last) for t in teams)


def constructors_ranking_m2(scores: Mapping[str, float], teams: Sequence[str] | None = None) -> Ranking:
    """Dense ranks for scorers; zero-score teams absent."""
    teams = list(scores) if teams is None else list(teams)
    ranks = _dense_ranks(scores)
    return Ranking(ranks.get(t, ABSENT) for t in teams)


def race_ranking(season: SeasonDataset, gp: GpClassification, method: SeriesMethod | str) -> Ranking:
    method = SeriesMethod(method)
    if method is SeriesMethod.DRIVERS:
        return drivers_ranking(gp, season.driver_ids)
    scores = constructor_scores(gp, season.team_of, season.scheme, season.team_ids)
    if method is SeriesMethod.CONSTRUCTORS_M1:
        return constructors_ranking_m1(scores, season.team_ids)
    return constructors_ranking_m2(scores, season.team_ids)


def season_series(season: SeasonDataset, method: SeriesMethod | str) -> RankingSeries:
    if len(season.races) < 2:
        raise StructuralError(f"season {season.year} has {len(season.races)} race(s); at least 2 are needed")
    return RankingSeries(
        (race_ranking(season, gp, method) for gp in season.races),
        labels=[gp.label for gp in season.races],
    )


def accumulate_standings(season: SeasonDataset, entity: str | None = None) -> list[tuple[str, float]]:
    """Season totals, best first.

    Equal totals fall back to countback (more wins, then more 2nds, ...) and
    finally to roster order.  For constructors the countback uses every
    finishing position obtained by the team's drivers.
    """
    entity = entity or season.entity
    if entity == "constructors":
        ids = season.team_ids
        owner = season.team_of
    elif entity == "drivers":
        ids = season.driver_ids
        owner = {d: d for d in ids}
    else:
        raise ValueError(f"unknown entity {entity!r}")

    totals = {i: 0 for i in ids}
    finishes: dict[str, list[int]] = {i: [] for i in ids}
    for gp in season.races:
        for e in gp.entries:
            who = owner.get(e.entrant_id)
            if who is None:
                raise DataError(f"{gp.label}: driver {e.entrant_id!r} is not mapped to a team")
            totals[who] += points_for_entry(e, season.scheme)
            if e.status is Status.FIN:
                finishes[who].append(e.position)

    depth = max((p for f in finishes.values() for p in f), default=0)

    def countback(i: str) -> tuple[int, ...]:
        counts = [0] * depth
        for p in finishes[i]:
            counts[p - 1] += 1
        return tuple(-c for c in counts)

    order = {i: k for k, i in enumerate(ids)}
    ranked = sorted(ids, key=lambda i: (-totals[i], countback(i), order[i]))
    return [(i, totals[i]) for i in ranked]
