"""Seeded synthetic F1-like seasons for property checks."""

from __future__ import annotations

import numpy as np

from rankdrift.f1 import Entrant, GpClassification, PointsScheme, RaceEntry, SeasonDataset, Status


def synthetic_season(seed: int, n_teams: int = 10, n_races: int = 20, dnf_rate: float = 0.15,
                     all_teams_score: bool = False, year: int = 2016) -> SeasonDataset:
    """Two cars per team; finishing order driven by noisy team strength.

    With ``all_teams_score`` the top ``n_teams`` places always hold one car of
    every team and nobody retires, so no team ever ends a race on zero points
    (requires ``n_teams <= 10``).
    """
    rng = np.random.default_rng(seed)
    teams = [f"team{t}" for t in range(n_teams)]
    roster = [Entrant(f"d{t}_{k}", f"Driver {t}.{k}", teams[t]) for t in range(n_teams) for k in range(2)]
    strength = rng.normal(size=len(roster)) + np.repeat(rng.normal(scale=2.0, size=n_teams), 2)

    races = []
    for r in range(n_races):
        pace = strength + rng.normal(scale=1.5, size=len(roster))
        order = [roster[i] for i in np.argsort(-pace)]
        if all_teams_score:
            lead, rest, seen = [], [], set()
            for e in order:
                (rest if e.team in seen else lead).append(e)
                seen.add(e.team)
            order = lead + rest
            finished = order
            dnf = []
        else:
            out = rng.random(len(order)) < dnf_rate
            out[int(rng.integers(len(order)))] = False  # at least one finisher
            finished = [e for e, o in zip(order, out) if not o]
            dnf = [e for e, o in zip(order, out) if o]
        fastest = finished[int(rng.integers(len(finished)))].id
        entries = [RaceEntry(e.id, Status.FIN, k + 1, e.id == fastest, e.name) for k, e in enumerate(finished)]
        entries += [RaceEntry(e.id, Status.DNF, None, False, e.name) for e in dnf]
        races.append(GpClassification(f"GP{r + 1}", entries))

    return SeasonDataset(
        year=year, entity="constructors", races=races, roster=roster,
        scheme=PointsScheme.for_year(year), teams=[Entrant(t, t) for t in teams],
    )
