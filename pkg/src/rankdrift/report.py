"""Report builders behind the command-line interface.

Every builder returns plain dicts/lists ready for JSON serialization; the
CLI only handles argument parsing, formatting and exit codes.  NS result
rows are exchanged as CSV with at least the columns ``year,series,ns``.
"""

from __future__ import annotations

import csv
import io
import math
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import asdict, dataclass
from importlib import resources

from .errors import DataError, DomainError, ParseError, RankdriftError
from .f1 import SeasonDataset, SeriesMethod, season_series
from .ranking import PenaltyConfig, RankingSeries, tau_evolutive
from .stats import (
    shapiro_wilk,
    summarize,
    t_test_paired,
    t_test_two_sample_pooled,
    t_test_welch,
    variance_ratio,
)

SCHEMA_VERSION = "1.0"
FLAG_THRESHOLD = 0.05
VARIANCE_RATIO_LIMIT = 4.0
ALPHA = 0.05
F1_SERIES = ("drivers", "constructors_m1", "constructors_m2")
# groups the F1-vs-football comparison uses by default
COMPARE_F1_SERIES = ("drivers", "constructors_m1")

ROW_FIELDS = [
    "year", "series", "entity", "method", "p", "m", "n",
    "tau_ev", "ns", "skipped_pairs", "reference_ns", "flagged",
]


@dataclass(frozen=True)
class SeasonReport:
    year: int
    series: str
    entity: str
    method: str
    p: float
    m: int
    n: int
    tau_ev: float
    ns: float
    skipped_pairs: int
    reference_ns: float | None = None
    flagged: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def read_packaged(name: str) -> str:
    return resources.files("rankdrift.data").joinpath(name).read_text(encoding="utf-8")


def published_reference() -> dict[tuple[int, str], float]:
    """Published NS values keyed by ``(year, series)``."""
    ref: dict[tuple[int, str], float] = {}
    for name in ("f1_ns.csv", "football_ns.csv"):
        for row in parse_rows(read_packaged(name), source=name):
            ref[(row["year"], row["series"])] = row["ns"]
    return ref


def _with_reference(rep: SeasonReport, reference: Mapping[tuple[int, str], float] | None) -> SeasonReport:
    if not reference:
        return rep
    ref = reference.get((rep.year, rep.series))
    if ref is None:
        return rep
    return SeasonReport(**{**rep.to_dict(), "reference_ns": ref, "flagged": abs(rep.ns - ref) > FLAG_THRESHOLD})


def _from_series(series: RankingSeries, *, year, name, entity, method, cfg, reference) -> SeasonReport:
    res = tau_evolutive(series, cfg)
    rep = SeasonReport(
        year=year, series=name, entity=entity, method=method, p=cfg.p,
        m=series.m, n=series.n, tau_ev=res.tau_ev, ns=res.ns, skipped_pairs=res.skipped_pairs,
    )
    return _with_reference(rep, reference)


def series_name(entity: str, method: str | None) -> SeriesMethod:
    if entity == "drivers":
        return SeriesMethod.DRIVERS
    if entity == "constructors":
        if method not in ("m1", "m2"):
            raise DomainError("constructors need --method m1 or m2")
        return SeriesMethod(f"constructors_{method}")
    raise DomainError(f"unknown entity {entity!r}")


def season_report(
    season: SeasonDataset,
    entity: str | None = None,
    method: str | None = None,
    p: float = 0.5,
    reference: Mapping[tuple[int, str], float] | None = None,
) -> SeasonReport:
    entity = entity or season.entity
    kind = series_name(entity, method)
    return _from_series(
        season_series(season, kind),
        year=season.year, name=kind.value, entity=entity,
        method=method if entity == "constructors" else "drivers",
        cfg=PenaltyConfig(p), reference=reference,
    )


def standings_report(
    series: RankingSeries,
    year: int,
    label: str,
    p: float = 0.5,
    reference: Mapping[tuple[int, str], float] | None = None,
) -> SeasonReport:
    return _from_series(
        series, year=year, name=label, entity="football", method="standings",
        cfg=PenaltyConfig(p), reference=reference,
    )


def sort_reports(reports: Iterable[SeasonReport]) -> list[SeasonReport]:
    return sorted(reports, key=lambda r: (r.year, r.entity, r.method, r.series))


def reports_to_csv(reports: Sequence[SeasonReport]) -> str:
    buf = io.StringIO(newline="")
    writer = csv.DictWriter(buf, fieldnames=ROW_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = r.to_dict()
        row["reference_ns"] = "" if r.reference_ns is None else repr(r.reference_ns)
        row["flagged"] = "1" if r.flagged else "0"
        for key in ("p", "tau_ev", "ns"):
            row[key] = repr(row[key])
        writer.writerow(row)
    return buf.getvalue()


def parse_rows(text: str, source: str = "rows") -> list[dict]:
    """Read NS result rows; only ``year``, ``series`` and ``ns`` are required."""
    reader = csv.DictReader(io.StringIO(text, newline=""))
    if reader.fieldnames is None:
        raise ParseError("file is empty", source=source)
    missing = {"year", "series", "ns"} - set(reader.fieldnames)
    if missing:
        raise ParseError(f"missing columns {sorted(missing)}", source=source, line=1)
    rows = []
    for row in reader:
        line = reader.line_num
        try:
            year = int(row["year"])
            ns = float(row["ns"])
        except (TypeError, ValueError):
            raise ParseError("year must be an integer and ns a number", source=source, line=line) from None
        if not row["series"]:
            raise ParseError("empty series", source=source, line=line)
        if not 0.0 <= ns <= 1.0:
            raise ParseError(f"ns {ns} outside [0, 1]", source=source, line=line)
        rows.append({**row, "year": year, "ns": ns})
    return rows


def group_rows(rows: Iterable[Mapping], keys: Sequence[str] = ("series",)) -> dict[str, list[tuple[int, float]]]:
    groups: dict[str, list[tuple[int, float]]] = defaultdict(list)
    for row in rows:
        absent = [k for k in keys if k not in row]
        if absent:
            raise DataError(f"rows have no column(s) {absent} to group by")
        name = "/".join(str(row[k]) for k in keys)
        groups[name].append((row["year"], row["ns"]))
    return {k: sorted(v) for k, v in sorted(groups.items())}


def _values(pairs: Sequence[tuple[int, float]]) -> list[float]:
    return [v for _, v in pairs]


def summary_report(rows: Iterable[Mapping], keys: Sequence[str] = ("series",)) -> dict:
    groups = group_rows(rows, keys)
    out = {}
    for name, pairs in groups.items():
        if len(pairs) < 2:
            raise DomainError(f"group {name!r} has {len(pairs)} row(s); at least 2 are needed")
        out[name] = summarize(_values(pairs)).to_dict()
    return {"schema_version": SCHEMA_VERSION, "command": "summary", "group_by": list(keys), "groups": out}


def plot_data_tsv(summary: Mapping) -> str:
    lines = ["group\tn\tmin\tq1\tmedian\tq3\tmax"]
    for name, s in summary["groups"].items():
        nums = "\t".join(repr(s[k]) for k in ("min", "q1", "median", "q3", "max"))
        lines.append(f"{name}\t{s['n']}\t{nums}")
    return "\n".join(lines) + "\n"


def _error_record(exc: Exception) -> dict:
    return {"kind": getattr(exc, "kind", "error"), "message": str(exc)}


def _by_year(groups, name) -> dict[int, float]:
    if name not in groups:
        raise DataError(f"series {name!r} is missing from the input rows")
    by_year: dict[int, float] = {}
    for year, v in groups[name]:
        if year in by_year:
            raise DataError(f"series {name!r} has two rows for {year}")
        by_year[year] = v
    return by_year


def tests_report(rows: Iterable[Mapping]) -> dict:
    """Normality per series, paired m1-vs-m2 test, variance gate, pooled m1-vs-drivers test.

    Failures of individual tests are collected in ``errors`` rather than
    raised; the caller decides the exit status from that list.
    """
    groups = group_rows(rows)
    series = {name: _by_year(groups, name) for name in F1_SERIES}
    errors: list[dict] = []

    def attempt(step, fn, *args):
        try:
            return fn(*args).to_dict()
        except RankdriftError as exc:
            errors.append({"step": step, **_error_record(exc)})
            return None

    normality = {}
    for name in F1_SERIES:
        res = attempt(f"shapiro_wilk:{name}", shapiro_wilk, list(series[name].values()))
        if res is not None:
            res["normality_rejected"] = res["p_value"] < ALPHA
        normality[name] = res

    drv, m1, m2 = series["drivers"], series["constructors_m1"], series["constructors_m2"]
    common = sorted(set(m1) & set(m2))
    paired = attempt(
        "t_paired:constructors_m1-constructors_m2",
        t_test_paired, [m1[y] for y in common], [m2[y] for y in common],
    )
    if paired is not None:
        paired["years"] = len(common)
        paired["means_differ"] = paired["p_value"] < ALPHA

    gate: dict = {"limit": VARIANCE_RATIO_LIMIT, "value": None, "pooled_allowed": False}
    pooled = None
    try:
        ratio = variance_ratio(list(m1.values()), list(drv.values()))
    except RankdriftError as exc:
        errors.append({"step": "variance_ratio", **_error_record(exc)})
    else:
        gate["value"] = None if math.isinf(ratio) else ratio
        gate["pooled_allowed"] = ratio <= VARIANCE_RATIO_LIMIT
        if not gate["pooled_allowed"]:
            msg = "variance ratio exceeds the limit; pooled t-test refused, use Welch's unequal-variance t-test instead"
            errors.append({"step": "t_pooled:constructors_m1-drivers", "kind": "variance_gate", "message": msg})
            gate["welch"] = attempt("t_welch:constructors_m1-drivers", t_test_welch, list(m1.values()), list(drv.values()))

    if gate["pooled_allowed"]:
        pooled = attempt("t_pooled:constructors_m1-drivers", t_test_two_sample_pooled, list(m1.values()), list(drv.values()))
        if pooled is not None:
            pooled["means_differ"] = pooled["p_value"] < ALPHA

    return {
        "schema_version": SCHEMA_VERSION,
        "command": "tests",
        "alpha": ALPHA,
        "shapiro_wilk": normality,
        "paired": paired,
        "variance_ratio": gate,
        "pooled": pooled,
        "errors": errors,
    }


def compare_report(
    f1_rows: Iterable[Mapping],
    football_rows: Iterable[Mapping],
    f1_series: Sequence[str] | None = COMPARE_F1_SERIES,
) -> dict:
    """Ratio of mean F1 NS to mean football NS for every (F1, football) pairing."""
    f1 = group_rows(f1_rows)
    football = group_rows(football_rows)
    if f1_series:
        missing = [s for s in f1_series if s not in f1]
        if missing:
            raise DataError(f"F1 rows lack series {missing}")
        f1 = {k: f1[k] for k in f1_series}
    if not f1 or not football:
        raise DataError("both the F1 and the football groups must be non-empty")

    def mean_of(pairs):
        return math.fsum(_values(pairs)) / len(pairs)

    f1_means = {k: mean_of(v) for k, v in f1.items()}
    fb_means = {k: mean_of(v) for k, v in football.items()}
    ratios = []
    for a, ma in f1_means.items():
        for b, mb in fb_means.items():
            if mb == 0.0:
                raise DomainError(f"football group {b!r} has zero mean NS")
            ratios.append({"f1": a, "football": b, "f1_mean": ma, "football_mean": mb, "ratio": ma / mb})
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "compare",
        "f1_means": f1_means,
        "football_means": fb_means,
        "ratios": ratios,
    }


def packaged_rows(name: str) -> list[dict]:
    return parse_rows(read_packaged(name), source=name)
