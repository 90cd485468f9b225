"""``rankdrift`` command-line entry point."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import report
from .errors import DataError, DomainError, RankdriftError
from .ingest import load_season, parse_standings_matrix
from .ranking import DEFAULT_PENALTY, PenaltyConfig

PENALTY_ENV = "RANKDRIFT_PENALTY"
FIXTURES = {"f1": "f1_ns.csv", "football": "football_ns.csv"}

EXIT_OK, EXIT_REPORTED_ERRORS, EXIT_FAILURE = 0, 1, 2


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _default_penalty() -> float:
    raw = os.environ.get(PENALTY_ENV)
    if raw is None or raw == "":
        return DEFAULT_PENALTY
    try:
        return PenaltyConfig(float(raw)).p
    except ValueError:
        raise DomainError(f"{PENALTY_ENV}={raw!r} is not a penalty in [0, 1/2]") from None


def _read_rows(paths: list[str]) -> list[dict]:
    rows = []
    for path in paths:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise DataError(f"cannot read rows: {exc.strerror}", source=path) from None
        rows.extend(report.parse_rows(text, source=path))
    return rows


def _reference(args):
    if args.no_reference:
        return None
    if args.reference:
        rows = _read_rows([args.reference])
        return {(r["year"], r["series"]): r["ns"] for r in rows}
    return report.published_reference()


def cmd_ns(args, out) -> int:
    p = args.penalty if args.penalty is not None else _default_penalty()
    PenaltyConfig(p)
    reference = _reference(args)
    reports = []
    if args.standings:
        if args.year is None or not args.label:
            raise DomainError("--standings needs --year and --label")
        path = Path(args.standings)
        try:
            data = path.read_bytes()
        except OSError as exc:
            raise DataError(f"cannot read standings: {exc.strerror}", source=str(path)) from None
        series = parse_standings_matrix(data, source=str(path))
        reports.append(report.standings_report(series, args.year, args.label, p, reference))
    if args.manifest:
        def run(path):
            season = load_season(path)
            return report.season_report(season, args.entity, args.method, p, reference)

        with ThreadPoolExecutor(max_workers=min(8, len(args.manifest))) as pool:
            reports.extend(pool.map(run, args.manifest))
    if not reports:
        raise DomainError("give --manifest or --standings")

    reports = report.sort_reports(reports)
    if args.format == "csv":
        out.write(report.reports_to_csv(reports))
    else:
        out.write(_dump({
            "schema_version": report.SCHEMA_VERSION,
            "command": "ns",
            "flag_threshold": report.FLAG_THRESHOLD,
            "reports": [r.to_dict() for r in reports],
        }))
    return EXIT_OK


def cmd_summary(args, out) -> int:
    doc = report.summary_report(_read_rows(args.rows), args.group_by.split(","))
    out.write(report.plot_data_tsv(doc) if args.plot_data else _dump(doc))
    return EXIT_OK


def cmd_tests(args, out) -> int:
    doc = report.tests_report(_read_rows(args.rows))
    out.write(_dump(doc))
    return EXIT_REPORTED_ERRORS if doc["errors"] else EXIT_OK


def cmd_compare(args, out) -> int:
    f1_series = [s for s in args.f1_series.split(",") if s] if args.f1_series else None
    doc = report.compare_report(_read_rows(args.f1), _read_rows(args.football), f1_series)
    out.write(_dump(doc))
    return EXIT_OK


def cmd_fixture(args, out) -> int:
    out.write(report.read_packaged(FIXTURES[args.name]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rankdrift", description="Competitive balance of ranking series.")
    sub = parser.add_subparsers(dest="command", required=True)

    ns = sub.add_parser("ns", help="evolutive Kendall coefficient and NS of seasons")
    ns.add_argument("--manifest", action="append", default=[], help="season manifest (repeatable)")
    ns.add_argument("--standings", help="league standings matrix CSV")
    ns.add_argument("--label", help="series name for --standings, e.g. laliga")
    ns.add_argument("--year", type=int, help="season year for --standings")
    ns.add_argument("--entity", choices=["drivers", "constructors"])
    ns.add_argument("--method", choices=["m1", "m2"])
    ns.add_argument("--penalty", type=float, help=f"tie penalty p in [0, 1/2] (default ${PENALTY_ENV} or 0.5)")
    ns.add_argument("--format", choices=["json", "csv"], default="json")
    ref = ns.add_mutually_exclusive_group()
    ref.add_argument("--reference", help="CSV of reference NS values (year,series,ns)")
    ref.add_argument("--no-reference", action="store_true", help="do not compare with published values")
    ns.set_defaults(func=cmd_ns)

    summary = sub.add_parser("summary", help="mean, std and five-number summary per group")
    summary.add_argument("rows", nargs="+", help="NS row CSV files")
    summary.add_argument("--group-by", default="series", help="comma separated grouping columns")
    summary.add_argument("--plot-data", action="store_true", help="emit five-number-summary TSV")
    summary.set_defaults(func=cmd_summary)

    tests = sub.add_parser("tests", help="normality and mean-comparison tests on F1 NS series")
    tests.add_argument("rows", nargs="+")
    tests.set_defaults(func=cmd_tests)

    compare = sub.add_parser("compare", help="ratio of mean F1 NS to mean football NS")
    compare.add_argument("--f1", nargs="+", required=True)
    compare.add_argument("--football", nargs="+", required=True)
    compare.add_argument(
        "--f1-series", default=",".join(report.COMPARE_F1_SERIES),
        help="comma separated F1 series to compare ('' for all)",
    )
    compare.set_defaults(func=cmd_compare)

    fixture = sub.add_parser("fixture", help="print a packaged published-values table")
    fixture.add_argument("name", choices=sorted(FIXTURES))
    fixture.set_defaults(func=cmd_fixture)
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except RankdriftError as exc:
        record = {"kind": exc.kind, "message": str(exc)}
        if isinstance(exc, DataError):
            record.update({"file": exc.source, "line": exc.line})
        err.write(_dump({"schema_version": report.SCHEMA_VERSION, "error": record}))
        return EXIT_FAILURE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
