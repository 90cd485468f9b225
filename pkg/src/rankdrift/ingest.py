"""Strict readers for race classifications, season manifests and league tables.

Three formats are understood, all UTF-8, comma separated, LF or CRLF:

``race CSV``
    header ``entrant_id,name,status,position,fastest_lap``; ``position`` is
    empty unless ``status`` is ``FIN``; ``fastest_lap`` is ``0`` or ``1``.
``season manifest``
    JSON object with ``year``, ``entity``, ``races`` (paths relative to the
    manifest), ``roster`` (``id``, ``name``, ``team``) and optional
    ``teams`` and ``fastest_lap_bonus``.
``standings matrix``
    CSV whose first column is ``entrant_id`` and every further column is one
    round; each round column is a permutation of ``1..n``.
"""

from __future__ import annotations

import csv
import io
import json
import re
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .errors import DataError, ParseError
from .f1 import Entrant, GpClassification, PointsScheme, RaceEntry, SeasonDataset, Status
from .ranking import Ranking, RankingSeries

GP_HEADER = ["entrant_id", "name", "status", "position", "fastest_lap"]
ENTITIES = ("drivers", "constructors")

_POS_INT = re.compile(r"[1-9][0-9]*\Z")


def _decode(data: bytes | str, source: str) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid UTF-8 ({exc.reason})", source=source) from None


def _rows(text: str, source: str):
    """Yield ``(line_number, row)``; blank lines are rejected, not skipped."""
    if not text.strip():
        raise ParseError("file is empty", source=source)
    reader = csv.reader(io.StringIO(text, newline=""), strict=True)
    try:
        for row in reader:
            if not row:
                raise ParseError("blank line", source=source, line=reader.line_num)
            yield reader.line_num, row
    except csv.Error as exc:
        raise ParseError(str(exc), source=source, line=reader.line_num) from None


def parse_gp_csv(data: bytes | str, label: str = "GP", source: str | None = None) -> GpClassification:
    source = source or label
    rows = _rows(_decode(data, source), source)
    _, header = next(rows)
    if header != GP_HEADER:
        raise ParseError(f"expected header {','.join(GP_HEADER)!r}, got {','.join(header)!r}", source=source, line=1)

    entries: list[RaceEntry] = []
    seen: dict[str, int] = {}
    fin_line: dict[int, int] = {}
    for line, row in rows:
        if len(row) != len(GP_HEADER):
            raise ParseError(f"expected {len(GP_HEADER)} fields, got {len(row)}", source=source, line=line)
        entrant_id, name, status, position, fastest = row
        if not entrant_id:
            raise ParseError("empty entrant_id", source=source, line=line)
        if entrant_id in seen:
            raise ParseError(f"duplicate entrant {entrant_id!r} (first on line {seen[entrant_id]})", source=source, line=line)
        seen[entrant_id] = line
        try:
            status = Status(status)
        except ValueError:
            raise ParseError(f"unknown status {status!r}", source=source, line=line) from None
        if status is Status.FIN:
            if not _POS_INT.match(position):
                raise ParseError(f"FIN row needs a positive integer position, got {position!r}", source=source, line=line)
            pos = int(position)
            if pos in fin_line:
                raise ParseError(f"position {pos} repeated (first on line {fin_line[pos]})", source=source, line=line)
            fin_line[pos] = line
        else:
            if position != "":
                raise ParseError(f"{status.value} row must have an empty position, got {position!r}", source=source, line=line)
            pos = None
        if fastest not in ("0", "1"):
            raise ParseError(f"fastest_lap must be 0 or 1, got {fastest!r}", source=source, line=line)
        entries.append(RaceEntry(entrant_id, status, pos, fastest == "1", name))

    if not entries:
        raise ParseError("no entries after the header", source=source)
    positions = sorted(fin_line)
    if not positions:
        raise ParseError("no FIN rows: at least one finisher is required", source=source)
    if positions != list(range(1, len(positions) + 1)):
        missing = sorted(set(range(1, positions[-1] + 1)) - set(positions))
        raise ParseError(f"finishing positions are not contiguous; missing {missing}", source=source, line=fin_line[positions[-1]])
    return GpClassification(label, entries)


def gp_to_csv(gp: GpClassification) -> bytes:
    buf = io.StringIO(newline="")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(GP_HEADER)
    for e in gp.entries:
        writer.writerow([
            e.entrant_id,
            e.name,
            e.status.value,
            "" if e.position is None else e.position,
            "1" if e.fastest_lap else "0",
        ])
    return buf.getvalue().encode("utf-8")


def _require(obj: dict, key: str, kind: type | tuple, source: str):
    if key not in obj:
        raise ParseError(f"manifest is missing {key!r}", source=source)
    value = obj[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise ParseError(f"manifest field {key!r} has the wrong type", source=source)
    return value


def _entrants(items, what: str, source: str, need_team: bool) -> list[Entrant]:
    out: list[Entrant] = []
    seen: set[str] = set()
    for k, item in enumerate(items):
        if not isinstance(item, dict) or not isinstance(item.get("id"), str) or not item["id"]:
            raise ParseError(f"{what}[{k}] needs a non-empty string 'id'", source=source)
        if item["id"] in seen:
            raise DataError(f"duplicate {what} id {item['id']!r}", source=source)
        seen.add(item["id"])
        team = item.get("team")
        if team is not None and not isinstance(team, str):
            raise ParseError(f"{what}[{k}].team must be a string", source=source)
        if need_team and not team:
            raise DataError(f"driver {item['id']!r} has no team but entity is constructors", source=source)
        out.append(Entrant(item["id"], str(item.get("name", "")), team or None))
    return out


def parse_season_manifest(data: bytes | str, base_dir: str | Path = ".", source: str = "manifest") -> SeasonDataset:
    try:
        doc = json.loads(_decode(data, source))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", source=source, line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("manifest must be a JSON object", source=source)

    year = _require(doc, "year", int, source)
    entity = _require(doc, "entity", str, source)
    if entity not in ENTITIES:
        raise ParseError(f"entity must be one of {ENTITIES}, got {entity!r}", source=source)
    races = _require(doc, "races", list, source)
    if not all(isinstance(r, str) for r in races):
        raise ParseError("races must be a list of file paths", source=source)
    if len(races) < 2:
        raise DataError(f"a season needs at least 2 races, manifest lists {len(races)}", source=source)
    bonus = doc.get("fastest_lap_bonus")
    if bonus is not None and not isinstance(bonus, bool):
        raise ParseError("fastest_lap_bonus must be true, false or absent", source=source)

    roster = _entrants(_require(doc, "roster", list, source), "roster", source, entity == "constructors")
    teams = _entrants(doc.get("teams", []), "teams", source, False)
    if teams:
        team_ids = {t.id for t in teams}
        for e in roster:
            if e.team is not None and e.team not in team_ids:
                raise DataError(f"driver {e.id!r} belongs to unknown team {e.team!r}", source=source)

    base = Path(base_dir)
    paths = [base / r for r in races]
    for path in paths:
        if not path.is_file():
            raise DataError(f"race file not found: {path}", source=source)

    def load(path: Path) -> GpClassification:
        return parse_gp_csv(path.read_bytes(), label=path.stem, source=str(path))

    with ThreadPoolExecutor(max_workers=min(8, len(paths))) as pool:
        classifications = list(pool.map(load, paths))

    return SeasonDataset(
        year=year,
        entity=entity,
        races=classifications,
        roster=roster,
        scheme=PointsScheme.for_year(year, bonus),
        teams=teams,
    )


def load_season(path: str | Path) -> SeasonDataset:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise DataError(f"cannot read manifest: {exc.strerror}", source=str(path)) from None
    return parse_season_manifest(data, base_dir=path.parent, source=str(path))


def parse_standings_matrix(data: bytes | str, source: str = "standings") -> RankingSeries:
    rows = _rows(_decode(data, source), source)
    _, header = next(rows)
    if not header or header[0] != "entrant_id" or len(header) < 3:
        raise ParseError("header must be 'entrant_id' followed by at least two round labels", source=source, line=1)
    rounds = header[1:]
    if len(set(rounds)) != len(rounds):
        raise ParseError("duplicate round labels", source=source, line=1)

    entrants: list[str] = []
    columns: list[list[int]] = [[] for _ in rounds]
    for line, row in rows:
        if len(row) != len(header):
            raise ParseError(f"ragged row: expected {len(header)} fields, got {len(row)}", source=source, line=line)
        if not row[0] or row[0] in entrants:
            raise ParseError(f"empty or duplicate entrant_id {row[0]!r}", source=source, line=line)
        entrants.append(row[0])
        for col, cell in zip(columns, row[1:]):
            if not _POS_INT.match(cell):
                raise ParseError(f"cell {cell!r} is not a positive integer", source=source, line=line)
            col.append(int(cell))

    n = len(entrants)
    if n < 2:
        raise ParseError("at least two entrants are required", source=source)
    expected = list(range(1, n + 1))
    for label, col in zip(rounds, columns):
        if sorted(col) != expected:
            raise ParseError(f"round {label!r} is not a permutation of 1..{n}", source=source)
    return RankingSeries((Ranking(col) for col in columns), labels=rounds)

