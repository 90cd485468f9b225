"""Exception hierarchy shared by every rankdrift module."""

from __future__ import annotations


class RankdriftError(Exception):
    """Base class for all errors raised by this package."""

    kind = "error"


class StructuralError(RankdriftError, ValueError):
    """Inputs have incompatible shapes (sizes, lengths, counts)."""

    kind = "structural"


class DomainError(RankdriftError, ValueError):
    """An argument lies outside the domain an operation is defined on."""

    kind = "domain"


class NoComparablePairs(DomainError):
    kind = "no_comparable_pairs"


class AllPairsIncomparable(DomainError):
    kind = "all_pairs_incomparable"


class DegenerateSampleError(DomainError):
    kind = "degenerate_sample"


class DataError(RankdriftError, ValueError):
    """Dataset content is inconsistent (unknown entrant, missing team...)."""

    kind = "data"

    def __init__(self, message: str, *, source: str | None = None, line: int | None = None):
        self.message = message
        self.source = source
        self.line = line
        where = ""
        if source is not None:
            where = source if line is None else f"{source}:{line}"
        elif line is not None:
            where = f"line {line}"
        super().__init__(f"{where}: {message}" if where else message)


class ParseError(DataError):
    """A file does not follow its documented format."""

    kind = "parse"
