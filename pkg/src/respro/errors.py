"""Exception hierarchy shared by every respro module."""

from __future__ import annotations


class ResproError(Exception):
    """Base class for all data and analysis errors raised by respro."""


class InvalidSeries(ResproError, ValueError):
    """A series violates a construction invariant."""


class EmptyIntersection(ResproError):
    """Two series share no year, so their sum would be empty."""

    def __init__(self, left: str, right: str):
        self.left = left
        self.right = right
        super().__init__(f"series {left!r} and {right!r} have no year in common")


class TooShort(ResproError):
    def __init__(self, name: str, length: int, minimum: int):
        self.name = name
        self.length = length
        self.minimum = minimum
        super().__init__(f"series {name!r} has {length} points, needs at least {minimum}")


class DegenerateWindow(ResproError):
    """A local smoothing window has no usable weight at all."""


class NonPositiveBaseline(ResproError):
    pass


class ZeroVariance(ResproError):
    pass


class InsufficientOverlap(ResproError):
    pass


class MissingColumn(ResproError, KeyError):
    def __init__(self, column: str, where: str = "table"):
        self.column = column
        super().__init__(f"column {column!r} missing from {where}")

    def __str__(self) -> str:
        return self.args[0]


# Alias used by the selection code paths.
ColumnMissing = MissingColumn


class ParseError(ResproError, ValueError):
    def __init__(self, row: int, column: str, text: str):
        self.row = row
        self.column = column
        self.text = text
        super().__init__(f"row {row}: cannot parse {column} value {text!r}")


class DuplicateKey(ResproError):
    def __init__(self, key: tuple, rows: list[int]):
        self.key = key
        self.rows = rows
        super().__init__(f"duplicate key {key!r} at rows {', '.join(map(str, rows))}")


class NonPositiveValue(ResproError, ValueError):
    def __init__(self, row: int, value: float):
        self.row = row
        self.value = value
        super().__init__(f"row {row}: value {value!r} is not strictly positive")


class NoMatchingRows(ResproError):
    pass
