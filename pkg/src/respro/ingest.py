"""FAOSTAT CSV export loading and series extraction."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from os import PathLike
from typing import Literal, Sequence

import pandas as pd

from .errors import (
    DuplicateKey,
    MissingColumn,
    NoMatchingRows,
    NonPositiveValue,
    ParseError,
)
from .series import AnnualSeries

REQUIRED_COLUMNS = ("Area", "Item", "Year", "Value")
KEY_COLUMNS = ("Area", "Item", "Year")
YEAR = "Year"
VALUE = "Value"
ROW = "_row"

_PLAIN_NUMBER = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?")
_THOUSANDS = re.compile(r"[+-]?\d{1,3}(,\d{3})+(\.\d*)?")
_INTEGER = re.compile(r"[+-]?\d+")


@dataclass(frozen=True)
class LoadPolicy:
    on_nonpositive: Literal["error", "drop"] = "error"
    on_missing_value: Literal["drop", "error"] = "drop"

    def __post_init__(self) -> None:
        if self.on_nonpositive not in ("error", "drop"):
            raise ValueError(f"on_nonpositive must be 'error' or 'drop', not {self.on_nonpositive!r}")
        if self.on_missing_value not in ("drop", "error"):
            raise ValueError(f"on_missing_value must be 'drop' or 'error', not {self.on_missing_value!r}")


@dataclass(frozen=True)
class FaostatTable:
    """Typed rows of a FAOSTAT export.

    ``frame`` holds every original column (as text) with ``Year`` as int and
    ``Value`` as float; ``_row`` is the 1-based line number in the file.
    ``dropped`` counts rows removed by the load policy.
    """

    frame: pd.DataFrame
    dropped: dict[str, int] = field(default_factory=dict)
    source: str = ""

    @property
    def columns(self) -> list[str]:
        return [c for c in self.frame.columns if c != ROW]

    def __len__(self) -> int:
        return len(self.frame)

    def require(self, *columns: str) -> None:
        for col in columns:
            if col not in self.frame.columns:
                raise MissingColumn(col, self.source or "table")

    def select(self, filters: Sequence[tuple[str, str]]) -> pd.DataFrame:
        self.require(*(col for col, _ in filters))
        mask = pd.Series(True, index=self.frame.index)
        for col, value in filters:
            mask &= self.frame[col].astype(str) == str(value)
        return self.frame[mask]


def parse_number(text: str) -> float:
    """Parse a dot-decimal number, allowing comma thousands separators."""
    s = text.strip()
    if _PLAIN_NUMBER.fullmatch(s):
        return float(s)
    if _THOUSANDS.fullmatch(s):
        return float(s.replace(",", ""))
    raise ValueError(text)


def load_csv(
    path: str | PathLike,
    policy: LoadPolicy | None = None,
) -> FaostatTable:
    policy = policy or LoadPolicy()
    source = str(path)
    frame = pd.read_csv(
        path,
        sep=",",
        dtype=str,
        keep_default_na=False,
        encoding="utf-8-sig",
        skipinitialspace=False,
    )
    frame.columns = [str(c).strip() for c in frame.columns]
    for col in REQUIRED_COLUMNS:
        if col not in frame.columns:
            raise MissingColumn(col, source)

    # Header is line 1.
    frame[ROW] = range(2, len(frame) + 2)
    dropped = {"missing_value": 0, "nonpositive": 0}

    years: list[int] = []
    values: list[float] = []
    keep: list[bool] = []
    for row, ytext, vtext in zip(frame[ROW], frame[YEAR], frame[VALUE]):
        if not _INTEGER.fullmatch(ytext.strip()):
            raise ParseError(row, YEAR, ytext)
        year = int(ytext.strip())

        if not vtext.strip():
            if policy.on_missing_value == "error":
                raise ParseError(row, VALUE, vtext)
            dropped["missing_value"] += 1
            years.append(year)
            values.append(float("nan"))
            keep.append(False)
            continue
        try:
            value = parse_number(vtext)
        except ValueError:
            raise ParseError(row, VALUE, vtext) from None
        if not value > 0:
            if policy.on_nonpositive == "error":
                raise NonPositiveValue(row, value)
            dropped["nonpositive"] += 1
            keep.append(False)
        else:
            keep.append(True)
        years.append(year)
        values.append(value)

    frame[YEAR] = years
    frame[VALUE] = values
    frame = frame[keep].reset_index(drop=True)

    dup = frame.duplicated(list(KEY_COLUMNS), keep=False)
    if dup.any():
        first = frame[dup].iloc[0]
        key = tuple(first[c] for c in KEY_COLUMNS)
        same = (frame[list(KEY_COLUMNS)] == pd.Series(key, index=list(KEY_COLUMNS))).all(axis=1)
        raise DuplicateKey(key, [int(r) for r in frame.loc[same, ROW]])

    return FaostatTable(frame, dropped, source)


def extract_series(
    table: FaostatTable,
    filters: Sequence[tuple[str, str]],
    name: str | None = None,
) -> AnnualSeries:
    """Build a series from the rows matching every ``(column, value)`` filter.

    The default name joins the filter values with ``-``, e.g. ``Wheat-France``.
    """
    rows = table.select(filters)
    if rows.empty:
        desc = ", ".join(f"{c}={v}" for c, v in filters)
        raise NoMatchingRows(f"no rows match {desc}")
    rows = rows.sort_values(YEAR, kind="stable")
    if name is None:
        name = "-".join(str(v) for _, v in filters)
    return AnnualSeries(name, tuple(rows[YEAR]), tuple(rows[VALUE]))
