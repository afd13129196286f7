"""Immutable annual production series."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import EmptyIntersection, InvalidSeries

NAME_SEPARATOR = " + "


@dataclass(frozen=True)
class AnnualSeries:
    """A named, year-indexed series of strictly positive values.

    Years must be strictly increasing integers; gaps are allowed. Instances
    are immutable, every operation returns a new series.
    """

    name: str
    years: tuple[int, ...]
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        years = tuple(_as_year(y) for y in self.years)
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "years", years)
        object.__setattr__(self, "values", values)

        if not isinstance(self.name, str) or not self.name:
            raise InvalidSeries("series name must be a non-empty string")
        if not years:
            raise InvalidSeries(f"series {self.name!r} has no points")
        if len(years) != len(values):
            raise InvalidSeries(
                f"series {self.name!r}: {len(years)} years but {len(values)} values"
            )
        for prev, cur in zip(years, years[1:]):
            if cur <= prev:
                kind = "duplicate" if cur == prev else "unordered"
                raise InvalidSeries(f"series {self.name!r}: {kind} year {cur} after {prev}")
        for year, value in zip(years, values):
            if not math.isfinite(value) or value <= 0:
                raise InvalidSeries(
                    f"series {self.name!r}: value {value!r} at {year} is not strictly positive"
                )

    @classmethod
    def from_points(cls, name: str, points: Iterable[tuple[int, float]]) -> AnnualSeries:
        pts = list(points)
        return cls(name, tuple(p[0] for p in pts), tuple(p[1] for p in pts))

    @classmethod
    def from_mapping(cls, name: str, data: Mapping[int, float]) -> AnnualSeries:
        """Build from a ``{year: value}`` mapping; years are sorted."""
        return cls.from_points(name, sorted(data.items()))

    def __len__(self) -> int:
        return len(self.years)

    def __iter__(self) -> Iterator[tuple[int, float]]:
        return zip(self.years, self.values)

    def __getitem__(self, year: int) -> float:
        try:
            return self.values[self.years.index(year)]
        except ValueError:
            raise KeyError(year) from None

    def length(self) -> int:
        return len(self.years)

    def mean(self) -> float:
        return math.fsum(self.values) / len(self.values)

    def copy(self) -> AnnualSeries:
        return AnnualSeries(self.name, self.years, self.values)

    def to_dict(self) -> dict[int, float]:
        return dict(zip(self.years, self.values))

    def x(self) -> np.ndarray:
        return np.asarray(self.years, dtype=np.float64)

    def y(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)

    def renamed(self, name: str) -> AnnualSeries:
        return AnnualSeries(name, self.years, self.values)

    def scaled(self, factor: float) -> AnnualSeries:
        return AnnualSeries(self.name, self.years, tuple(v * factor for v in self.values))

    def restrict(self, years: Iterable[int]) -> AnnualSeries:
        """Keep only the given years (those absent from the series are ignored)."""
        keep = set(years)
        pts = [(y, v) for y, v in self if y in keep]
        if not pts:
            raise InvalidSeries(f"series {self.name!r}: restriction leaves no points")
        return AnnualSeries.from_points(self.name, pts)

    def __add__(self, other: AnnualSeries) -> AnnualSeries:
        if not isinstance(other, AnnualSeries):
            return NotImplemented
        return add(self, other)


def add(a: AnnualSeries, b: AnnualSeries) -> AnnualSeries:
    """Sum two series over the years where both are defined (inner join)."""
    other = b.to_dict()
    pts = [(y, v + other[y]) for y, v in a if y in other]
    if not pts:
        raise EmptyIntersection(a.name, b.name)
    return AnnualSeries.from_points(a.name + NAME_SEPARATOR + b.name, pts)


def _as_year(year) -> int:
    if isinstance(year, bool):
        raise InvalidSeries(f"invalid year {year!r}")
    if isinstance(year, (int, np.integer)):
        return int(year)
    if isinstance(year, (float, np.floating)) and float(year).is_integer():
        return int(year)
    raise InvalidSeries(f"invalid year {year!r}")
