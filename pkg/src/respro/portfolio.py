"""Diversified-system analysis: ranking, progressive aggregation, reporting."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import EmptyIntersection, InsufficientOverlap, NoMatchingRows, ZeroVariance
from .ingest import VALUE, FaostatTable, extract_series
from .resilience import normalize, normalized_resilience, pearson_on_overlap
from .series import AnnualSeries, add
from .smoothing import SmoothingConfig

DEFAULT_TOP_N = 15
DEFAULT_MIN_LENGTH = 30

TOO_SHORT = "TooShort"
EMPTY_INTERSECTION = "EmptyIntersection"


@dataclass(frozen=True)
class SelectionSpec:
    """Which rows form the candidate series and how many to keep.

    ``min_length`` is exclusive: a series needs strictly more years.
    """

    fixed_key: tuple[str, str]
    group_by: str
    top_n: int = DEFAULT_TOP_N
    min_length: int = DEFAULT_MIN_LENGTH

    def __post_init__(self) -> None:
        if self.top_n < 1:
            raise ValueError("top_n must be at least 1")
        if self.min_length < 2:
            raise ValueError("min_length must be at least 2")


@dataclass(frozen=True)
class Exclusion:
    name: str
    reason: str


@dataclass(frozen=True)
class Selection:
    series: list[AnnualSeries]
    excluded: list[Exclusion] = field(default_factory=list)


@dataclass(frozen=True)
class PortfolioReport:
    labels: list[str]
    individual_means: list[float]
    individual_resilience: list[float]
    aggregated_resilience: list[float]
    pairwise_correlation: list[float | None]
    individual_lengths: list[int]
    aggregated_lengths: list[int]
    excluded: list[Exclusion] = field(default_factory=list)

    def __post_init__(self) -> None:
        n = len(self.labels)
        lists = (
            self.individual_means,
            self.individual_resilience,
            self.aggregated_resilience,
            self.pairwise_correlation,
            self.individual_lengths,
            self.aggregated_lengths,
        )
        if n < 1 or any(len(lst) != n for lst in lists):
            raise ValueError("report arrays must share one non-zero length")

    def __len__(self) -> int:
        return len(self.labels)

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "individual_means": list(self.individual_means),
            "individual_resilience": list(self.individual_resilience),
            "aggregated_resilience": list(self.aggregated_resilience),
            "pairwise_correlation": list(self.pairwise_correlation),
            "individual_lengths": list(self.individual_lengths),
            "aggregated_lengths": list(self.aggregated_lengths),
            "excluded": [{"name": e.name, "reason": e.reason} for e in self.excluded],
        }


def rank_groups(table: FaostatTable, spec: SelectionSpec) -> list[tuple[str, float]]:
    """Groups after the fixed-key filter, largest mean ``Value`` first.

    Ties on the mean are broken by label.
    """
    fixed_col, fixed_val = spec.fixed_key
    table.require(fixed_col, spec.group_by)
    rows = table.select([spec.fixed_key])
    if rows.empty:
        raise NoMatchingRows(f"no rows match {fixed_col}={fixed_val}")
    means = rows.groupby(spec.group_by, sort=True)[VALUE].mean()
    ranked = sorted(means.items(), key=lambda kv: (-kv[1], str(kv[0])))
    return [(str(label), float(mean)) for label, mean in ranked]


def rank_and_filter(table: FaostatTable, spec: SelectionSpec) -> Selection:
    """Top ``spec.top_n`` groups by mean, minus those too short to assess.

    Truncation happens before the length filter, so a long series outside
    the top ``top_n`` is never considered.
    """
    kept: list[AnnualSeries] = []
    excluded: list[Exclusion] = []
    for label, _ in rank_groups(table, spec)[: spec.top_n]:
        ts = extract_series(table, [spec.fixed_key, (spec.group_by, label)], name=label)
        if ts.length() > spec.min_length:
            kept.append(ts)
        else:
            excluded.append(Exclusion(label, TOO_SHORT))
    return Selection(kept, excluded)


def drop_disjoint(series: Sequence[AnnualSeries]) -> Selection:
    """Drop series that would empty the running year intersection."""
    kept: list[AnnualSeries] = []
    excluded: list[Exclusion] = []
    common: set[int] | None = None
    for ts in series:
        years = set(ts.years)
        if common is not None and not common & years:
            excluded.append(Exclusion(ts.name, EMPTY_INTERSECTION))
            continue
        common = years if common is None else common & years
        kept.append(ts)
    return Selection(kept, excluded)


def tot_res(
    series: Sequence[AnnualSeries],
    cfg: SmoothingConfig | None = None,
    excluded: Sequence[Exclusion] = (),
) -> PortfolioReport:
    """Individual and progressively aggregated resilience of ``series``.

    ``pairwise_correlation[k]`` correlates series ``k`` with the sum of the
    series before it; the first entry is a 0 placeholder. Correlations that
    cannot be computed are reported as ``None``.
    """
    if not series:
        raise ValueError("tot_res needs at least one series")

    accumulated: list[AnnualSeries] = [series[0]]
    for ts in series[1:]:
        try:
            accumulated.append(add(accumulated[-1], ts))
        except EmptyIntersection:
            raise EmptyIntersection(accumulated[-1].name, ts.name) from None

    individual = [normalize(ts, cfg) for ts in series]
    aggregated = [individual[0]] + [normalize(ts, cfg) for ts in accumulated[1:]]

    correlations: list[float | None] = [0.0]
    for prev, new in zip(aggregated[:-1], individual[1:]):
        try:
            correlations.append(pearson_on_overlap(prev, new))
        except (InsufficientOverlap, ZeroVariance):
            correlations.append(None)

    return PortfolioReport(
        labels=[ts.name for ts in series],
        individual_means=[ts.mean() for ts in series],
        individual_resilience=[_resilience(n) for n in individual],
        aggregated_resilience=[_resilience(n) for n in aggregated],
        pairwise_correlation=correlations,
        individual_lengths=[ts.length() for ts in series],
        aggregated_lengths=[ts.length() for ts in accumulated],
        excluded=list(excluded),
    )


def analyse_portfolio(
    table: FaostatTable, spec: SelectionSpec, cfg: SmoothingConfig | None = None
) -> tuple[PortfolioReport, list[AnnualSeries]]:
    """Selection followed by ``tot_res``; returns the report and the series used."""
    selection = rank_and_filter(table, spec)
    usable = drop_disjoint(selection.series)
    if not usable.series:
        raise NoMatchingRows(
            f"no {spec.group_by} series longer than {spec.min_length} years for "
            f"{spec.fixed_key[0]}={spec.fixed_key[1]}"
        )
    report = tot_res(usable.series, cfg, selection.excluded + usable.excluded)
    return report, usable.series


def _resilience(normalized) -> float:
    try:
        return normalized_resilience(normalized)
    except ZeroVariance as exc:
        raise ZeroVariance(f"{normalized.name}: {exc}") from None
