"""Normalized anomalies, the resilience indicator and anomaly correlation."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterator

import numpy as np

from .errors import InsufficientOverlap, NonPositiveBaseline, ZeroVariance
from .series import AnnualSeries
from .smoothing import SmoothingConfig, smooth

MIN_OVERLAP = 3
# Ratios are O(1); below this the indicator is numerically meaningless.
_ZERO_SIGMA = 1e-12


@dataclass(frozen=True)
class NormalizedSeries:
    """Dimensionless ratios of observed values to their baseline."""

    name: str
    years: tuple[int, ...]
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.years) != len(self.values):
            raise ValueError("years and values differ in length")
        for v in self.values:
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"normalized series {self.name!r} has invalid ratio {v!r}")

    def __len__(self) -> int:
        return len(self.years)

    def __iter__(self) -> Iterator[tuple[int, float]]:
        return zip(self.years, self.values)

    def y(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)


@dataclass(frozen=True)
class ResilienceReport:
    name: str
    n_years: int
    mean_production: float
    sigma_raw: float
    sigma_normalized: float
    resilience: float
    resilience_stationary: float

    def to_dict(self) -> dict:
        return asdict(self)


def normalize(series: AnnualSeries, cfg: SmoothingConfig | None = None) -> NormalizedSeries:
    """Divide each value by its LOWESS baseline."""
    baseline = smooth(series, cfg)
    base = baseline.y()
    if np.any(base <= 0.0):
        year = baseline.years[int(np.argmax(base <= 0.0))]
        raise NonPositiveBaseline(f"baseline of {series.name!r} is not positive at {year}")
    ratios = series.y() / base
    return NormalizedSeries(series.name, series.years, tuple(float(r) for r in ratios))


def resilience_from_sigma(sigma: float) -> float:
    if not sigma > _ZERO_SIGMA:
        raise ZeroVariance(f"standard deviation {sigma!r} is zero; resilience is unbounded")
    return 1.0 / sigma**2


def normalized_resilience(normalized: NormalizedSeries) -> float:
    """Inverse variance (population divisor) of the normalized ratios."""
    return resilience_from_sigma(float(np.std(normalized.y())))


def production_resilience(
    series: AnnualSeries, cfg: SmoothingConfig | None = None
) -> ResilienceReport:
    normalized = normalize(series, cfg)
    sigma_n = float(np.std(normalized.y()))
    try:
        resilience = resilience_from_sigma(sigma_n)
    except ZeroVariance:
        raise ZeroVariance(
            f"normalized series {series.name!r} is constant; resilience is unbounded"
        ) from None

    mu = series.mean()
    sigma_raw = float(np.std(series.y()))
    stationary = mu**2 / sigma_raw**2 if sigma_raw > 0 else math.inf
    return ResilienceReport(
        name=series.name,
        n_years=series.length(),
        mean_production=mu,
        sigma_raw=sigma_raw,
        sigma_normalized=sigma_n,
        resilience=resilience,
        resilience_stationary=stationary,
    )


def anomaly_correlation(
    a: AnnualSeries, b: AnnualSeries, cfg: SmoothingConfig | None = None
) -> float:
    """Pearson correlation of the two normalized series over their common years.

    Each series is normalized over its own full extent before the overlap is
    taken.
    """
    return pearson_on_overlap(normalize(a, cfg), normalize(b, cfg))


def pearson_on_overlap(na: NormalizedSeries, nb: NormalizedSeries) -> float:
    other = dict(zip(nb.years, nb.values))
    pairs = [(v, other[y]) for y, v in na if y in other]
    if len(pairs) < MIN_OVERLAP:
        raise InsufficientOverlap(
            f"{na.name!r} and {nb.name!r} share {len(pairs)} years, need {MIN_OVERLAP}"
        )
    xa = np.array([p[0] for p in pairs])
    xb = np.array([p[1] for p in pairs])
    da = xa - xa.mean()
    db = xb - xb.mean()
    saa = float(np.dot(da, da))
    sbb = float(np.dot(db, db))
    if saa == 0.0 or sbb == 0.0:
        raise ZeroVariance(f"no variance on the overlap of {na.name!r} and {nb.name!r}")
    r = float(np.dot(da, db)) / math.sqrt(saa * sbb)
    return max(-1.0, min(1.0, r))
