"""Robust locally weighted linear regression (LOWESS) baselines.

Each observation is fitted by a weighted straight line over its nearest
neighbours in year, with tricube distance weights. The fit is then repeated
with bisquare robustness weights computed from the previous residuals, which
damps the pull of isolated extreme years on the baseline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .errors import DegenerateWindow, TooShort
from .series import AnnualSeries

DEFAULT_SPAN_YEARS = 20.0
DEFAULT_ROBUSTNESS_ITERATIONS = 3

# Rows of the distance matrix processed at once; bounds memory for long series.
_BLOCK_ROWS = 512
# f*N is often meant to be integral (20/N * N); absorb the round-off before ceil.
_CEIL_SLACK = 1e-9
# Median absolute residual, relative to mean |y|, treated as a perfect fit.
_PERFECT_FIT = 1e-12


@dataclass(frozen=True)
class SmoothingConfig:
    """Smoothing window and robustness settings.

    The window covers ``span_years`` observations unless ``fraction_override``
    fixes the share of points directly.
    """

    span_years: float = DEFAULT_SPAN_YEARS
    fraction_override: float | None = None
    robustness_iterations: int = DEFAULT_ROBUSTNESS_ITERATIONS
    local_degree: int = field(default=1, init=False)

    def __post_init__(self) -> None:
        if not (self.span_years > 0 and math.isfinite(self.span_years)):
            raise ValueError(f"span_years must be positive, got {self.span_years!r}")
        if self.fraction_override is not None and not 0 < self.fraction_override <= 1:
            raise ValueError(f"fraction_override must lie in (0, 1], got {self.fraction_override!r}")
        if self.robustness_iterations < 0:
            raise ValueError("robustness_iterations must be non-negative")

    @property
    def is_default(self) -> bool:
        return self == SmoothingConfig()

    def fraction(self, n: int) -> float:
        if self.fraction_override is not None:
            return self.fraction_override
        return min(self.span_years / n, 1.0)

    def neighbours(self, n: int) -> int:
        """Number of points in each local window, clamped to ``[2, n]``."""
        k = math.ceil(self.fraction(n) * n - _CEIL_SLACK)
        return max(2, min(k, n))


@dataclass(frozen=True)
class BaselineSeries:
    """Smoothed values aligned year-for-year with a source series."""

    name: str
    years: tuple[int, ...]
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.years) != len(self.values):
            raise ValueError("years and values differ in length")
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError(f"baseline of {self.name!r} has non-finite values")

    def __len__(self) -> int:
        return len(self.years)

    def __iter__(self) -> Iterator[tuple[int, float]]:
        return zip(self.years, self.values)

    def y(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)


def smooth(series: AnnualSeries, cfg: SmoothingConfig | None = None) -> BaselineSeries:
    """Return the LOWESS baseline of ``series`` evaluated at each of its years."""
    cfg = cfg or SmoothingConfig()
    n = series.length()
    if n < 2:
        raise TooShort(series.name, n, 2)
    fitted = lowess_fit(series.x(), series.y(), cfg.neighbours(n), cfg.robustness_iterations)
    return BaselineSeries(series.name, series.years, tuple(float(v) for v in fitted))


def lowess_fit(x: np.ndarray, y: np.ndarray, k: int, iterations: int) -> np.ndarray:
    """Robust local linear fit of ``y`` against distinct abscissae ``x``.

    ``k`` is the neighbour count per window (including the point itself).
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = x.size
    if not 2 <= k <= n:
        raise ValueError(f"neighbour count {k} outside [2, {n}]")

    robust = np.ones(n)
    fitted = _local_fits(x, y, k, robust)
    # Residuals at round-off level mean the fit is already exact; weights
    # derived from them would be noise.
    negligible = _PERFECT_FIT * float(np.mean(np.abs(y)))
    for _ in range(iterations):
        resid = y - fitted
        median = float(np.median(np.abs(resid)))
        if median <= negligible:
            break
        scale = 6.0 * median
        robust = np.clip(1.0 - (resid / scale) ** 2, 0.0, None) ** 2
        fitted = _local_fits(x, y, k, robust)
    return fitted


def _local_fits(x: np.ndarray, y: np.ndarray, k: int, robust: np.ndarray) -> np.ndarray:
    n = x.size
    out = np.empty(n)
    for start in range(0, n, _BLOCK_ROWS):
        rows = slice(start, min(start + _BLOCK_ROWS, n))
        xi = x[rows, None]
        yi = y[rows, None]
        # Coordinates relative to the point being fitted: exact for integer
        # years, and a constant series gives zero deviations exactly.
        u = x[None, :] - xi
        v = y[None, :] - yi
        dist = np.abs(u)
        radius = np.partition(dist, k - 1, axis=1)[:, k - 1 : k]
        radius = np.where(radius > 0.0, radius, 1.0)
        tricube = np.clip(1.0 - (dist / radius) ** 3, 0.0, None) ** 3

        w = tricube * robust[None, :]
        sw = w.sum(axis=1)
        usable = np.count_nonzero(w, axis=1) >= 2
        with np.errstate(divide="ignore", invalid="ignore"):
            ubar = (w * u).sum(axis=1) / sw
            vbar = (w * v).sum(axis=1) / sw
            du = u - ubar[:, None]
            suu = (w * du * du).sum(axis=1)
            suv = (w * du * (v - vbar[:, None])).sum(axis=1)
            usable &= suu > 0.0
            line = yi[:, 0] + vbar - (suv / suu) * ubar

        if not usable.all():
            # Fall back to the tricube-weighted mean of the window.
            st = tricube.sum(axis=1)
            if np.any(st[~usable] <= 0.0):
                raise DegenerateWindow("local window has zero total weight")
            with np.errstate(divide="ignore", invalid="ignore"):
                mean = yi[:, 0] + (tricube * v).sum(axis=1) / st
            line = np.where(usable, line, mean)
        out[rows] = line
    return out
