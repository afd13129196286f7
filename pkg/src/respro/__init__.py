"""Annual production resilience of positive-valued annual time-series."""

__version__ = "0.1.0"

from .errors import (
    DegenerateWindow,
    DuplicateKey,
    EmptyIntersection,
    InsufficientOverlap,
    InvalidSeries,
    MissingColumn,
    NoMatchingRows,
    NonPositiveBaseline,
    NonPositiveValue,
    ParseError,
    ResproError,
    TooShort,
    ZeroVariance,
)
from .ingest import FaostatTable, LoadPolicy, extract_series, load_csv
from .portfolio import PortfolioReport, SelectionSpec, analyse_portfolio, rank_and_filter, tot_res
from .render import PlotSpec, plot_resilience_diversity, plot_series
from .resilience import (
    NormalizedSeries,
    ResilienceReport,
    anomaly_correlation,
    normalize,
    production_resilience,
)
from .series import AnnualSeries, add
from .smoothing import BaselineSeries, SmoothingConfig, smooth

__all__ = [
    "AnnualSeries", "BaselineSeries", "DegenerateWindow", "DuplicateKey", "EmptyIntersection",
    "FaostatTable", "InsufficientOverlap", "InvalidSeries", "LoadPolicy", "MissingColumn",
    "NoMatchingRows", "NonPositiveBaseline", "NonPositiveValue", "NormalizedSeries", "ParseError",
    "PlotSpec", "PortfolioReport", "ResilienceReport", "ResproError", "SelectionSpec",
    "SmoothingConfig", "TooShort", "ZeroVariance", "add", "analyse_portfolio",
    "anomaly_correlation", "extract_series", "load_csv", "normalize", "plot_resilience_diversity",
    "plot_series", "production_resilience", "rank_and_filter", "smooth", "tot_res",
]
