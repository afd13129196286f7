"""Standalone SVG figures: series with baselines, and resilience-diversity plots."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Sequence

from .portfolio import PortfolioReport
from .series import AnnualSeries
from .smoothing import BaselineSeries

SVG_NS = "http://www.w3.org/2000/svg"
XML_DECLARATION = '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'

# matplotlib "tab10" cycle
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)
GREEN = "#00ff00"
MISSING_CORRELATION = "#bfbfbf"

# (position, rgb) control points of the rainbow map used for correlations
RAINBOW_STOPS = (
    (0.0, (0.0, 0.0, 1.0)),
    (0.375, (0.0, 1.0, 1.0)),
    (0.625, (1.0, 1.0, 0.0)),
    (1.0, (1.0, 0.0, 0.0)),
)

FONT = "DejaVu Sans, Helvetica, Arial, sans-serif"
PAD = 0.05


@dataclass(frozen=True)
class PlotSpec:
    title: str = ""
    y_axis_label: str = "2004-2006 million USD"
    more_info: bool = False
    width: int = 800
    height: int = 600

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError("plot dimensions must be positive")


def rainbow(c: float) -> tuple[float, float, float]:
    """Piecewise-linear blue-cyan-yellow-red map of ``c`` in [0, 1]."""
    c = min(max(c, 0.0), 1.0)
    for (p0, rgb0), (p1, rgb1) in zip(RAINBOW_STOPS, RAINBOW_STOPS[1:]):
        if c <= p1:
            t = (c - p0) / (p1 - p0)
            return tuple(a + t * (b - a) for a, b in zip(rgb0, rgb1))
    return RAINBOW_STOPS[-1][1]


def correlation_to_unit(rho: float) -> float:
    return (rho + 1.0) / 2.0


def hex_color(rgb: Sequence[float]) -> str:
    return "#" + "".join(f"{round(255 * min(max(ch, 0.0), 1.0)):02x}" for ch in rgb)


def correlation_color(rho: float | None) -> str:
    if rho is None:
        return MISSING_CORRELATION
    return hex_color(rainbow(correlation_to_unit(rho)))


def nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    """Ticks on a 1-2-5 ladder covering ``[lo, hi]``."""
    if not hi > lo:
        return [lo]
    raw = (hi - lo) / target
    mag = 10.0 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 5, 10) if m * mag >= raw * (1 - 1e-12))
    first = math.ceil(lo / step - 1e-9)
    last = math.floor(hi / step + 1e-9)
    return [i * step for i in range(first, last + 1)]


def padded_range(values: Sequence[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    span = hi - lo
    if span == 0:
        span = abs(hi) or 1.0
        return lo - PAD * span, hi + PAD * span
    return lo - PAD * span, hi + PAD * span


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _tick_label(v: float, ticks: Sequence[float]) -> str:
    step = ticks[1] - ticks[0] if len(ticks) > 1 else 1.0
    decimals = max(0, -math.floor(math.log10(step) + 1e-12)) if step > 0 else 0
    s = f"{v:.{decimals}f}"
    return s[1:] if s.startswith("-") and float(s) == 0 else s


class _Axis:
    """Linear map from data coordinates to a pixel interval."""

    def __init__(self, lo: float, hi: float, p0: float, p1: float):
        self.lo, self.hi, self.p0, self.p1 = lo, hi, p0, p1

    def __call__(self, v: float) -> float:
        return self.p0 + (v - self.lo) / (self.hi - self.lo) * (self.p1 - self.p0)


def _document(spec: PlotSpec) -> ET.Element:
    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": str(spec.width),
            "height": str(spec.height),
            "viewBox": f"0 0 {spec.width} {spec.height}",
            "font-family": FONT,
            "font-size": "12",
        },
    )
    ET.SubElement(root, "rect", {"x": "0", "y": "0", "width": str(spec.width),
                                 "height": str(spec.height), "fill": "#ffffff"})
    if spec.title:
        _text(root, spec.width / 2, 24, spec.title, anchor="middle", size=16, cls="title")
    return root


def _serialize(root: ET.Element) -> str:
    return XML_DECLARATION + ET.tostring(root, encoding="unicode") + "\n"


def _text(parent, x, y, text, anchor="start", size=None, cls=None, rotate=None):
    attrs = {"x": _fmt(x), "y": _fmt(y), "text-anchor": anchor}
    if size:
        attrs["font-size"] = str(size)
    if cls:
        attrs["class"] = cls
    if rotate is not None:
        attrs["transform"] = f"rotate({rotate} {_fmt(x)} {_fmt(y)})"
    el = ET.SubElement(parent, "text", attrs)
    el.text = text
    return el


def _line(parent, x1, y1, x2, y2, stroke="#000000", width=1.0, cls=None):
    attrs = {"x1": _fmt(x1), "y1": _fmt(y1), "x2": _fmt(x2), "y2": _fmt(y2),
             "stroke": stroke, "stroke-width": _fmt(width)}
    if cls:
        attrs["class"] = cls
    return ET.SubElement(parent, "line", attrs)


def _polyline(parent, points, stroke, width, cls, label=None):
    attrs = {
        "class": cls,
        "points": " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points),
        "fill": "none",
        "stroke": stroke,
        "stroke-width": _fmt(width),
        "stroke-linejoin": "round",
    }
    if label is not None:
        attrs["data-label"] = label
    return ET.SubElement(parent, "polyline", attrs)


def _frame(parent, left, top, right, bottom):
    ET.SubElement(parent, "rect", {
        "class": "frame", "x": _fmt(left), "y": _fmt(top), "width": _fmt(right - left),
        "height": _fmt(bottom - top), "fill": "none", "stroke": "#000000", "stroke-width": "1.00",
    })


def _y_ticks(parent, axis: _Axis, ticks, x, side: str):
    g = ET.SubElement(parent, "g", {"class": f"ticks-{side}"})
    sign = -1 if side == "left" else 1
    for t in ticks:
        py = axis(t)
        _line(g, x, py, x + sign * 5, py)
        _text(g, x + sign * 8, py + 4, _tick_label(t, ticks), anchor="end" if side == "left" else "start")


def plot_series(pairs: Sequence[tuple[AnnualSeries, BaselineSeries]], spec: PlotSpec | None = None) -> str:
    """Raw series and their baselines, one colour per series.

    The legend, placed right of the plot area, lists raw-series names only.
    """
    spec = spec or PlotSpec()
    if not pairs:
        raise ValueError("nothing to plot")
    for raw, base in pairs:
        if tuple(raw.years) != tuple(base.years):
            raise ValueError(f"baseline of {raw.name!r} is not aligned with the series")

    root = _document(spec)
    left, top = 80.0, 50.0
    right, bottom = spec.width - 190.0, spec.height - 60.0
    right = max(right, left + 10)

    years = [y for raw, _ in pairs for y in raw.years]
    x0, x1 = min(years), max(years)
    if x0 == x1:
        x0, x1 = x0 - 0.5, x1 + 0.5
    values = [v for raw, base in pairs for v in raw.values + base.values]
    y0, y1 = padded_range(values)
    ax = _Axis(x0, x1, left, right)
    ay = _Axis(y0, y1, bottom, top)

    _frame(root, left, top, right, bottom)
    xt = nice_ticks(x0, x1, 8)
    g = ET.SubElement(root, "g", {"class": "ticks-bottom"})
    for t in xt:
        px = ax(t)
        _line(g, px, bottom, px, bottom + 5)
        _text(g, px, bottom + 20, _tick_label(t, xt), anchor="middle")
    _y_ticks(root, ay, nice_ticks(y0, y1), left, "left")
    _text(root, 20, (top + bottom) / 2, spec.y_axis_label, anchor="middle", cls="ylabel", rotate=-90)
    _text(root, (left + right) / 2, spec.height - 15, "year", anchor="middle", cls="xlabel")

    plot = ET.SubElement(root, "g", {"class": "plot-area"})
    legend = ET.SubElement(root, "g", {"class": "legend"})
    for i, (raw, base) in enumerate(pairs):
        color = PALETTE[i % len(PALETTE)]
        _polyline(plot, [(ax(x), ay(y)) for x, y in raw], color, 1.5, "series", raw.name)
        _polyline(plot, [(ax(x), ay(y)) for x, y in base], color, 2.5, "baseline", "")
        ly = top + 10 + 18 * i
        _line(legend, right + 15, ly, right + 40, ly, stroke=color, width=2)
        _text(legend, right + 46, ly + 4, raw.name)
    return _serialize(root)


def plot_resilience_diversity(report: PortfolioReport, spec: PlotSpec | None = None) -> str:
    """Mean-production bars with individual and aggregated resilience on a twin axis."""
    spec = spec or PlotSpec()
    n = len(report)
    root = _document(spec)

    left, top = 80.0, 50.0
    right = spec.width - (190.0 if spec.more_info else 80.0)
    bottom = spec.height - 170.0
    right = max(right, left + 10)
    bottom = max(bottom, top + 10)

    if spec.more_info:
        labels = [f"{lab}({il};{al})" for lab, il, al in
                  zip(report.labels, report.individual_lengths, report.aggregated_lengths)]
        colors = [correlation_color(r) for r in report.pairwise_correlation]
        colors[0] = GREEN
        bar_legend = "mean prod. and pairwise corr."
    else:
        labels = list(report.labels)
        colors = [GREEN] * n
        bar_legend = "mean production"

    slot = (right - left) / n
    centre = [left + slot * (i + 0.5) for i in range(n)]

    ymax = max(report.individual_means) * (1 + PAD)
    ay = _Axis(0.0, ymax, bottom, top)
    res = list(report.individual_resilience) + list(report.aggregated_resilience)
    r0, r1 = padded_range(res)
    ar = _Axis(r0, r1, bottom, top)

    _frame(root, left, top, right, bottom)
    _y_ticks(root, ay, nice_ticks(0.0, ymax), left, "left")
    _y_ticks(root, ar, nice_ticks(r0, r1), right, "right")
    _text(root, 20, (top + bottom) / 2, spec.y_axis_label, anchor="middle", cls="ylabel", rotate=-90)
    _text(root, right + 65, (top + bottom) / 2, "annual production resilience",
          anchor="middle", cls="ylabel-right", rotate=-90)

    bars = ET.SubElement(root, "g", {"class": "bars"})
    for i, (mean, color) in enumerate(zip(report.individual_means, colors)):
        h = bottom - ay(mean)
        ET.SubElement(bars, "rect", {
            "class": "bar", "x": _fmt(centre[i] - 0.4 * slot), "y": _fmt(ay(mean)),
            "width": _fmt(0.8 * slot), "height": _fmt(h), "fill": color,
            "data-label": report.labels[i],
        })

    xl = ET.SubElement(root, "g", {"class": "xlabels"})
    for c, lab in zip(centre, labels):
        _line(xl, c, bottom, c, bottom + 5)
        _text(xl, c + 4, bottom + 10, lab, anchor="end", rotate=-90)

    _polyline(root, [(c, ar(v)) for c, v in zip(centre, report.aggregated_resilience)],
              "#ff0000", 2.0, "aggregated-resilience")
    dots = ET.SubElement(root, "g", {"class": "individual-resilience"})
    for c, v in zip(centre, report.individual_resilience):
        ET.SubElement(dots, "circle", {"class": "dot", "cx": _fmt(c), "cy": _fmt(ar(v)),
                                       "r": "4.00", "fill": "#000000"})

    legend = ET.SubElement(root, "g", {"class": "legend"})
    lx, ly = right - 215, top + 14
    ET.SubElement(legend, "rect", {"x": _fmt(lx - 8), "y": _fmt(ly - 14), "width": "215.00",
                                   "height": "64.00", "fill": "#ffffff", "fill-opacity": "0.85",
                                   "stroke": "#cccccc"})
    ET.SubElement(legend, "rect", {"x": _fmt(lx), "y": _fmt(ly - 6), "width": "20.00",
                                   "height": "10.00", "fill": GREEN})
    _text(legend, lx + 28, ly + 4, bar_legend)
    ET.SubElement(legend, "circle", {"cx": _fmt(lx + 10), "cy": _fmt(ly + 18), "r": "4.00",
                                     "fill": "#000000"})
    _text(legend, lx + 28, ly + 22, "individual resilience")
    _line(legend, lx, ly + 36, lx + 20, ly + 36, stroke="#ff0000", width=2)
    _text(legend, lx + 28, ly + 40, "aggregated resilience")

    if spec.more_info:
        _colorbar(root, spec)
    return _serialize(root)


def _colorbar(root: ET.Element, spec: PlotSpec) -> None:
    defs = ET.SubElement(root, "defs")
    grad = ET.SubElement(defs, "linearGradient", {
        "id": "correlation-map", "x1": "0", "y1": "1", "x2": "0", "y2": "0"})
    for pos, rgb in RAINBOW_STOPS:
        ET.SubElement(grad, "stop", {"offset": f"{pos:g}", "stop-color": hex_color(rgb)})

    x = spec.width * 0.875
    w = spec.width * 0.025
    top = spec.height * 0.1
    bottom = spec.height * 0.5
    g = ET.SubElement(root, "g", {"class": "colorbar"})
    ET.SubElement(g, "rect", {"x": _fmt(x), "y": _fmt(top), "width": _fmt(w),
                              "height": _fmt(bottom - top), "fill": "url(#correlation-map)",
                              "stroke": "#000000", "stroke-width": "1.00"})
    axis = _Axis(-1.0, 1.0, bottom, top)
    ticks = [-1.0, -0.5, 0.0, 0.5, 1.0]
    for t in ticks:
        _line(g, x + w, axis(t), x + w + 4, axis(t))
        _text(g, x + w + 7, axis(t) + 4, _tick_label(t, ticks))
    _text(g, x + w + 50, (top + bottom) / 2, "pairwise anomaly correlation",
          anchor="middle", rotate=-90)
