"""Command-line front end: ``respro series|combine|portfolio``."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .errors import ResproError
from .ingest import LoadPolicy, extract_series, load_csv
from .portfolio import SelectionSpec, analyse_portfolio
from .render import PlotSpec, plot_resilience_diversity, plot_series
from .report import display_correlation, display_resilience, document, dumps
from .resilience import anomaly_correlation, production_resilience
from .series import AnnualSeries
from .smoothing import DEFAULT_SPAN_YEARS, SmoothingConfig, smooth

EXIT_OK = 0
EXIT_DATA = 1
EXIT_USAGE = 2

DEFAULT_YLABEL = "2004-2006 million USD"


def key_value(text: str) -> tuple[str, str]:
    key, sep, value = text.partition("=")
    if not sep or not key.strip():
        raise argparse.ArgumentTypeError(f"expected COLUMN=VALUE, got {text!r}")
    return key.strip(), value.strip()


def key_value_list(text: str) -> list[tuple[str, str]]:
    return [key_value(part) for part in text.split(",")]


def positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return n


def positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return x


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", required=True, metavar="CSV",
                        help="FAOSTAT CSV export")
    common.add_argument("--span-years", type=positive_float, default=DEFAULT_SPAN_YEARS,
                        help="LOESS window in years (default: %(default)g)")
    common.add_argument("--on-nonpositive", choices=("error", "drop"), default="error",
                        help="rows with Value <= 0 (default: %(default)s)")
    common.add_argument("--on-missing", choices=("drop", "error"), default="drop",
                        help="rows with an empty Value (default: %(default)s)")
    common.add_argument("--json", metavar="PATH", help="write a JSON report ('-' for stdout)")
    common.add_argument("--plot", metavar="PATH", help="write an SVG figure")
    common.add_argument("--ylabel", default=DEFAULT_YLABEL, help="y axis label of plots")
    common.add_argument("--title", default="", help="plot title")

    parser = argparse.ArgumentParser(
        prog="respro", description="Annual production resilience of FAOSTAT time-series.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("series", parents=[common], help="resilience of one series")
    p.add_argument("--filter", "-f", dest="filters", type=key_value, action="append",
                   required=True, metavar="COLUMN=VALUE",
                   help="row filter, repeatable; values joined by '-' name the series")
    p.add_argument("--name", help="override the series name")

    p = sub.add_parser("combine", parents=[common], help="resilience of a sum of series")
    p.add_argument("--select", "-s", dest="selects", type=key_value_list, action="append",
                   required=True, metavar="COLUMN=VALUE[,COLUMN=VALUE...]",
                   help="one series per occurrence; at least two")

    p = sub.add_parser("portfolio", parents=[common],
                       help="resilience of a diversified production system")
    p.add_argument("--fix", type=key_value, required=True, metavar="COLUMN=VALUE",
                   help="fixed selection, e.g. Item=Wheat")
    p.add_argument("--group-by", required=True, metavar="COLUMN",
                   help="column whose values form the series, e.g. Area")
    p.add_argument("--top", type=positive_int, default=15, help="largest producers kept (default: %(default)s)")
    p.add_argument("--min-length", type=positive_int, default=30,
                   help="series need strictly more years than this (default: %(default)s)")
    p.add_argument("--more-info", action="store_true",
                   help="colour bars by correlation and show series lengths")
    p.add_argument("--series-plot", metavar="PATH", help="write the selected series with baselines as SVG")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "combine" and len(args.selects) < 2:
        parser.error("combine needs at least two --select groups")
    if args.command == "portfolio" and args.min_length < 2:
        parser.error("--min-length must be at least 2")

    cfg = SmoothingConfig(span_years=args.span_years)
    try:
        table = load_csv(args.input, LoadPolicy(args.on_nonpositive, args.on_missing))
        handler = {"series": _series, "combine": _combine, "portfolio": _portfolio}[args.command]
        handler(args, table, cfg)
    except (ResproError, OSError, UnicodeDecodeError) as exc:
        _error(_describe(exc, args.input))
        return EXIT_DATA
    return EXIT_OK


def _series(args, table, cfg: SmoothingConfig) -> None:
    ts = extract_series(table, args.filters, name=args.name)
    rep = production_resilience(ts, cfg)
    print(f"{ts.name} : time series length = {ts.length()} , "
          f"P-res = {display_resilience(rep.resilience)}")
    if args.json:
        doc = document("series", cfg,
                       filters=[[k, v] for k, v in args.filters],
                       report=rep.to_dict(),
                       display={"resilience": display_resilience(rep.resilience)})
        _write(args.json, dumps(doc))
    if args.plot:
        _write(args.plot, plot_series([(ts, smooth(ts, cfg))], _plot_spec(args)))


def _combine(args, table, cfg: SmoothingConfig) -> None:
    parts = [extract_series(table, sel) for sel in args.selects]
    total = parts[0]
    for ts in parts[1:]:
        total = total + ts
    rep = production_resilience(total, cfg)
    corr = anomaly_correlation(parts[0], parts[1], cfg)
    print(f"{total.name} : time series length = {total.length()} , "
          f"P-res = {display_resilience(rep.resilience)} , "
          f"correlation = {display_correlation(corr)}")
    if args.json:
        doc = document("combine", cfg,
                       selections=[[[k, v] for k, v in sel] for sel in args.selects],
                       report=rep.to_dict(),
                       correlation=corr,
                       components=[production_resilience(ts, cfg).to_dict() for ts in parts],
                       display={"resilience": display_resilience(rep.resilience),
                                "correlation": display_correlation(corr)})
        _write(args.json, dumps(doc))
    if args.plot:
        _write(args.plot, plot_series([(total, smooth(total, cfg))], _plot_spec(args)))


def _portfolio(args, table, cfg: SmoothingConfig) -> None:
    spec = SelectionSpec(args.fix, args.group_by, top_n=args.top, min_length=args.min_length)
    report, used = analyse_portfolio(table, spec, cfg)
    for ex in report.excluded:
        print(f"excluded: {ex.name} ({ex.reason})")
    _print_portfolio(report)
    if args.json:
        doc = document("portfolio", cfg,
                       selection={"fixed_key": list(spec.fixed_key), "group_by": spec.group_by,
                                  "top_n": spec.top_n, "min_length": spec.min_length},
                       report=report.to_dict())
        _write(args.json, dumps(doc))
    if args.plot:
        _write(args.plot, plot_resilience_diversity(report, _plot_spec(args)))
    if args.series_plot:
        pairs = [(ts, smooth(ts, cfg)) for ts in used]
        _write(args.series_plot, plot_series(pairs, _plot_spec(args)))


def _print_portfolio(report) -> None:
    width = max(len("label"), *(len(lab) for lab in report.labels))
    print(f"{'label':<{width}}  {'mean':>12}  {'P-res':>6}  {'agg P-res':>9}  {'corr':>5}  {'len':>4}  {'agg len':>7}")
    rows = zip(report.labels, report.individual_means, report.individual_resilience,
               report.aggregated_resilience, report.pairwise_correlation,
               report.individual_lengths, report.aggregated_lengths)
    for i, (lab, mean, ir, ar, rho, il, al) in enumerate(rows):
        corr = "-" if i == 0 else display_correlation(rho)
        print(f"{lab:<{width}}  {mean:>12.2f}  {display_resilience(ir):>6d}  "
              f"{display_resilience(ar):>9d}  {corr:>5}  {il:>4d}  {al:>7d}")


def _plot_spec(args) -> PlotSpec:
    return PlotSpec(title=args.title, y_axis_label=args.ylabel,
                    more_info=getattr(args, "more_info", False))


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def _describe(exc: Exception, input_path: str) -> str:
    if isinstance(exc, FileNotFoundError):
        return f"cannot read {exc.filename or input_path}: no such file"
    if isinstance(exc, OSError):
        return f"{exc.filename or input_path}: {exc.strerror or exc}"
    if isinstance(exc, UnicodeDecodeError):
        return f"{input_path}: not valid UTF-8 ({exc.reason})"
    return str(exc)


def _error(message: str) -> None:
    prefix = "respro: error:"
    if sys.stderr.isatty() and not os.environ.get("RESPRO_NO_COLOR"):
        prefix = f"\033[1;31m{prefix}\033[0m"
    print(f"{prefix} {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
