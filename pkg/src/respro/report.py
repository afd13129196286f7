"""JSON documents and display rounding for command output."""

from __future__ import annotations

import json
import math
from decimal import ROUND_HALF_UP, Decimal
from typing import Any

from .smoothing import SmoothingConfig

SCHEMA = "respro/1"


def round_half_away(value: float, places: int = 0) -> Decimal:
    """Round the shortest decimal repr of ``value``, ties away from zero."""
    quantum = Decimal(1).scaleb(-places)
    return Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP)


def display_resilience(value: float) -> int:
    return int(round_half_away(value))


def display_correlation(value: float | None) -> str:
    if value is None:
        return "nan"
    text = str(round_half_away(value, 2))
    return "0.00" if text == "-0.00" else text


def smoothing_block(cfg: SmoothingConfig) -> dict[str, Any]:
    return {
        "span_years": float(cfg.span_years),
        "fraction_override": cfg.fraction_override,
        "robustness_iterations": cfg.robustness_iterations,
        "local_degree": cfg.local_degree,
        "default": cfg.is_default,
    }


def document(command: str, cfg: SmoothingConfig, **body: Any) -> dict[str, Any]:
    doc: dict[str, Any] = {"schema": SCHEMA, "command": command, "smoothing": smoothing_block(cfg)}
    doc.update(body)
    return doc


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(_finite(doc), indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def _finite(obj: Any) -> Any:
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _finite(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(v) for v in obj]
    return obj
