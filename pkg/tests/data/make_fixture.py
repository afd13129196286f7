"""Regenerate faostat_synthetic.csv (deterministic).

Synthetic stand-in for a FAOSTAT "Value of Agricultural Production" export:
same header, dot decimals, one row per (Area, Item, Year). The numbers are
invented; only the shape matches the real download.
"""

import csv
from pathlib import Path

import numpy as np

HEADER = [
    "Domain Code", "Domain", "Area Code", "Area", "Element Code", "Element",
    "Item Code", "Item", "Year Code", "Year", "Unit", "Value", "Flag", "Flag Description",
]
ELEMENT = ("152", "Gross Production Value (constant 2004-2006 million US$)")

# area -> (code, first year, wheat level, wheat noise)
AREAS = {
    "France": (68, 1961, 9000.0, 0.10),
    "Germany": (79, 1961, 6500.0, 0.07),
    "Italy": (106, 1961, 3500.0, 0.085),
    "United Kingdom": (229, 1961, 3000.0, 0.11),
    "Spain": (203, 1961, 2200.0, 0.16),
    "Poland": (173, 1961, 2000.0, 0.12),
    "Romania": (183, 1961, 1500.0, 0.2),
    "Hungary": (97, 1961, 1000.0, 0.15),
    "Czechia": (167, 1993, 1200.0, 0.12),
    "Croatia": (98, 1992, 300.0, 0.18),
}
# Italian crops: item -> (code, first year, level, noise)
ITALY_ITEMS = {
    "Grapes": (560, 1961, 6000.0, 0.08),
    "Olives": (260, 1961, 4000.0, 0.15),
    "Tomatoes": (388, 1961, 3800.0, 0.07),
    "Maize": (56, 1961, 1800.0, 0.10),
    "Kiwi fruit": (592, 1980, 400.0, 0.12),
}


def series(rng, years, level, noise, shock, weight):
    t = (years - years[0]) / max(len(years) - 1, 1)
    trend = level * (0.6 + 0.7 * t - 0.35 * t**2) * (1 + 0.05 * np.sin(years / 7.0))
    own = rng.normal(0.0, noise, len(years))
    common = shock[years - 1961] * noise
    anomaly = np.sqrt(1 - weight**2) * own + weight * common
    return trend * np.exp(anomaly)


def main(out: Path) -> None:
    rng = np.random.default_rng(20200225)
    shock = rng.normal(0.0, 1.0, 56)
    rows = []

    def emit(area, acode, item, icode, first, level, noise, weight):
        years = np.arange(first, 2017)
        values = series(rng, years, level, noise, shock, weight)
        for y, v in zip(years, values):
            rows.append(["QV", "Value of Agricultural Production", acode, area, ELEMENT[0],
                         ELEMENT[1], icode, item, int(y), int(y), "USD", f"{v:.3f}", "Fc",
                         "Calculated data"])

    for area, (code, first, level, noise) in AREAS.items():
        emit(area, code, "Wheat", 15, first, level, noise, 0.4)
    for item, (code, first, level, noise) in ITALY_ITEMS.items():
        emit("Italy", 106, item, code, first, level, noise, 0.5)

    with out.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, quoting=csv.QUOTE_ALL, lineterminator="\n")
        writer.writerow(HEADER)
        writer.writerows(rows)


if __name__ == "__main__":
    main(Path(__file__).with_name("faostat_synthetic.csv"))
