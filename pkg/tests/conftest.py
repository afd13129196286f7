from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from respro import AnnualSeries, load_csv  # noqa: E402

DATA = Path(__file__).parent / "data"
FIXTURE = DATA / "faostat_synthetic.csv"

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def fixture_path() -> Path:
    return FIXTURE


@pytest.fixture(scope="session")
def table():
    return load_csv(FIXTURE)


def random_series(rng: np.random.Generator, n: int, name: str = "s", start: int = 1961) -> AnnualSeries:
    """Positive series with a smooth trend, noise and random year gaps."""
    gaps = rng.integers(1, 4, size=n)
    years = start + np.cumsum(gaps) - gaps[0]
    trend = 50 + 30 * np.sin(np.linspace(0, rng.uniform(1, 4), n)) + rng.uniform(0, 40) * np.linspace(0, 1, n)
    values = trend * np.exp(rng.normal(0, 0.1, n))
    return AnnualSeries(name, tuple(int(y) for y in years), tuple(float(v) for v in values))


def write_csv(path: Path, header: list[str], rows: list[list]) -> Path:
    import csv

    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    return path


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        if rep.skipped:
            status = "WAIVED"
        else:
            status = "PASS" if rep.passed else "FAIL"
        previous = _ACCEPTANCE.get(number, ("PASS", title))[0]
        if previous == "FAIL":
            status = "FAIL"
        _ACCEPTANCE[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {status:<6} {title}")
