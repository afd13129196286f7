import pytest

from conftest import write_csv
from oracles import raw_csv_sum
from respro import (
    DuplicateKey,
    LoadPolicy,
    MissingColumn,
    NoMatchingRows,
    NonPositiveValue,
    ParseError,
    extract_series,
    load_csv,
)
from respro.ingest import parse_number

HEADER = ["Area", "Item", "Year", "Unit", "Value", "Flag"]


def test_fixture_france_wheat(table):
    rows = table.select([("Item", "Wheat"), ("Area", "France")])
    assert len(rows) == 56
    s = extract_series(table, [("Item", "Wheat"), ("Area", "France")])
    assert s.name == "Wheat-France"
    assert s.length() == 56
    assert s.years[0] == 1961 and s.years[-1] == 2016


def test_extract_custom_name(table):
    s = extract_series(table, [("Area", "Italy"), ("Item", "Olives")], name="olives")
    assert s.name == "olives"


def test_extract_no_match(table):
    with pytest.raises(NoMatchingRows):
        extract_series(table, [("Item", "Bananas")])


def test_extract_unknown_column(table):
    with pytest.raises(MissingColumn):
        extract_series(table, [("Country", "France")])


def test_passthrough_columns(table):
    assert {"Unit", "Flag", "Element", "Area Code"} <= set(table.columns)


def test_extract_synthetic_manual(tmp_path):
    path = write_csv(tmp_path / "t.csv", HEADER, [
        ["X", "Rye", "2002", "USD", "3.5", ""],
        ["X", "Rye", "2000", "USD", "1.5", ""],
        ["X", "Oat", "2000", "USD", "9", ""],
        ["X", "Rye", "2001", "USD", "2.5", ""],
    ])
    s = extract_series(load_csv(path), [("Item", "Rye"), ("Area", "X")])
    assert s.to_dict() == {2000: 1.5, 2001: 2.5, 2002: 3.5}
    assert s.name == "Rye-X"


def test_totals_match_raw_file(table, fixture_path):
    for filters in ({"Item": "Wheat", "Area": "France"}, {"Area": "Italy", "Item": "Kiwi fruit"}):
        s = extract_series(table, list(filters.items()))
        assert sum(s.values) == pytest.approx(raw_csv_sum(fixture_path, filters), rel=1e-9)


def test_missing_column(tmp_path):
    path = write_csv(tmp_path / "t.csv", ["Area", "Item", "Year"], [["X", "Rye", "2000"]])
    with pytest.raises(MissingColumn, match="Value"):
        load_csv(path)


def test_duplicate_key(tmp_path):
    path = write_csv(tmp_path / "t.csv", HEADER, [
        ["X", "Rye", "2000", "USD", "1", ""],
        ["X", "Rye", "2001", "USD", "1", ""],
        ["X", "Rye", "2000", "USD", "2", ""],
    ])
    with pytest.raises(DuplicateKey) as info:
        load_csv(path)
    assert info.value.rows == [2, 4]


def test_missing_value_policy(tmp_path):
    path = write_csv(tmp_path / "t.csv", HEADER, [
        ["X", "Rye", "2000", "USD", "1", ""],
        ["X", "Rye", "2001", "USD", "", "M"],
        ["X", "Rye", "2002", "USD", "2", ""],
    ])
    t = load_csv(path)
    assert len(t) == 2
    assert t.dropped["missing_value"] == 1
    with pytest.raises(ParseError) as info:
        load_csv(path, LoadPolicy(on_missing_value="error"))
    assert info.value.row == 3


def test_nonpositive_policy(tmp_path):
    path = write_csv(tmp_path / "t.csv", HEADER, [
        ["X", "Rye", "2000", "USD", "1", ""],
        ["X", "Rye", "2001", "USD", "0", ""],
        ["X", "Rye", "2002", "USD", "-2", ""],
    ])
    with pytest.raises(NonPositiveValue) as info:
        load_csv(path)
    assert info.value.row == 3
    t = load_csv(path, LoadPolicy(on_nonpositive="drop"))
    assert len(t) == 1 and t.dropped["nonpositive"] == 2


def test_quoted_thousands_and_bom(tmp_path):
    path = tmp_path / "t.csv"
    path.write_bytes(
        "﻿Area,Item,Year,Value,Extra\n"
        '"Côte","Rye",2000,"1,234.5",z\n'
        '"Côte","Rye",2001,987,z\n'.encode("utf-8")
    )
    s = extract_series(load_csv(path), [("Area", "Côte"), ("Item", "Rye")])
    assert s.to_dict() == {2000: 1234.5, 2001: 987.0}


@pytest.mark.parametrize("bad", ["12,5", "1.2.3", "abc", "1,23"])
def test_parse_number_rejects(bad):
    with pytest.raises(ValueError):
        parse_number(bad)


@pytest.mark.parametrize("text, value", [("12", 12.0), ("1,000", 1000.0), ("1,234,567.25", 1234567.25),
                                         ("3.5e2", 350.0), (" 7.25 ", 7.25)])
def test_parse_number(text, value):
    assert parse_number(text) == value


def test_bad_year(tmp_path):
    path = write_csv(tmp_path / "t.csv", HEADER, [["X", "Rye", "20x0", "USD", "1", ""]])
    with pytest.raises(ParseError, match="Year"):
        load_csv(path)


def test_bad_value(tmp_path):
    path = write_csv(tmp_path / "t.csv", HEADER, [["X", "Rye", "2000", "USD", "1;5", ""]])
    with pytest.raises(ParseError, match="Value"):
        load_csv(path)


def test_invalid_policy():
    with pytest.raises(ValueError):
        LoadPolicy(on_nonpositive="ignore")
