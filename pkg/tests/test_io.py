import json
from fractions import Fraction as Fr

import pytest
from hypothesis import given

from discdisp import (
    FewerThanTwoAtoms,
    ParseError,
    dist_from_json,
    dist_to_json,
    dump_dist,
    geometric,
    load_dist,
    poisson,
    read_counts_csv,
    to_approx,
)
from discdisp.experiments import table1
from discdisp.experiments.data import TABLE1_H1, TABLE1_VALUES, counts_csv
from discdisp.io import dumps, parse_counts_csv

from conftest import exact_dists


@given(exact_dists())
def test_json_round_trip_exact(d):
    back = dist_from_json(json.loads(json.dumps(dist_to_json(d))))
    assert back == d and back.exact


def test_json_round_trip_approx_and_tail():
    for d in (to_approx(table1()[0]), poisson(2.5), geometric(Fr(1, 2), Fr(1, 8))):
        back = dist_from_json(json.loads(dumps(dist_to_json(d))))
        # approx cdf levels are re-summed on load, so compare the atoms
        assert (back.support, back.probs, back.mode) == (d.support, d.probs, d.mode)
        assert back.tail_defect == d.tail_defect


def test_rationals_as_strings(tmp_path):
    p = table1()[0]
    path = tmp_path / "p.json"
    dump_dist(p, path)
    raw = json.loads(path.read_text())
    assert raw["atoms"][0] == ["0", "15/28"]
    assert raw["sample_size"] == 28
    back = load_dist(path)
    assert back == p and back.sample_size == 28


def test_dumps_layout():
    text = dumps({"a": [["1", "1/2"], ["2", "1/2"]], "b": {"c": 1}})
    assert '["1", "1/2"]' in text
    assert json.loads(text) == {"a": [["1", "1/2"], ["2", "1/2"]], "b": {"c": 1}}


@pytest.mark.parametrize("obj", [
    [], {"atoms": 3}, {"atoms": [[1]]}, {"atoms": [["x", "1/2"], ["1", "1/2"]]},
    {"atoms": [["0", 0.5], ["1", 0.5]]}, {"mode": "fuzzy", "atoms": []},
    {"atoms": [["0", "1/2"], ["1", "1/2"]], "sample_size": 0},
])
def test_bad_json(obj):
    with pytest.raises(ParseError):
        dist_from_json(obj)


def test_invalid_json_file(tmp_path):
    path = tmp_path / "x.json"
    path.write_text("{\n  oops\n}")
    with pytest.raises(ParseError) as info:
        load_dist(path)
    assert info.value.line == 2


def test_counts_csv(tmp_path):
    path = tmp_path / "sample1.csv"
    path.write_text(counts_csv(TABLE1_VALUES, TABLE1_H1))
    d = read_counts_csv(path)
    assert d == table1()[0]
    assert d.n == 5 and d.label == "sample1"


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("v,c\n1,2\n", 1),
    ("value,count\n1,2\n2\n", 3),
    ("value,count\n1,2\n2,-1\n", 3),
    ("value,count\nabc,2\n", 2),
    ("value,count\n1,2.5\n", 2),
])
def test_counts_csv_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_counts_csv(text)
    assert info.value.line == line


def test_single_row_csv(tmp_path):
    path = tmp_path / "one.csv"
    path.write_text("value,count\n3,10\n")
    with pytest.raises(FewerThanTwoAtoms):
        read_counts_csv(path)
