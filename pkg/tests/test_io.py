"""File formats and catalog serialization."""

from __future__ import annotations

import json

import pytest

from symhex.classify import classify
from symhex.codes import HzCode
from symhex.errors import ParseError
from symhex.gf import LinearCode
from symhex.io import (
    catalog_dict,
    catalog_text,
    format_hzcode,
    format_matrix,
    format_matrix_list,
    parse_hzcode,
    parse_matrix,
    parse_matrix_list,
    read_catalog,
    write_catalog,
    write_text_atomic,
)
from symhex.ring import RingId

H23 = RingId.H23


def test_matrix_round_trip():
    for code in (
        LinearCode(2, [[1, 1, 0], [0, 0, 1]]),
        LinearCode(3, [[1, 0, 2], [0, 1, 1]]),
        LinearCode.zero(2, 4),
        LinearCode.full(3, 3),
    ):
        assert parse_matrix(format_matrix(code)) == code


def test_matrix_format_shape():
    text = format_matrix(LinearCode(3, [[1, 0, 2]]))
    assert text == "3 3 1\n102\n\n"


def test_matrix_list_round_trip():
    codes = [LinearCode(2, [[1, 1]]), LinearCode.zero(2, 2), LinearCode.full(2, 2)]
    assert parse_matrix_list(format_matrix_list(codes)) == codes


def test_hzcode_round_trip():
    code = HzCode(H23, LinearCode(2, [[1, 1]]), LinearCode(3, [[1, 2]]))
    text = format_hzcode(code)
    assert text.startswith("H23 2\n")
    assert parse_hzcode(text) == code


def test_parse_rejects_bad_input():
    with pytest.raises(ParseError):
        parse_matrix("2 2\n11\n")  # short header
    with pytest.raises(ParseError):
        parse_matrix("2 2 1\n12\n")  # entry outside F2
    with pytest.raises(ParseError):
        parse_matrix("2 2 1\n111\n")  # row too long
    with pytest.raises(ParseError):
        parse_matrix("2 2 2\n11\n11\n")  # dependent rows contradict k
    with pytest.raises(ParseError):
        parse_matrix("4 2 1\n11\n")  # bad field
    with pytest.raises(ParseError):
        parse_hzcode("H24 2\n2 2 0\n\n3 2 0\n\n")
    with pytest.raises(ParseError):
        parse_hzcode("H23 2\n3 2 0\n\n2 2 0\n\n")  # blocks in wrong order
    with pytest.raises(ParseError):
        parse_hzcode("H23 4\n2 2 0\n\n3 2 0\n\n")  # header length mismatch


def test_parse_tolerates_leading_blank_lines():
    assert parse_matrix("\n\n2 2 1\n11\n") == LinearCode(2, [[1, 1]])


def test_atomic_write(tmp_path):
    path = tmp_path / "out.txt"
    write_text_atomic(str(path), "hello\n")
    assert path.read_text() == "hello\n"
    write_text_atomic(str(path), "replaced\n")
    assert path.read_text() == "replaced\n"
    assert list(tmp_path.iterdir()) == [path]  # no temp droppings


def _small_catalog():
    la = [LinearCode(2, [[1, 0]]), LinearCode(2, [[1, 1]])]
    lb = [LinearCode(3, [[1, 0]]), LinearCode(3, [[1, 1]]), LinearCode(3, [[1, 2]])]
    records = classify(H23, la, lb, "SO")
    return catalog_dict(H23, 2, "SO", records, la, lb), records


def test_catalog_shape():
    cat, records = _small_catalog()
    assert set(cat) == {"meta", "records", "summary"}
    assert cat["meta"]["ring"] == "H23"
    assert cat["meta"]["target"] == "SO"
    assert cat["meta"]["ca_count"] == 2 and cat["meta"]["cb_count"] == 3
    assert len(cat["meta"]["ca_list_sha256"]) == 64
    assert len(cat["records"]) == len(records) == cat["summary"]["total"] == 7
    rec = cat["records"][0]
    assert set(rec) == {"ring", "n", "ca", "cb", "sigma", "ca_gen", "cb_gen", "flags", "size"}
    assert rec["sigma"] == [1, 2]
    assert rec["ca_gen"] == ["10"]


def test_catalog_summary_matches_flag_tallies():
    cat, records = _small_catalog()
    for key in ("so", "sd", "qsd", "nice", "lcd"):
        assert cat["summary"][key] == sum(1 for r in cat["records"] if r["flags"][key])


def test_catalog_bytes_deterministic(tmp_path):
    cat1, _ = _small_catalog()
    cat2, _ = _small_catalog()
    assert catalog_text(cat1) == catalog_text(cat2)
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    write_catalog(str(p1), cat1)
    write_catalog(str(p2), cat2)
    assert p1.read_bytes() == p2.read_bytes()
    assert read_catalog(str(p1)) == cat1


def test_catalog_is_valid_json_with_sorted_keys():
    cat, _ = _small_catalog()
    text = catalog_text(cat)
    parsed = json.loads(text)
    assert list(parsed) == sorted(parsed)
