import json

import pytest

from hyperlaw.errors import EmptyCell, HyperlawError, TableSyntaxError
from hyperlaw.formats import (
    FIXTURES,
    fixture_text,
    load_fixture,
    parse,
    parse_document,
    serialize_compact,
    serialize_document,
    to_document,
)


def test_i4_compact(fx):
    i4 = fx["I4"]
    assert i4.n == 4 and i4.labels == ("x", "y", "z", "w")
    assert i4.cells[0][1] == i4.mask("xw")
    assert i4.cells[1] == (i4.mask("xw"), i4.mask("yz"), i4.mask("yz"), i4.mask("w"))


def test_l5_has_25_cells(fx):
    assert sum(len(row) for row in fx["L5"].cells) == 25


def test_malformed_line():
    with pytest.raises(TableSyntaxError) as exc:
        parse("elements: x y\nx,|y\ny|y\n")
    assert (exc.value.line, exc.value.column) == (2, 3)


def test_unknown_element_position():
    with pytest.raises(TableSyntaxError) as exc:
        parse("elements: x y\nx|y\ny|x,q\n")
    assert (exc.value.line, exc.value.column) == (3, 5)


def test_wrong_cell_and_row_counts():
    with pytest.raises(TableSyntaxError):
        parse("elements: x y\nx|y|x\ny|y\n")
    with pytest.raises(TableSyntaxError):
        parse("elements: x y\nx|y\n")
    with pytest.raises(TableSyntaxError):
        parse("# nothing here\n")


def test_header_must_come_first():
    with pytest.raises(TableSyntaxError):
        parse("0|0\nelements: a b\n0|0\n")


def test_default_labels_and_comments():
    t = parse("# two elements\n0|1\n1|0,1\n")
    assert t.labels == ("0", "1") and t.cells == ((1, 2), (2, 3))


def test_bad_json():
    with pytest.raises(TableSyntaxError) as exc:
        parse('{"order": 1,\n "elements": [}')
    assert exc.value.line == 2
    with pytest.raises(HyperlawError):
        parse_document({"order": 1})
    with pytest.raises(EmptyCell):
        parse_document({"order": 1, "elements": ["a"], "table": [[[]]]})
    with pytest.raises(HyperlawError):
        parse_document({"order": 1, "elements": ["a"], "table": [[["b"]]]})


@pytest.mark.parametrize("name", FIXTURES)
def test_round_trips(name):
    t = load_fixture(name)
    text = serialize_document(t)
    back = parse(text)
    assert back == t and back.labels == t.labels
    assert serialize_document(back) == text
    assert parse(serialize_compact(t)) == t
    assert parse_document(json.loads(json.dumps(to_document(t)))) == t


def test_unknown_fixture():
    with pytest.raises(HyperlawError):
        fixture_text("Z9")
