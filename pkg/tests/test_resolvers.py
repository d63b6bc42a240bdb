"""
Tests for input resolvers and payload builders
"""
import pytest

from fc_dyck.coxeter import Word
from fc_dyck.dyck import DyckPath
from fc_dyck.exceptions import InvalidOrientation, InvalidPath, InvalidWord
from fc_dyck.resolvers import (
    census_logic,
    component_logic,
    dimension_logic,
    enumerate_logic,
    path_of_logic,
    render_logic,
    resolve_orientation,
    resolve_path,
    resolve_word,
    table_logic,
    verify_logic,
    word_of_logic,
)


@pytest.mark.parametrize("spelling", ["[3,2,1,4,3]", "32143", "3,2,1,4,3", "3 2 1 4 3", [3, 2, 1, 4, 3]])
def test_resolve_word_spellings(spelling):
    assert resolve_word(spelling, 4) == Word((3, 2, 1, 4, 3), 4)


def test_resolve_empty_word():
    assert resolve_word("", 3) == Word((), 3)
    assert resolve_word("[]", 3) == Word((), 3)
    assert resolve_word("[~]", 3) == Word((), 3)


@pytest.mark.parametrize("bad", ["abc", "[1,2", '{"a": 1}', "1,x", "[1,9]"])
def test_resolve_word_rejects(bad):
    with pytest.raises(InvalidWord):
        resolve_word(bad, 4)


def test_compact_words_need_small_rank():
    with pytest.raises(InvalidWord):
        resolve_word("12", 10)
    assert resolve_word("[10,2]", 10).letters == (10, 2)


def test_resolve_path_spellings():
    assert resolve_path("(())") == DyckPath("UUDD")
    assert resolve_path("NNSS") == DyckPath("UUDD")
    assert resolve_path(" ud ud ") == DyckPath("UDUD")
    with pytest.raises(InvalidPath):
        resolve_path("UX")
    with pytest.raises(InvalidPath):
        resolve_path("DU")


def test_resolve_orientation():
    assert resolve_orientation("right", 3).arrows == (True, True)
    assert resolve_orientation("<-", 3).arrows == (False, False)
    assert resolve_orientation("><", 3).arrows == (True, False)
    assert resolve_orientation("LEFT", 2).arrows == (False,)
    with pytest.raises(InvalidOrientation):
        resolve_orientation("><", 4)
    with pytest.raises(InvalidOrientation):
        resolve_orientation("up", 3)


def test_table_logic():
    payload = table_logic(6)
    assert payload["rows"][6] == [1, 5, 14, 25, 31, 26, 16, 9, 4, 1]
    assert payload["row_sums"] == payload["catalan"]
    with pytest.raises(ValueError):
        table_logic(-1)


def test_enumerate_logic():
    payload = enumerate_logic(4, 3, "paths")
    assert payload["count"] == 12
    assert all(len(e["path"]) == 10 for e in payload["elements"])
    words = enumerate_logic(2, 2)
    assert words["elements"][1] == {"word": [2, 1], "segments": [[1, 2]]}
    with pytest.raises(ValueError):
        enumerate_logic(2, 2, "tableaux")


def test_path_of_and_word_of():
    payload = path_of_logic("[3,2,1,4,3]", 4)
    assert payload["path"] == "UUUUDDUDDD"
    assert payload["statistic"] == 5
    assert payload["segments"] == [[1, 3], [3, 4]]
    assert word_of_logic("UDUUDUUDDD")["word"] == [2, 4, 3]
    assert word_of_logic("UDUDUDUDUD") == {"word": [], "rank": 4, "segments": []}


def test_path_of_uses_canonical_word():
    assert path_of_logic("423", 4)["canonical"] == [2, 4, 3]


def test_component_logic():
    assert component_logic("243", 4)["words"] == [[2, 4, 3], [4, 2, 3]]


def test_dimension_logic():
    by_path = dimension_logic(path="UUUUDDUDDUDD")
    assert by_path["value"] == "16"
    assert by_path["method"] == "formula"
    assert {"i": 1, "m": 3, "p": 5} in by_path["p_values"]
    by_word = dimension_logic(word="32143", rank=4)
    assert by_word["value"] == "5"
    assert by_word["path"] == "UUUUDDUDDD"
    with pytest.raises(ValueError):
        dimension_logic()
    with pytest.raises(ValueError):
        dimension_logic(word="1")


def test_verify_logic():
    payload = verify_logic(2, orientation="left")
    assert payload["passed"]
    assert payload["components"] == 5
    assert payload["orientation"] == "<"
    assert [r["relation"] for r in payload["relations"]][-1] == "1.10"
    assert payload["failures"] == []


def test_render_logic():
    svg = render_logic("UUDD", svg=True)
    assert svg["format"] == "svg"
    assert svg["drawing"].startswith("<?xml")
    assert render_logic("UUDD")["peaks"] == [[2, 2]]


def test_census_logic():
    payload = census_logic(3)
    assert payload["total"] == 14
