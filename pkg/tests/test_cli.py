"""
Tests for the fc-dyck command line
"""
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fc_dyck.canonical import enumerate_fc, max_fc_length
from fc_dyck.cli import main, render_output, run


def test_table():
    result = run(["table", "6"])
    assert result.exit_code == 0
    assert result.payload["rows"][6] == [1, 5, 14, 25, 31, 26, 16, 9, 4, 1]


def test_dim_of_hook_path():
    result = run(["dim", "UUUUDDUDDUDD"])
    assert result.exit_code == 0
    assert result.payload["value"] == "16"
    assert result.payload["method"] == "formula"


def test_dim_of_word():
    result = run(["dim", "--word", "[2,4,3]", "--rank", "4"])
    assert result.payload["value"] == "2"


def test_word_of_sawtooth():
    result = run(["word-of", "UDUDUDUDUD"])
    assert result.payload == {"word": [], "rank": 4}
    assert render_output(result) == '{"word":[],"rank":4}'


def test_path_of_and_component():
    assert run(["path-of", "--word", "[3,2,1,4,3]", "--rank", "4"]).payload["path"] == "UUUUDDUDDD"
    assert run(["component", "--word", "32143", "--rank", "4"]).payload["size"] == 5
    assert run(["enumerate", "--rank", "4", "--length", "3"]).payload["count"] == 12


@pytest.mark.parametrize(
    "argv, code",
    [
        (["component", "--word", "121", "--rank", "2"], "not_homogeneous"),
        (["path-of", "--word", "121", "--rank", "2"], "not_fully_commutative"),
        (["path-of", "--word", "11", "--rank", "2"], "not_fully_commutative"),
        (["word-of", "UDD"], "invalid_path"),
        (["dim", "--word", "9", "--rank", "4"], "invalid_word"),
        (["verify", "--rank", "3", "--orientation", "sideways"], "invalid_orientation"),
    ],
)
def test_domain_errors_exit_one(argv, code):
    result = run(argv)
    assert result.exit_code == 1
    assert result.payload["code"] == code
    assert result.payload["error"]


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["table", "x"],
        ["dim"],
        ["dim", "UUDD", "--word", "1", "--rank", "1"],
        ["dim", "--word", "1"],
        ["enumerate", "--rank", "3"],
    ],
)
def test_usage_errors_exit_two(argv):
    result = run(argv)
    assert result.exit_code == 2
    assert result.payload["code"] == "usage"


def test_verify_reports_every_relation():
    result = run(["verify", "--rank", "2"])
    assert result.exit_code == 0
    assert result.payload["passed"]
    assert len(result.payload["relations"]) == 10


def test_verify_height_guard(monkeypatch):
    monkeypatch.setenv("FC_DYCK_MAX_HEIGHT", "2")
    result = run(["verify", "--rank", "3", "--height", "3"])
    assert result.exit_code == 1
    assert result.payload["code"] == "too_large"


def test_render_prints_drawing():
    result = run(["render", "UUDD"])
    assert render_output(result).splitlines()[0] == " /\\"
    svg = run(["render", "UUDD", "--svg"])
    assert render_output(svg).startswith("<?xml")


def test_census():
    result = run(["census", "--rank", "3"])
    assert result.payload["total"] == 14


def test_output_is_byte_stable():
    argv = ["component", "--word", "32143", "--rank", "4"]
    assert render_output(run(argv)) == render_output(run(argv))


def test_main_prints_json(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["word-of", "UDUD"])
    assert exit_info.value.code == 0
    assert json.loads(capsys.readouterr().out) == {"word": [], "rank": 1}


def test_main_usage_error_goes_to_stderr(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["table"])
    assert exit_info.value.code == 2
    captured = capsys.readouterr()
    assert '"code":"usage"' in captured.err
    assert captured.out == ""


@settings(deadline=None, max_examples=60)
@given(
    st.sampled_from(
        [f for n in range(1, 7) for k in range(max_fc_length(n) + 1) for f in enumerate_fc(n, k)]
    )
)
def test_word_of_path_of_round_trip(form):
    word = json.dumps(form.flatten().to_json())
    path = run(["path-of", "--word", word, "--rank", str(form.rank)]).payload["path"]
    back = run(["word-of", path]).payload
    assert back == {"word": form.flatten().to_json(), "rank": form.rank}
