import io
import json
import subprocess
import sys

import pytest

from beattygame.cli import dump_json, main, parse_human_move, play
from beattygame.core import Position
from beattygame.ruleset import ExtraMoveTable


def run(*argv, stdin=""):
    out = io.StringIO()
    code = main(list(argv), out=out, inp=io.StringIO(stdin))
    return code, out.getvalue()


def test_seq_csv_row():
    code, text = run("seq", "--k", "2", "--n", "3", "--format", "csv")
    assert code == 0
    lines = text.split("\n")
    assert lines[0] == "n,a,b,c,d,letter,index"
    assert lines[3] == "3,4,11,2,4,t2,"
    assert "\r" not in text and text.endswith("\n")


def test_seq_header_only():
    code, text = run("seq", "--k", "2", "--n", "0", "--format", "csv")
    assert code == 0 and text == "n,a,b,c,d,letter,index\n"


def test_seq_d_column_k4():
    _, text = run("seq", "--k", "4", "--n", "5", "--format", "json")
    rows = json.loads(text)["rows"]
    assert [r["d"] for r in rows] == [5, 6, 6, 6, 6]
    assert [r["letter"] for r in rows] == ["s", "t1", "t2", "t3", "t4"]


def test_seq_index_column():
    _, text = run("seq", "--k", "2", "--n", "4", "--format", "json")
    assert [r["index"] for r in json.loads(text)["rows"]] == [None, 1, None, None]


@pytest.mark.parametrize("k", [1, 2])
def test_verify_passes(k):
    code, text = run("verify", "--k", str(k), "--bound", "200")
    assert code == 0 and text.rstrip().endswith("verified")


def test_verify_json_schema():
    code, text = run("verify", "--k", "3", "--bound", "100", "--format", "json")
    report = json.loads(text)
    assert code == 0
    assert set(report) == {"k", "bound", "checks", "timings_ms"}
    assert [c["name"] for c in report["checks"]] == ["theorem1", "no_p_to_p", "winning_moves"]
    assert all(c["pass"] for c in report["checks"])


@pytest.mark.parametrize("argv", [["verify", "--k", "2", "--bound", "-1"], ["seq", "--k", "0", "--n", "3"], ["best", "--k", "2", "1"], []])
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_best_examples():
    assert run("best", "--k", "4", "38", "185")[1] == "position (38,185)\nTypeIII i=2 (20,98) -> (18,87)\n"
    assert run("best", "--k", "4", "185", "38")[1].startswith("position (38,185)\n")
    assert run("best", "--k", "2", "1", "3")[1] == "position (1,3)\nP-position\n"
    assert run("best", "--k", "2", "0", "5")[1] == "position (0,5)\nTypeI (0,5) -> (0,0)\n"


def test_best_json():
    _, text = run("best", "--k", "4", "38", "185", "--format", "json")
    info = json.loads(text)
    assert info["move"] == {"type": "III", "u": 20, "v": 98, "index": 2}
    assert info["target"] == [18, 87]


def test_play_engine_wins_from_type_iii_position():
    code, text = run("play", "--k", "2", "--start", "2", "6", "--engine-first")
    assert code == 0
    assert "engine: TypeIII i=1 (2,6) -> (0,0)" in text
    assert "engine wins" in text


def test_play_reprompts_on_bad_input():
    # (1,3) is P for the human; after (0,1) the engine finishes with the band move
    code, text = run("play", "--k", "2", "--start", "1", "3", stdin="x y z\n5 0\n0 1\n")
    assert text.count("illegal:") == 2
    assert "you: TypeI (0,1) -> (1,2)" in text
    assert "engine: TypeII (1,2) -> (0,0)" in text
    assert code == 0


def test_play_quit_abandons():
    code, text = run("play", "--k", "2", "--start", "5", "9", stdin="q\n")
    assert code == 1 and "game abandoned" in text


def test_play_from_origin():
    out = io.StringIO()
    assert play(3, Position(0, 0), False, io.StringIO(""), out) == "engine"
    assert "(0,0) reached" in out.getvalue()


def test_play_human_can_win():
    out = io.StringIO()
    assert play(2, Position(2, 6), False, io.StringIO("2 6\n"), out) == "you"


def test_parse_human_move():
    table = ExtraMoveTable.build(2, 20)
    assert parse_human_move("2 6", Position(2, 6), 2, table)[0] == Position(0, 0)
    with pytest.raises(ValueError, match="not a move"):
        parse_human_move("2 5", Position(2, 6), 2, table)
    with pytest.raises(ValueError):
        parse_human_move("0 0", Position(2, 6), 2, table)
    with pytest.raises(ValueError):
        parse_human_move("3 0", Position(2, 6), 2, table)


def test_word_outputs():
    assert run("word", "--k", "2", "--len", "8", "--via", "phi")[1] == "sttsttts\n"
    assert run("word", "--k", "2", "--len", "8", "--via", "theta", "--indexed")[1] == "s t1 t2 s t1 t2 t1 s\n"
    assert run("word", "--k", "1", "--len", "5", "--via", "beatty")[1] == "ststt\n"


def test_word_check():
    code, text = run("word", "--k", "2", "--len", "10000", "--check")
    assert code == 0 and text == "3/3 constructions agree (k=2, length=10000)\n"


def test_synth_table_and_json():
    code, text = run("synth", "--k", "2", "--bound", "100")
    assert code == 0
    assert "adjoined: (2,6) (9,25) (35,96)" in text
    assert "match under order 'sum'" in text
    code, text = run("synth", "--k", "1", "--bound", "100", "--format", "json")
    assert code == 0 and json.loads(text)["adjoined"] == []


@pytest.mark.parametrize(
    "argv",
    [
        ["seq", "--k", "3", "--n", "20", "--format", "json"],
        ["verify", "--k", "2", "--bound", "60", "--format", "json", "--no-timings"],
        ["best", "--k", "4", "38", "185", "--format", "json"],
        ["synth", "--k", "3", "--bound", "120", "--format", "json"],
    ],
)
def test_json_round_trip_and_determinism(argv):
    first, second = run(*argv)[1], run(*argv)[1]
    assert first == second
    assert dump_json(json.loads(first)) == first


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "beattygame", "best", "--k", "2", "1", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.endswith("P-position\n")
