import json

import pytest

from deckbench import build_deck, cycle_graph, graph6_encode, path_graph
from deckbench.cli import main


def test_params_dv_from_graph6(capsys):
    assert main(["params", graph6_encode(cycle_graph(5)), "--mode", "dv"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["mode"] == "dv"
    assert obj["entries"] == [{"k1": 1, "k2": 1, "k3": 1, "count": 5}]


def test_params_edge_list_input(capsys):
    assert main(["params", "4: 0-1, 1-2, 2-3, 3-0", "--mode", "pv"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["values"] == [0, 0, 2]


def test_params_parse_error_exits_2(capsys):
    assert main(["params", "not graph6 at all \x7f"]) == 2
    assert "cannot parse" in capsys.readouterr().err


def test_recognize_from_graph(capsys):
    assert main(["recognize", "--graph", graph6_encode(cycle_graph(5))]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["subclass"] == "H2"
    assert obj["gamma_is_two"] is True


def test_recognize_from_deck_file(tmp_path, capsys):
    deck_path = tmp_path / "deck.json"
    deck_path.write_text(build_deck(path_graph(4)).to_json())
    assert main(["recognize", "--deck", str(deck_path)]) == 0
    assert json.loads(capsys.readouterr().out)["subclass"] == "H3"


def test_reconstruct_success(tmp_path, capsys):
    deck_path = tmp_path / "deck.json"
    deck_path.write_text(build_deck(cycle_graph(7)).to_json())
    assert main(["reconstruct", str(deck_path), "--variant", "C1"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["validated_count"] >= 1
    assert obj["attempts"]


def test_reconstruct_out_of_scope_exits_nonzero(tmp_path, capsys):
    deck_path = tmp_path / "deck.json"
    deck_path.write_text(build_deck(cycle_graph(5)).to_json())
    assert main(["reconstruct", str(deck_path)]) == 1
    assert json.loads(capsys.readouterr().out)["status"] == "not_in_scope"


def test_reconstruct_missing_file_exits_2(capsys):
    assert main(["reconstruct", "/nonexistent/deck.json"]) == 2
    assert capsys.readouterr().err


def test_verify_small_sweep(tmp_path, capsys):
    csv_path = tmp_path / "witnesses.csv"
    rc = main(
        [
            "verify",
            "--suite",
            "identities",
            "--n",
            "4..5",
            "--witnesses",
            str(csv_path),
        ]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert "identities: ok" in out
    if "witnesses=0" not in out:
        assert csv_path.exists()


def test_verify_unknown_suite_rejected():
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "bogus"])
