from __future__ import annotations

import json

import pytest

from wordgraphs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_graph_edge_list(capsys):
    code, out, _ = run(capsys, "graph", "balloon")
    assert code == 0
    assert out == "a b\na n\nb n\nnode l\nnode o\n"


def test_graph_json(capsys):
    code, out, _ = run(capsys, "graph", "balloon", "--json")
    assert code == 0
    assert out == '{"edges": [["a", "b"], ["a", "n"], ["b", "n"]], "nodes": ["a", "b", "l", "n", "o"]}\n'


def test_graph_tokens(capsys):
    code, out, _ = run(capsys, "graph", "x1 y x1 y", "--tokens", "--json")
    assert code == 0
    assert json.loads(out) == {"nodes": ["x1", "y"], "edges": [["x1", "y"]]}


def test_locality_search(capsys):
    code, out, _ = run(capsys, "locality", "pepper")
    assert code == 0
    assert out == "2 (witness: e,p,r)\n"


def test_locality_with_sigma(capsys):
    code, out, _ = run(capsys, "locality", "pepper", "--sigma", "r,p,e")
    assert code == 0
    assert out == "3 (sigma: r,p,e)\n"


def test_locality_json_is_byte_stable(capsys):
    code, out, _ = run(capsys, "locality", "banana", "--json")
    assert code == 0
    assert out == '{"locality": 2, "witness": ["n", "a", "b"], "word": "banana"}\n'
    code, again, _ = run(capsys, "locality", "banana", "--json")
    assert again == out


def test_check_with_sigma_prints_stage_trace(capsys):
    code, out, _ = run(capsys, "check", "reappear", "--k", "2", "--sigma", "e,a,r,p")
    assert code == 0
    assert out.splitlines() == [
        "stage 1: mark 'e' -> 2 block(s): [2..2][6..6]",
        "stage 2: mark 'a' -> 2 block(s): [2..3][6..7]",
        "stage 3: mark 'r' -> 2 block(s): [1..3][6..8]",
        "stage 4: mark 'p' -> 1 block(s): [1..8]",
        "2-local: yes (max block count 2)",
    ]


def test_check_failure_exits_one(capsys):
    code, out, _ = run(capsys, "check", "pepper", "--k", "1")
    assert code == 1
    assert out == "1-local: no\n"


def test_check_sigma_failure_exits_one(capsys):
    code, out, _ = run(capsys, "check", "pepper", "--k", "2", "--sigma", "r,p,e")
    assert code == 1
    assert out.endswith("2-local: no (max block count 3)\n")


def test_uniformize(capsys):
    code, out, _ = run(capsys, "uniformize", "abaaa", "--k", "1", "--sigma", "b,a")
    assert code == 0
    assert out == "word: aab\nsigma: b,a\n"


def test_uniformize_json(capsys):
    code, out, _ = run(capsys, "uniformize", "aaaa", "--k", "1", "--sigma", "a", "--json")
    assert code == 0
    assert json.loads(out) == {
        "input_word": "aaaa",
        "input_sigma": ["a"],
        "k": 1,
        "word": "aa",
        "sigma": ["a"],
    }


def test_decide_from_file(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text('{"nodes": ["1", "2", "3", "4"], "edges": [["1", "2"], ["3", "4"]]}')
    code, out, _ = run(capsys, "decide", "--graph", str(path), "--class", "L", "--k", "2")
    assert code == 0
    assert out == "member: yes\nwitness: 121234\n"


def test_decide_negative_exits_one(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("1 2\n2 3\n3 4\n1 4\n")
    code, out, _ = run(capsys, "decide", "--graph", str(path), "--class", "L", "--k", "1")
    assert code == 1
    assert out == "member: no\n"


def test_decide_missing_file_exits_two(capsys):
    code, _, err = run(capsys, "decide", "--graph", "/no/such/file", "--class", "L", "--k", "1")
    assert code == 2
    assert err.startswith("error:")


def test_decide_node_budget_exits_three(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("\n".join(f"node {i}" for i in range(1, 8)))
    code, _, err = run(capsys, "decide", "--graph", str(path), "--class", "R", "--k", "2")
    assert code == 3
    assert err.startswith("error:")


def test_decide_env_budget(capsys, tmp_path, monkeypatch):
    path = tmp_path / "g.txt"
    path.write_text("\n".join(f"node {i}" for i in range(1, 7)))
    monkeypatch.setenv("WG_BUDGET_NODES", "6")
    code, out, _ = run(capsys, "decide", "--graph", str(path), "--class", "R", "--k", "2")
    assert code == 0
    # the flag wins over the environment
    monkeypatch.setenv("WG_BUDGET_NODES", "3")
    code, _, _ = run(capsys, "decide", "--graph", str(path), "--class", "R", "--k", "2", "--budget-nodes", "6")
    assert code == 0
    code, _, _ = run(capsys, "decide", "--graph", str(path), "--class", "R", "--k", "2")
    assert code == 3


def test_bad_env_budget_exits_two(capsys, monkeypatch):
    monkeypatch.setenv("WG_BUDGET_LETTERS", "many")
    code, _, err = run(capsys, "locality", "abc")
    assert code == 2
    assert "WG_BUDGET_LETTERS" in err


def test_gen_and_fixture(capsys):
    code, out, _ = run(capsys, "gen", "path", "3")
    assert code == 0
    assert json.loads(out) == {"nodes": ["1", "2", "3"], "edges": [["1", "2"], ["2", "3"]]}
    code, out, _ = run(capsys, "gen", "fixture", "2k2")
    assert code == 0
    assert json.loads(out) == {"nodes": ["1", "2", "3", "4"], "edges": [["1", "2"], ["3", "4"]]}


def test_gen_bad_count_exits_two(capsys):
    code, _, err = run(capsys, "gen", "path", "x")
    assert code == 2
    assert err.startswith("error:")


def test_gen_cliques(capsys):
    code, out, _ = run(capsys, "gen", "cliques", "ab|c")
    assert code == 0
    assert json.loads(out) == {"nodes": ["a", "b", "c"], "edges": [["a", "b"]]}


def test_cliques_command(capsys):
    code, out, _ = run(capsys, "cliques", "ab|cd")
    assert code == 0
    assert out.splitlines()[:2] == ["word: abcdcdab", "sigma: c,d,a,b"]


def test_cliques_json(capsys):
    code, out, _ = run(capsys, "cliques", "ab", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["word"] == "abba" or data["word"] == "abab"
    assert data["two_local"] and data["graph_matches"]


def test_threshold(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("1 2\n2 3\n")
    code, out, _ = run(capsys, "threshold", "--graph", str(path))
    assert code == 0
    assert out == "threshold: yes\n"
    path.write_text("1 2\n2 3\n3 4\n1 4\n")
    code, out, _ = run(capsys, "threshold", "--graph", str(path))
    assert code == 1
    assert out == "threshold: no\n"


def test_cwd_build_eval_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "cwd", "build", "banana", "--sigma", "n,a,b", "--k", "2")
    assert code == 0
    path = tmp_path / "e.cwd"
    path.write_text(out)
    code, out, _ = run(capsys, "cwd", "eval", str(path))
    assert code == 0
    assert out.splitlines() == [
        "nodes: a b n",
        "edges:",
        "a n",
        "labels:",
        "a: two",
        "b: (1 0)",
        "n: two",
    ]
    code, out, _ = run(capsys, "cwd", "verify", "banana", "--sigma", "n,a,b", "--k", "2")
    assert code == 0
    assert out == "graph matches: yes\nlabels used: 4 (limit 5)\n"


def test_cwd_eval_parse_error_exits_two(capsys, tmp_path):
    path = tmp_path / "bad.cwd"
    path.write_text("(create bogus \"x\")")
    code, _, err = run(capsys, "cwd", "eval", str(path))
    assert code == 2
    assert "parse error at line 1" in err


def test_cwd_build_rejects_insufficient_k(capsys):
    code, _, err = run(capsys, "cwd", "build", "pepper", "--k", "1", "--sigma", "e,p,r")
    assert code == 2
    assert err.startswith("error:")


def test_speed(capsys):
    code, out, _ = run(capsys, "speed", "--class", "L", "--k", "1", "--n", "3")
    assert code == 0
    assert out.splitlines() == [
        "count: 8 of 8 graphs (class L, k=1, n=3)",
        "threshold cross-check: 8 (agree)",
        "bell B_3: 5",
    ]


def test_speed_json(capsys):
    code, out, _ = run(capsys, "speed", "--class", "R", "--k", "1", "--n", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data == {"bell": 5, "class": "R", "count": 1, "k": 1, "n": 3, "total": 8}


def test_usage_errors_exit_two(capsys):
    assert main(["locality"]) == 2
    assert main(["nonsense"]) == 2
    assert main(["decide", "--class", "Q", "--graph", "-", "--k", "1"]) == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert main(["cwd", "--help"]) == 0
