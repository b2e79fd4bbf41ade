import json

import pytest

from treepack.cli import EXIT_BAD_INPUT, EXIT_BUDGET, EXIT_HARD_FAILURE, EXIT_OK, main
from treepack.graphio import load_graph, load_solution, parse_records
from treepack.oracle import PackingSolution, check_packing
from treepack.patterns import TreeEmbedding

from .testing import write_graph

C6 = "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n"
BARBELL = "8 9\n0 1\n0 2\n1 2\n2 3\n3 4\n4 5\n5 6\n5 7\n6 7\n"


@pytest.fixture
def c6_file(tmp_path):
    return write_graph(tmp_path, C6)


#######################################
## generate
#######################################
def test_generate_cycle(capsys):
    assert main(["generate", "cycle", "--r", "2"]) == EXIT_OK
    assert capsys.readouterr().out == C6


def test_generate_chorded_to_file(tmp_path):
    output = str(tmp_path / "chorded.txt")

    assert main(["generate", "chorded_cycle", "--r", "2", "--chord", "0,3,3", "--output", output]) == EXIT_OK
    assert load_graph(output).vertex_count == 8


def test_generate_rejects_bad_family_parameters(capsys):
    assert main(["generate", "chorded_cycle", "--r", "3", "--chord", "0,6,6"]) == EXIT_BAD_INPUT
    assert "12-cycle" in capsys.readouterr().err


#######################################
## pack and cover
#######################################
@pytest.mark.parametrize("mode", ["oracle", "heuristic"], ids=["oracle", "heuristic"])
def test_pack_c6(c6_file, capsys, mode):
    assert main(["pack", c6_file, "--k", "1", "--mode", mode]) == EXIT_OK

    fields = dict(parse_records(capsys.readouterr().out)[0])
    assert fields["size"] == "2"
    assert fields["valid"] == "true"


def test_pack_k2_heuristic_on_edge(tmp_path, capsys):
    assert main(["pack", write_graph(tmp_path, "2 1\n0 1\n"), "--k", "2", "--mode", "heuristic"]) == EXIT_OK
    assert dict(parse_records(capsys.readouterr().out)[0])["size"] == "0"


def test_pack_output_reloads(c6_file, tmp_path):
    output = str(tmp_path / "packing.txt")

    assert main(["pack", c6_file, "--output", output]) == EXIT_OK
    assert check_packing(load_graph(c6_file), 1, load_solution(output)) == []


def test_pack_reports_invalid_packing(c6_file, capsys, monkeypatch):
    # 0 and 3 are not adjacent on C6
    bogus = PackingSolution(1, (TreeEmbedding(1, (0, 1, 3)),))
    monkeypatch.setattr("treepack.cli.pack_t1", lambda g: bogus)

    assert main(["pack", c6_file, "--mode", "heuristic"]) == EXIT_HARD_FAILURE
    assert dict(parse_records(capsys.readouterr().out)[0])["valid"] == "false"


def test_pack_budget_exceeded(c6_file):
    assert main(["pack", c6_file, "--budget-embeddings", "1"]) == EXIT_BUDGET


def test_pack_heuristic_unsupported_k(c6_file):
    assert main(["pack", c6_file, "--k", "3", "--mode", "heuristic"]) == EXIT_BAD_INPUT


def test_cover_c6(c6_file, capsys):
    assert main(["cover", c6_file]) == EXIT_OK

    fields = dict(parse_records(capsys.readouterr().out)[0])
    assert fields["size"] == "2"
    assert fields["valid"] == "true"


def test_bad_graph_file(tmp_path, capsys):
    assert main(["pack", write_graph(tmp_path, "3 2\n0 1\n5 1\n")]) == EXIT_BAD_INPUT
    assert "line 3" in capsys.readouterr().err


def test_non_ascii_graph_file(tmp_path, capsys):
    file = tmp_path / "graph.txt"
    file.write_bytes(b"3 1\n0 \xff\n")

    assert main(["pack", str(file)]) == EXIT_BAD_INPUT
    assert "line 2" in capsys.readouterr().err


def test_missing_graph_file(tmp_path):
    assert main(["pack", str(tmp_path / "missing.txt")]) == EXIT_BAD_INPUT


#######################################
## blocks and simulate
#######################################
@pytest.mark.parametrize("method", ["reference", "protocol"], ids=["reference", "protocol"])
def test_blocks(tmp_path, capsys, method):
    assert main(["blocks", write_graph(tmp_path, BARBELL), "--method", method]) == EXIT_OK

    records = parse_records(capsys.readouterr().out)
    assert [dict(r)["vertices"] for r in records if "block" in dict(r)] == ["0 1 2", "5 6 7"]
    assert [dict(r)["vertices"] for r in records if "path" in dict(r)] == ["3 4"]


def test_simulate_with_trace(tmp_path, capsys):
    trace = tmp_path / "trace.jsonl"

    assert main(["simulate", write_graph(tmp_path, BARBELL), "--trace", str(trace)]) == EXIT_OK

    lines = trace.read_text().splitlines()
    assert len(lines) == 8 * 8
    assert json.loads(lines[0]) == dict(round=1, vertex=0, paths={"1": [0, 1], "2": [0, 2]})

    summary = dict(parse_records(capsys.readouterr().out)[0])
    assert summary["rounds"] == "8"
