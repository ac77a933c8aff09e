import json
from fractions import Fraction as F

import pytest

from distfilter import load_schedule, schedule_to_json, decompose, build_graph
from distfilter.cli import main
from helpers import REF5_MATRIX, ref5_graph

GRAPH5 = "5\n1 2\n2 3\n3 4\n3 5\n"
MATRIX5 = "5\n0 0 0 0 0\n1 0 0 3 0\n2 5 0 0 0\n3 6 0 0 0\n4 0 0 4 0\n"
E1 = "5\n1\n0\n0\n0\n0\n"


@pytest.fixture
def files(tmp_path):
    graph = tmp_path / "graph.txt"
    matrix = tmp_path / "filter.txt"
    vector = tmp_path / "signal.txt"
    schedule = tmp_path / "schedule.json"
    graph.write_text(GRAPH5)
    matrix.write_text(MATRIX5)
    vector.write_text(E1)
    return graph, matrix, vector, schedule


def test_decompose_writes_schedule_and_stats(files, capsys):
    graph, matrix, vector, schedule = files
    assert main(["decompose", str(graph), str(matrix), str(schedule)]) == 0
    out = capsys.readouterr().out.strip()
    fields = dict(kv.split("=") for kv in out.split())
    assert fields["factors_raw"] == "12"
    assert fields["factors_lifted"] == "32"
    assert int(fields["factors_optimized"]) <= 12
    assert fields["bound"] == "130"
    loaded = load_schedule(schedule)
    assert loaded.product_matrix() == REF5_MATRIX


def test_decompose_no_optimize(files, capsys):
    graph, matrix, _, schedule = files
    assert main(["decompose", str(graph), str(matrix), str(schedule), "--no-optimize"]) == 0
    fields = dict(kv.split("=") for kv in capsys.readouterr().out.split())
    assert fields["factors_optimized"] == fields["factors_lifted"] == "32"


def test_decompose_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a graph")
    matrix = tmp_path / "filter.txt"
    matrix.write_text(MATRIX5)
    assert main(["decompose", str(bad), str(matrix), str(tmp_path / "s.json")]) == 2
    assert main(["decompose", str(tmp_path / "missing.txt"), str(matrix), "x"]) == 2


def test_decompose_disconnected_names_node(tmp_path, capsys):
    graph = tmp_path / "graph.txt"
    graph.write_text("5\n1 2\n4 5\n")
    matrix = tmp_path / "filter.txt"
    matrix.write_text(MATRIX5)
    assert main(["decompose", str(graph), str(matrix), str(tmp_path / "s.json")]) == 3
    assert "node 3" in capsys.readouterr().err


def test_decompose_dimension_mismatch(tmp_path):
    graph = tmp_path / "graph.txt"
    graph.write_text(GRAPH5)
    matrix = tmp_path / "filter.txt"
    matrix.write_text("4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n")
    assert main(["decompose", str(graph), str(matrix), str(tmp_path / "s.json")]) == 4


def test_simulate_prints_output_and_counts(files, capsys):
    graph, matrix, vector, schedule = files
    main(["decompose", str(graph), str(matrix), str(schedule)])
    capsys.readouterr()
    assert main(["simulate", str(schedule), str(graph), str(vector)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[:5] == ["0", "1", "2", "3", "4"]
    assert lines[5].startswith("rounds=") and "messages=" in lines[5]


def test_simulate_identity_schedule_echoes(tmp_path, capsys):
    graph = tmp_path / "graph.txt"
    graph.write_text("3\n1 2\n2 3\n")
    schedule = tmp_path / "schedule.json"
    g = build_graph(3, [(1, 2), (2, 3)])
    ident = decompose([[F(1), F(0), F(0)], [F(0), F(1), F(0)], [F(0), F(0), F(1)]], g)
    schedule.write_text(schedule_to_json(ident))
    vector = tmp_path / "signal.txt"
    vector.write_text("3\n7\n-1/2\n4\n")
    assert main(["simulate", str(schedule), str(graph), str(vector)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["7", "-1/2", "4", "rounds=1 messages=0"]


def test_simulate_trace_flag(files, capsys):
    graph, matrix, vector, schedule = files
    main(["decompose", str(graph), str(matrix), str(schedule)])
    capsys.readouterr()
    assert main(["simulate", str(schedule), str(graph), str(vector), "--trace"]) == 0
    trace = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert trace["rounds"] >= 1 and "per_round" in trace


def test_simulate_graph_mismatch(files, tmp_path, capsys):
    graph, matrix, vector, schedule = files
    main(["decompose", str(graph), str(matrix), str(schedule)])
    other = tmp_path / "other.txt"
    other.write_text("5\n1 2\n2 3\n3 4\n4 5\n")
    assert main(["simulate", str(schedule), str(other), str(vector)]) == 5


def test_simulate_non_local_factor(files, capsys):
    graph, matrix, vector, schedule = files
    main(["decompose", str(graph), str(matrix), str(schedule)])
    doc = json.loads(schedule.read_text())
    doc["factors"].append({"kind": "add", "i": 4, "j": 1, "m": "1", "stage": "tampered"})
    schedule.write_text(json.dumps(doc))
    assert main(["simulate", str(schedule), str(graph), str(vector)]) == 6


def test_simulate_float_mode(files, capsys):
    graph, matrix, vector, schedule = files
    main(["decompose", str(graph), str(matrix), str(schedule)])
    capsys.readouterr()
    assert main(["simulate", str(schedule), str(graph), str(vector), "--mode", "float"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [float(v) for v in lines[:5]] == [0.0, 1.0, 2.0, 3.0, 4.0]


def test_verify_ok_and_mismatch(files, tmp_path, capsys):
    graph, matrix, vector, schedule = files
    main(["decompose", str(graph), str(matrix), str(schedule)])
    capsys.readouterr()
    assert main(["verify", str(graph), str(matrix), str(schedule)]) == 0
    assert capsys.readouterr().out.strip() == "OK"

    other_matrix = tmp_path / "other.txt"
    other_matrix.write_text("5\n" + "\n".join(" ".join("1" for _ in range(5)) for _ in range(5)) + "\n")
    assert main(["verify", str(graph), str(other_matrix), str(schedule)]) == 7
    assert capsys.readouterr().out.startswith("FAIL: product mismatch at (")


def test_verify_truncated_schedule(files):
    graph, matrix, _, schedule = files
    schedule.write_text('{"schema": 1, "n": 5')
    assert main(["verify", str(graph), str(matrix), str(schedule)]) == 2


def test_info_line(files, capsys):
    graph, *_ = files
    assert main(["info", str(graph)]) == 0
    assert capsys.readouterr().out.strip() == "n=5 edges=4 connected=true diameter=3 bound=130"


def test_info_path_graph(tmp_path, capsys):
    graph = tmp_path / "p3.txt"
    graph.write_text("3\n1 2\n2 3\n")
    assert main(["info", str(graph)]) == 0
    assert capsys.readouterr().out.strip() == "n=3 edges=2 connected=true diameter=2 bound=30"


def test_info_disconnected_suppresses_metrics(tmp_path, capsys):
    graph = tmp_path / "g.txt"
    graph.write_text("2\n")
    assert main(["info", str(graph)]) == 0
    assert capsys.readouterr().out.strip() == "n=2 edges=0 connected=false"


def test_info_dot(files, capsys):
    graph, *_ = files
    assert main(["info", str(graph), "--dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph G {") and "3 -- 5;" in out
