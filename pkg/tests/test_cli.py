import json

import pytest

from clusterhodge.cli import main
from clusterhodge.io import (
    parse_graph_text,
    parse_matrix,
    parse_matrix_text,
    render_matrix_text,
)

EDGE_PRINCIPAL = """\
# principal coefficients for one exchange arrow
2 2
0 1
-1 0
1 0
0 1
"""

CYCLIC = """\
3 0
0 1 -1
-1 0 1
1 -1 0
"""

RANK_DEFICIENT = "1 0\n0\n"

C6 = "6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n"


@pytest.fixture
def edge_file(tmp_path):
    path = tmp_path / "edge_principal.mat"
    path.write_text(EDGE_PRINCIPAL)
    return str(path)


def test_matrix_text_round_trip():
    m = parse_matrix_text(EDGE_PRINCIPAL)
    assert m.n == 2 and m.m == 2
    again = parse_matrix_text(render_matrix_text(m))
    assert again == m


def test_matrix_json_round_trip():
    m = parse_matrix_text(EDGE_PRINCIPAL)
    as_json = json.dumps(m.to_json_dict())
    assert parse_matrix(as_json) == m


def test_graph_parsing():
    g = parse_graph_text(C6)
    assert g.n_vertices == 6 and len(g.edges) == 6


def test_cmd_hodge_tsv(edge_file, capsys):
    assert main(["hodge", "--input", edge_file, "--format", "tsv"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[0] == "k\ts\tdim"
    assert out[1:] == ["0\t0\t1", "1\t1\t2", "2\t2\t2", "3\t3\t2", "4\t4\t1"]


def test_cmd_hodge_json_schema(edge_file, capsys):
    assert main(["hodge", "--input", edge_file, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 2 and data["m"] == 2 and data["d"] == 4
    assert {"k": 0, "s": 0, "dim": 1} in data["hodge"]


def test_cmd_hodge_deterministic(edge_file, capsys):
    main(["hodge", "--input", edge_file])
    first = capsys.readouterr().out
    main(["hodge", "--input", edge_file])
    assert capsys.readouterr().out == first


def test_cmd_hodge_rejects_cyclic(tmp_path, capsys):
    path = tmp_path / "cyclic.mat"
    path.write_text(CYCLIC)
    assert main(["hodge", "--input", str(path)]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "NotAcyclic"


def test_cmd_hodge_rejects_rank_deficient(tmp_path, capsys):
    path = tmp_path / "flat.mat"
    path.write_text(RANK_DEFICIENT)
    assert main(["hodge", "--input", str(path)]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "NotFullRank"


def test_cmd_pointcount(edge_file, capsys):
    assert main(["pointcount", "--input", edge_file, "--q", "3"]) == 0
    out = capsys.readouterr().out
    assert "q^4 - 2*q^3 + 2*q^2 - 2*q + 1" in out
    assert "40" in out


def test_cmd_pointcount_rejects_composite_q(edge_file, capsys):
    assert main(["pointcount", "--input", edge_file, "--q", "4"]) == 2


def test_cmd_indcomplex(tmp_path, capsys):
    path = tmp_path / "c6.g"
    path.write_text(C6)
    assert main(["indcomplex", "--graph", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "H~: {1: 2}"


def test_cmd_e1_and_ss(edge_file, capsys):
    assert main(["e1", "--input", edge_file, "--s", "2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "e\tf\ts\tdim"
    assert main(["ss", "--input", edge_file, "--s", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data and data[0]["s"] == 2 and data[0]["r"] == 0


def test_cmd_check(edge_file, capsys):
    assert main(["check", "--input", edge_file]) == 0
    out = capsys.readouterr().out
    assert out.count("[PASS]") == 5


def test_cmd_check_json(edge_file, capsys):
    assert main(["check", "--input", edge_file, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert all(item["status"] == "PASS" for item in data)


def test_missing_input_is_exit_2(capsys):
    assert main(["hodge"]) == 2


def test_jobs_flag_fanout(edge_file, capsys):
    assert main(["hodge", "--input", edge_file, "--jobs", "2", "--format", "tsv"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[1:] == ["0\t0\t1", "1\t1\t2", "2\t2\t2", "3\t3\t2", "4\t4\t1"]
