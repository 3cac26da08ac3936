import json
import xml.etree.ElementTree as ET

import pytest

from starcontour.boundary import decomposition_from_json, outermost_boundary
from starcontour.cli import CSV_HEADER, main
from starcontour.lattice import Grid, component

DIAG_PAIR_GRID = "origin: 0 0\n.#\n#.\n"
U_GRID = "origin: 0 0\n#.#\n###\n"


@pytest.fixture
def diag_grid(tmp_path):
    p = tmp_path / "diag.grid"
    p.write_text(DIAG_PAIR_GRID)
    return p


def _run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_boundary_json_diagonal_pair(diag_grid, capsys):
    code, out = _run(capsys, ["boundary", "--grid", str(diag_grid)])
    assert code == 0
    obj = json.loads(out)
    assert len(obj["cycles"]) == 2
    assert obj["tree"]["edges"] == [[0, 1, [1, 1]]]
    assert len(obj["circuit"]["corners"]) == 8 and obj["circuit"]["circuit"] is True


def test_boundary_json_single_cell(tmp_path, capsys):
    p = tmp_path / "one.grid"
    p.write_text("origin: 0 0\n#\n")
    code, out = _run(capsys, ["boundary", "--grid", str(p)])
    assert code == 0
    obj = json.loads(out)
    assert len(obj["cycles"]) == 1 and len(obj["cycles"][0]["corners"]) == 4


def test_check_diagonal_chain(tmp_path, capsys):
    p = tmp_path / "chain.grid"
    p.write_text("origin: 0 0\n..#\n.#.\n#..\n")
    code, out = _run(capsys, ["check", "--grid", str(p), "--exhaustive-oracle"])
    assert code == 0 and "FAIL" not in out


def test_boundary_json_round_trips_to_same_decomposition(diag_grid, capsys):
    code, out = _run(capsys, ["boundary", "--grid", str(diag_grid)])
    parsed = decomposition_from_json(json.loads(out))
    grid = Grid(0, 1, 0, 1, frozenset({(0, 0), (1, 1)}))
    assert parsed == outermost_boundary(component(grid, (0, 0), "star"))


def test_boundary_ascii_u_pentomino(tmp_path, capsys):
    p = tmp_path / "u.grid"
    p.write_text(U_GRID)
    code, out = _run(capsys, ["boundary", "--grid", str(p), "--format", "ascii"])
    assert code == 0
    assert out.count("-") + out.count("|") == 12


def test_boundary_svg_structure(tmp_path, capsys):
    p = tmp_path / "u.grid"
    p.write_text(U_GRID)
    code, out = _run(capsys, ["boundary", "--grid", str(p), "--format", "svg", "--circuit"])
    assert code == 0
    root = ET.fromstring(out)  # valid XML
    ns = "{http://www.w3.org/2000/svg}"
    paths = [e for e in root.iter(f"{ns}path") if e.get("class") == "cycle"]
    rects = list(root.iter(f"{ns}rect"))
    assert len(paths) == 1
    assert len(rects) == 5


def test_svg_stroke_count_matches_cycles(diag_grid, capsys):
    code, out = _run(capsys, ["boundary", "--grid", str(diag_grid), "--format", "svg"])
    root = ET.fromstring(out)
    ns = "{http://www.w3.org/2000/svg}"
    assert len([e for e in root.iter(f"{ns}path") if e.get("class") == "cycle"]) == 2


def test_plus_boundary_json(tmp_path, capsys):
    p = tmp_path / "u.grid"
    p.write_text(U_GRID)
    code, out = _run(capsys, ["plus-boundary", "--grid", str(p)])
    assert code == 0
    assert len(json.loads(out)["cycle"]["corners"]) == 12


def test_plus_boundary_vacant_seed(tmp_path, capsys):
    p = tmp_path / "v.grid"
    p.write_text("origin: 1 0\n#.#\n")
    code, out = _run(capsys, ["plus-boundary", "--grid", str(p)])
    assert code == 0 and json.loads(out)["cycle"] is None


def test_seed_override_flag(diag_grid, capsys):
    code, out = _run(capsys, ["boundary", "--grid", str(diag_grid), "--seed", "1", "1"])
    assert code == 0 and len(json.loads(out)["cycles"]) == 2


def test_merge_command(tmp_path, capsys):
    c1 = tmp_path / "c1.json"
    c2 = tmp_path / "c2.json"
    c1.write_text(json.dumps({"corners": [[0, 0], [1, 0], [1, 1], [0, 1]]}))
    c2.write_text(json.dumps({"corners": [[1, 0], [2, 0], [2, 1], [1, 1]]}))
    code, out = _run(capsys, ["merge", "--c1", str(c1), "--c2", str(c2)])
    assert code == 0
    obj = json.loads(out)
    assert len(obj["result"]["corners"]) == 6
    assert all(obj["checks"].values())


def test_check_fixture_grids(tmp_path, capsys):
    p = tmp_path / "u.grid"
    p.write_text(U_GRID)
    code, out = _run(capsys, ["check", "--grid", str(p), "--exhaustive-oracle"])
    assert code == 0
    assert "FAIL" not in out and "definition_oracle" in out


def test_check_oracle_skip_on_large_grid(tmp_path, capsys):
    rows = ["#" * 8 for _ in range(8)]
    p = tmp_path / "big.grid"
    p.write_text("origin: 0 0\n" + "\n".join(rows) + "\n")
    code, out = _run(capsys, ["check", "--grid", str(p), "--exhaustive-oracle"])
    assert code == 0
    assert "skip definition_oracle" in out


def test_check_config_index(capsys):
    # index 0b11 occupies (0,0) and (1,0) in a 2x2 window
    code, out = _run(capsys, ["check", "--config-index", "3", "--window", "2", "--exhaustive-oracle"])
    assert code == 0 and "FAIL" not in out


def test_boundary_config_index_diagonal(capsys):
    # bits 0 and 3 of a 2x2 window: cells (0,0) and (1,1)
    code, out = _run(capsys, ["boundary", "--config-index", "9", "--window", "2"])
    assert code == 0
    assert len(json.loads(out)["cycles"]) == 2


def test_simulate_p0_and_p1(tmp_path):
    out = tmp_path / "stats.csv"
    assert main(["simulate", "--p", "0", "--window", "5", "--trials", "3",
                 "--rng-seed", "1", "--out", str(out)]) == 0
    lines = out.read_text().strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert lines[1:] == ["0,0,0,0,0,0", "1,0,0,0,0,0", "2,0,0,0,0,0"]

    assert main(["simulate", "--p", "1", "--window", "5", "--trials", "1",
                 "--rng-seed", "1", "--out", str(out)]) == 0
    assert out.read_text().strip().split("\n")[1] == "0,25,1,20,20,0"


def test_simulate_deterministic_across_workers(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["simulate", "--p", "0.5", "--window", "10", "--trials", "20", "--rng-seed", "42"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b), "--workers", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_exit_code_missing_file():
    assert main(["boundary", "--grid", "/nonexistent/x.grid"]) == 1


def test_exit_code_bad_usage():
    assert main(["simulate", "--p", "2.0", "--window", "5", "--trials", "1", "--rng-seed", "0"]) == 1
    assert main(["frobnicate"]) == 1


def test_exit_code_parse_error(tmp_path, capsys):
    p = tmp_path / "bad.grid"
    p.write_text("origin: 0 0\n#?#\n")
    assert main(["boundary", "--grid", str(p)]) == 2
    err = capsys.readouterr().err
    assert "line 2" in err and "column 2" in err


def test_exit_code_seed_outside_window(tmp_path):
    p = tmp_path / "g.grid"
    p.write_text("origin: 9 9\n##\n")
    assert main(["boundary", "--grid", str(p)]) == 2
