import json
from pathlib import Path

from monopaths.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def normalize(report_text: str, graph_token: str | None = None) -> dict:
    d = json.loads(report_text)
    d["runtime_ms"] = 0
    if graph_token:
        d["command"] = d["command"].replace(graph_token, "SQUARE")
    return d


def test_count_square_golden(capsys, tmp_path):
    sq = DATA / "square.txt"
    code, out, _ = run(capsys, "count", "--graph", str(sq), "--mode", "all", "--json")
    assert code == 0
    got = normalize(out, str(sq))
    want = json.loads((DATA / "golden_square_count.json").read_text())
    assert got == want


def test_census_golden(capsys):
    code, out, _ = run(capsys, "census", "--json")
    assert code == 0
    got = normalize(out)
    want = json.loads((DATA / "golden_census.json").read_text())
    assert got == want


def test_count_mode_x_and_maximal(capsys):
    sq = DATA / "square.txt"
    code, out, _ = run(capsys, "count", "--graph", str(sq), "--mode", "x", "--json")
    assert code == 0 and json.loads(out)["result"]["total"] == 3
    code, out, _ = run(
        capsys, "count", "--graph", str(sq), "--mode", "x", "--maximal", "--json"
    )
    assert code == 0
    assert json.loads(out)["result"]["total"] >= 1


def test_emit_directions(capsys):
    sq = DATA / "square.txt"
    code, out, _ = run(capsys, "count", "--graph", str(sq), "--emit-directions")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    assert all(len(l.split()) == 2 for l in lines)


def test_enumerate_matches_count(capsys, tmp_path):
    sq = DATA / "square.txt"
    out_file = tmp_path / "paths.txt"
    code, _, err = run(capsys, "enumerate", "--graph", str(sq), "--out", str(out_file))
    assert code == 0
    paths = out_file.read_text().strip().splitlines()
    assert len(paths) == 30
    assert len(set(paths)) == 30


def test_count_with_enumerate_flag(capsys, tmp_path):
    sq = DATA / "square.txt"
    out_file = tmp_path / "all.txt"
    code, _, _ = run(capsys, "count", "--graph", str(sq), "--mode", "all",
                     "--enumerate", str(out_file), "--dedupe")
    assert code == 0
    assert len(out_file.read_text().strip().splitlines()) == 15


def test_construct_square_roundtrip(capsys, tmp_path):
    f = tmp_path / "sq.txt"
    code, _, _ = run(capsys, "construct", "--square", "--out", str(f))
    assert code == 0
    assert f.read_text() == (DATA / "square.txt").read_text()


def test_construct_lower_bound_abstract(capsys, tmp_path):
    f = tmp_path / "lb.json"
    code, _, _ = run(capsys, "construct", "--lower-bound", "3", "--out", str(f))
    assert code == 0
    data = json.loads(f.read_text())
    assert data["abstract"] is True and data["n"] == 10
    code, out, _ = run(capsys, "count", "--graph", str(f), "--mode", "x", "--json")
    assert code == 0 and json.loads(out)["result"]["total"] == 451


def test_count_all_rejects_abstract(capsys, tmp_path):
    f = tmp_path / "lb.json"
    run(capsys, "construct", "--lower-bound", "2", "--out", str(f))
    code, _, err = run(capsys, "count", "--graph", str(f), "--mode", "all")
    assert code == 1
    assert "abstract" in err


def test_fingerprint_cli(capsys):
    code, out, _ = run(capsys, "fingerprint", "--k", "4", "--listings", "--json")
    assert code == 0
    d = json.loads(out)["result"]
    assert d["p_k"] == 13
    assert len(d["extremal"]) == 1
    assert len(d["listings"][0]) == 13


def test_bound_cli(capsys):
    code, out, _ = run(capsys, "bound", "--k", "11", "--pk", "591", "--json")
    assert code == 0
    assert json.loads(out)["result"]["base"] == "1.7864"


def test_verify_cli_ok(capsys):
    code, out, _ = run(capsys, "verify", "--n", "6", "--trials", "2", "--seed", "11", "--json")
    assert code == 0
    assert json.loads(out)["result"]["failures"] == []


def test_verify_weak_mode(capsys):
    code, _, _ = run(capsys, "verify", "--n", "5", "--trials", "2", "--seed", "3",
                     "--mode", "weak")
    assert code == 0


def test_growth_cli(capsys):
    code, out, _ = run(capsys, "growth", "--min-level", "2", "--max-level", "4", "--json")
    assert code == 0
    rows = json.loads(out)["result"]["rows"]
    assert [r["n"] for r in rows] == [6, 10, 18]


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "count", "--graph", "/nonexistent/g.txt")
    assert code == 1


def test_bad_flag_usage(capsys):
    code, _, _ = run(capsys, "count", "--graph", str(DATA / "square.txt"),
                     "--mode", "all", "--maximal")
    assert code == 1


def test_construct_requires_one_choice(capsys):
    code, _, _ = run(capsys, "construct")
    assert code == 1


def test_bench_cli_small(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "30,60", "--seed", "7", "--json")
    assert code == 0
    d = json.loads(out)["result"]
    assert [r["n"] for r in d["rows"]] == [30, 60]
    assert len(d["ratios"]) == 1
