import json
import subprocess
import sys

import jsonschema
import pytest

from safecolor import (
    complete_graph,
    construct_safe_3_coloring,
    cube_graph,
    cycle_graph,
    gen_double_windmill,
    load_coloring,
    load_graph,
    petersen_graph,
    prism_graph,
    to_coloring_text,
    to_dimacs,
    to_edge_list,
    Coloring,
    verify_safe,
)
from safecolor.cli import REPORT_SCHEMA, main


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    p = petersen_graph()
    return {
        "dir": tmp_path,
        "write": write,
        "petersen": write("petersen.edges", to_edge_list(p)),
        "windmill4": write("windmill4.edges", to_edge_list(gen_double_windmill(4))),
        "q3": write("q3.edges", to_edge_list(cube_graph())),
        "c9": write("c9.edges", to_edge_list(cycle_graph(9))),
        "k9": write("k9.edges", to_edge_list(complete_graph(9))),
        "k7": write("k7.edges", to_edge_list(complete_graph(7))),
        "k13": write("k13.edges", to_edge_list(complete_graph(13))),
        "prism": write("prism.edges", to_edge_list(prism_graph())),
        "triplet_col": write("triplet.col.txt", to_coloring_text(construct_safe_3_coloring(p))),
        "missing_col": write("missing.col.txt", to_coloring_text(Coloring(3, (1, 2) * 5))),
        "any10_col": write("any10.col.txt", to_coloring_text(Coloring(3, (1, 2, 3) * 3 + (1,)))),
    }


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    report = json.loads(out)
    jsonschema.validate(report, REPORT_SCHEMA)
    return code, report


class TestVerify:
    def test_safe(self, capsys, files):
        code, out, _ = run(capsys, "verify", files["petersen"], files["triplet_col"], "2")
        assert code == 0 and out.startswith("safe")

    def test_windmill(self, capsys, files):
        code, out, _ = run(capsys, "verify", files["windmill4"], files["any10_col"], "2")
        assert code == 1 and "{0,1}" in out

    def test_missing_color(self, capsys, files):
        code, report = run_json(capsys, "verify", files["petersen"], files["missing_col"], "2")
        assert code == 1
        assert report["result"]["violated_condition"] == "no-rainbow-component"
        assert report["result"]["witness"] == [0, 1]

    def test_size_mismatch(self, capsys, files):
        code, _, err = run(capsys, "verify", files["q3"], files["triplet_col"], "2")
        assert code == 2 and "entries" in err

    def test_unreadable(self, capsys, files):
        code, _, err = run(capsys, "verify", str(files["dir"] / "nope"), files["triplet_col"])
        assert code == 2 and "cannot read" in err

    def test_bad_format(self, capsys, files):
        bad = files["write"]("bad.edges", "3 1\n0 7\n")
        code, _, err = run(capsys, "verify", bad, files["triplet_col"])
        assert code == 2 and "line 2" in err

    def test_dimacs_input(self, capsys, files):
        col = files["write"]("petersen.col", to_dimacs(petersen_graph()))
        code, _, _ = run(capsys, "verify", col, files["triplet_col"])
        assert code == 0


class TestDecide:
    def test_petersen_with_witness(self, capsys, files):
        out_path = files["dir"] / "witness.txt"
        code, out, _ = run(capsys, "decide", files["petersen"], "--witness-out", str(out_path))
        assert code == 0
        assert out.splitlines()[0] == "safe-colorable (big-non-windmill-component)"
        assert verify_safe(petersen_graph(), load_coloring(out_path), 2).safe

    def test_windmill(self, capsys, files):
        code, out, _ = run(capsys, "decide", files["windmill4"])
        assert code == 1 and out.splitlines()[0] == "not-safe-colorable (is-double-windmill)"

    def test_out_of_scope(self, capsys, files):
        code, out, _ = run(capsys, "decide", files["c9"])
        assert code == 3 and "out-of-scope" in out

    def test_fallback(self, capsys, files):
        code, report = run_json(capsys, "decide", files["c9"], "--oracle-fallback")
        assert code == 0 and report["result"]["reason"] == "oracle"

    def test_json_digest_stable(self, capsys, files):
        _, first = run_json(capsys, "decide", files["petersen"])
        _, second = run_json(capsys, "decide", files["petersen"])
        assert first["input_digest"] == second["input_digest"]
        assert first["result"] == second["result"]
        _, other = run_json(capsys, "decide", files["q3"])
        assert other["input_digest"] != first["input_digest"]


class TestTriplets:
    def test_k9(self, capsys, files):
        code, out, _ = run(capsys, "triplets", files["k9"], "--count", "3")
        assert code == 0 and out.splitlines() == ["(0: 3, 4)", "(1: 5, 6)", "(2: 7, 8)"]

    def test_k7(self, capsys, files):
        code, out, _ = run(capsys, "triplets", files["k7"], "--count", "3")
        assert code == 1 and out.strip() == "none"

    def test_prism(self, capsys, files):
        code, report = run_json(capsys, "triplets", files["prism"], "--count", "2")
        assert code == 0 and len(report["result"]["triplets"]) == 2


class TestGen:
    def test_windmill(self, capsys, files):
        out_path = files["dir"] / "w.edges"
        code, _, _ = run(capsys, "gen", "windmill", "--l", "4", "--adjacent", "--out", str(out_path))
        assert code == 0 and load_graph(out_path) == gen_double_windmill(4)

    def test_non_adjacent_stdout(self, capsys):
        code, out, _ = run(capsys, "gen", "windmill", "--l", "2", "--non-adjacent")
        assert code == 0 and out == to_edge_list(gen_double_windmill(2, False))

    def test_random_deterministic(self, capsys, files):
        paths = [files["dir"] / f"r{i}.edges" for i in range(2)]
        for path in paths:
            assert run(capsys, "gen", "random", "--n", "10", "--seed", "7", "--out", str(path))[0] == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    @pytest.mark.parametrize("argv", [
        ["gen", "windmill", "--l", "0"],
        ["gen", "windmill"],
        ["gen", "random", "--n", "3"],
        ["gen", "random", "--n", "9", "--json"],
    ])
    def test_invalid(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2


class TestOracle:
    def test_q3(self, capsys, files):
        code, out, _ = run(capsys, "oracle", files["q3"])
        assert code == 1 and out.startswith("not-safe-colorable")

    def test_petersen_agrees_with_decide(self, capsys, files):
        code, report = run_json(capsys, "oracle", files["petersen"])
        assert code == 0 and report["result"]["verdict"] == "safe-colorable"
        assert run(capsys, "decide", files["petersen"])[0] == code

    def test_limit(self, capsys, files):
        code, _, err = run(capsys, "oracle", files["k13"], "--limit", "12")
        assert code == 2 and "limit" in err

    def test_env_limit(self, capsys, files, monkeypatch):
        monkeypatch.setenv("SAFECOLOR_ORACLE_LIMIT", "8")
        assert run(capsys, "oracle", files["petersen"])[0] == 2
        monkeypatch.setenv("SAFECOLOR_ORACLE_LIMIT", "ten")
        assert run(capsys, "oracle", files["petersen"])[0] == 2


def test_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "safecolor", "decide", files["windmill4"]],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1 and "is-double-windmill" in proc.stdout
