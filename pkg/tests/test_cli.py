import json
from io import StringIO

import pytest

from hypertutte import cli, io
from hypertutte.fixtures import fig2


def call(*argv):
    out = StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


def report(*argv):
    code, text = call(*argv, "--json")
    assert code == 0, text
    rep = json.loads(text)
    io.validate_report(rep)
    return rep["result"]


def test_interior_and_exterior_fig2():
    assert call("interior", "--fixture", "FIG2") == (0, "1 + 3ξ + 3ξ^2\n")
    assert call("exterior", "--fixture", "FIG2", "--side", "1") == (0, "1 + 2η + 3η^2 + η^3\n")
    assert report("interior", "--fixture", "FIG2", "--order", "c,a,b")["polynomial"] == [1, 3, 3]


def test_hypertrees_fig2():
    res = report("hypertrees", "--fixture", "FIG2")
    assert res["count"] == 7 and res["ground"] == ["a", "b", "c"]
    assert [1, 1, 1] in res["points"]


def test_info():
    res = report("info", "--fixture", "FIG2")
    assert res["plane"] and res["faces"] == 4 and res["hypertree_count"] == 7
    assert report("info", "--fixture", "TRIN1")["white_triangles"] == 9
    assert report("info", "--fixture", "TETRA4")["size"] == 4


def test_tutte_slices():
    res = report("tutte-slices", "--fixture", "FIG2")
    assert res["tx1"] == [6, 12, 12, 10, 6, 3, 1]
    assert res["t1y"] == [25, 18, 6, 1]
    assert res["interior"] == [1, 3, 6, 10, 12, 12, 6]


def test_dual():
    res = report("dual", "--fixture", "FIG2")
    assert res["bijection"] and res["interior_to_exterior"] and res["double_dual_isomorphic"]
    assert len(res["dual"]["vertices"]) == 4


def test_trinity_and_determinants():
    assert report("trinity", "--fixture", "TRIN1")["berman_determinant"] == 7
    code, text = call("determinant", "--fixture", "TRIN1", "--variant", "e-v")
    assert code == 0 and text.splitlines()[-1] == "7 monomials"
    assert call("determinant", "--fixture", "TRIN1") == (0, "7\n")
    res = report("determinant", "--fixture", "TRIN1", "--variant", "e-v-r")
    assert res["count"] == 7
    assert report("determinant", "--fixture", "FIG2")["value"] == 7  # three-coloured from the drawing


def test_arborescences():
    res = report("arborescences", "--fixture", "TRIN1")
    assert [c["count"] for c in res["counts"]] == [7, 7, 7]
    res = report("arborescences", "--fixture", "TRIN1", "--root", "v2")
    assert res["counts"] == [{"color": "V", "root": "v2", "count": 7, "matrix_tree": 7}]
    assert report("arborescences", "--fixture", "TRIN1", "--outer", "4")["counts"][0]["count"] == 7


def test_scan():
    res = report("scan-conjecture", "--random", "5", "--seed", "1", "--max-vertices", "7")
    assert len(res["reports"]) == 5 and res["all_equal"]
    assert report("scan-conjecture", "--fixture", "KMN(3,4)")["reports"][0]["counts"] == [10, 10]


def test_order_probe_tetra4():
    res = report("interior", "--fixture", "TETRA4", "--trials", "20", "--seed", "0")
    assert not res["order_probe"]["independent"]


def test_input_files(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps(io.bipartite_to_json(fig2())))
    assert call("interior", "--input", str(p)) == (0, "1 + 3ξ + 3ξ^2\n")
    s = tmp_path / "mu.json"
    s.write_text(json.dumps({"ground": ["a", "b"], "values": {"a": 1, "b": 1, "a,b": 1}}))
    assert report("hypertrees", "--input", str(s))["count"] == 2


@pytest.mark.parametrize("argv", [
    ["interior"],
    ["frobnicate"],
    ["interior", "--fixture", "NOPE"],
    ["interior", "--fixture", "FIG2", "--order", "a,b"],
    ["scan-conjecture", "--random", "3"],
    ["interior", "--fixture", "TETRA4", "--trials", "5"],
    ["arborescences", "--fixture", "TRIN1", "--root", "zz"],
    ["interior", "--fixture", "FIG2", "--side", "2"],
])
def test_bad_input_exits_1(argv):
    assert call(*argv)[0] == 1


def test_bad_json_exits_1(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{")
    assert call("info", "--input", str(p))[0] == 1


def test_preconditions_exit_2(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"class0": ["a", "b"], "class1": ["p", "q"], "edges": [["a", "p"], ["b", "q"]]}))
    assert call("scan-conjecture", "--input", str(p))[0] == 2
    assert call("dual", "--fixture", "KMN(2,2)")[0] == 2
    assert call("trinity", "--fixture", "TETRA4")[0] == 2
    assert call("trinity", "--fixture", "TRIN1", "--outer", "40")[0] == 2


def test_internal_breach_exits_3(monkeypatch, capsys):
    def broken(*a, **k):
        raise AssertionError("boom")

    monkeypatch.setattr(cli, "check_planar_duality", broken)
    assert call("dual", "--fixture", "FIG2")[0] == 3
    err = capsys.readouterr().err
    assert "boom" in err and '"rotations"' in err


def test_selftest_failure_exits_3(monkeypatch):
    from hypertutte import acceptance

    class Fake:
        passed = False

        def line(self):
            return "[FAIL] criterion 0: fake"

        def to_json(self):
            return {"number": 0, "name": "fake", "passed": False}

    monkeypatch.setattr(acceptance, "run_all", lambda: [Fake()])
    assert call("selftest") == (3, "[FAIL] criterion 0: fake\n")


def test_cubic_rotation_input(tmp_path):
    from hypertutte.fixtures import trin1
    from hypertutte.trinity import cubic_rotation_system

    p = tmp_path / "cubic.json"
    p.write_text(json.dumps(cubic_rotation_system(trin1()).to_json()))
    assert report("trinity", "--input", str(p))["berman_determinant"] == 7
