import json

import pytest

from hypertutte import io
from hypertutte.core import Hypergraph
from hypertutte.fixtures import fig2, fig2_g0, fig2_rotations, tetra4, trin1
from hypertutte.lattice import SetFunctionTable
from hypertutte.planar import RotationSystem


def dump(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_roundtrips(tmp_path):
    h = fig2_g0()
    kind, h2 = io.load(dump(tmp_path, "h.json", io.hypergraph_to_json(h)))
    assert kind == "hypergraph" and h2 == h
    kind, g = io.load(dump(tmp_path, "g.json", io.bipartite_to_json(fig2())))
    assert kind == "bipartite" and g.edges == fig2().edges
    rs = RotationSystem.from_neighbor_rotations(fig2(), fig2_rotations())
    kind, rs2 = io.load(dump(tmp_path, "rs.json", rs.to_json()))
    assert kind == "rotation" and rs2.rotations == rs.rotations and rs2.edges == rs.edges
    kind, t = io.load(dump(tmp_path, "t.json", trin1().to_json()))
    assert kind == "trinity" and t.white == trin1().white and t.black == trin1().black
    kind, p = io.load(dump(tmp_path, "p.json", io.pointset_to_json(tetra4())))
    assert kind == "pointset" and p == tetra4()


def test_setfunction_key_formats():
    ref = SetFunctionTable("ab", [0, 1, 1, 1])
    forms = [
        {"ground": ["a", "b"], "values": [0, 1, 1, 1]},
        {"ground": ["a", "b"], "values": {"0": 0, "1": 1, "2": 1, "3": 1}},
        {"ground": ["a", "b"], "values": {"{}": 0, "{a}": 1, "{b}": 1, "{a,b}": 1}},
        {"ground": ["a", "b"], "values": {"a": 1, "b": 1, "a b": 1}},  # empty set defaults to 0
    ]
    for obj in forms:
        mu = io.parse_setfunction(obj)
        assert list(mu.values) == list(ref.values)
    again = io.parse_setfunction(io.setfunction_to_json(ref))
    assert list(again.values) == [0, 1, 1, 1]


@pytest.mark.parametrize("obj", [
    {"ground": ["a", "b"], "values": [0, 1, 1]},
    {"ground": ["a", "b"], "values": {"a": 1, "b": 1}},
    {"ground": ["a", "b"], "values": {"a": 1, "b": 1, "a,b": 1, "c": 0}},
    {"ground": ["a", "b"], "values": {"9": 1, "a": 1, "b": 1, "a,b": 1}},
    {"ground": ["a", "b"], "values": {"a": 1, "1": 2, "b": 1, "a,b": 1}},
])
def test_setfunction_rejects(obj):
    with pytest.raises(io.BadInput):
        io.parse_setfunction(obj)


@pytest.mark.parametrize("obj", [
    [],
    {"nothing": 1},
    {"vertices": ["p"], "hyperedges": [{"id": "a", "members": ["z"]}]},
    {"vertices": ["p"], "hyperedges": [{"id": "a", "members": ["p"]}, {"id": "a", "members": ["p"]}]},
    {"vertices": ["p"], "hyperedges": [{"id": "a"}]},
    {"class0": ["a"], "class1": ["a"], "edges": []},
    {"ground": ["x", "y"], "points": [[1]]},
    {"graph": {"class0": ["a"], "class1": ["p"], "edges": [["a", "p"]]}, "rotations": {"a": [0], "z": [0]}},
    {"graph": {"class0": ["a"], "class1": ["p"], "edges": [["a", "p"]]}, "rotations": {"a": [1], "p": [0]}},
    {"white_triangles": [["r0", "e0"]]},
    {"white_triangles": [["r0", "e0", "v0"], ["r0", "e0", "v0"]]},
])
def test_bad_inputs(obj):
    with pytest.raises(io.BadInput):
        kind = io.detect_kind(obj)
        io.PARSERS[kind](obj)


def test_load_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(io.BadInput):
        io.load(str(bad))
    with pytest.raises(io.BadInput):
        io.load(str(tmp_path / "missing.json"))


def test_hypertree_parsing():
    h = fig2_g0()
    assert io.parse_hypertree({"a": 1, "b": 1, "c": 1}, h) == (1, 1, 1)
    with pytest.raises(io.BadInput):
        io.parse_hypertree({"a": 1}, h)
    with pytest.raises(io.BadInput):
        io.parse_hypertree({"a": -1, "b": 2, "c": 2}, h)


def test_reports_are_validated():
    rep = io.make_report("hypertrees", "x", {"ground": ["a"], "points": [[0]], "count": 1})
    assert rep["version"] == io.REPORT_VERSION
    with pytest.raises(io.BadInput):
        io.make_report("hypertrees", "x", {"ground": ["a"]})
    with pytest.raises(io.BadInput):
        io.validate_report({"version": 99, "verb": "info", "source": "", "result": {"kind": "x"}})


def test_monomials_to_json():
    from hypertutte.core import MonomialSet

    m = MonomialSet.parse("a^2 b + c", ["a", "b", "c"])
    assert io.monomials_to_json(m) == [{"exponents": {"a": 2, "b": 1}, "coefficient": 1},
                                       {"exponents": {"c": 1}, "coefficient": 1}]


def test_integer_ids_survive():
    h = Hypergraph([1, 2, 3], {10: [1, 2], 11: [2, 3]})
    assert io.parse_hypergraph(io.hypergraph_to_json(h)) == h
