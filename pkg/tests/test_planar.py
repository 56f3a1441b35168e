import random

import networkx as nx
import pytest

from hypertutte.core import BipartiteGraph, Hypergraph, UniPolynomial
from hypertutte.fixtures import FIG2_COORDS, fig2, fig2_g0, fig2_rotations
from hypertutte.hypertree import enumerate_hypertrees
from hypertutte.planar import (NotPlane, RotationSystem, double_dual, drawn_hypergraph, dual_hypertree,
                               isomorphic_fixing_hyperedges, k33_rotation_system, planar_dual_hypergraph,
                               planar_dual_rotation_system, check_planar_duality, random_plane_bipartite)


def fig2_rs():
    return RotationSystem.from_neighbor_rotations(fig2(), fig2_rotations())


def cube_rs():
    # outer square 0..3, inner square 4..7, spokes i -- i+4; colours alternate
    coords = {0: (0, 0), 1: (4, 0), 2: (4, 4), 3: (0, 4), 4: (1, 1), 5: (3, 1), 6: (3, 3), 7: (1, 3)}
    edges = [(i, (i + 1) % 4) for i in range(4)] + [(4 + i, 4 + (i + 1) % 4) for i in range(4)]
    edges += [(i, i + 4) for i in range(4)]
    black = {0, 2, 5, 7}
    g = BipartiteGraph(sorted(black), sorted(set(coords) - black),
                       [(u, v) if u in black else (v, u) for u, v in edges])
    return RotationSystem.from_coordinates(g, coords)


def test_fig2_drawing_is_plane():
    rs = fig2_rs()
    assert rs.is_plane() and rs.genus() == 0
    assert len(rs.faces()) == 4
    assert RotationSystem.from_coordinates(fig2(), FIG2_COORDS).rotations == rs.rotations


def test_k33_is_not_plane():
    rs = k33_rotation_system()
    assert not rs.is_plane()
    assert rs.genus() >= 1
    with pytest.raises(NotPlane):
        planar_dual_hypergraph(rs)


def test_cube():
    rs = cube_rs()
    assert rs.is_plane() and len(rs.faces()) == 6
    for side in (0, 1):
        r = check_planar_duality(rs, side)
        assert r["bijection"] and r["interior_to_exterior"] and r["exterior_to_interior"]
        assert r["double_dual_isomorphic"]


def test_fig2_dual_is_g0():
    rs = fig2_rs()
    dual = planar_dual_hypergraph(rs, 0)
    members = {e: frozenset(m) for e, m in dual.hyperedges.items()}
    assert members == {"a": {"f0", "f1", "f2"}, "b": {"f1", "f2", "f6"}, "c": {"f0", "f1", "f6"}}
    renamed = Hypergraph(["p", "q", "r", "s"], {
        e: {{"f0": "p", "f1": "q", "f2": "r", "f6": "s"}[f] for f in m} for e, m in dual.hyperedges.items()})
    assert renamed == fig2_g0()
    assert isomorphic_fixing_hyperedges(dual, fig2_g0())


def test_fig2_duality_swaps_polynomials():
    for side in (0, 1):
        r = check_planar_duality(fig2_rs(), side)
        assert r["bijection"] and r["interior_to_exterior"] and r["exterior_to_interior"]
        assert r["count"] == r["dual_count"] == 7
    r1 = check_planar_duality(fig2_rs(), 1)
    assert r1["exterior"] == UniPolynomial([1, 2, 3, 1])
    assert r1["dual"] is not None


def test_reflection_of_each_hypertree():
    rs = fig2_rs()
    h = drawn_hypergraph(rs, 0)
    dual = planar_dual_hypergraph(rs, 0)
    images = {dual_hypertree(rs, 0, f, dual) for f in enumerate_hypertrees(h).points}
    assert images == set(enumerate_hypertrees(dual).points)


def test_random_plane_duality():
    rng = random.Random(10)
    for _ in range(25):
        rs = random_plane_bipartite(rng.randint(3, 9), rng.randint(0, 5), rng)
        assert rs.is_plane()
        g = nx.Graph(rs.edges)
        assert nx.check_planarity(g)[0]
        for side in (0, 1):
            if not rs.class0 or not rs.class1:
                continue
            r = check_planar_duality(rs, side)
            assert r["bijection"], r
            assert r["interior_to_exterior"] and r["exterior_to_interior"]
            assert r["double_dual_isomorphic"]


def test_dual_drawing_with_repeated_angles():
    # a star: the centre touches the single face at every angle
    g = BipartiteGraph(["c"], ["x", "y", "z"], [("c", "x"), ("c", "y"), ("c", "z")])
    rs = RotationSystem.from_neighbor_rotations(g, {"c": ["x", "y", "z"], "x": ["c"], "y": ["c"], "z": ["c"]})
    assert len(rs.faces()) == 1
    d = planar_dual_rotation_system(rs, 0)
    assert len(d.edges) == 3 and d.is_plane()
    r = check_planar_duality(rs, 0)
    assert r["bijection"] and r["interior_to_exterior"] and r["exterior_to_interior"]
    # the reflection uses the degree in the drawing, which counts each angle
    assert dual_hypertree(rs, 0, (2,)) == (0,)
    assert isomorphic_fixing_hyperedges(double_dual(rs, 0), drawn_hypergraph(rs, 0))


def test_rotation_validation():
    g = fig2()
    rot = fig2_rotations()
    bad = dict(rot)
    bad["a"] = bad["a"][:-1]
    with pytest.raises(ValueError):
        RotationSystem.from_neighbor_rotations(g, bad)
    with pytest.raises(ValueError):
        RotationSystem(["a"], ["a"], [], {})
    with pytest.raises(ValueError):
        RotationSystem(["a"], ["p"], [("a", "z")], {"a": [0], "p": []})


def test_swap_keeps_faces():
    rs = fig2_rs()
    assert len(rs.swap().faces()) == len(rs.faces())
    assert rs.swap().is_plane()


def test_to_json_roundtrip_shape():
    js = fig2_rs().to_json()
    assert set(js) == {"graph", "rotations"}
    assert len(js["graph"]["edges"]) == 9


def test_four_cycle_has_two_faces():
    g = BipartiteGraph(["a", "b"], ["p", "q"], [("a", "p"), ("a", "q"), ("b", "p"), ("b", "q")])
    rs = RotationSystem.from_neighbor_rotations(g, {x: g.neighbors(x) for x in g.nodes})
    assert rs.is_plane() and len(rs.faces()) == 2
