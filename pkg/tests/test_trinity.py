import itertools
import random

import pytest

from hypertutte.core import MonomialSet
from hypertutte.fixtures import TRIN1_WHITE, fig2, fig2_g0, fig2_g1, trin1
from hypertutte.hypertree import enumerate_hypertrees
from hypertutte.invariants import exterior_polynomial, interior_polynomial
from hypertutte.planar import k33_rotation_system, random_plane_bipartite
from hypertutte.trinity import (VARIANTS, InvalidTrinity, Trinity, alternating_cycle, arborescence_count,
                                arborescence_count_matrix_tree, arborescence_to_hypertree, arborescences,
                                berman_determinant, berman_determinant_sympy, berman_matrix, black_completions,
                                color_index, constituent_graph, constituent_hypergraph, cubic_rotation_system,
                                dual_directed_graph, dual_tree_degrees, enhanced_determinant, hyperedge_color,
                                hypertree_to_arborescence, matching_arborescences, side_partitions, theta_trinity,
                                three_color, tutte_matchings, variant_hypergraph, variant_pairs)

EV = "e0^2 e1 + e0 e1^2 + e0^2 e2 + e0 e1 e2 + e1^2 e2 + e0 e2^2 + e1 e2^2"
VE = "v0 v1 + v1^2 + v0 v2 + v1 v2 + v0 v3 + v1 v3 + v2 v3"
EVR = ("e0^2 e1 r0^2 v0 v1^2 + e0 e1^2 r0 r3 v0 v1 v2 + e1^2 e2 r1 r2 v1^2 v2 + e0^2 e2 r0 r1 v0 v1 v3"
       " + e0 e2^2 r0 r2 v1^2 v3 + e0 e1 e2 r1 r3 v0 v2 v3 + e1 e2^2 r2 r3 v1 v2 v3")


def random_trinities(n, seed):
    rng = random.Random(seed)
    for _ in range(n):
        rs = random_plane_bipartite(rng.randint(3, 7), rng.randint(0, 4), rng)
        yield Trinity.from_plane_bipartite(rs)


def full_check(t):
    """Arborescence/hypertree bijection for every colour, plus the dual-pair degree count."""
    for c in "REV":
        arbs = list(arborescences(dual_directed_graph(t, c), t.root(c)))
        hs = enumerate_hypertrees(constituent_hypergraph(t, c))
        images = {arborescence_to_hypertree(t, c, A) for A in arbs}
        assert images == set(hs.points) and len(arbs) == len(images)
        for A in arbs:
            assert hypertree_to_arborescence(t, c, arborescence_to_hypertree(t, c, A)) == A
        for A, B in itertools.product(arbs[:5], repeat=2):
            assert alternating_cycle(t, c, A, B) is None
    for match, _ in tutte_matchings(t):
        arb = matching_arborescences(t, match)
        degs = {c: dual_tree_degrees(t, c, arb[c]) for c in range(3)}
        for p, col in t.points.items():
            assert sum(degs[c][p] for c in range(3) if c != col) == len(t.whites_at(p)) + 1


def test_colors():
    assert [color_index(c) for c in ("R", "e", "v", 2)] == [0, 1, 2, 2]
    with pytest.raises(ValueError):
        color_index("x")
    assert [hyperedge_color(c) for c in "REV"] == [1, 2, 0]


def test_trin1_structure():
    t = trin1()
    assert t.n == 9 and len(t.black) == 9
    assert t.point_count_identity()
    assert len(t.points) == 11  # 4 r + 3 e + 4 v = n + 2
    assert len(black_completions(TRIN1_WHITE, limit=2)) == 1  # the black triangles are forced
    t.validate()


def test_trin1_constituent_r_is_fig2():
    # G_R joins E and V points; e0,e1,e2 play a,b,c and v0..v3 play p,q,r,s
    h = constituent_hypergraph(trin1(), "R")
    rename = {"v0": "p", "v1": "q", "v2": "r", "v3": "s"}
    edge = {"e0": "a", "e1": "b", "e2": "c"}
    members = {edge[e]: {rename[v] for v in m} for e, m in h.hyperedges.items()}
    assert members == {e: set(m) for e, m in fig2_g0().hyperedges.items()}
    assert constituent_graph(trin1(), "R").is_plane()


def test_trin1_berman_determinant():
    t = trin1()
    assert berman_determinant(t) == 7
    assert abs(berman_determinant_sympy(t)) == 7
    m = berman_matrix(t)
    assert len(m.rows) == len(m.cols) == 8


def test_trin1_arborescence_counts():
    t = trin1()
    for c in "REV":
        d = dual_directed_graph(t, c)
        assert d.is_balanced()
        for root in d.nodes:
            assert arborescence_count(d, root) == arborescence_count_matrix_tree(d, root) == 7


def test_trin1_enhanced_determinants():
    t = trin1()
    ev = enhanced_determinant(t, "e-v")
    assert ev == MonomialSet.parse(EV, ev.variables)
    evr = enhanced_determinant(t, "e-v-r")
    assert evr == MonomialSet.parse(EVR, evr.variables)
    # exponents are hypertrees
    hs = enumerate_hypertrees(variant_hypergraph(t, "e", "v"))
    assert ev.exponent_vectors(hs.ground) == set(hs.points)
    # projecting the superimposed determinant onto the e variables
    assert evr.project(ev.variables).exponent_vectors() == ev.exponent_vectors()


def test_second_published_polynomial_is_v_e():
    # the polynomial in v-variables with exponents (1,1,0,0) etc. comes from writing v's into E rows
    t = trin1()
    ve = enhanced_determinant(t, "v-e")
    assert ve == MonomialSet.parse(VE, ve.variables)
    hs = enumerate_hypertrees(variant_hypergraph(t, "v", "e"))
    assert ve.exponent_vectors(hs.ground) == set(hs.points)
    # v-r writes v's into R rows: a different polynomial, checked against hypertrees and the projection
    vr = enhanced_determinant(t, "v-r")
    assert vr != ve
    hs = enumerate_hypertrees(variant_hypergraph(t, "v", "r"))
    assert vr.exponent_vectors(hs.ground) == set(hs.points)
    evr = enhanced_determinant(t, "e-v-r")
    assert evr.project(vr.variables).exponent_vectors() == vr.exponent_vectors()


def test_all_variants_give_hypertrees():
    for t in [trin1(), *random_trinities(10, 3)]:
        for variant in VARIANTS:
            if variant == "e-v-r":
                continue
            (x, y), = variant_pairs(variant)
            det = enhanced_determinant(t, variant)
            hs = enumerate_hypertrees(variant_hypergraph(t, x, y))
            assert det.exponent_vectors(hs.ground) == set(hs.points)
            assert all(c == 1 for c in det.as_dict().values())


def test_variant_pairs():
    assert variant_pairs("e-v") == [(1, 2)]
    assert variant_pairs("e→v") == [(1, 2)]
    assert variant_pairs("e-v-r") == [(1, 2), (2, 0), (0, 1)]
    with pytest.raises(ValueError):
        variant_pairs("e-e")


def test_trin1_bijection_and_pairing():
    full_check(trin1())


def test_theta():
    t = theta_trinity()
    assert berman_determinant(t) == abs(berman_determinant_sympy(t)) == 1
    full_check(t)


def test_random_trinities():
    for t in random_trinities(25, 1):
        full_check(t)
        n = berman_determinant(t)
        assert abs(berman_determinant_sympy(t)) == n
        assert n == len(enumerate_hypertrees(constituent_hypergraph(t, "R")))
        for o in range(t.n):
            assert berman_determinant(t.with_outer(o)) == n


def test_three_coloring_roundtrip():
    for t in [trin1(), *random_trinities(15, 2)]:
        rs = cubic_rotation_system(t)
        assert rs.is_plane()
        assert set(side_partitions(three_color(rs))) == set(side_partitions(t))


def test_from_plane_bipartite_fig2():
    from hypertutte.fixtures import fig2_rotations
    from hypertutte.planar import RotationSystem

    rs = RotationSystem.from_neighbor_rotations(fig2(), fig2_rotations())
    t = Trinity.from_plane_bipartite(rs)
    assert berman_determinant(t) == 7
    full_check(t)
    # the E-V constituent is the drawn graph; its two induced hypergraphs have the FIG2 invariants
    h = variant_hypergraph(t, "E", "V")
    assert interior_polynomial(h) == interior_polynomial(fig2_g0())
    assert exterior_polynomial(variant_hypergraph(t, "V", "E")) == exterior_polynomial(fig2_g1())


def test_rejects_bad_inputs():
    with pytest.raises(ValueError):
        three_color(k33_rotation_system())
    with pytest.raises(InvalidTrinity):
        Trinity.from_white_triangles(TRIN1_WHITE[:-1])
    with pytest.raises((InvalidTrinity, ValueError)):
        Trinity.from_white_triangles([("r0", "e0", "v0")] * 2)
    with pytest.raises(ValueError):
        arborescence_to_hypertree(trin1(), "R", {})


def test_to_json():
    js = trin1().to_json()
    assert set(js) == {"white_triangles", "outer"}
    again = Trinity.from_white_triangles(js["white_triangles"], js["outer"])
    assert again.white == trin1().white
