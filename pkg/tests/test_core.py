import random
import warnings

import networkx as nx
import pytest
import sympy

from hypertutte.core import (BipartiteGraph, Hypergraph, MonomialSet, UniPolynomial, abstract_dual, bip,
                             classical_tutte_slices, graph_as_hypergraph, induced_hypergraphs, kirchhoff_count,
                             nullity, permutation_sign, random_connected_bipartite, spanning_trees, tree_activities)
from hypertutte.fixtures import fig2, fig2_g0, fig2_g1


def nx_graph(g):
    G = nx.MultiGraph()
    G.add_nodes_from(g.nodes)
    G.add_edges_from(g.edges)
    return G


def random_graphs(n, seed, **kw):
    rng = random.Random(seed)
    return [random_connected_bipartite(rng, **kw) for _ in range(n)]


# -- polynomials


def test_unipolynomial_arithmetic():
    p = UniPolynomial([1, 3, 3])
    q = UniPolynomial([0, 1])
    assert (p + q).to_list() == [1, 4, 3]
    assert (p * q).to_list() == [0, 1, 3, 3]
    assert (p - p).is_zero
    assert p.shift(2).to_list() == [0, 0, 1, 3, 3]
    assert p(1) == 7
    assert p.degree == 2 and p[1] == 3 and p[7] == 0
    assert UniPolynomial.from_exponents([0, 1, 1, 2]).to_list() == [1, 2, 1]
    # reversal: x^n p(1/x)
    assert UniPolynomial([6, 12, 1]).reversed(2).to_list() == [1, 12, 6]


def test_unipolynomial_format():
    assert UniPolynomial([1, 3, 3]).format("ξ") == "1 + 3ξ + 3ξ^2"
    assert UniPolynomial([2, 0, 2]).format("ξ") == "2 + 2ξ^2"
    assert UniPolynomial([0, 1]).format("η") == "η"
    assert UniPolynomial([]).format("x") == "0"
    assert UniPolynomial([1, -1]).format("x") == "1 - x"


def test_monomial_set_parse_roundtrip():
    vars_ = ["e0", "e1", "e2"]
    text = "e0^2 e1 + e0 e1^2 + e1 e2^2"
    m = MonomialSet.parse(text, vars_)
    assert len(m) == 3
    assert MonomialSet.parse(m.format(), vars_) == m
    assert m.exponent_vectors() == {(2, 1, 0), (1, 2, 0), (0, 1, 2)}
    assert m.project(["e0"]).as_dict() == {(("e0", 2),): 1, (("e0", 1),): 1, (): 1}


def test_monomial_set_rejects_negative_exponents():
    with pytest.raises(ValueError):
        MonomialSet(["a"], {(-1,): 1})


# -- hypergraphs and bipartite graphs


def test_fig2_basic_shape():
    g = fig2()
    assert g.class0 == ("a", "b", "c") and g.class1 == ("p", "q", "r", "s")
    assert len(g.edges) == 9
    h0, h1 = induced_hypergraphs(g)
    assert h0.hyperedges["a"] == {"p", "q", "r"}
    assert h1.hyperedges["q"] == {"a", "b", "c"}
    assert bip(h0).edges == g.edges


def test_duplicate_hyperedges_are_kept():
    h = Hypergraph("xy", {"e": "xy", "f": "xy"})
    assert h.edge_ids == ("e", "f")
    assert len(bip(h).edges) == 4


def test_hypergraph_rejects_unknown_members():
    with pytest.raises(ValueError):
        Hypergraph("xy", {"e": "xz"})


def test_bipartite_graph_collapses_multi_edges_with_warning():
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        g = BipartiteGraph(["a"], ["p"], [("a", "p"), ("p", "a")])
    assert len(g.edges) == 1
    assert w


def test_bipartite_graph_rejects_overlap():
    with pytest.raises(ValueError):
        BipartiteGraph(["a"], ["a"], [])


def test_abstract_dual_is_an_involution():
    for g in random_graphs(30, 1):
        h0, h1 = induced_hypergraphs(g)
        assert abstract_dual(h0) == h1
        assert abstract_dual(abstract_dual(h0)) == h0


def test_abstract_dual_refuses_isolated_vertices():
    with pytest.raises(ValueError):
        abstract_dual(Hypergraph("xyz", {"e": "xy"}))


def test_nullity():
    assert nullity(fig2()) == 3
    assert nullity(fig2_g0()) == nullity(fig2_g1()) == 3
    # a triangle with a doubled edge, as a plain multigraph
    assert nullity(("abc", [("a", "b"), ("b", "c"), ("c", "a"), ("a", "b")])) == 2
    assert nullity(("ab", [])) == 0


def test_random_bipartite_is_connected_and_seeded():
    a = random_graphs(20, 7)
    b = random_graphs(20, 7)
    assert [g.edges for g in a] == [g.edges for g in b]
    assert all(g.is_connected() for g in a)
    capped = random_graphs(30, 2, max_vertices=10, max_class0=3)
    assert all(len(g.class0) <= 3 for g in capped)


# -- spanning trees


def test_spanning_tree_count_fig2():
    assert sum(1 for _ in spanning_trees(fig2())) == 50
    assert kirchhoff_count(fig2()) == 50


def test_spanning_trees_against_networkx():
    for g in random_graphs(25, 3, max_vertices=8):
        trees = list(spanning_trees(g))
        assert len(trees) == len(set(trees))
        assert len(trees) == kirchhoff_count(g) == round(nx.number_of_spanning_trees(nx_graph(g)))
        assert all(len(t) == len(g.nodes) - 1 for t in trees)


def test_spanning_trees_of_multigraph():
    # two parallel edges plus a pendant edge
    g = ("abc", [("a", "b"), ("a", "b"), ("b", "c")])
    assert sum(1 for _ in spanning_trees(g)) == 2 == kirchhoff_count(g)


def test_classical_slices_fig2():
    tx, ty = classical_tutte_slices(fig2())
    assert tx.to_list() == [6, 12, 12, 10, 6, 3, 1]
    assert ty.to_list() == [25, 18, 6, 1]


def test_classical_slices_against_networkx_tutte():
    x, y = sympy.symbols("x y")
    for k, g in enumerate(random_graphs(12, 4, max_vertices=7)):
        T = nx.tutte_polynomial(nx_graph(g))
        tx_ref = sympy.Poly(sympy.expand(T.subs(y, 1)), x).all_coeffs()[::-1]
        ty_ref = sympy.Poly(sympy.expand(T.subs(x, 1)), y).all_coeffs()[::-1]
        rng = random.Random(k)
        order = list(range(len(g.edges)))
        rng.shuffle(order)
        tx, ty = classical_tutte_slices(g, order)
        assert tx.to_list() == [int(c) for c in tx_ref]
        assert ty.to_list() == [int(c) for c in ty_ref]


def test_tree_activities_single_tree():
    # a path is its own spanning tree: every edge internally active, nothing external
    g = ("abc", [("a", "b"), ("b", "c")])
    assert tree_activities(g, frozenset({0, 1}), [0, 1]) == (2, 0)


def test_graph_as_hypergraph():
    h = graph_as_hypergraph({"ap": ("a", "p"), "bp": ("b", "p")})
    assert h.vertices == ("a", "b", "p")
    assert all(h.size(e) == 2 for e in h.edge_ids)
    with pytest.raises(ValueError):
        graph_as_hypergraph({"loop": ("a", "a")})


def test_permutation_sign_matches_sympy():
    rng = random.Random(5)
    for n in range(1, 8):
        for _ in range(10):
            p = list(range(n))
            rng.shuffle(p)
            assert permutation_sign(p) == sympy.combinatorics.Permutation(p).signature()
