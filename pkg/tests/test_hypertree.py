import random
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypertutte.core import Hypergraph, bip, induced_hypergraphs, nullity, random_connected_bipartite
from hypertutte.fixtures import fig2, fig2_g0, fig2_g1, k_hypergraph, kmn
from hypertutte.hypertree import (NotAHypertree, as_dict, complete_bipartite_count, degree_vector,
                                  enumerate_hypertrees, greedy_hypertree, hypertree_count,
                                  hypertrees_from_spanning_trees, induced_nullity, is_hypertree,
                                  is_hypertree_by_realization, mu, mu_table, order_profile,
                                  postnikov_count_check, realization_is_valid, realize, realize_with_anchors)
from hypertutte.lattice import greedy_base, tight_sets

seeds = st.integers(min_value=0, max_value=2**31)
few = settings(max_examples=30, deadline=None, derandomize=True)


def random_hypergraph(rng, **kw):
    g = random_connected_bipartite(rng, **kw)
    return induced_hypergraphs(g)[rng.randrange(2)]


# FIG2 G0: a = {p,q,r}, b = {q,r,s}, c = {p,q,s}
FIG2_G0_HYPERTREES = {(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 1, 1), (1, 2, 0), (2, 0, 1), (2, 1, 0)}


def test_mu_on_fig2():
    h = fig2_g0()
    assert mu(h, []) == 0
    assert mu(h, ["a"]) == 2
    assert mu(h, ["a", "b"]) == 3  # union {p,q,r,s}, one component
    assert mu(h, ["a", "b", "c"]) == 3
    table = mu_table(h)
    assert table("abc") == 3 and table("ac") == 3


def test_fig2_hypertrees_frozen():
    q = enumerate_hypertrees(fig2_g0())
    assert set(q.points) == FIG2_G0_HYPERTREES
    assert q == hypertrees_from_spanning_trees(fig2_g0())
    assert len(enumerate_hypertrees(fig2_g1())) == 7


def test_is_hypertree_examples():
    h = fig2_g0()
    assert is_hypertree(h, (1, 1, 1))
    assert is_hypertree(h, {"a": 2, "b": 1, "c": 0})
    assert not is_hypertree(h, (3, 0, 0))  # a has only three members
    assert not is_hypertree(h, (1, 1, 0))  # wrong total
    assert not is_hypertree(h, (-1, 2, 2))
    assert not is_hypertree(h, (1, 1))


@few
@given(seeds)
def test_membership_matches_spanning_tree_oracle(seed):
    rng = random.Random(seed)
    h = random_hypergraph(rng, max_vertices=9, min_vertices=4)
    oracle = set(hypertrees_from_spanning_trees(h).points)
    assert set(enumerate_hypertrees(h).points) == oracle
    # every vector in the box with the right sum is classified correctly
    import itertools

    target = len(h.vertices) - 1
    for f in itertools.product(*(range(h.size(e)) for e in h.edge_ids)):
        if sum(f) == target:
            assert is_hypertree(h, f) == (f in oracle)


@few
@given(seeds)
def test_realize_gives_spanning_trees(seed):
    rng = random.Random(seed)
    h = random_hypergraph(rng, max_vertices=9, min_vertices=4)
    for f in enumerate_hypertrees(h).points:
        tree = realize(h, f)
        assert tree is not None
        assert realization_is_valid(h, f, tree)
        assert degree_vector(h, tree) == f


def test_realize_rejects_non_hypertrees():
    assert realize(fig2_g0(), (3, 0, 0)) is None
    assert not is_hypertree_by_realization(fig2_g0(), (0, 0, 3))


def test_realize_with_anchors():
    h = fig2_g0()
    rng = random.Random(2)
    for f in enumerate_hypertrees(h).points:
        anchors = {e: (e, rng.choice(sorted(h.hyperedges[e]))) for e in h.edge_ids}
        tree = realize_with_anchors(h, f, anchors)
        assert realization_is_valid(h, f, tree)
        assert all(a in tree for a in anchors.values())
    with pytest.raises(NotAHypertree):
        realize_with_anchors(h, (3, 0, 0), {})
    with pytest.raises(ValueError):
        realize_with_anchors(h, (1, 1, 1), {"a": ("a", "s")})


def test_anchors_on_random_hypergraphs():
    rng = random.Random(12)
    for _ in range(20):
        h = random_hypergraph(rng, max_vertices=8, min_vertices=4)
        for f in enumerate_hypertrees(h).points[:5]:
            anchors = {e: (e, rng.choice(sorted(h.hyperedges[e], key=str))) for e in h.edge_ids}
            tree = realize_with_anchors(h, f, anchors)
            assert realization_is_valid(h, f, tree)
            assert set(anchors.values()) <= tree


def test_greedy_hypertree_is_the_greedy_base():
    rng = random.Random(3)
    for _ in range(30):
        h = random_hypergraph(rng, max_vertices=9, min_vertices=4)
        order = list(h.edge_ids)
        rng.shuffle(order)
        prof = order_profile(h, order)
        assert prof.greedy == greedy_base(mu_table(h), order)
        assert is_hypertree(h, prof.greedy)
        assert sum(prof.nj.values()) == nullity(h)
        # tight on every prefix
        table = mu_table(h)
        tight = tight_sets(table, prof.greedy)
        mask = 0
        for e in order:
            mask |= 1 << h.edge_ids.index(e)
            assert mask in tight


def test_nullity_jumps_fig2():
    prof = order_profile(fig2_g0(), ["a", "b", "c"])
    assert prof.nj == {"a": 0, "b": 1, "c": 2}
    assert prof.greedy == (2, 1, 0)
    assert induced_nullity(fig2_g0(), ["a", "b"]) == 1


def test_complete_bipartite_counts():
    for m in range(1, 6):
        for n in range(1, 6):
            h = induced_hypergraphs(kmn(m, n))[0]
            assert hypertree_count(h) == complete_bipartite_count(m, n) == comb(n + m - 2, n - 1)
    assert hypertree_count(k_hypergraph(3, 2)) == 3


def test_postnikov_counts_match():
    assert postnikov_count_check(fig2())["count_0"] == 7
    rng = random.Random(6)
    for _ in range(40):
        g = random_connected_bipartite(rng, max_vertices=9)
        r = postnikov_count_check(g)
        assert r["count_0"] == r["count_1"]


def test_disconnected_hypergraph_has_no_hypertrees():
    h = Hypergraph("pqrs", {"a": "pq", "b": "rs"})
    assert len(enumerate_hypertrees(h)) == 0
    assert not is_hypertree(h, (1, 1))
    with pytest.raises(ValueError):
        postnikov_count_check(bip(h))


def test_graph_hypertrees_are_spanning_trees():
    # for a graph, hypertrees are 0/1 vectors marking spanning tree edges
    g = nx.petersen_graph()
    from hypertutte.core import graph_as_hypergraph

    h = graph_as_hypergraph({f"{u}-{v}": (u, v) for u, v in g.edges()})
    count = hypertree_count(h)
    assert count == round(nx.number_of_spanning_trees(g)) == 2000


def test_as_dict():
    assert as_dict(fig2_g0(), (1, 1, 1)) == {"a": 1, "b": 1, "c": 1}
    assert greedy_hypertree(fig2_g0()) in FIG2_G0_HYPERTREES
