"""Hypertrees: membership, realization by spanning trees, enumeration, greedy hypertrees.

Hypertree vectors are plain tuples aligned with ``h.edge_ids``; functions that
take a vector also accept a dict keyed by hyperedge id.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

import networkx as nx
import numpy as np

from .core import (BipartiteGraph, DisjointSet, Hypergraph, bip, canonical, induced_hypergraphs, nullity,
                   sort_key, spanning_trees)
from .lattice import LatticePointSet, SetFunctionTable, _check_order, subset_sums, transfer_closure


class NotAHypertree(ValueError):
    pass


def as_vector(h: Hypergraph, f) -> tuple:
    if isinstance(f, dict):
        if set(f) != set(h.edge_ids):
            raise ValueError("hypertree keys do not match the hyperedges")
        return tuple(int(f[e]) for e in h.edge_ids)
    f = tuple(int(c) for c in f)
    if len(f) != len(h.edge_ids):
        raise ValueError("hypertree vector has the wrong length")
    return f


def as_dict(h: Hypergraph, f) -> dict:
    return dict(zip(h.edge_ids, as_vector(h, f)))


def _components(h: Hypergraph, sub) -> int:
    ds = DisjointSet()
    for e in sub:
        ds.add(("E", e))
        for v in h.hyperedges[e]:
            ds.add(("V", v))
            ds.union(("E", e), ("V", v))
    return ds.count()


def mu(h: Hypergraph, sub) -> int:
    """|union of sub| minus the number of components of the bipartite graph induced by sub."""
    sub = list(sub)
    if not sub:
        return 0
    union = frozenset().union(*(h.hyperedges[e] for e in sub))
    return len(union) - _components(h, sub)


def mu_table(h: Hypergraph) -> SetFunctionTable:
    """mu on all subsets of the hyperedges, grown one hyperedge at a time per mask."""
    ids = h.edge_ids
    n = len(ids)
    vals = [0] * (1 << n)
    for m in range(1, 1 << n):
        vals[m] = mu(h, [ids[i] for i in range(n) if m >> i & 1])
    return SetFunctionTable(ids, vals)


def is_hypertree(h: Hypergraph, f, table: SetFunctionTable | None = None) -> bool:
    """Subset-sum test: 0 <= f, f(E') <= mu(E') for every E', and f(E) = |V| - 1."""
    try:
        x = as_vector(h, f)
    except ValueError:
        return False
    if min(x, default=0) < 0 or sum(x) != len(h.vertices) - 1:
        return False
    if table is None:
        table = mu_table(h)
    return bool(np.all(subset_sums(x) <= table.values))


def degree_vector(h: Hypergraph, tree) -> tuple:
    """f(e) = (degree of e in the tree) - 1, for a set of (hyperedge, vertex) pairs."""
    deg = Counter(e for e, _ in tree)
    return tuple(deg[e] - 1 for e in h.edge_ids)


def _tree_pairs(g: BipartiteGraph, tree) -> frozenset:
    return frozenset(g.edges[i] for i in tree)


def hypertrees_from_spanning_trees(h: Hypergraph) -> LatticePointSet:
    """Oracle: degree vectors of all spanning trees of bip(h)."""
    g = bip(h)
    pts = {degree_vector(h, _tree_pairs(g, t)) for t in spanning_trees(g)}
    return LatticePointSet(h.edge_ids, pts)


def is_hypertree_by_realization(h: Hypergraph, f) -> bool:
    x = as_vector(h, f)
    return x in hypertrees_from_spanning_trees(h)


# ---------------------------------------------------------------------------
# realization


def _graph(h: Hypergraph, pairs) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(("E", e) for e in h.edge_ids)
    g.add_nodes_from(("V", v) for v in h.vertices)
    g.add_edges_from((("E", e), ("V", v)) for e, v in pairs)
    return g


def _key(node):
    return (node[0], sort_key(node[1]))


def _nullity(g: nx.Graph) -> int:
    return g.number_of_edges() - g.number_of_nodes() + nx.number_connected_components(g)


def realize(h: Hypergraph, f) -> frozenset | None:
    """A spanning tree of bip(h) with degree f(e)+1 at each hyperedge, or None.

    Starts from the first f(e)+1 members of every hyperedge and removes cycles
    one at a time by swapping an edge at a hyperedge for an edge leaving the
    cyclic component.  The tree is returned as a set of (hyperedge, vertex) pairs.
    """
    if not is_hypertree(h, f):
        return None
    x = as_dict(h, f)
    pairs = {(e, v) for e in h.edge_ids for v in canonical(h.hyperedges[e])[: x[e] + 1]}
    g = _graph(h, pairs)
    while _nullity(g) > 0:
        comp = next(c for c in sorted(nx.connected_components(g), key=lambda c: min(map(_key, c)))
                    if _nullity(g.subgraph(c)) > 0)
        while True:
            sub = g.subgraph(comp)
            alpha = None
            for node in sorted((n for n in comp if n[0] == "E"), key=_key):
                e = node[1]
                outside = [v for v in canonical(h.hyperedges[e]) if ("V", v) not in comp]
                if outside:
                    alpha = (node, ("V", outside[0]))
                    break
            if alpha is None:
                raise RuntimeError("bounds hold but no edge leaves a cyclic component")
            node = alpha[0]
            bridges = set(frozenset(b) for b in nx.bridges(sub))
            at_e = sorted(sub.edges(node), key=lambda uv: _key(uv[1]))
            on_cycle = [uv for uv in at_e if frozenset(uv) not in bridges]
            if on_cycle:
                g.remove_edge(*on_cycle[0])
                g.add_edge(*alpha)
                break
            # every edge at e is a bridge: push the swap into a smaller cyclic piece
            rest = sub.copy()
            rest.remove_node(node)
            for uv in at_e:
                piece = nx.node_connected_component(rest, uv[1])
                if _nullity(rest.subgraph(piece)) > 0:
                    g.remove_edge(*uv)
                    g.add_edge(*alpha)
                    comp = piece
                    break
            else:
                raise RuntimeError("cyclic component lost its cycle")
    return frozenset((a[1], b[1]) if a[0] == "E" else (b[1], a[1]) for a, b in g.edges)


def realize_with_anchors(h: Hypergraph, f, anchors: dict) -> frozenset:
    """A realization containing the anchor edge (e, v) chosen for each listed hyperedge."""
    tree = realize(h, f)
    if tree is None:
        raise NotAHypertree(f"{as_vector(h, f)} is not a hypertree")
    for e in canonical(anchors):
        a = tuple(anchors[e])
        if a[0] != e or a[1] not in h.hyperedges[e]:
            raise ValueError(f"anchor {a!r} is not incident to hyperedge {e!r}")
        if a in tree:
            continue
        g = _graph(h, tree)
        path = nx.shortest_path(g, ("E", e), ("V", a[1]))
        first = (e, path[1][1])
        tree = (tree - {first}) | {a}
    return tree


def realization_is_valid(h: Hypergraph, f, tree) -> bool:
    g = _graph(h, tree)
    return nx.is_tree(g) and degree_vector(h, tree) == as_vector(h, f)


# ---------------------------------------------------------------------------
# orders, greedy hypertrees and enumeration


@dataclass(frozen=True)
class OrderProfile:
    order: tuple
    nj: dict
    greedy: tuple


def induced_nullity(h: Hypergraph, sub) -> int:
    pairs = [(e, v) for e in sub for v in h.hyperedges[e]]
    verts = {("V", v) for _, v in pairs} | {("E", e) for e in sub}
    return nullity((verts, [(("E", e), ("V", v)) for e, v in pairs]))


def order_profile(h: Hypergraph, order=None) -> OrderProfile:
    """Nullity jumps along the hyperedge filtration and the greedy hypertree they give."""
    if not h.is_connected():
        raise ValueError("bipartite graph of the hypergraph is disconnected")
    order = _check_order(h.edge_ids, order)
    nj = {}
    prev = 0
    for k in range(len(order)):
        cur = induced_nullity(h, order[: k + 1])
        nj[order[k]] = cur - prev
        prev = cur
    greedy = tuple(h.size(e) - 1 - nj[e] for e in h.edge_ids)
    return OrderProfile(tuple(order), nj, greedy)


def greedy_hypertree(h: Hypergraph, order=None) -> tuple:
    return order_profile(h, order).greedy


def enumerate_hypertrees(h: Hypergraph) -> LatticePointSet:
    """All hypertrees, by transfer moves from a greedy hypertree.

    Returns an empty set when bip(h) is disconnected.
    """
    if not h.edge_ids or not h.is_connected():
        return LatticePointSet(h.edge_ids, [])
    table = mu_table(h)
    start = greedy_hypertree(h)
    bound = table.values
    target = len(h.vertices) - 1

    def member(y):
        return min(y) >= 0 and sum(y) == target and bool(np.all(subset_sums(y) <= bound))

    return LatticePointSet(h.edge_ids, transfer_closure(start, member, len(h.edge_ids)))


def hypertree_count(h: Hypergraph) -> int:
    return len(enumerate_hypertrees(h))


def postnikov_count_check(g: BipartiteGraph) -> dict:
    """Hypertree counts of the two induced hypergraphs; they must agree."""
    if not g.is_connected():
        raise ValueError("bipartite graph is disconnected")
    g0, g1 = induced_hypergraphs(g)
    n0, n1 = hypertree_count(g0), hypertree_count(g1)
    if n0 != n1:
        raise AssertionError(f"hypertree counts differ: {n0} vs {n1}")
    return {"count_0": n0, "count_1": n1, "equal": True}


def complete_bipartite_count(m: int, n: int) -> int:
    """Hypertrees of the hypergraph with n hyperedges, each the full set of m vertices."""
    return comb(n + m - 2, n - 1)
