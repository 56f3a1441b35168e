"""Named example inputs.

FIG2 is the seven-vertex bipartite graph with colour classes {a, b, c} and
{p, q, r, s}.  It comes with a drawing (coordinates below) which fixes a plane
rotation system; that drawing is self-dual.
"""

from __future__ import annotations

import math

from .core import BipartiteGraph, Hypergraph, graph_as_hypergraph, induced_hypergraphs
from .lattice import LatticePointSet

FIG2_MEMBERS = {"a": ("p", "q", "r"), "b": ("q", "r", "s"), "c": ("p", "q", "s")}

# straight-line drawing: node -> (x, y)
FIG2_COORDS = {
    "a": (8, 9), "p": (8, 19), "r": (18, 4), "q": (18, 14),
    "c": (18, 24), "b": (28, 9), "s": (28, 19),
}


def fig2() -> BipartiteGraph:
    return BipartiteGraph("abc", "pqrs", [(e, v) for e, m in FIG2_MEMBERS.items() for v in m])


def fig2_g0() -> Hypergraph:
    return induced_hypergraphs(fig2())[0]


def fig2_g1() -> Hypergraph:
    return induced_hypergraphs(fig2())[1]


def fig2_as_graph() -> Hypergraph:
    """The FIG2 graph itself, each of its nine edges a two-element hyperedge."""
    g = fig2()
    return graph_as_hypergraph({f"{u}{v}": (u, v) for u, v in g.edges})


def fig2_rotations() -> dict:
    """Counter-clockwise rotations read off the drawing, as lists of neighbours."""
    g = fig2()
    rot = {}
    for x in g.nodes:
        x0, y0 = FIG2_COORDS[x]
        nbrs = g.neighbors(x)
        rot[x] = sorted(nbrs, key=lambda y: math.atan2(FIG2_COORDS[y][1] - y0, FIG2_COORDS[y][0] - x0))
    return rot


def kmn(m: int, n: int) -> BipartiteGraph:
    """Complete bipartite graph with class0 of size n (hyperedges of G0) and class1 of size m.

    So G0 has n hyperedges, each equal to the full set of m vertices.
    """
    c0 = [f"e{i}" for i in range(n)]
    c1 = [f"v{j}" for j in range(m)]
    return BipartiteGraph(c0, c1, [(u, v) for u in c0 for v in c1])


def k_hypergraph(n_vertices: int, copies: int) -> Hypergraph:
    verts = [f"v{j}" for j in range(n_vertices)]
    return Hypergraph(verts, {f"e{i}": verts for i in range(copies)})


TETRA4_GROUND = ("x", "y", "z", "t")
TETRA4_POINTS = ((1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 0, 1, 1))


def tetra4() -> LatticePointSet:
    """Four lattice points whose bound system is not submodular."""
    return LatticePointSet(TETRA4_GROUND, TETRA4_POINTS)


# TRIN1: white triangles as (r, e, v) triples; t0 is the outer one
TRIN1_WHITE = (
    ("r0", "e0", "v0"), ("r2", "e2", "v0"), ("r2", "e0", "v1"),
    ("r3", "e0", "v2"), ("r3", "e1", "v1"), ("r1", "e2", "v1"),
    ("r0", "e2", "v3"), ("r1", "e1", "v3"), ("r0", "e1", "v2"),
)


def trin1():
    from .trinity import Trinity

    return Trinity.from_white_triangles(TRIN1_WHITE, outer=0)


FIXTURES = ("FIG2", "KMN", "TETRA4", "TRIN1")
