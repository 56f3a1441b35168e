"""
Trinities, arborescences and determinants
=========================================

A triangulation of the sphere with corners coloured R, E, V (and black and
white triangles) contains three bipartite graphs, one for each pair of
colours.  All six hypergraphs they induce have the same number of hypertrees,
which is also a determinant.
"""

from hypertutte.fixtures import trin1
from hypertutte.trinity import (COLORS, arborescence_count, arborescence_to_hypertree, arborescences,
                                berman_determinant, berman_matrix, constituent_hypergraph, dual_directed_graph,
                                enhanced_determinant, hypertree_to_arborescence, variant_hypertrees)

t = trin1()
print(t)
print("points by colour:", {c: list(t.points_of(c)) for c in COLORS})
print("points =", len(t.points), "= white triangles + 2 =", t.n + 2)

# the point / white triangle incidence matrix, with roots and the outer triangle removed
m = berman_matrix(t)
print("\n" + m.to_text())
print("|det| =", berman_determinant(t))

# every directed dual has the same number of spanning arborescences, for every root
for c in COLORS:
    d = dual_directed_graph(t, c)
    counts = {str(r): arborescence_count(d, r) for r in d.nodes}
    print(f"{c}: balanced {d.is_balanced()}, arborescences by root {counts}")

# arborescences of one colour correspond to hypertrees of the constituent hypergraph
c = "R"
h = constituent_hypergraph(t, c)
print(f"\nhypergraph of colour {c}: hyperedges {list(h.edge_ids)}")
for A in arborescences(dual_directed_graph(t, c), t.root(c)):
    f = arborescence_to_hypertree(t, c, A)
    back = hypertree_to_arborescence(t, c, f)
    print("  ", f, "round trip ok:", back == A)

# write e-points into the E rows: the monomials are the hypertrees again
ev = enhanced_determinant(t, "e-v")
print("\ndet M_e->v =", ev.format())
print("exponents == hypertrees:", ev.exponent_vectors() == set(variant_hypertrees(t, "e", "v").points))
print("det M_v->e =", enhanced_determinant(t, "v-e").format())
print("superimposed e-v-r:", enhanced_determinant(t, "e-v-r").format())
