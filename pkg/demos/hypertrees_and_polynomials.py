"""
Hypertrees and the interior/exterior polynomials
================================================

A small bipartite graph read as two hypergraphs, its hypertrees, and the
two one-variable polynomials built from activities.
"""

import itertools

from hypertutte import enumerate_hypertrees, exterior_polynomial, interior_polynomial
from hypertutte.core import classical_tutte_slices, induced_hypergraphs
from hypertutte.fixtures import fig2, fig2_as_graph
from hypertutte.lattice import bivariate_activity_poly, interior_poly, exterior_poly

# the graph has colour classes {a, b, c} and {p, q, r, s}; either class can
# play the hyperedges
g = fig2()
g0, g1 = induced_hypergraphs(g)
print("G0 hyperedges:", {e: sorted(m) for e, m in g0.hyperedges.items()})
print("G1 hyperedges:", {e: sorted(m) for e, m in g1.hyperedges.items()})

# hypertrees are degree vectors (minus one) of spanning trees at the hyperedge nodes
q0 = enumerate_hypertrees(g0)
print("\nhypertrees of G0 over", q0.ground)
for f in q0.points:
    print("  ", f)

# both hypergraphs have the same number of hypertrees
print("\ncounts:", len(q0), len(enumerate_hypertrees(g1)))

# the polynomials; the variable names follow the usual xi / eta convention
for name, h in (("G0", g0), ("G1", g1)):
    print(f"I_{name} = {interior_polynomial(h).format('ξ')}    X_{name} = {exterior_polynomial(h).format('η')}")

# the order of the hyperedges does not matter for I and X ...
q1 = enumerate_hypertrees(g1)
polys = {(interior_poly(q1, o), exterior_poly(q1, o)) for o in itertools.permutations(q1.ground)}
print("\ndistinct (I, X) pairs over all 24 orders of G1:", len(polys))

# ... but the joint count of inactive elements does
for order in (["p", "q", "r", "s"], ["p", "r", "s", "q"]):
    print("bivariate counts under", "<".join(order), bivariate_activity_poly(q1, order))

# for an ordinary graph the polynomials are slices of the Tutte polynomial
tx, ty = classical_tutte_slices(g)
h = fig2_as_graph()
print("\nT(x,1) =", tx.format("x"))
print("T(1,y) =", ty.format("y"))
print("I of the graph   =", interior_polynomial(h).format("ξ"), " (T(x,1) reversed)")
print("X of the graph   =", exterior_polynomial(h).format("η"), " (T(1,y) reversed)")
