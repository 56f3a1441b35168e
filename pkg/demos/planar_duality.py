"""
Planar duals of hypergraphs
===========================

Draw the bipartite graph in the plane, keep the hyperedges and replace the
vertices by the regions.  Reflecting hypertrees, f(e) -> deg(e) - 1 - f(e),
matches the two hypertree sets and swaps I with X.
"""

import random

from hypertutte.fixtures import fig2, fig2_rotations
from hypertutte.planar import (RotationSystem, check_planar_duality, planar_dual_hypergraph,
                               random_plane_bipartite)

rs = RotationSystem.from_neighbor_rotations(fig2(), fig2_rotations())
print(rs, "faces:", len(rs.faces()), "genus:", rs.genus())

dual = planar_dual_hypergraph(rs, 0)
print("planar dual of G0:")
for e in dual.edge_ids:
    print(f"  {e}: {sorted(dual.hyperedges[e])}")
# each of a, b, c touches three of the four regions, so the dual looks like G0 again

for side in (0, 1):
    r = check_planar_duality(rs, side)
    print(f"\nside {side}: {r['count']} hypertrees, reflection is a bijection: {r['bijection']}")
    print("  I =", r["interior"].format("ξ"), "  X =", r["exterior"].format("η"))
    print("  I of the dual is X:", r["interior_to_exterior"], "  X of the dual is I:", r["exterior_to_interior"])

# the same on random plane bipartite graphs
rng = random.Random(1)
ok = 0
for _ in range(20):
    g = random_plane_bipartite(rng.randint(4, 9), rng.randint(0, 5), rng)
    r = check_planar_duality(g, rng.randrange(2))
    ok += r["bijection"] and r["interior_to_exterior"] and r["exterior_to_interior"]
print(f"\nrandom drawings passing all checks: {ok}/20")
