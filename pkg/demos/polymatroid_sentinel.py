"""
When the point set is not a polymatroid
=======================================

Activities can be defined for any set of lattice points with a common
coordinate sum.  The order independence of I and X needs the polymatroid
structure; four points in Z^4 are enough to see it fail.
"""

import random

from hypertutte.fixtures import tetra4
from hypertutte.lattice import (base_points, exterior_poly, interior_poly, is_submodular, order_independence_probe,
                                random_polymatroid, rectangle_failures, support_function, tightness_closure_check)

t = tetra4()
print("points over", t.ground)
for p in t.points:
    print("  ", p)

for order in ("xyzt", "yztx"):
    print(f"I under {'<'.join(order)}:", interior_poly(t, order).format("ξ"))
print("X under x<t<z<y:", exterior_poly(t, "xtzy").format("η"))

# the smallest bounds containing the points are not submodular, and tight sets
# at (1,1,0,0) are not closed under union and intersection
nu = support_function(t)
print("\nbound function submodular:", is_submodular(nu))
print("tight sets closed at (1,1,0,0):", tightness_closure_check(nu, (1, 1, 0, 0)))
print("rectangle property failures:", len(rectangle_failures(t)))

probe = order_independence_probe(t, trials=20, seed=0)
print("two orders giving different polynomials:", probe["witness_orders"])

# a random polymatroid for contrast: every order agrees
rng = random.Random(3)
mu = random_polymatroid(4, rng)
q = base_points(mu)
orders = ["".join(map(str, rng.sample(range(4), 4))) for _ in range(5)]
print(f"\nrandom polymatroid with {len(q)} bases")
for o in orders:
    order = [int(c) for c in o]
    print("  order", order, "I =", interior_poly(q, order).format("ξ"), " X =", exterior_poly(q, order).format("η"))
