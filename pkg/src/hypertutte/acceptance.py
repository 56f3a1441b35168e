"""The fixture acceptance suite, shared by ``hypertutte selftest`` and the test-suite.

Each criterion returns a CriterionResult holding a list of mismatches; an empty
list means the criterion passed.  Random corpora are drawn from fixed seeds.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import comb

from .core import (MonomialSet, UniPolynomial, all_orders, bip, classical_tutte_slices, induced_hypergraphs,
                   kirchhoff_count, nullity, random_connected_bipartite, spanning_trees)
from .fixtures import (TRIN1_WHITE, fig2, fig2_as_graph, fig2_g0, fig2_g1, fig2_rotations, kmn, tetra4)
from .hypertree import enumerate_hypertrees, hypertrees_from_spanning_trees, mu_table
from .invariants import (abstract_duality_scan, add_leaf_vertex, add_singleton_hyperedge, check_edge_delcontr,
                         check_vertex_delcontr, exterior_polynomial, graph_tutte_bridge, interior_polynomial,
                         kmn_exterior0, kmn_interior, merge_product_check)
from .lattice import (SetFunctionTable, base_points, base_points_bruteforce, exterior_poly, interior_poly,
                      order_independence_probe, random_polymatroid, rectangle_failures, rhombus_violations,
                      staple_violations, support_function, tightness_closure_check)
from .planar import RotationSystem, check_planar_duality, random_plane_bipartite

P = UniPolynomial

# published values
FIG2_I0 = P([1, 3, 3])
FIG2_X0 = P([1, 3, 3])
FIG2_I1 = P([1, 3, 3])
FIG2_X1 = P([1, 2, 3, 1])
FIG2_TX1 = P([6, 12, 12, 10, 6, 3, 1])
FIG2_T1Y = P([25, 18, 6, 1])
TRIN1_EV = "e0^2 e1 + e0 e1^2 + e0^2 e2 + e0 e1 e2 + e1^2 e2 + e0 e2^2 + e1 e2^2"
TRIN1_VE = "v0 v1 + v1^2 + v0 v2 + v1 v2 + v0 v3 + v1 v3 + v2 v3"
TRIN1_EVR = ("e0^2 e1 r0^2 v0 v1^2 + e0 e1^2 r0 r3 v0 v1 v2 + e1^2 e2 r1 r2 v1^2 v2 + e0^2 e2 r0 r1 v0 v1 v3"
             " + e0 e2^2 r0 r2 v1^2 v3 + e0 e1 e2 r1 r3 v0 v2 v3 + e1 e2^2 r2 r3 v1 v2 v3")


@dataclass
class CriterionResult:
    number: int
    name: str
    mismatches: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({len(self.mismatches)} mismatches: {self.mismatches[0]})" if self.mismatches else ""
        return f"[{status}] criterion {self.number}: {self.name} in {self.seconds:.1f}s{extra}"

    def to_json(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed,
                "mismatches": [str(m) for m in self.mismatches[:20]], "seconds": round(self.seconds, 3),
                "notes": {k: v for k, v in self.notes.items()}}


def _expect(bad: list, label: str, got, want):
    if got != want:
        bad.append(f"{label}: got {got}, expected {want}")


# ---------------------------------------------------------------------------


def criterion_1() -> CriterionResult:
    res = CriterionResult(1, "FIG2 interior/exterior polynomials")
    g0, g1 = fig2_g0(), fig2_g1()
    _expect(res.mismatches, "I_G0", interior_polynomial(g0), FIG2_I0)
    _expect(res.mismatches, "X_G0", exterior_polynomial(g0), FIG2_X0)
    _expect(res.mismatches, "I_G1", interior_polynomial(g1), FIG2_I1)
    _expect(res.mismatches, "X_G1", exterior_polynomial(g1), FIG2_X1)
    _expect(res.mismatches, "hypertree counts", (len(enumerate_hypertrees(g0)), len(enumerate_hypertrees(g1))), (7, 7))
    return res


def criterion_2() -> CriterionResult:
    res = CriterionResult(2, "FIG2 classical Tutte bridge")
    g = fig2()
    bad = res.mismatches
    _expect(bad, "spanning trees (enumerated)", sum(1 for _ in spanning_trees(g)), 50)
    _expect(bad, "spanning trees (matrix-tree)", kirchhoff_count(g), 50)
    tx, ty = classical_tutte_slices(g)
    _expect(bad, "T(x,1)", tx, FIG2_TX1)
    _expect(bad, "T(1,y)", ty, FIG2_T1Y)
    h = fig2_as_graph()
    bridge = graph_tutte_bridge(h, tx, ty)
    _expect(bad, "I of the graph as a hypergraph", bridge["interior_holds"], True)
    _expect(bad, "X of the graph as a hypergraph", bridge["exterior_holds"], True)
    _expect(bad, "I coefficients", interior_polynomial(h).to_list(), [1, 3, 6, 10, 12, 12, 6])
    _expect(bad, "X coefficients", exterior_polynomial(h).to_list(), [1, 6, 18, 25])
    return res


def criterion_3(n_graphs: int = 50, trials: int = 10, seed: int = 3) -> CriterionResult:
    res = CriterionResult(3, "order independence")
    q = enumerate_hypertrees(fig2_g1())
    polys = {(interior_poly(q, o), exterior_poly(q, o)) for o in all_orders(q.ground)}
    _expect(res.mismatches, "distinct (I, X) over all 24 orders of FIG2 G1", len(polys), 1)
    rng = random.Random(seed)
    for k in range(n_graphs):
        g = random_connected_bipartite(rng, max_vertices=9, min_vertices=5)
        for side, h in enumerate(induced_hypergraphs(g)):
            probe = order_independence_probe(enumerate_hypertrees(h), trials=trials, seed=rng.randrange(1 << 30))
            if not probe["independent"]:
                res.mismatches.append(f"graph {k} side {side}: orders {probe['witness_orders']}")
    res.notes["random_graphs"] = n_graphs
    return res


def criterion_4() -> CriterionResult:
    res = CriterionResult(4, "non-submodular sentinel TETRA4")
    t = tetra4()
    bad = res.mismatches
    _expect(bad, "I under x<y<z<t", interior_poly(t, ["x", "y", "z", "t"]), P([1, 2, 1]))
    _expect(bad, "I under y<z<t<x", interior_poly(t, ["y", "z", "t", "x"]), P([2, 0, 2]))
    _expect(bad, "X under x<t<z<y", exterior_poly(t, ["x", "t", "z", "y"]), P([2, 0, 2]))
    mu = support_function(t)
    _expect(bad, "tightness closure at (1,1,0,0)", tightness_closure_check(mu, (1, 1, 0, 0)), False)
    return res


def criterion_5(n_instances: int = 100, seed: int = 5, kmax: int = 6) -> CriterionResult:
    res = CriterionResult(5, "coefficient theorems and K_{m,n}")
    rng = random.Random(seed)
    for k in range(n_instances):
        g = random_connected_bipartite(rng, max_vertices=9, min_vertices=5)
        h = induced_hypergraphs(g)[rng.randrange(2)]
        i_poly, x_poly = interior_polynomial(h), exterior_polynomial(h)
        if i_poly[0] != 1 or x_poly[0] != 1:
            res.mismatches.append(f"instance {k}: constant terms {i_poly[0]}, {x_poly[0]}")
        if i_poly[1] != nullity(bip(h)):
            res.mismatches.append(f"instance {k}: linear coefficient {i_poly[1]} vs nullity {nullity(bip(h))}")
    for m in range(2, kmax + 1):
        for n in range(2, kmax + 1):
            g0 = induced_hypergraphs(kmn(m, n))[0]
            q = enumerate_hypertrees(g0)
            _expect(res.mismatches, f"K_{m},{n} count", len(q), comb(n + m - 2, n - 1))
            _expect(res.mismatches, f"K_{m},{n} interior", interior_poly(q), kmn_interior(m, n))
            _expect(res.mismatches, f"K_{m},{n} exterior", exterior_poly(q), kmn_exterior0(m, n))
    return res


def criterion_6(n_instances: int = 50, seed: int = 6) -> CriterionResult:
    res = CriterionResult(6, "identity suite")
    bad = res.mismatches
    rng = random.Random(seed)
    edge_ok = vert_i = vert_x = 0
    tries = 0
    while (edge_ok < n_instances or vert_i < n_instances) and tries < 50 * n_instances:
        tries += 1
        g = random_connected_bipartite(rng, max_vertices=9, min_vertices=5)
        h = induced_hypergraphs(g)[rng.randrange(2)]
        if edge_ok < n_instances:
            for e in h.edge_ids:
                r = check_edge_delcontr(h, e)
                if r["applicable"]:
                    edge_ok += 1
                    if not (r["interior_holds"] and r["exterior_holds"]):
                        bad.append(f"edge deletion-contraction fails on {h} at {e}")
                    break
        if vert_i < n_instances:
            for v in h.vertices:
                r = check_vertex_delcontr(h, v)
                if r["interior_applicable"]:
                    vert_i += 1
                    if not r["interior_holds"]:
                        bad.append(f"vertex identity (interior) fails on {h} at {v}")
                    if r["exterior_applicable"]:
                        vert_x += 1
                        if not r["exterior_holds"]:
                            bad.append(f"vertex identity (exterior) fails on {h} at {v}")
                    break
    if edge_ok < n_instances or vert_i < n_instances:
        bad.append(f"only {edge_ok} edge and {vert_i} vertex instances found")
    res.notes.update(edge_instances=edge_ok, vertex_instances=vert_i, vertex_exterior_instances=vert_x)
    if not vert_x:
        bad.append("no instance exercised the exterior vertex identity")

    for k in range(max(10, n_instances // 5)):
        h1 = induced_hypergraphs(random_connected_bipartite(rng, max_vertices=6))[rng.randrange(2)]
        h2 = induced_hypergraphs(random_connected_bipartite(rng, max_vertices=6))[rng.randrange(2)]
        e1, e2 = rng.choice(h1.edge_ids), rng.choice(h2.edge_ids)
        v1 = rng.choice(sorted(h1.hyperedges[e1], key=str))
        v2 = rng.choice(sorted(h2.hyperedges[e2], key=str))
        for mode, a, b, shared in (("edge-join", e1, e2, (v1, v2)), ("hyperedge-union", e1, e2, None),
                                   ("vertex-join", rng.choice(h1.vertices), rng.choice(h2.vertices), None)):
            r = merge_product_check(h1, a, h2, b, mode, shared=shared)
            if not (r["bijection"] and r["interior_holds"] and r["exterior_holds"]):
                bad.append(f"{mode} product {k} fails")
        i1, x1 = interior_polynomial(h1), exterior_polynomial(h1)
        for h in (add_singleton_hyperedge(h1, rng.choice(h1.vertices)), add_leaf_vertex(h1, e1)):
            if interior_polynomial(h) != i1 or exterior_polynomial(h) != x1:
                bad.append(f"leaf/singleton move changed I or X on {h1}")
    return res


def fig2_rotation_system() -> RotationSystem:
    return RotationSystem.from_neighbor_rotations(fig2(), fig2_rotations())


def _planar_ok(rs, cls) -> list:
    r = check_planar_duality(rs, cls)
    keys = ("bijection", "interior_to_exterior", "exterior_to_interior", "double_dual_isomorphic")
    return [k for k in keys if not r[k]]


def criterion_7(n_graphs: int = 30, seed: int = 7) -> CriterionResult:
    res = CriterionResult(7, "planar duality")
    rs = fig2_rotation_system()
    for cls in (0, 1):
        for k in _planar_ok(rs, cls):
            res.mismatches.append(f"FIG2 class {cls}: {k}")
    rng = random.Random(seed)
    for i in range(n_graphs):
        rs = random_plane_bipartite(rng.randint(3, 9), rng.randint(0, 4), rng)
        for cls in (0, 1):
            for k in _planar_ok(rs, cls):
                res.mismatches.append(f"random plane graph {i} class {cls}: {k}")
    return res


def criterion_8() -> CriterionResult:
    from .trinity import (Trinity, arborescence_count, arborescence_count_matrix_tree, arborescence_to_hypertree,
                          arborescences, berman_determinant, berman_determinant_sympy, constituent_hypergraph,
                          dual_directed_graph, enhanced_determinant, hypertree_to_arborescence,
                          tutte_matchings, variant_hypergraph)

    res = CriterionResult(8, "trinity suite on TRIN1")
    bad = res.mismatches
    t = Trinity.from_white_triangles(TRIN1_WHITE, outer=0)
    _expect(bad, "Berman |det| (expansion)", berman_determinant(t), 7)
    _expect(bad, "Berman |det| (elimination)", abs(berman_determinant_sympy(t)), 7)
    for c in "REV":
        d = dual_directed_graph(t, c)
        for root in d.nodes:
            _expect(bad, f"arborescences of {c} rooted at {root}", arborescence_count(d, root), 7)
            _expect(bad, f"matrix-tree count of {c} at {root}", arborescence_count_matrix_tree(d, root), 7)
    signs = {s for _, s in tutte_matchings(t)}
    _expect(bad, "Tutte matchings", sum(1 for _ in tutte_matchings(t)), 7)
    _expect(bad, "distinct expansion signs", len(signs), 1)
    ev = enhanced_determinant(t, "e-v")
    _expect(bad, "e-v determinant", ev, MonomialSet.parse(TRIN1_EV, ev.variables))
    ve = enhanced_determinant(t, "v-e")
    _expect(bad, "v-e determinant", ve, MonomialSet.parse(TRIN1_VE, ve.variables))
    evr = enhanced_determinant(t, "e-v-r")
    _expect(bad, "e-v-r determinant", evr, MonomialSet.parse(TRIN1_EVR, evr.variables))
    hs = enumerate_hypertrees(variant_hypergraph(t, "e", "v"))
    _expect(bad, "e-v exponents vs hypertrees", ev.exponent_vectors(hs.ground), set(hs.points))
    for c in "REV":
        arbs = list(arborescences(dual_directed_graph(t, c), t.root(c)))
        images = [arborescence_to_hypertree(t, c, a) for a in arbs]
        _expect(bad, f"{c}: hypertree images", set(images),
                set(enumerate_hypertrees(constituent_hypergraph(t, c)).points))
        _expect(bad, f"{c}: forward map collisions", len(set(images)), len(arbs))
        back = sum(1 for a, f in zip(arbs, images) if hypertree_to_arborescence(t, c, f) != a)
        _expect(bad, f"{c}: round trip failures", back, 0)
    _expect(bad, "points vs white triangles + 2", len(t.points), t.n + 2)
    return res


def _hypergraph_corpus(n: int, seed: int):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        g = random_connected_bipartite(rng, max_vertices=10, min_vertices=5, edge_prob=0.4, max_class0=5)
        out.append(induced_hypergraphs(g)[0])
    return out


def criterion_9(n_instances: int = 100, seed: int = 9) -> CriterionResult:
    res = CriterionResult(9, "oracle equivalence and exchange properties")
    bad = res.mismatches
    rng = random.Random(seed)
    for k, h in enumerate(_hypergraph_corpus(n_instances, seed)):
        q = enumerate_hypertrees(h)
        if q != hypertrees_from_spanning_trees(h):
            bad.append(f"hypergraph {k}: transfer enumeration differs from spanning trees")
        mu = mu_table(h)
        if base_points(mu) != base_points_bruteforce(mu) or base_points(mu) != q:
            bad.append(f"hypergraph {k}: base points differ")
        for label, fn in (("rhombus", rhombus_violations), ("staple", staple_violations),
                          ("rectangle", rectangle_failures)):
            if fn(q):
                bad.append(f"hypergraph {k}: {label} property fails")
    for k in range(n_instances):
        mu = random_polymatroid(rng.randint(1, 5), rng)
        q = base_points(mu)
        if q != base_points_bruteforce(mu):
            bad.append(f"polymatroid {k}: base points differ from the box scan")
        for label, fn in (("rhombus", rhombus_violations), ("staple", staple_violations),
                          ("rectangle", rectangle_failures)):
            if fn(q):
                bad.append(f"polymatroid {k}: {label} property fails")
    return res


def criterion_10(n_graphs: int = 100, seed: int = 10, max_vertices: int = 8) -> CriterionResult:
    res = CriterionResult(10, "abstract duality scan")
    rng = random.Random(seed)
    unequal = []
    for k in range(n_graphs):
        g = random_connected_bipartite(rng, max_vertices=max_vertices, min_vertices=4)
        try:
            scan = abstract_duality_scan(g)
        except AssertionError as exc:
            res.mismatches.append(f"graph {k}: {exc}")
            continue
        if not scan["equal"]:
            unequal.append({"class0": list(g.class0), "class1": list(g.class1), "edges": [list(e) for e in g.edges]})
    res.notes["graphs"] = n_graphs
    res.notes["interior_equal_everywhere"] = not unequal
    res.notes["counterexamples"] = unequal
    return res


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10)


def run_criterion(fn, **kwargs) -> CriterionResult:
    start = time.perf_counter()
    try:
        res = fn(**kwargs)
    except Exception as exc:  # a crash counts as a failure of that criterion
        res = CriterionResult(CRITERIA.index(fn) + 1, fn.__name__, [f"raised {type(exc).__name__}: {exc}"])
    res.seconds = time.perf_counter() - start
    return res


def run_all(echo=None) -> list[CriterionResult]:
    out = []
    for fn in CRITERIA:
        res = run_criterion(fn)
        if echo:
            echo(res.line())
        out.append(res)
    return out
