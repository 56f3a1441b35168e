"""Command-line front end.

    hypertutte interior --fixture FIG2 --side 0
    hypertutte determinant --fixture TRIN1 --variant e-v
    hypertutte scan-conjecture --random 100 --max-vertices 8 --seed 1

Exit codes: 0 success, 1 bad input, 2 precondition violation, 3 internal
invariant breach (a reproducer is dumped to stderr).
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import warnings

from . import io
from .core import BipartiteGraph, Hypergraph, bip, classical_tutte_slices, graph_as_hypergraph, induced_hypergraphs
from .core import kirchhoff_count, nullity, random_connected_bipartite
from .fixtures import TRIN1_WHITE, fig2, fig2_rotations, kmn, tetra4
from .hypertree import enumerate_hypertrees, postnikov_count_check
from .invariants import abstract_duality_scan, graph_tutte_bridge
from .lattice import (LatticePointSet, SetFunctionTable, base_points, exterior_poly, interior_poly,
                      is_nondecreasing, is_polymatroid, is_submodular, is_transfer_connected, order_independence_probe)
from .planar import RotationSystem, check_planar_duality

VERBS = ("info", "hypertrees", "interior", "exterior", "tutte-slices", "dual", "trinity",
         "arborescences", "determinant", "scan-conjecture", "selftest")
VARIANT_CHOICES = ("e-v", "v-r", "r-e", "v-e", "r-v", "e-r", "e-v-r")


class Precondition(ValueError):
    """Input parsed fine but does not suit the requested operation."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise io.BadInput(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hypertutte", description="Hypergraph Tutte-type invariants, planar duals and trinities.")
    p.add_argument("verb", choices=VERBS)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--fixture", help="FIG2, KMN(m,n), TRIN1 or TETRA4")
    src.add_argument("--input", metavar="FILE", help="JSON file (hypergraph, bipartite graph, rotation system, "
                                                      "trinity, set function or lattice point set)")
    p.add_argument("--side", type=int, choices=(0, 1), default=0, help="which colour class plays the hyperedges")
    p.add_argument("--order", help='comma separated ground order, e.g. "a,b,c"')
    p.add_argument("--variant", choices=VARIANT_CHOICES, help="enhanced determinant variant")
    p.add_argument("--root", help="root point for arborescences")
    p.add_argument("--outer", type=int, help="index of the outer white triangle")
    p.add_argument("--seed", type=int, help="seed for randomized verbs (required when randomness is used)")
    p.add_argument("--trials", type=int, default=0, help="random orders to probe")
    p.add_argument("--random", type=int, metavar="N", help="scan N random connected bipartite graphs")
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--json", action="store_true", help="emit a versioned JSON report")
    return p


# ---------------------------------------------------------------------------
# inputs


def load_fixture(name: str):
    key = name.strip().upper()
    if key == "FIG2":
        return "rotation", RotationSystem.from_neighbor_rotations(fig2(), fig2_rotations())
    if key == "TRIN1":
        from .trinity import Trinity

        return "trinity", Trinity.from_white_triangles(TRIN1_WHITE, outer=0)
    if key == "TETRA4":
        return "pointset", tetra4()
    m = re.fullmatch(r"KMN[(:]?\s*(\d+)\s*,\s*(\d+)\s*\)?", key)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        if a < 1 or b < 1:
            raise io.BadInput("KMN needs positive sizes")
        return "bipartite", kmn(a, b)
    raise io.BadInput(f"unknown fixture {name!r}; try FIG2, KMN(3,4), TRIN1 or TETRA4")


def load_source(args):
    if args.fixture:
        kind, obj = load_fixture(args.fixture)
        return kind, obj, f"fixture:{args.fixture}"
    if args.input:
        kind, obj = io.load(args.input)
        return kind, obj, args.input
    raise io.BadInput(f"{args.verb} needs --fixture or --input")


def as_bipartite(kind, obj) -> BipartiteGraph:
    if kind == "bipartite":
        return obj
    if kind == "rotation":
        return obj.graph
    if kind == "hypergraph":
        return bip(obj)
    raise Precondition(f"a {kind} cannot be read as a bipartite graph")


def as_hypergraph(kind, obj, side: int) -> Hypergraph:
    if kind == "hypergraph":
        if side == 1:
            from .core import abstract_dual

            return abstract_dual(obj)
        return obj
    return induced_hypergraphs(as_bipartite(kind, obj))[side]


def as_pointset(kind, obj, side: int) -> LatticePointSet:
    if kind == "pointset":
        return obj
    if kind == "setfunction":
        if not is_polymatroid(obj):
            raise Precondition("set function is not a polymatroid")
        return base_points(obj)
    return enumerate_hypertrees(as_hypergraph(kind, obj, side))


def as_trinity(kind, obj, outer):
    from .trinity import Trinity, three_color

    if kind == "trinity":
        t = obj
    elif kind == "rotation":
        # a cubic drawing is read as the dual of a trinity; any other plane
        # bipartite drawing becomes the trinity built around it
        if all(obj.degree(x) == 3 for x in obj.nodes):
            t = three_color(obj)
        else:
            if not obj.is_plane():
                raise Precondition("rotation system is not plane")
            t = Trinity.from_plane_bipartite(obj)
    else:
        raise Precondition(f"a {kind} does not describe a trinity")
    if outer is not None:
        if not 0 <= outer < t.n:
            raise Precondition(f"outer index {outer} out of range 0..{t.n - 1}")
        t = t.with_outer(outer)
    return t


def parse_order(text, ground) -> list | None:
    if text is None:
        return None
    byname = {str(g): g for g in ground}
    toks = [s.strip() for s in text.split(",") if s.strip()]
    if sorted(toks) != sorted(byname):
        raise io.BadInput(f"order {text!r} is not a permutation of {sorted(byname)}")
    return [byname[s] for s in toks]


def need_seed(args, what):
    if args.seed is None:
        raise io.BadInput(f"{what} is randomized; pass --seed")


# ---------------------------------------------------------------------------
# verbs; each returns (result dict, text lines)


def _hypergraph_info(h: Hypergraph) -> dict:
    return {"vertices": len(h.vertices), "hyperedges": len(h.edge_ids), "connected": h.is_connected(),
            "nullity": nullity(bip(h)), "hypertree_count": len(enumerate_hypertrees(h))}


def verb_info(args, kind, obj):
    res = {"kind": kind}
    if kind in ("bipartite", "rotation", "hypergraph"):
        h = as_hypergraph(kind, obj, args.side)
        res.update(side=args.side, **_hypergraph_info(h))
        if kind != "hypergraph" and h.is_connected():
            res["counts_equal_both_sides"] = postnikov_count_check(as_bipartite(kind, obj))["equal"]
        if kind == "rotation":
            res.update(faces=len(obj.faces()), plane=obj.is_plane(), genus=obj.genus())
    elif kind == "trinity":
        from .trinity import COLORS

        res.update(white_triangles=obj.n, points=len(obj.points), outer=obj.outer, roots=list(obj.roots),
                   points_by_color={c: list(obj.points_of(c)) for c in COLORS})
    elif kind == "setfunction":
        res.update(ground=list(obj.ground), submodular=is_submodular(obj), nondecreasing=is_nondecreasing(obj))
        if is_polymatroid(obj):
            res["base_count"] = len(base_points(obj))
    elif kind == "pointset":
        res.update(ground=list(obj.ground), size=len(obj), transfer_connected=is_transfer_connected(obj))
    lines = [f"{k}: {v}" for k, v in res.items()]
    return res, lines


def verb_hypertrees(args, kind, obj):
    q = as_pointset(kind, obj, args.side)
    res = {"ground": list(q.ground), "points": [list(p) for p in q.points], "count": len(q)}
    lines = [" ".join(str(g) for g in q.ground)]
    lines += [" ".join(str(c) for c in p) for p in q.points]
    lines.append(f"{len(q)} points")
    return res, lines


def _activity_verb(args, kind, obj, which):
    q = as_pointset(kind, obj, args.side)
    order = parse_order(args.order, q.ground) or list(q.ground)
    fn, var = (interior_poly, "ξ") if which == "interior" else (exterior_poly, "η")
    if kind in ("bipartite", "rotation", "hypergraph"):
        from .invariants import exterior_polynomial, interior_polynomial

        h = as_hypergraph(kind, obj, args.side)
        poly = (interior_polynomial if which == "interior" else exterior_polynomial)(h, order)
    else:
        poly = fn(q, order)
    res = {"polynomial": poly.to_list(), "order": order, "variable": var, "count": len(q)}
    lines = [poly.format(var)]
    if args.trials:
        need_seed(args, "--trials")
        probe = order_independence_probe(q, trials=args.trials, seed=args.seed)
        res["order_probe"] = {"independent": probe["independent"], "orders_tried": probe["orders_tried"],
                              "witness_orders": [list(o) for o in probe["witness_orders"] or []]}
        lines.append(f"order independent over {probe['orders_tried']} orders: {probe['independent']}")
    return res, lines


def verb_interior(args, kind, obj):
    return _activity_verb(args, kind, obj, "interior")


def verb_exterior(args, kind, obj):
    return _activity_verb(args, kind, obj, "exterior")


def verb_tutte_slices(args, kind, obj):
    if args.order:
        raise io.BadInput("tutte-slices does not take --order")
    if kind == "hypergraph" and all(obj.size(e) == 2 for e in obj.edge_ids):
        graph = (list(obj.vertices), [tuple(sorted(obj.hyperedges[e], key=str)) for e in obj.edge_ids])
        h = obj
    else:
        g = as_bipartite(kind, obj)
        graph = g
        h = graph_as_hypergraph({i: e for i, e in enumerate(g.edges)}, vertices=g.nodes)
    tx, ty = classical_tutte_slices(graph)
    count = kirchhoff_count(graph)
    if tx(1) != count:
        raise AssertionError(f"T(1,1) = {tx(1)} but the matrix-tree theorem gives {count}")
    res = {"tx1": tx.to_list(), "t1y": ty.to_list(), "spanning_trees": count}
    lines = [f"T(x,1) = {tx.format('x')}", f"T(1,y) = {ty.format('y')}", f"spanning trees: {count}"]
    if count:
        bridge = graph_tutte_bridge(h, tx, ty)
        if not (bridge["interior_holds"] and bridge["exterior_holds"]):
            raise AssertionError("graph polynomials disagree with the hypergraph interior/exterior polynomials")
        res["interior"] = bridge["interior_expected"].to_list()
        res["exterior"] = bridge["exterior_expected"].to_list()
        lines += [f"I = {bridge['interior_expected'].format('ξ')}", f"X = {bridge['exterior_expected'].format('η')}"]
    return res, lines


def verb_dual(args, kind, obj):
    if kind != "rotation":
        raise Precondition("dual needs a rotation system (plane drawing)")
    rep = check_planar_duality(obj, args.side)
    for key in ("bijection", "interior_to_exterior", "exterior_to_interior", "double_dual_isomorphic"):
        if not rep[key]:
            raise AssertionError(f"planar duality check failed: {key}")
    res = {
        "dual": io.hypergraph_to_json(rep["dual"]),
        "count": rep["count"],
        "bijection": rep["bijection"],
        "interior_to_exterior": rep["interior_to_exterior"],
        "exterior_to_interior": rep["exterior_to_interior"],
        "double_dual_isomorphic": rep["double_dual_isomorphic"],
        "interior": rep["interior"].to_list(),
        "exterior": rep["exterior"].to_list(),
    }
    lines = ["dual hypergraph:"]
    for e in rep["dual"].edge_ids:
        lines.append(f"  {e}: {{{', '.join(sorted(map(str, rep['dual'].hyperedges[e])))}}}")
    lines += [f"hypertrees: {rep['count']} (dual {rep['dual_count']})",
              f"I = {rep['interior'].format('ξ')}   X = {rep['exterior'].format('η')}",
              "I of the dual equals X and X of the dual equals I: True",
              "double dual isomorphic: True"]
    return res, lines


def verb_trinity(args, kind, obj):
    from .trinity import COLORS, berman_determinant, berman_matrix, constituent_graph, dual_directed_graph

    t = as_trinity(kind, obj, args.outer)
    det = berman_determinant(t)
    graphs = {}
    for c in COLORS:
        g = constituent_graph(t, c)
        graphs[c] = {"class0": list(g.class0), "class1": list(g.class1), "edges": [list(e) for e in g.edges],
                     "balanced_dual": dual_directed_graph(t, c).is_balanced()}
    m = berman_matrix(t)
    res = {"trinity": t.to_json(), "points": len(t.points), "roots": list(t.roots),
           "constituent_graphs": graphs, "berman_matrix": m.to_json(), "berman_determinant": det}
    lines = [f"{t.n} white triangles, {len(t.points)} points, roots {', '.join(map(str, t.roots))}"]
    for c in COLORS:
        lines.append(f"G_{c}: {len(graphs[c]['edges'])} edges on {len(graphs[c]['class0'])}+{len(graphs[c]['class1'])} points")
    lines += ["", m.to_text(), "", f"|det| = {det}"]
    return res, lines


def verb_arborescences(args, kind, obj):
    from .trinity import COLORS, arborescence_count, arborescence_count_matrix_tree, dual_directed_graph

    t = as_trinity(kind, obj, args.outer)
    if args.root is not None:
        byname = {str(p): p for p in t.points}
        if args.root not in byname:
            raise io.BadInput(f"unknown root {args.root!r}")
        root = byname[args.root]
        jobs = [(COLORS[t.points[root]], root)]
    else:
        jobs = [(c, t.root(c)) for c in COLORS]
    counts, lines = [], []
    for c, root in jobs:
        d = dual_directed_graph(t, c)
        n1, n2 = arborescence_count(d, root), arborescence_count_matrix_tree(d, root)
        if n1 != n2:
            raise AssertionError(f"arborescence counts disagree at {root}: {n1} vs {n2}")
        counts.append({"color": c, "root": str(root), "count": n1, "matrix_tree": n2})
        lines.append(f"{c} rooted at {root}: {n1}")
    return {"counts": counts}, lines


def verb_determinant(args, kind, obj):
    from .trinity import berman_determinant, berman_matrix, enhanced_determinant

    t = as_trinity(kind, obj, args.outer)
    if not args.variant:
        det = berman_determinant(t)
        m = berman_matrix(t)
        return {"variant": "berman", "value": det, "matrix": m.to_json()}, [str(det)]
    ms = enhanced_determinant(t, args.variant)
    res = {"variant": args.variant, "value": ms.format(), "monomials": io.monomials_to_json(ms),
           "count": len(ms), "matrix": berman_matrix(t, args.variant).to_json()}
    return res, [ms.format(), f"{len(ms)} monomials"]


def verb_scan(args, kind, obj):
    graphs = []
    if args.random is not None:
        need_seed(args, "--random")
        if args.random < 0 or args.max_vertices < 2:
            raise io.BadInput("--random must be >= 0 and --max-vertices >= 2")
        rng = random.Random(args.seed)
        graphs = [random_connected_bipartite(rng, max_vertices=args.max_vertices,
                                             min_vertices=min(4, args.max_vertices))
                  for _ in range(args.random)]
    else:
        graphs = [as_bipartite(kind, obj)]
    reports, counterexamples, lines = [], [], []
    for k, g in enumerate(graphs):
        if not g.is_connected():
            raise Precondition("bipartite graph is disconnected")
        scan = abstract_duality_scan(g)
        gj = io.bipartite_to_json(g)
        reports.append({"graph": gj, "I0": scan["I0"].to_list(), "I1": scan["I1"].to_list(),
                        "equal": scan["equal"], "counts": list(scan["counts"])})
        lines.append(f"#{k}: {len(g.class0)}+{len(g.class1)} nodes, {len(g.edges)} edges, "
                     f"count {scan['counts'][0]}, I0 = {scan['I0'].format('ξ')}, equal: {scan['equal']}")
        if not scan["equal"]:
            counterexamples.append(gj)
    all_equal = not counterexamples
    lines.append(f"{len(reports)} graphs scanned; interior polynomials equal on all: {all_equal}")
    for gj in counterexamples:
        lines.append("counterexample fixture: " + json.dumps(gj))
    return {"reports": reports, "all_equal": all_equal, "counterexamples": counterexamples}, lines


def verb_selftest(args, kind, obj):
    from .acceptance import run_all

    results = run_all()
    res = {"criteria": [r.to_json() for r in results], "passed": all(r.passed for r in results)}
    return res, [r.line() for r in results]


HANDLERS = {
    "info": verb_info, "hypertrees": verb_hypertrees, "interior": verb_interior, "exterior": verb_exterior,
    "tutte-slices": verb_tutte_slices, "dual": verb_dual, "trinity": verb_trinity,
    "arborescences": verb_arborescences, "determinant": verb_determinant, "scan-conjecture": verb_scan,
    "selftest": verb_selftest,
}


def _dump_reproducer(argv, args, exc):
    info = {"argv": list(argv), "error": f"{type(exc).__name__}: {exc}"}
    try:
        _, obj, _ = load_source(args)
        if hasattr(obj, "to_json"):
            info["input"] = obj.to_json()
        elif isinstance(obj, Hypergraph):
            info["input"] = io.hypergraph_to_json(obj)
        elif isinstance(obj, BipartiteGraph):
            info["input"] = io.bipartite_to_json(obj)
        elif isinstance(obj, SetFunctionTable):
            info["input"] = io.setfunction_to_json(obj)
        elif isinstance(obj, LatticePointSet):
            info["input"] = io.pointset_to_json(obj)
    except Exception:
        pass
    print("INTERNAL INVARIANT BREACH; reproducer follows", file=sys.stderr)
    print(json.dumps(info, indent=2, default=str), file=sys.stderr)


def run(argv=None, out=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    out = out or sys.stdout
    args = None
    try:
        args = build_parser().parse_args(argv)
        if args.verb in ("selftest",) or (args.verb == "scan-conjecture" and args.random is not None):
            kind = obj = None
            source = "builtin" if args.verb == "selftest" else f"random:{args.random}:seed={args.seed}"
        else:
            kind, obj, source = load_source(args)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            result, lines = HANDLERS[args.verb](args, kind, obj)
        if args.json:
            report = io.make_report(args.verb, source, result)
            out.write(json.dumps(report, ensure_ascii=False, indent=2) + "\n")
        else:
            out.write("\n".join(lines) + "\n")
        if args.verb == "selftest" and not result["passed"]:
            return 3
        return 0
    except io.BadInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (AssertionError, RuntimeError) as exc:
        if args is not None:
            _dump_reproducer(argv, args, exc)
        else:
            print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # anything else is a bug, not a user error
        if args is not None:
            _dump_reproducer(argv, args, exc)
        return 3


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
