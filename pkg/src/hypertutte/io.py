"""JSON formats: parsing user files, serializing results, report envelopes and schemas."""

from __future__ import annotations

import json
import re

import jsonschema

from .core import BipartiteGraph, Hypergraph, MonomialSet, UniPolynomial
from .lattice import LatticePointSet, SetFunctionTable
from .planar import RotationSystem

REPORT_VERSION = 1


class BadInput(ValueError):
    """The input could not be parsed or does not match its schema."""


_ID = {"type": ["string", "integer"]}
_IDS = {"type": "array", "items": _ID}

HYPERGRAPH_SCHEMA = {
    "type": "object",
    "required": ["vertices", "hyperedges"],
    "properties": {
        "vertices": _IDS,
        "hyperedges": {"type": "array", "items": {
            "type": "object", "required": ["id", "members"],
            "properties": {"id": _ID, "members": _IDS}, "additionalProperties": False}},
        "name": {"type": "string"},
    },
    "additionalProperties": False,
}

BIPARTITE_SCHEMA = {
    "type": "object",
    "required": ["class0", "class1", "edges"],
    "properties": {
        "class0": _IDS, "class1": _IDS,
        "edges": {"type": "array", "items": {"type": "array", "items": _ID, "minItems": 2, "maxItems": 2}},
    },
    "additionalProperties": False,
}

SETFUNCTION_SCHEMA = {
    "type": "object",
    "required": ["ground", "values"],
    "properties": {
        "ground": _IDS,
        "values": {"oneOf": [
            {"type": "object", "additionalProperties": {"type": "integer"}},
            {"type": "array", "items": {"type": "integer"}},
        ]},
    },
    "additionalProperties": False,
}

POINTSET_SCHEMA = {
    "type": "object",
    "required": ["ground", "points"],
    "properties": {
        "ground": _IDS,
        "points": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
    },
    "additionalProperties": False,
}

ROTATION_SCHEMA = {
    "type": "object",
    "required": ["graph", "rotations"],
    "properties": {
        "graph": BIPARTITE_SCHEMA,
        "rotations": {"type": "object", "additionalProperties": {"type": "array", "items": {"type": "integer"}}},
    },
    "additionalProperties": False,
}

TRINITY_SCHEMA = {
    "type": "object",
    "required": ["white_triangles"],
    "properties": {
        "white_triangles": {"type": "array", "minItems": 1,
                            "items": {"type": "array", "items": _ID, "minItems": 3, "maxItems": 3}},
        "outer": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

HYPERTREE_SCHEMA = {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}}

_POLY = {"type": "array", "items": {"type": "integer"}}
_MONOMIALS = {"type": "array", "items": {
    "type": "object", "required": ["exponents", "coefficient"],
    "properties": {"exponents": {"type": "object", "additionalProperties": {"type": "integer"}},
                   "coefficient": {"type": "integer"}}}}

RESULT_SCHEMAS = {
    "info": {"type": "object", "required": ["kind"]},
    "hypertrees": {"type": "object", "required": ["ground", "points", "count"],
                   "properties": {"ground": _IDS, "count": {"type": "integer"},
                                  "points": {"type": "array", "items": _POLY}}},
    "interior": {"type": "object", "required": ["polynomial", "order", "variable"],
                 "properties": {"polynomial": _POLY, "order": _IDS}},
    "exterior": {"type": "object", "required": ["polynomial", "order", "variable"],
                 "properties": {"polynomial": _POLY, "order": _IDS}},
    "tutte-slices": {"type": "object", "required": ["tx1", "t1y", "spanning_trees"],
                     "properties": {"tx1": _POLY, "t1y": _POLY, "spanning_trees": {"type": "integer"}}},
    "dual": {"type": "object", "required": ["dual", "count", "bijection", "interior_to_exterior",
                                            "exterior_to_interior", "double_dual_isomorphic"],
             "properties": {"dual": HYPERGRAPH_SCHEMA}},
    "trinity": {"type": "object", "required": ["trinity", "points", "roots", "berman_determinant"],
                "properties": {"trinity": TRINITY_SCHEMA}},
    "arborescences": {"type": "object", "required": ["counts"],
                      "properties": {"counts": {"type": "array", "items": {
                          "type": "object", "required": ["color", "root", "count", "matrix_tree"]}}}},
    "determinant": {"type": "object", "required": ["variant", "value"],
                    "properties": {"monomials": _MONOMIALS, "value": {"type": ["integer", "string"]}}},
    "scan-conjecture": {"type": "object", "required": ["reports", "all_equal", "counterexamples"],
                        "properties": {"reports": {"type": "array", "items": {
                            "type": "object", "required": ["graph", "I0", "I1", "equal", "counts"],
                            "properties": {"graph": BIPARTITE_SCHEMA, "I0": _POLY, "I1": _POLY,
                                           "equal": {"type": "boolean"}}}}}},
    "selftest": {"type": "object", "required": ["criteria", "passed"],
                 "properties": {"criteria": {"type": "array", "items": {
                     "type": "object", "required": ["number", "name", "passed"]}}}},
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["version", "verb", "source", "result"],
    "properties": {
        "version": {"const": REPORT_VERSION},
        "verb": {"enum": sorted(RESULT_SCHEMAS)},
        "source": {"type": "string"},
        "result": {"type": "object"},
    },
    "additionalProperties": False,
}


def validate(obj, schema, what="input"):
    try:
        jsonschema.validate(obj, schema)
    except jsonschema.ValidationError as exc:
        raise BadInput(f"{what} does not match its schema: {exc.message}") from None


def validate_report(report: dict):
    validate(report, REPORT_SCHEMA, "report")
    validate(report["result"], RESULT_SCHEMAS[report["verb"]], f"{report['verb']} result")


def make_report(verb: str, source: str, result: dict) -> dict:
    report = {"version": REPORT_VERSION, "verb": verb, "source": source, "result": result}
    validate_report(report)
    return report


# ---------------------------------------------------------------------------
# objects -> JSON


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {"vertices": list(h.vertices),
            "hyperedges": [{"id": e, "members": sorted(h.hyperedges[e], key=str)} for e in h.edge_ids]}


def bipartite_to_json(g: BipartiteGraph) -> dict:
    return {"class0": list(g.class0), "class1": list(g.class1), "edges": [list(e) for e in g.edges]}


def setfunction_to_json(mu: SetFunctionTable) -> dict:
    return {"ground": list(mu.ground), "values": {str(m): int(v) for m, v in enumerate(mu.values)}}


def pointset_to_json(p: LatticePointSet) -> dict:
    return {"ground": list(p.ground), "points": [list(x) for x in p.points]}


def polynomial_to_json(p: UniPolynomial) -> list:
    return p.to_list()


def monomials_to_json(m: MonomialSet) -> list:
    out = []
    for exps, c in sorted(m.terms.items(), reverse=True):
        out.append({"exponents": {str(v): k for v, k in zip(m.variables, exps) if k},
                    "coefficient": int(c)})
    return out


# ---------------------------------------------------------------------------
# JSON -> objects


def parse_hypergraph(obj) -> Hypergraph:
    validate(obj, HYPERGRAPH_SCHEMA, "hypergraph")
    ids = [e["id"] for e in obj["hyperedges"]]
    if len(set(ids)) != len(ids):
        raise BadInput("hyperedge ids repeat")
    verts = set(obj["vertices"])
    edges = {}
    for e in obj["hyperedges"]:
        extra = set(e["members"]) - verts
        if extra:
            raise BadInput(f"hyperedge {e['id']!r} mentions unknown vertices {sorted(extra, key=str)}")
        edges[e["id"]] = e["members"]
    return Hypergraph(obj["vertices"], edges, obj.get("name", ""))


def parse_bipartite(obj) -> BipartiteGraph:
    validate(obj, BIPARTITE_SCHEMA, "bipartite graph")
    try:
        return BipartiteGraph(obj["class0"], obj["class1"], [tuple(e) for e in obj["edges"]])
    except ValueError as exc:
        raise BadInput(str(exc)) from None


_MASK = re.compile(r"^\d+$")


def _subset_mask(key: str, index: dict) -> int:
    """Keys are decimal bitmasks, or ids separated by commas/spaces (braces optional)."""
    if _MASK.match(key):
        return int(key)
    body = key.strip().strip("{}").strip()
    m = 0
    for tok in filter(None, re.split(r"[,\s]+", body)):
        if tok not in index:
            raise BadInput(f"unknown ground element {tok!r} in key {key!r}")
        m |= 1 << index[tok]
    return m


def parse_setfunction(obj) -> SetFunctionTable:
    validate(obj, SETFUNCTION_SCHEMA, "set function")
    ground = obj["ground"]
    n = len(ground)
    vals = obj["values"]
    if isinstance(vals, list):
        if len(vals) != 1 << n:
            raise BadInput(f"expected {1 << n} values, got {len(vals)}")
        return SetFunctionTable(ground, vals)
    index = {str(g): i for i, g in enumerate(ground)}
    table = {}
    for key, v in vals.items():
        m = _subset_mask(key, index)
        if m >= 1 << n:
            raise BadInput(f"bitmask {key} out of range")
        if m in table and table[m] != v:
            raise BadInput(f"subset {key!r} given twice with different values")
        table[m] = v
    table.setdefault(0, 0)
    if len(table) != 1 << n:
        raise BadInput(f"set function defines {len(table)} of {1 << n} subsets")
    return SetFunctionTable(ground, [table[m] for m in range(1 << n)])


def parse_pointset(obj) -> LatticePointSet:
    validate(obj, POINTSET_SCHEMA, "lattice point set")
    n = len(obj["ground"])
    if any(len(p) != n for p in obj["points"]):
        raise BadInput("point length differs from the ground set size")
    return LatticePointSet(obj["ground"], [tuple(p) for p in obj["points"]])


def parse_rotation_system(obj) -> RotationSystem:
    validate(obj, ROTATION_SCHEMA, "rotation system")
    gr = obj["graph"]
    nodes = {str(x): x for x in list(gr["class0"]) + list(gr["class1"])}
    rot = {}
    for key, r in obj["rotations"].items():
        if key not in nodes:
            raise BadInput(f"rotation given for unknown node {key!r}")
        rot[nodes[key]] = r
    try:
        return RotationSystem(gr["class0"], gr["class1"], [tuple(e) for e in gr["edges"]], rot)
    except (ValueError, KeyError, IndexError) as exc:
        raise BadInput(f"bad rotation system: {exc}") from None


def parse_trinity(obj):
    from .trinity import InvalidTrinity, Trinity

    validate(obj, TRINITY_SCHEMA, "trinity")
    try:
        return Trinity.from_white_triangles([tuple(t) for t in obj["white_triangles"]], outer=obj.get("outer", 0))
    except InvalidTrinity as exc:
        raise BadInput(f"bad trinity: {exc}") from None


def parse_hypertree(obj, h: Hypergraph) -> tuple:
    validate(obj, HYPERTREE_SCHEMA, "hypertree")
    keys = {str(e): e for e in h.edge_ids}
    if set(obj) != set(keys):
        raise BadInput("hypertree keys do not match the hyperedges")
    return tuple(obj[str(e)] for e in h.edge_ids)


def detect_kind(obj) -> str:
    if not isinstance(obj, dict):
        raise BadInput("top-level JSON value must be an object")
    if "hyperedges" in obj:
        return "hypergraph"
    if "class0" in obj:
        return "bipartite"
    if "rotations" in obj:
        return "rotation"
    if "white_triangles" in obj:
        return "trinity"
    if "values" in obj:
        return "setfunction"
    if "points" in obj:
        return "pointset"
    raise BadInput("cannot tell what kind of object this JSON describes")


PARSERS = {
    "hypergraph": parse_hypergraph,
    "bipartite": parse_bipartite,
    "rotation": parse_rotation_system,
    "trinity": parse_trinity,
    "setfunction": parse_setfunction,
    "pointset": parse_pointset,
}


def load(path: str):
    """Read a JSON file and return (kind, object)."""
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise BadInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise BadInput(f"{path} is not valid JSON: {exc}") from None
    kind = detect_kind(obj)
    return kind, PARSERS[kind](obj)
