"""Combinatorial plane embeddings of bipartite graphs and planar dual hypergraphs.

A rotation system lists, around every node, its incident edges in
counter-clockwise order.  Edges are indexed (so parallel edges are fine) and
always stored as (class0 node, class1 node).  A dart is (edge index, d) where
d = 0 runs class0 -> class1 and d = 1 runs back; its integer id is 2*index + d.

Face tracing: after arriving at y along edge i, leave y along the edge that
follows i in the rotation at y.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass

from .core import BipartiteGraph, DisjointSet, Hypergraph, canonical, sort_key
from .hypertree import as_dict, as_vector, enumerate_hypertrees, is_hypertree
from .lattice import LatticePointSet, exterior_poly, interior_poly


class NotPlane(ValueError):
    pass


class DualityBreach(AssertionError):
    """A reflected hypertree failed membership; this would contradict planar duality."""


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple  # darts (edge, direction) in walk order

    def __len__(self):
        return len(self.boundary)


class RotationSystem:
    def __init__(self, class0, class1, edges, rotations):
        self.class0 = canonical(class0)
        self.class1 = canonical(class1)
        c0, c1 = set(self.class0), set(self.class1)
        if c0 & c1:
            raise ValueError("colour classes overlap")
        self.edges = []
        for u, v in edges:
            if u in c1 and v in c0:
                u, v = v, u
            if u not in c0 or v not in c1:
                raise ValueError(f"edge ({u!r}, {v!r}) does not join the two classes")
            self.edges.append((u, v))
        self.edges = tuple(self.edges)
        self.rotations = {x: tuple(rotations.get(x, ())) for x in self.nodes}
        for x in self.nodes:
            incident = sorted(i for i, (u, v) in enumerate(self.edges) if x in (u, v))
            if sorted(self.rotations[x]) != incident:
                raise ValueError(f"rotation at {x!r} is not a cyclic order of its incident edges")
        self._pos = {x: {i: k for k, i in enumerate(r)} for x, r in self.rotations.items()}

    # -- construction helpers

    @classmethod
    def from_neighbor_rotations(cls, g: BipartiteGraph, rot: dict) -> "RotationSystem":
        """Build from rotations listing neighbours (simple graphs only)."""
        index = {e: i for i, e in enumerate(g.edges)}
        rotations = {}
        for x in g.nodes:
            ids = []
            for y in rot[x]:
                ids.append(index[(x, y)] if (x, y) in index else index[(y, x)])
            rotations[x] = ids
        return cls(g.class0, g.class1, g.edges, rotations)

    @classmethod
    def from_coordinates(cls, g: BipartiteGraph, coords: dict) -> "RotationSystem":
        """Counter-clockwise rotations of a straight-line drawing."""
        rot = {}
        for x in g.nodes:
            x0, y0 = coords[x]
            rot[x] = sorted(g.neighbors(x), key=lambda y: math.atan2(coords[y][1] - y0, coords[y][0] - x0))
        return cls.from_neighbor_rotations(g, rot)

    # -- basic structure

    @property
    def nodes(self) -> tuple:
        return self.class0 + self.class1

    @property
    def graph(self) -> BipartiteGraph:
        """Underlying simple bipartite graph (parallel edges collapse)."""
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return BipartiteGraph(self.class0, self.class1, self.edges)

    def degree(self, x) -> int:
        return len(self.rotations[x])

    def head(self, dart):
        i, d = dart
        return self.edges[i][1 - d]

    def tail(self, dart):
        i, d = dart
        return self.edges[i][d]

    def leaving(self, x, i):
        """Dart leaving node x along edge i."""
        u, v = self.edges[i]
        return (i, 0) if x == u else (i, 1)

    def succ(self, x, i):
        r = self.rotations[x]
        return r[(self._pos[x][i] + 1) % len(r)]

    def next_dart(self, dart):
        i, _ = dart
        y = self.head(dart)
        return self.leaving(y, self.succ(y, i))

    def is_connected(self) -> bool:
        ds = DisjointSet(self.nodes)
        for u, v in self.edges:
            ds.union(u, v)
        return len(self.nodes) > 0 and ds.count() == 1

    def faces(self) -> list[Face]:
        """Orbits of the next-dart map; each face id is its lowest dart id."""
        seen = set()
        out = []
        for i in range(len(self.edges)):
            for d in (0, 1):
                start = (i, d)
                if start in seen:
                    continue
                walk = []
                dart = start
                while dart not in seen:
                    seen.add(dart)
                    walk.append(dart)
                    dart = self.next_dart(dart)
                k = min(range(len(walk)), key=lambda j: 2 * walk[j][0] + walk[j][1])
                walk = walk[k:] + walk[:k]
                out.append(Face(2 * walk[0][0] + walk[0][1], tuple(walk)))
        return sorted(out, key=lambda f: f.id)

    def face_of(self) -> dict:
        return {dart: f.id for f in self.faces() for dart in f.boundary}

    def euler_characteristic(self) -> int:
        n_faces = len(self.faces()) if self.edges else 1
        return len(self.nodes) - len(self.edges) + n_faces

    def is_plane(self) -> bool:
        return self.is_connected() and self.euler_characteristic() == 2

    def genus(self) -> int:
        return (2 - self.euler_characteristic()) // 2

    def swap(self) -> "RotationSystem":
        """Same embedding with the colour classes exchanged."""
        return RotationSystem(self.class1, self.class0, [(v, u) for u, v in self.edges], self.rotations)

    def corners(self, x) -> list[tuple]:
        """(edge i, face) for each angle at x, the angle following edge i counter-clockwise."""
        fo = self.face_of()
        return [(i, fo[self.leaving(x, self.succ(x, i))]) for i in self.rotations[x]]

    def to_json(self) -> dict:
        return {
            "graph": {"class0": list(self.class0), "class1": list(self.class1),
                      "edges": [list(e) for e in self.edges]},
            "rotations": {str(x): list(r) for x, r in self.rotations.items()},
        }

    def __repr__(self):
        return f"RotationSystem({len(self.nodes)} nodes, {len(self.edges)} edges)"


def faces(rs: RotationSystem) -> list[Face]:
    return rs.faces()


def face_name(fid: int) -> str:
    return f"f{fid}"


def _class_nodes(rs: RotationSystem, hyperedge_class: int):
    if hyperedge_class not in (0, 1):
        raise ValueError("hyperedge_class must be 0 or 1")
    return rs.class0 if hyperedge_class == 0 else rs.class1


def _require_plane(rs: RotationSystem):
    if not rs.is_connected():
        raise NotPlane("graph is disconnected")
    if rs.euler_characteristic() != 2:
        raise NotPlane(f"rotation system has genus {rs.genus()}")


def drawn_hypergraph(rs: RotationSystem, hyperedge_class: int) -> Hypergraph:
    """The hypergraph whose bipartite graph is drawn: chosen class as hyperedges."""
    verts = rs.class1 if hyperedge_class == 0 else rs.class0
    members = {x: set() for x in _class_nodes(rs, hyperedge_class)}
    for u, v in rs.edges:
        if hyperedge_class == 0:
            members[u].add(v)
        else:
            members[v].add(u)
    return Hypergraph(verts, members)


def planar_dual_hypergraph(rs: RotationSystem, hyperedge_class: int = 0) -> Hypergraph:
    """Same hyperedges, with the regions as vertices; a hyperedge contains the regions it touches."""
    _require_plane(rs)
    members = {x: {face_name(f) for _, f in rs.corners(x)} for x in _class_nodes(rs, hyperedge_class)}
    verts = [face_name(f.id) for f in rs.faces()]
    return Hypergraph(verts, members)


def planar_dual_rotation_system(rs: RotationSystem, hyperedge_class: int = 0) -> RotationSystem:
    """Plane drawing of bip of the planar dual: one edge per angle at a hyperedge node.

    Parallel edges appear when a hyperedge touches a region at several angles.
    """
    _require_plane(rs)
    hedges = _class_nodes(rs, hyperedge_class)
    new_edges = []
    rot = {}
    corner_edge = {}
    for x in hedges:
        ids = []
        for i, f in rs.corners(x):
            corner_edge[(x, i)] = len(new_edges)
            ids.append(len(new_edges))
            new_edges.append((x, face_name(f)))
        rot[x] = ids
    walks = {}
    for face in rs.faces():
        seq = []
        for dart in face.boundary:
            y = rs.head(dart)
            if (y, dart[0]) in corner_edge:
                seq.append(corner_edge[(y, dart[0])])
        walks[face_name(face.id)] = seq
    # the tracing rule keeps each face on the right, so walks run clockwise
    # around it and the counter-clockwise rotation is the reversed walk
    face_nodes = [face_name(f.id) for f in rs.faces()]
    for fname in face_nodes:
        rot[fname] = walks[fname][::-1]
    out = RotationSystem(hedges, face_nodes, new_edges, rot)
    if not out.is_plane():
        raise RuntimeError("dual drawing failed the Euler check")
    return out


def drawing_degrees(rs: RotationSystem, hyperedge_class: int) -> dict:
    return {x: rs.degree(x) for x in _class_nodes(rs, hyperedge_class)}


def membership_signature(h: Hypergraph) -> Counter:
    """Multiset over vertices of the set of hyperedges containing them."""
    return Counter(frozenset(e for e, m in h.hyperedges.items() if v in m) for v in h.vertices)


def isomorphic_fixing_hyperedges(h1: Hypergraph, h2: Hypergraph) -> bool:
    return set(h1.edge_ids) == set(h2.edge_ids) and membership_signature(h1) == membership_signature(h2)


def double_dual(rs: RotationSystem, hyperedge_class: int = 0) -> Hypergraph:
    return planar_dual_hypergraph(planar_dual_rotation_system(rs, hyperedge_class), 0)


def dual_hypertree(rs: RotationSystem, hyperedge_class: int, f, dual: Hypergraph | None = None) -> tuple:
    """f*(e) = deg(e) - 1 - f(e), with deg counted in the drawing; checked for membership.

    For a simple bipartite drawing deg(e) is just |e|.
    """
    h = drawn_hypergraph(rs, hyperedge_class)
    if dual is None:
        dual = planar_dual_hypergraph(rs, hyperedge_class)
    deg = drawing_degrees(rs, hyperedge_class)
    x = as_dict(h, f)
    fstar = {e: deg[e] - 1 - c for e, c in x.items()}
    if not is_hypertree(dual, fstar):
        raise DualityBreach(f"reflection of {as_vector(h, f)} is not a hypertree of the planar dual")
    return as_vector(dual, fstar)


def check_planar_duality(rs: RotationSystem, hyperedge_class: int = 0) -> dict:
    """Reflection bijects hypertrees of H onto those of H*, and I, X swap."""
    _require_plane(rs)
    h = drawn_hypergraph(rs, hyperedge_class)
    dual = planar_dual_hypergraph(rs, hyperedge_class)
    deg = drawing_degrees(rs, hyperedge_class)
    q, qs = enumerate_hypertrees(h), enumerate_hypertrees(dual)
    reflected = set()
    for f in q.as_dicts():
        reflected.add(tuple(deg[e] - 1 - f[e] for e in dual.edge_ids))
    i_h, x_h = interior_poly(q), exterior_poly(q)
    i_s, x_s = interior_poly(qs), exterior_poly(qs)
    dd = double_dual(rs, hyperedge_class)
    return {
        "count": len(q),
        "dual_count": len(qs),
        "bijection": reflected == set(qs.points),
        "interior_to_exterior": i_s == x_h,
        "exterior_to_interior": x_s == i_h,
        "double_dual_isomorphic": isomorphic_fixing_hyperedges(dd, h),
        "interior": i_h,
        "exterior": x_h,
        "dual": dual,
    }


# ---------------------------------------------------------------------------
# random plane bipartite graphs


def random_plane_bipartite(n_nodes: int, extra_edges: int, rng: random.Random) -> RotationSystem:
    """A random connected plane bipartite graph without parallel edges.

    Grows a random tree, then repeatedly joins two opposite-class corners of one
    face, which keeps the drawing planar.
    """
    if n_nodes < 2:
        raise ValueError("need at least two nodes")
    parent = {0: None}
    side = {0: 0}
    edges = []
    rot: dict[int, list] = {0: []}
    for x in range(1, n_nodes):
        p = rng.randrange(x)
        side[x] = 1 - side[p]
        i = len(edges)
        edges.append((p, x) if side[p] == 0 else (x, p))
        rot[p].insert(rng.randint(0, len(rot[p])), i)
        rot[x] = [i]
    c0 = [x for x in side if side[x] == 0]
    c1 = [x for x in side if side[x] == 1]
    rs = RotationSystem(c0, c1, edges, rot)
    present = set(edges)
    for _ in range(extra_edges):
        options = []
        for face in rs.faces():
            angles = [(rs.head(d), d[0]) for d in face.boundary]  # arrive at node along edge
            for a in range(len(angles)):
                for b in range(a + 1, len(angles)):
                    (x, i), (y, j) = angles[a], angles[b]
                    if side[x] == side[y]:
                        continue
                    pair = (x, y) if side[x] == 0 else (y, x)
                    if pair not in present:
                        options.append((x, i, y, j, pair))
        if not options:
            break
        x, i, y, j, pair = rng.choice(options)
        k = len(rs.edges)
        new_rot = {z: list(r) for z, r in rs.rotations.items()}
        for z, after in ((x, i), (y, j)):
            r = new_rot[z]
            r.insert(r.index(after) + 1, k)
        present.add(pair)
        rs = RotationSystem(rs.class0, rs.class1, list(rs.edges) + [pair], new_rot)
        assert rs.is_plane()
    return rs


def k33_rotation_system() -> RotationSystem:
    g = BipartiteGraph([0, 1, 2], [3, 4, 5], [(u, v) for u in range(3) for v in range(3, 6)])
    return RotationSystem.from_neighbor_rotations(g, {x: g.neighbors(x) for x in g.nodes})
