"""Trinities: three-coloured triangulations of the sphere with checkerboard triangles.

Colours are indexed 0, 1, 2 for R, E, V.  A white triangle is a triple
(r, e, v) of points; so is a black one.  ``across[(t, c)]`` is the black
triangle sharing with white triangle t the side opposite its colour-c corner.

Around a point, white and black triangles alternate.  Rotations are read off by
stepping from a white triangle into a black one and back out into the next
white one:

    at an R point:  leave across the side opposite E, return across the side opposite V
    at an E point:  leave opposite V, return opposite R
    at a V point:   leave opposite R, return opposite E

These orbits give the rotation systems of the three constituent graphs.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass

import sympy

from .core import Hypergraph, MonomialSet, canonical, permutation_sign, sort_key
from .hypertree import as_vector, enumerate_hypertrees, is_hypertree, realize
from .planar import RotationSystem, face_name

R, E, V = 0, 1, 2
COLORS = "REV"
_LEAVE_RETURN = {R: (E, V), E: (V, R), V: (R, E)}
# for colour c, the constituent graph G_c joins these two colours (class0, class1)
_CLASSES = {R: (E, V), E: (V, R), V: (R, E)}


def color_index(c) -> int:
    if isinstance(c, int):
        if c not in (0, 1, 2):
            raise ValueError(f"bad colour {c}")
        return c
    key = str(c).strip().upper()[:1]
    if key not in COLORS:
        raise ValueError(f"bad colour {c!r}")
    return COLORS.index(key)


class InvalidTrinity(ValueError):
    pass


class Trinity:
    def __init__(self, white, black, across: dict, outer: int = 0):
        self.white = tuple(tuple(t) for t in white)
        self.black = tuple(tuple(b) for b in black)
        self.across = {(int(t), int(c)): int(b) for (t, c), b in across.items()}
        self.outer = int(outer)
        self.points = {}
        for tri in self.white + self.black:
            for c, p in enumerate(tri):
                if self.points.setdefault(p, c) != c:
                    raise InvalidTrinity(f"point {p!r} carries two colours")
        self.validate()

    # -- construction

    @classmethod
    def from_white_triangles(cls, white, outer: int = 0) -> "Trinity":
        """Rebuild the black triangles from the white ones (must be unique)."""
        found = black_completions(white, limit=2)
        if not found:
            raise InvalidTrinity("white triangles do not close up into a sphere")
        if len(found) > 1:
            raise InvalidTrinity("white triangles admit several black completions; supply them explicitly")
        black, across = found[0]
        return cls(white, black, across, outer)

    @classmethod
    def from_plane_bipartite(cls, rs: RotationSystem, outer: int = 0) -> "Trinity":
        """Trinity of a plane bipartite graph: class0 nodes are E points, class1 nodes V
        points and faces R points.  Triangles are darts; class0 -> class1 darts are white."""
        if not rs.is_plane():
            raise InvalidTrinity("rotation system is not plane")
        taken = set(rs.nodes)
        fo = rs.face_of()
        fname = {}
        for f in sorted(set(fo.values())):
            name = face_name(f)
            while name in taken:
                name = "_" + name
            fname[f] = name
        nxt, prv = {}, {}
        for face in rs.faces():
            b = face.boundary
            for k, d in enumerate(b):
                nxt[d] = b[(k + 1) % len(b)]
                prv[d] = b[k - 1]
        m = len(rs.edges)
        white = [(fname[fo[(i, 0)]], *rs.edges[i]) for i in range(m)]
        black = [(fname[fo[(i, 1)]], *rs.edges[i]) for i in range(m)]
        across = {}
        for i in range(m):
            across[(i, R)] = i  # reverse dart
            across[(i, E)] = nxt[(i, 0)][0]  # shares the r-v side
            across[(i, V)] = prv[(i, 0)][0]  # shares the r-e side
        return cls(white, black, across, outer)

    # -- structure

    @property
    def n(self) -> int:
        return len(self.white)

    def points_of(self, c) -> tuple:
        c = color_index(c)
        return canonical(p for p, k in self.points.items() if k == c)

    @property
    def roots(self) -> tuple:
        return self.white[self.outer]

    def root(self, c):
        return self.roots[color_index(c)]

    def whites_at(self, p) -> list[int]:
        c = self.points[p]
        return [t for t, tri in enumerate(self.white) if tri[c] == p]

    def _across_inv(self):
        inv = {}
        for (t, c), b in self.across.items():
            inv[(b, c)] = t
        return inv

    def rotation_at(self, p) -> list[int]:
        """White triangles around p, in orbit order starting from the lowest id."""
        q = self.points[p]
        c1, c2 = _LEAVE_RETURN[q]
        inv = self._across_inv()
        start = min(self.whites_at(p))
        orbit = [start]
        t = inv[(self.across[(start, c1)], c2)]
        while t != start:
            orbit.append(t)
            t = inv[(self.across[(t, c1)], c2)]
            if len(orbit) > self.n:
                break
        return orbit

    def validate(self):
        n = self.n
        if not n:
            raise InvalidTrinity("no white triangles")
        if len(self.black) != n:
            raise InvalidTrinity("white and black triangle counts differ")
        if not 0 <= self.outer < n:
            raise InvalidTrinity("outer triangle index out of range")
        for c in (R, E, V):
            image = [self.across.get((t, c)) for t in range(n)]
            if None in image or sorted(image) != list(range(n)):
                raise InvalidTrinity(f"side map for colour {COLORS[c]} is not a bijection")
            for t, b in enumerate(image):
                w, k = self.white[t], self.black[b]
                if any(w[j] != k[j] for j in range(3) if j != c):
                    raise InvalidTrinity(f"white {t} and black {b} do not share the side opposite {COLORS[c]}")
        for p in self.points:
            if sorted(self.rotation_at(p)) != sorted(self.whites_at(p)):
                raise InvalidTrinity(f"triangles around {p!r} do not form a single cycle")
        # connectivity of the triangle adjacency
        seen = {("w", 0)}
        queue = deque(seen)
        inv = self._across_inv()
        while queue:
            kind, k = queue.popleft()
            nbrs = ([("b", self.across[(k, c)]) for c in range(3)] if kind == "w"
                    else [("w", inv[(k, c)]) for c in range(3)])
            for x in nbrs:
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
        if len(seen) != 2 * n:
            raise InvalidTrinity("triangulation is disconnected")
        if len(self.points) != n + 2:
            raise InvalidTrinity(f"{len(self.points)} points but {n} white triangles; the sphere needs n + 2")

    def point_count_identity(self) -> bool:
        return len(self.points) == self.n + 2

    def with_outer(self, outer: int) -> "Trinity":
        return Trinity(self.white, self.black, self.across, outer)

    def to_json(self) -> dict:
        return {"white_triangles": [list(t) for t in self.white], "outer": self.outer}

    def __repr__(self):
        return f"Trinity({self.n} white triangles, {len(self.points)} points)"


def black_completions(white, limit: int | None = None) -> list:
    """All ways to pair sides of the white triangles into black triangles forming a sphere.

    A black triangle (r, e, v) takes its e-v side from a white t_R, its r-v side
    from t_E and its r-e side from t_V, so it needs t_E.r = t_V.r,
    t_R.e = t_V.e and t_R.v = t_E.v.
    """
    white = [tuple(t) for t in white]
    n = len(white)
    used_e, used_v = [False] * n, [False] * n
    black, across = [], {}
    out = []

    def rec(k):
        if limit is not None and len(out) >= limit:
            return
        if k == n:
            try:
                Trinity(white, list(black), dict(across))
            except InvalidTrinity:
                return
            out.append((list(black), dict(across)))
            return
        r_, e_, v_ = white[k]
        for te in range(n):
            if used_e[te] or white[te][V] != v_:
                continue
            for tv in range(n):
                if used_v[tv] or white[tv][E] != e_ or white[tv][R] != white[te][R]:
                    continue
                b = len(black)
                black.append((white[te][R], e_, v_))
                across[(k, R)], across[(te, E)], across[(tv, V)] = b, b, b
                used_e[te] = used_v[tv] = True
                rec(k + 1)
                used_e[te] = used_v[tv] = False
                black.pop()
                del across[(k, R)], across[(te, E)], across[(tv, V)]

    rec(0)
    return out


# ---------------------------------------------------------------------------
# plane bipartite cubic graphs


def three_color(rs: RotationSystem, outer: int = 0) -> Trinity:
    """Trinity dual to a plane bipartite cubic graph (class0 black, class1 white).

    Faces get colours in Z/3 so that, along every edge directed black -> white,
    the face on the right is one more than the face on the left.
    """
    for x in rs.nodes:
        if rs.degree(x) != 3:
            raise InvalidTrinity(f"node {x!r} does not have degree 3")
    if not rs.is_plane():
        raise InvalidTrinity("rotation system is not plane")
    fo = rs.face_of()
    constraints: dict = {}
    for i in range(len(rs.edges)):
        right, left = fo[(i, 0)], fo[(i, 1)]
        constraints.setdefault(right, []).append((left, -1))
        constraints.setdefault(left, []).append((right, +1))
    faces = sorted(constraints)
    color = {faces[0]: 0}
    queue = deque([faces[0]])
    while queue:
        f = queue.popleft()
        for g, step in constraints[f]:
            want = (color[f] + step) % 3
            if g not in color:
                color[g] = want
                queue.append(g)
            elif color[g] != want:
                raise InvalidTrinity("face colouring is inconsistent")
    names = {f: f"{COLORS[color[f]].lower()}{face_name(f)}" for f in faces}
    blacks, whites = list(rs.class0), list(rs.class1)
    bindex = {b: k for k, b in enumerate(blacks)}

    def triangle(x):
        tri = [None, None, None]
        for _, f in rs.corners(x):
            if tri[color[f]] is not None:
                raise InvalidTrinity(f"node {x!r} sees a colour twice")
            tri[color[f]] = names[f]
        return tuple(tri)

    white = [triangle(w) for w in whites]
    black = [triangle(b) for b in blacks]
    across = {}
    for i, (b, w) in enumerate(rs.edges):
        missing = 3 - color[fo[(i, 0)]] - color[fo[(i, 1)]]
        across[(whites.index(w), missing)] = bindex[b]
    return Trinity(white, black, across, outer)


def cubic_rotation_system(t: Trinity) -> RotationSystem:
    """The plane bipartite cubic graph dual to a trinity (black triangles in class0).

    Nodes are named b<k> and w<k> after the triangle indices, zero-padded so
    that their text order is the index order.
    """
    width = len(str(t.n - 1))
    bn = [f"b{k:0{width}d}" for k in range(t.n)]
    wn = [f"w{k:0{width}d}" for k in range(t.n)]
    edges, rot = [], {}
    for w in range(t.n):
        for c in (R, E, V):
            edges.append((bn[t.across[(w, c)]], wn[w]))
    eid = {(w, c): 3 * w + c for w in range(t.n) for c in (R, E, V)}
    for w in range(t.n):
        rot[wn[w]] = [eid[(w, V)], eid[(w, R)], eid[(w, E)]]
    inv = t._across_inv()
    for b in range(t.n):
        rot[bn[b]] = [eid[(inv[(b, V)], V)], eid[(inv[(b, E)], E)], eid[(inv[(b, R)], R)]]
    rs = RotationSystem(bn, wn, edges, rot)
    if not rs.is_plane():
        rot = {x: r[::-1] for x, r in rot.items()}
        rs = RotationSystem(rs.class0, rs.class1, edges, rot)
    if not rs.is_plane():
        raise RuntimeError("dual cubic graph is not plane")
    return rs


def theta_trinity() -> Trinity:
    return Trinity([("r", "e", "v")], [("r", "e", "v")], {(0, R): 0, (0, E): 0, (0, V): 0})


def side_partitions(t: Trinity) -> list:
    """For each colour, the partition of white triangle ids by their point of that colour."""
    out = []
    for c in (R, E, V):
        groups = {}
        for k, tri in enumerate(t.white):
            groups.setdefault(tri[c], set()).add(k)
        out.append(frozenset(frozenset(g) for g in groups.values()))
    return out


# ---------------------------------------------------------------------------
# constituent graphs and directed duals


def constituent_graph(t: Trinity, c) -> RotationSystem:
    """G_c: the other two colours' points, one edge per white triangle (edge id = triangle id)."""
    c = color_index(c)
    a, b = _CLASSES[c]
    edges = [(tri[a], tri[b]) for tri in t.white]
    rot = {p: t.rotation_at(p) for p in t.points if t.points[p] in (a, b)}
    rs = RotationSystem(t.points_of(a), t.points_of(b), edges, rot)
    if not rs.is_plane():
        raise InvalidTrinity(f"constituent graph {COLORS[c]} is not plane")
    return rs


def constituent_graphs(t: Trinity) -> tuple:
    return tuple(constituent_graph(t, c) for c in (R, E, V))


def hyperedge_color(c) -> int:
    """Colour of the hyperedges used with colour c: R -> E, E -> V, V -> R."""
    return _CLASSES[color_index(c)][0]


def variant_hypergraph(t: Trinity, x, y) -> Hypergraph:
    """Hyperedges are the x points, vertices the y points, joined through white triangles."""
    x, y = color_index(x), color_index(y)
    if x == y:
        raise ValueError("need two different colours")
    members = {p: set() for p in t.points_of(x)}
    for tri in t.white:
        members[tri[x]].add(tri[y])
    return Hypergraph(t.points_of(y), members)


def constituent_hypergraph(t: Trinity, c) -> Hypergraph:
    a, b = _CLASSES[color_index(c)]
    return variant_hypergraph(t, a, b)


@dataclass(frozen=True)
class DirectedGraph:
    nodes: tuple
    arcs: tuple  # (tail, head, id)

    def in_degree(self, x) -> int:
        return sum(1 for _, h, _ in self.arcs if h == x)

    def out_degree(self, x) -> int:
        return sum(1 for tl, _, _ in self.arcs if tl == x)

    def is_balanced(self) -> bool:
        return all(self.in_degree(x) == self.out_degree(x) for x in self.nodes)


def dual_directed_graph(t: Trinity, c) -> DirectedGraph:
    """G*_c on the colour-c points: arc t runs from the black triangle across t's
    colour-c side to t itself."""
    c = color_index(c)
    arcs = tuple((t.black[t.across[(k, c)]][c], tri[c], k) for k, tri in enumerate(t.white))
    return DirectedGraph(t.points_of(c), arcs)


def is_arborescence(d: DirectedGraph, root, choice: dict) -> bool:
    """choice maps each non-root node to an arc id pointing into it."""
    arcs = {a[2]: a for a in d.arcs}
    if set(choice) != set(d.nodes) - {root}:
        return False
    parent = {}
    for x, k in choice.items():
        if k not in arcs or arcs[k][1] != x or arcs[k][0] == x:
            return False
        parent[x] = arcs[k][0]
    for x in parent:
        seen = set()
        while x != root:
            if x in seen:
                return False
            seen.add(x)
            x = parent[x]
    return True


def arborescences(d: DirectedGraph, root):
    """Spanning arborescences rooted at ``root`` (one arc into every other node)."""
    others = [x for x in d.nodes if x != root]
    incoming = {x: sorted(k for tl, h, k in d.arcs if h == x and tl != x) for x in others}
    for combo in itertools.product(*(incoming[x] for x in others)):
        choice = dict(zip(others, combo))
        if is_arborescence(d, root, choice):
            yield choice


def arborescence_count(d: DirectedGraph, root) -> int:
    return sum(1 for _ in arborescences(d, root))


def arborescence_count_matrix_tree(d: DirectedGraph, root) -> int:
    """Directed matrix-tree theorem: in-degree Laplacian with the root row and column removed."""
    others = [x for x in d.nodes if x != root]
    if not others:
        return 1
    idx = {x: i for i, x in enumerate(others)}
    lap = sympy.zeros(len(others), len(others))
    for tl, h, _ in d.arcs:
        if tl == h or h == root:
            continue
        lap[idx[h], idx[h]] += 1
        if tl != root:
            lap[idx[tl], idx[h]] -= 1
    return int(lap.det(method="bareiss"))


# ---------------------------------------------------------------------------
# Berman matrix, Tutte matchings and enhanced determinants


def matrix_rows(t: Trinity) -> list:
    roots = set(t.roots)
    return [p for c in (R, E, V) for p in t.points_of(c) if p not in roots]


def matrix_cols(t: Trinity) -> list:
    return [k for k in range(t.n) if k != t.outer]


@dataclass
class MonomialMatrix:
    rows: list
    cols: list
    entries: dict  # (row, col) -> 1 or variable name

    def as_sympy(self) -> sympy.Matrix:
        m = sympy.zeros(len(self.rows), len(self.cols))
        for (p, k), val in self.entries.items():
            m[self.rows.index(p), self.cols.index(k)] = 1 if val == 1 else sympy.Symbol(str(val))
        return m

    def to_text(self) -> str:
        cells = [[""] + [f"t{k}" for k in self.cols]]
        for p in self.rows:
            cells.append([str(p)] + [str(self.entries.get((p, k), 0)) for k in self.cols])
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    def to_json(self) -> dict:
        return {"rows": [str(p) for p in self.rows], "cols": self.cols,
                "entries": [[str(self.entries.get((p, k), 0)) for k in self.cols] for p in self.rows]}


VARIANTS = ("e-v", "v-r", "r-e", "v-e", "r-v", "e-r", "e-v-r")


def variant_pairs(variant: str) -> list[tuple[int, int]]:
    """(x, y) pairs: the x point of a triangle is written in rows of colour y."""
    parts = [color_index(p) for p in variant.lower().replace("→", "-").replace(">", "").split("-") if p]
    if len(parts) == 2 and parts[0] != parts[1]:
        return [tuple(parts)]
    if sorted(parts) == [0, 1, 2]:
        return [(parts[k], parts[(k + 1) % 3]) for k in range(3)]
    raise ValueError(f"unknown variant {variant!r}")


def berman_matrix(t: Trinity, variant: str | None = None) -> MonomialMatrix:
    rows, cols = matrix_rows(t), matrix_cols(t)
    put = {y: x for x, y in variant_pairs(variant)} if variant else {}
    entries = {}
    for p in rows:
        c = t.points[p]
        for k in cols:
            tri = t.white[k]
            if tri[c] == p:
                entries[(p, k)] = tri[put[c]] if c in put else 1
    return MonomialMatrix(rows, cols, entries)


def tutte_matchings(t: Trinity):
    """Bijections from non-root points to non-outer white triangles containing them.

    Yields (matching dict, sign of the permutation w.r.t. the row/column orders).
    """
    rows, cols = matrix_rows(t), matrix_cols(t)
    col_pos = {k: i for i, k in enumerate(cols)}
    options = [[k for k in cols if t.white[k][t.points[p]] == p] for p in rows]
    used = set()
    chosen = []

    def rec(i):
        if i == len(rows):
            perm = [col_pos[k] for k in chosen]
            yield dict(zip(rows, chosen)), permutation_sign(perm)
            return
        for k in options[i]:
            if k not in used:
                used.add(k)
                chosen.append(k)
                yield from rec(i + 1)
                chosen.pop()
                used.discard(k)

    yield from rec(0)


class SignMismatch(AssertionError):
    pass


def _uniform_sign(signs) -> int:
    signs = set(signs)
    if len(signs) > 1:
        raise SignMismatch("expansion terms carry both signs")
    return signs.pop() if signs else 1


def berman_determinant(t: Trinity) -> int:
    """|det| of the point/triangle incidence matrix, from the matching expansion."""
    signs = [s for _, s in tutte_matchings(t)]
    _uniform_sign(signs)
    return len(signs)


def berman_determinant_sympy(t: Trinity) -> int:
    m = berman_matrix(t).as_sympy()
    return int(m.det(method="bareiss")) if m.shape[0] else 1


def enhanced_determinant(t: Trinity, variant: str = "e-v") -> MonomialSet:
    """Symbolic determinant of the decorated matrix; the common sign is dropped."""
    pairs = variant_pairs(variant)
    variables = [p for x, _ in pairs for p in t.points_of(x)]
    pos = {p: i for i, p in enumerate(variables)}
    put = {y: x for x, y in pairs}
    terms = Counter()
    signs = []
    for match, sign in tutte_matchings(t):
        exps = [0] * len(variables)
        for p, k in match.items():
            c = t.points[p]
            if c in put:
                exps[pos[t.white[k][put[c]]]] += 1
        terms[tuple(exps)] += sign
        signs.append(sign)
    s = _uniform_sign(signs)
    return MonomialSet(variables, {k: s * v for k, v in terms.items()})


def variant_hypertrees(t: Trinity, x, y):
    return enumerate_hypertrees(variant_hypergraph(t, x, y))


# ---------------------------------------------------------------------------
# arborescences and hypertrees


def _check_arborescence(t: Trinity, c, A: dict):
    d = dual_directed_graph(t, c)
    if not is_arborescence(d, t.root(c), A):
        raise ValueError("not a spanning arborescence rooted at the colour's root")


def arborescence_to_hypertree(t: Trinity, c, A: dict) -> tuple:
    """f_A(x) = (degree of x in the dual tree A*) - 1 on the hyperedge points of colour c's class."""
    c = color_index(c)
    _check_arborescence(t, c, A)
    h = hyperedge_color(c)
    dual_tree = set(range(t.n)) - set(A.values())
    deg = Counter(t.white[k][h] for k in dual_tree)
    hg = constituent_hypergraph(t, c)
    return tuple(deg[x] - 1 for x in hg.edge_ids)


def _rooted(t: Trinity, c, tree: set, root):
    """Depths of nodes in the undirected tree spanned by the arcs in ``tree``."""
    adj = {}
    for k in tree:
        tl, hd = t.black[t.across[(k, c)]][c], t.white[k][c]
        adj.setdefault(tl, []).append((hd, k))
        adj.setdefault(hd, []).append((tl, k))
    depth = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y, _ in sorted(adj.get(x, []), key=lambda yk: yk[1]):
            if y not in depth:
                depth[y] = depth[x] + 1
                queue.append(y)
    return depth


def _lambda_measure(t, c, tree, root):
    """(lambda sequence up to the first bad distance, count of bad edges there)."""
    depth = _rooted(t, c, tree, root)
    dist, bad = {}, []
    for k in tree:
        tl, hd = t.black[t.across[(k, c)]][c], t.white[k][c]
        dist[k] = min(depth[tl], depth[hd])
        if depth[hd] < depth[tl]:
            bad.append(k)
    if not bad:
        return None, dist, bad
    n = min(dist[k] for k in bad)
    lam = tuple(sum(1 for k in tree if dist[k] == m) for m in range(n))
    at_n = sum(1 for k in bad if dist[k] == n)
    return (lam, -at_n), dist, bad


def hypertree_to_arborescence(t: Trinity, c, f) -> dict:
    """The arborescence A with f_A = f, by improving the dual of a realization of f.

    Repeatedly drops the bad dual edge nearest to the root (lowest id on ties)
    and reconnects with the lowest-id edge of the same hyperedge cycle that runs
    from the root side to the other side.
    """
    c = color_index(c)
    hg = constituent_hypergraph(t, c)
    if not is_hypertree(hg, f):
        raise ValueError(f"{as_vector(hg, f)} is not a hypertree of the constituent hypergraph")
    h = hyperedge_color(c)
    other = _CLASSES[c][1]
    root = t.root(c)
    pairs = realize(hg, f)
    gamma = set()
    for x, y in pairs:
        gamma.add(min(k for k, tri in enumerate(t.white) if tri[h] == x and tri[other] == y))
    tree = set(range(t.n)) - gamma
    measure, dist, bad = _lambda_measure(t, c, tree, root)
    while bad:
        n = min(dist[k] for k in bad)
        g = min(k for k in bad if dist[k] == n)
        rest = tree - {g}
        side = set(_rooted(t, c, rest, root))
        x = t.white[g][h]
        repl = None
        for k in sorted(k for k, tri in enumerate(t.white) if tri[h] == x and k not in tree):
            tl, hd = t.black[t.across[(k, c)]][c], t.white[k][c]
            if tl in side and hd not in side:
                repl = k
                break
        if repl is None:
            raise RuntimeError("no replacement edge on the hyperedge cycle")
        tree = rest | {repl}
        new_measure, dist, bad = _lambda_measure(t, c, tree, root)
        if new_measure is not None and not new_measure > measure:
            raise RuntimeError("improvement step did not increase the measure")
        measure = new_measure
    return {t.white[k][c]: k for k in tree}


def dual_tree_degrees(t: Trinity, c, A: dict) -> dict:
    """Degree of every point in the dual tree A* inside G_c."""
    dual_tree = set(range(t.n)) - set(A.values())
    a, b = _CLASSES[color_index(c)]
    deg = Counter()
    for k in dual_tree:
        deg[t.white[k][a]] += 1
        deg[t.white[k][b]] += 1
    return deg


def matching_arborescences(t: Trinity, match: dict) -> dict:
    """Split a Tutte matching into its three arborescences, keyed by colour."""
    return {c: {p: k for p, k in match.items() if t.points[p] == c} for c in (R, E, V)}


def alternating_cycle(t: Trinity, c, A: dict, B: dict):
    """A cycle in G_c alternating between edges of A* and B*, or None."""
    a_cls, b_cls = _CLASSES[color_index(c)]
    star_a = set(range(t.n)) - set(A.values())
    star_b = set(range(t.n)) - set(B.values())
    ends = {k: (t.white[k][a_cls], t.white[k][b_cls]) for k in range(t.n)}

    def other_end(k, x):
        u, v = ends[k]
        return v if x == u else u

    def search(start, x, want, used, visited):
        pool = star_a if want == "a" else star_b
        for k in sorted(pool - set(used)):
            if x not in ends[k]:
                continue
            y = other_end(k, x)
            if y == start and want == "b" and len(used) >= 1:
                return used + [k]
            if y in visited:
                continue
            found = search(start, y, "b" if want == "a" else "a", used + [k], visited | {y})
            if found:
                return found
        return None

    for k in sorted(star_a):
        for x in ends[k]:
            y = other_end(k, x)
            found = search(x, y, "b", [k], {x, y})
            if found:
                return found
    return None
