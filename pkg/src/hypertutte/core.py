"""Graphs, hypergraphs, exact polynomials and brute-force spanning-tree machinery.

Every other module validates its fast paths against the enumerators here, so
they are written for clarity first.
"""

from __future__ import annotations

import itertools
import warnings
from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

import sympy


def sort_key(x):
    """Canonical ordering for ids: integers numerically, everything else as text."""
    if isinstance(x, bool):
        return (1, str(x))
    if isinstance(x, int):
        return (0, x, "")
    if isinstance(x, tuple):
        return (2, tuple(sort_key(y) for y in x))
    return (1, str(x))


def canonical(ids: Iterable) -> tuple:
    return tuple(sorted(ids, key=sort_key))


class DisjointSet:
    def __init__(self, items=()):
        self.parent = {x: x for x in items}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True

    def count(self) -> int:
        return sum(1 for x in self.parent if self.find(x) == x)


# ---------------------------------------------------------------------------
# polynomials


class UniPolynomial:
    """Exact univariate integer polynomial, stored sparsely (degree -> coefficient)."""

    __slots__ = ("_c",)

    def __init__(self, coefficients=None):
        if coefficients is None:
            coefficients = {}
        elif not isinstance(coefficients, Mapping):
            coefficients = dict(enumerate(coefficients))
        self._c = {int(d): int(c) for d, c in coefficients.items() if c != 0}
        if any(d < 0 for d in self._c):
            raise ValueError("negative degree")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "UniPolynomial":
        """Generating function of a multiset of exponents."""
        return cls(Counter(exponents))

    @property
    def coefficients(self) -> dict:
        return dict(self._c)

    def coefficient(self, d: int) -> int:
        return self._c.get(d, 0)

    def __getitem__(self, d: int) -> int:
        return self._c.get(d, 0)

    @property
    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def is_zero(self) -> bool:
        return not self._c

    def to_list(self) -> list[int]:
        """Dense ascending coefficient list ([] for the zero polynomial)."""
        return [self._c.get(d, 0) for d in range(self.degree + 1)]

    def __call__(self, x):
        return sum(c * x**d for d, c in self._c.items())

    def __eq__(self, other):
        if isinstance(other, UniPolynomial):
            return self._c == other._c
        if isinstance(other, (list, tuple)):
            return self == UniPolynomial(other)
        if isinstance(other, int):
            return self == UniPolynomial({0: other})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = _as_poly(other)
        out = Counter(self._c)
        out.update(other._c)
        return UniPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPolynomial({d: -c for d, c in self._c.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __mul__(self, other):
        other = _as_poly(other)
        out = Counter()
        for d1, c1 in self._c.items():
            for d2, c2 in other._c.items():
                out[d1 + d2] += c1 * c2
        return UniPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "UniPolynomial":
        """Multiply by the k-th power of the variable."""
        return UniPolynomial({d + k: c for d, c in self._c.items()})

    def reversed(self, n: int) -> "UniPolynomial":
        """x^n p(1/x); requires n >= degree."""
        if n < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        return UniPolynomial({n - d: c for d, c in self._c.items()})

    def format(self, var: str = "x") -> str:
        if not self._c:
            return "0"
        terms = []
        for d in sorted(self._c):
            c = self._c[d]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if d == 0:
                body = str(a)
            else:
                mono = var if d == 1 else f"{var}^{d}"
                body = mono if a == 1 else f"{a}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"UniPolynomial({self.to_list()})"

    def __str__(self):
        return self.format()


def _as_poly(p) -> UniPolynomial:
    if isinstance(p, UniPolynomial):
        return p
    if isinstance(p, int):
        return UniPolynomial({0: p})
    return UniPolynomial(p)


class MonomialSet:
    """Multivariate integer polynomial over named variables.

    Keys are exponent tuples aligned with ``variables``.
    """

    def __init__(self, variables: Sequence, terms: Mapping[tuple, int] | None = None):
        self.variables = tuple(variables)
        self.terms: dict[tuple, int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.variables):
                raise ValueError("exponent vector length does not match variables")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            if c:
                self.terms[exps] = self.terms.get(exps, 0) + int(c)
        self.terms = {k: v for k, v in self.terms.items() if v}

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MonomialSet):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def as_dict(self) -> dict:
        """Terms keyed by sorted ((variable, exponent), ...) with zero exponents dropped."""
        out = {}
        for exps, c in self.terms.items():
            key = tuple((v, e) for v, e in zip(self.variables, exps) if e)
            out[key] = out.get(key, 0) + c
        return out

    def exponent_vectors(self, variables: Sequence | None = None) -> set[tuple]:
        if variables is None:
            return set(self.terms)
        idx = [self.variables.index(v) for v in variables]
        return {tuple(exps[i] for i in idx) for exps in self.terms}

    def coefficients(self) -> set[int]:
        return set(self.terms.values())

    def project(self, keep: Sequence) -> "MonomialSet":
        """Substitute 1 for every variable outside ``keep``."""
        idx = [self.variables.index(v) for v in keep]
        out = Counter()
        for exps, c in self.terms.items():
            out[tuple(exps[i] for i in idx)] += c
        return MonomialSet(keep, out)

    def __neg__(self):
        return MonomialSet(self.variables, {k: -c for k, c in self.terms.items()})

    @classmethod
    def parse(cls, text: str, variables: Sequence) -> "MonomialSet":
        """Parse a sum of monomials such as ``"e0^2 e1 + e0 e1^2"``."""
        variables = tuple(variables)
        out = Counter()
        for term in text.replace("-", "+-").split("+"):
            term = term.strip()
            if not term:
                continue
            coeff = 1
            if term.startswith("-"):
                coeff, term = -1, term[1:].strip()
            exps = [0] * len(variables)
            for factor in term.replace("*", " ").split():
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                name, _, power = factor.partition("^")
                exps[variables.index(name)] += int(power) if power else 1
            out[tuple(exps)] += coeff
        return cls(variables, out)

    def format(self) -> str:
        def mono(exps):
            parts = []
            for v, e in zip(self.variables, exps):
                if e == 1:
                    parts.append(str(v))
                elif e > 1:
                    parts.append(f"{v}^{e}")
            return " ".join(parts) or "1"

        pieces = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            m = mono(exps)
            pieces.append(("-" if c < 0 else "+", m if abs(c) == 1 else f"{abs(c)} {m}"))
        if not pieces:
            return "0"
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MonomialSet({self.format()!r})"


# ---------------------------------------------------------------------------
# graphs and hypergraphs


@dataclass(frozen=True)
class Hypergraph:
    """Vertices plus a family of non-empty vertex subsets keyed by hyperedge id.

    Repeated subsets are allowed under distinct ids.
    """

    vertices: tuple
    hyperedges: Mapping[Hashable, frozenset]
    name: str = field(default="", compare=False)

    def __init__(self, vertices, hyperedges, name: str = ""):
        if not isinstance(hyperedges, Mapping):
            hyperedges = dict(hyperedges)
        members = {k: frozenset(v) for k, v in hyperedges.items()}
        verts = set(vertices)
        for k, m in members.items():
            if not m:
                raise ValueError(f"hyperedge {k!r} is empty")
            if not m <= verts:
                raise ValueError(f"hyperedge {k!r} has members outside the vertex set")
        ordered = {k: members[k] for k in canonical(members)}
        object.__setattr__(self, "vertices", canonical(verts))
        object.__setattr__(self, "hyperedges", ordered)
        object.__setattr__(self, "name", name)

    @property
    def edge_ids(self) -> tuple:
        return tuple(self.hyperedges)

    def size(self, e) -> int:
        return len(self.hyperedges[e])

    def __len__(self):
        return len(self.hyperedges)

    def __hash__(self):
        return hash((self.vertices, tuple(self.hyperedges.items())))

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.vertices == other.vertices and dict(self.hyperedges) == dict(other.hyperedges)

    def is_connected(self) -> bool:
        return bip(self).is_connected()

    def degree(self, v) -> int:
        return sum(1 for m in self.hyperedges.values() if v in m)

    def __repr__(self):
        inner = ", ".join(f"{k}:{{{','.join(map(str, canonical(m)))}}}" for k, m in self.hyperedges.items())
        return f"Hypergraph({inner})"


@dataclass(frozen=True)
class BipartiteGraph:
    """Two disjoint colour classes and a set of (class0, class1) edges."""

    class0: tuple
    class1: tuple
    edges: tuple

    def __init__(self, class0, class1, edges):
        c0, c1 = set(class0), set(class1)
        if c0 & c1:
            raise ValueError("colour classes overlap")
        seen = []
        dup = False
        for u, v in edges:
            if u in c1 and v in c0:
                u, v = v, u
            if u not in c0 or v not in c1:
                raise ValueError(f"edge ({u!r}, {v!r}) does not join the two classes")
            if (u, v) in seen:
                dup = True
                continue
            seen.append((u, v))
        if dup:
            warnings.warn("multiple bipartite edges collapsed", stacklevel=2)
        object.__setattr__(self, "class0", canonical(c0))
        object.__setattr__(self, "class1", canonical(c1))
        object.__setattr__(self, "edges", tuple(sorted(set(seen), key=sort_key)))

    @property
    def nodes(self) -> tuple:
        return self.class0 + self.class1

    def neighbors(self, x) -> list:
        out = [v for u, v in self.edges if u == x]
        out += [u for u, v in self.edges if v == x]
        return out

    def components(self) -> int:
        ds = DisjointSet(self.nodes)
        for u, v in self.edges:
            ds.union(u, v)
        return ds.count()

    def is_connected(self) -> bool:
        return len(self.nodes) > 0 and self.components() == 1

    def swap(self) -> "BipartiteGraph":
        return BipartiteGraph(self.class1, self.class0, [(v, u) for u, v in self.edges])


def bip(h: Hypergraph) -> BipartiteGraph:
    """Associated bipartite graph: class0 = hyperedge ids, class1 = vertices."""
    edges = [(e, v) for e, m in h.hyperedges.items() for v in canonical(m)]
    return BipartiteGraph(h.edge_ids, h.vertices, edges)


def induced_hypergraphs(g: BipartiteGraph) -> tuple[Hypergraph, Hypergraph]:
    """The pair (G0, G1): G0 has the class0 nodes as hyperedges, G1 the class1 nodes."""
    g0 = Hypergraph(g.class1, {u: [v for x, v in g.edges if x == u] for u in g.class0})
    g1 = Hypergraph(g.class0, {v: [u for u, y in g.edges if y == v] for v in g.class1})
    return g0, g1


def abstract_dual(h: Hypergraph) -> Hypergraph:
    """Swap the roles of vertices and hyperedges (ids are kept)."""
    lonely = [v for v in h.vertices if h.degree(v) == 0]
    if lonely:
        raise ValueError(f"vertices {lonely!r} lie in no hyperedge; the dual would have empty hyperedges")
    return Hypergraph(h.edge_ids, {v: [e for e, m in h.hyperedges.items() if v in m] for v in h.vertices})


def graph_as_hypergraph(edges: Mapping[Hashable, tuple] | Sequence[tuple], vertices=None) -> Hypergraph:
    """An ordinary graph (no loops) viewed as a hypergraph with two-element hyperedges."""
    if not isinstance(edges, Mapping):
        edges = {i: e for i, e in enumerate(edges)}
    verts = set(vertices or ())
    for u, v in edges.values():
        if u == v:
            raise ValueError("loops are not hyperedges")
        verts.update((u, v))
    return Hypergraph(verts, {k: {u, v} for k, (u, v) in edges.items()})


def nullity(g) -> int:
    """First Betti number |edges| - |vertices| + components.

    Accepts a BipartiteGraph, a Hypergraph (measured on its bipartite graph), or a
    pair (vertices, edge list) for a general multigraph.
    """
    if isinstance(g, Hypergraph):
        g = bip(g)
    if isinstance(g, BipartiteGraph):
        return len(g.edges) - len(g.nodes) + g.components()
    vertices, edges = g
    edges = list(edges.values()) if isinstance(edges, Mapping) else list(edges)
    ds = DisjointSet(vertices)
    for u, v in edges:
        ds.add(u)
        ds.add(v)
        ds.union(u, v)
    return len(edges) - len(ds.parent) + ds.count()


# ---------------------------------------------------------------------------
# spanning trees


def _edge_list(g):
    if isinstance(g, BipartiteGraph):
        return list(g.nodes), list(g.edges)
    vertices, edges = g
    edges = list(edges.values()) if isinstance(edges, Mapping) else list(edges)
    verts = list(vertices)
    seen = set(verts)
    for u, v in edges:
        for x in (u, v):
            if x not in seen:
                seen.add(x)
                verts.append(x)
    return verts, edges


def spanning_trees(g) -> Iterator[frozenset]:
    """Yield every spanning tree once, as a frozenset of edge indices.

    Indices refer to ``g.edges`` for a BipartiteGraph, or to the edge list of a
    (vertices, edges) pair. Trees appear in lexicographic order of their sorted
    index tuples.  A disconnected graph yields nothing.
    """
    verts, edges = _edge_list(g)
    n, m = len(verts), len(edges)
    if n == 0:
        return
    index = {v: i for i, v in enumerate(verts)}
    ends = [(index[u], index[v]) for u, v in edges]

    def connectable(chosen, start):
        ds = DisjointSet(range(n))
        for i in chosen:
            ds.union(*ends[i])
        for i in range(start, m):
            ds.union(*ends[i])
        return ds.count() == 1

    if not connectable([], 0):
        return

    chosen: list[int] = []

    def rec(start, ds_parent):
        if len(chosen) == n - 1:
            yield frozenset(chosen)
            return
        for i in range(start, m):
            if m - i < n - 1 - len(chosen):
                return
            u, v = ends[i]
            ds = DisjointSet()
            ds.parent = dict(ds_parent)
            if ds.find(u) == ds.find(v):
                continue
            # edges skipped before i are excluded for good
            ds_check = DisjointSet()
            ds_check.parent = dict(ds_parent)
            ds_check.union(u, v)
            for j in range(i + 1, m):
                ds_check.union(*ends[j])
            if ds_check.count() != 1:
                continue
            ds.union(u, v)
            chosen.append(i)
            yield from rec(i + 1, ds.parent)
            chosen.pop()

    yield from rec(0, {i: i for i in range(n)})


def kirchhoff_count(g) -> int:
    """Number of spanning trees by the matrix-tree theorem (exact integer determinant)."""
    verts, edges = _edge_list(g)
    n = len(verts)
    if n == 0:
        return 0
    if n == 1:
        return 1
    index = {v: i for i, v in enumerate(verts)}
    lap = [[0] * n for _ in range(n)]
    for u, v in edges:
        i, j = index[u], index[v]
        if i == j:
            continue
        lap[i][i] += 1
        lap[j][j] += 1
        lap[i][j] -= 1
        lap[j][i] -= 1
    minor = sympy.Matrix([row[1:] for row in lap[1:]])
    return int(minor.det(method="bareiss"))


def _tree_path(tree_edges, ends, n, a, b) -> list[int]:
    """Edge indices on the unique path from node a to node b in a forest."""
    adj = [[] for _ in range(n)]
    for i in tree_edges:
        u, v = ends[i]
        adj[u].append((v, i))
        adj[v].append((u, i))
    prev = {a: None}
    stack = [a]
    while stack:
        x = stack.pop()
        if x == b:
            break
        for y, i in adj[x]:
            if y not in prev:
                prev[y] = (x, i)
                stack.append(y)
    if b not in prev:
        return []
    path = []
    x = b
    while prev[x] is not None:
        x, i = prev[x]
        path.append(i)
    return path


def tree_activities(g, tree: frozenset, rank: Sequence[int]) -> tuple[int, int]:
    """(internally active, externally active) edge counts of a spanning tree.

    ``rank[i]`` is the position of edge i in the chosen order; "smaller" means
    lower rank.
    """
    verts, edges = _edge_list(g)
    n = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    ends = [(index[u], index[v]) for u, v in edges]
    internal = 0
    external = 0
    non_tree = [i for i in range(len(edges)) if i not in tree]
    for e in tree:
        # cut edges of e: non-tree edges whose fundamental cycle contains e
        rest = tree - {e}
        ds = DisjointSet(range(n))
        for i in rest:
            ds.union(*ends[i])
        reconnect = [i for i in non_tree if ds.find(ends[i][0]) != ds.find(ends[i][1])]
        if all(rank[i] > rank[e] for i in reconnect):
            internal += 1
    for e in non_tree:
        u, v = ends[e]
        if u == v:
            cycle = []
        else:
            cycle = _tree_path(tree, ends, n, u, v)
        if all(rank[i] > rank[e] for i in cycle):
            external += 1
    return internal, external


def classical_tutte_slices(g, order: Sequence[int] | None = None) -> tuple[UniPolynomial, UniPolynomial]:
    """T(x,1) and T(1,y) from internal/external activities under an edge order.

    ``order`` lists edge indices from smallest to largest (default: index order).
    A disconnected graph gives two zero polynomials.
    """
    verts, edges = _edge_list(g)
    m = len(edges)
    if order is None:
        order = range(m)
    order = list(order)
    if sorted(order) != list(range(m)):
        raise ValueError("order must be a permutation of the edge indices")
    rank = [0] * m
    for pos, i in enumerate(order):
        rank[i] = pos
    tx, ty = Counter(), Counter()
    for tree in spanning_trees(g):
        internal, external = tree_activities(g, tree, rank)
        tx[internal] += 1
        ty[external] += 1
    return UniPolynomial(tx), UniPolynomial(ty)


def permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def all_orders(ids: Sequence) -> Iterator[tuple]:
    return itertools.permutations(ids)


def random_connected_bipartite(rng, max_vertices: int = 9, min_vertices: int = 3,
                               edge_prob: float = 0.4, max_class0: int | None = None) -> BipartiteGraph:
    """A random connected bipartite graph: a random spanning tree plus extra edges.

    Class0 gets ids e0, e1, ... and class1 ids v0, v1, ...; both are nonempty.
    ``max_vertices`` bounds the total node count, ``max_class0`` the size of class0.
    """
    n = rng.randint(max(min_vertices, 2), max(max_vertices, min_vertices, 2))
    lo = 2 if n >= 4 else 1
    n0 = rng.randint(lo, max(lo, min(n - lo, max_class0 or n)))
    c0 = [f"e{i}" for i in range(n0)]
    c1 = [f"v{j}" for j in range(n - n0)]
    edges = {(c0[0], c1[0])}
    placed = {0: [c0[0]], 1: [c1[0]]}
    rest = [(0, x) for x in c0[1:]] + [(1, x) for x in c1[1:]]
    rng.shuffle(rest)
    for side, x in rest:
        y = rng.choice(placed[1 - side])
        edges.add((x, y) if side == 0 else (y, x))
        placed[side].append(x)
    for u in c0:
        for v in c1:
            if (u, v) not in edges and rng.random() < edge_prob:
                edges.add((u, v))
    return BipartiteGraph(c0, c1, sorted(edges, key=lambda uv: (sort_key(uv[0]), sort_key(uv[1]))))
