"""Activities over finite lattice point sets, and integer submodular set functions.

A point set is anything with a constant coordinate sum.  Hypertrees of a
hypergraph and bases of a polymatroid are the main sources, but the activity
engine itself never looks at where the points came from, which is what lets it
produce order-dependent garbage for sets like TETRA4.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import UniPolynomial, canonical, sort_key


class PointNotInSet(ValueError):
    pass


class LatticePointSet:
    """A finite set of integer vectors indexed by an ordered ground set."""

    def __init__(self, ground: Sequence, points: Iterable[Sequence[int]], allow_empty: bool = True,
                 nonnegative: bool = True):
        self.ground = tuple(ground)
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("ground set has repeated ids")
        pts = set()
        for p in points:
            p = tuple(int(c) for c in p)
            if len(p) != len(self.ground):
                raise ValueError(f"point {p} has the wrong length")
            if nonnegative and min(p, default=0) < 0:
                raise ValueError(f"point {p} has a negative coordinate")
            pts.add(p)
        if not pts and not allow_empty:
            raise ValueError("empty point set")
        sums = {sum(p) for p in pts}
        if len(sums) > 1:
            raise ValueError(f"points do not share a coordinate sum: {sorted(sums)}")
        self.points = tuple(sorted(pts))
        self._members = frozenset(pts)
        self.index = {g: i for i, g in enumerate(self.ground)}

    def __contains__(self, x):
        return tuple(x) in self._members

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        if not isinstance(other, LatticePointSet):
            return NotImplemented
        return self.ground == other.ground and self._members == other._members

    def __repr__(self):
        return f"LatticePointSet(ground={self.ground}, {len(self)} points)"

    @property
    def total(self):
        return sum(self.points[0]) if self.points else None

    def as_dicts(self) -> list[dict]:
        return [dict(zip(self.ground, p)) for p in self.points]

    def reorder(self, ground: Sequence) -> "LatticePointSet":
        """Same points with coordinates permuted to follow ``ground``."""
        idx = [self.index[g] for g in ground]
        return LatticePointSet(ground, [tuple(p[i] for i in idx) for p in self.points])

    def array(self) -> np.ndarray:
        return np.array(self.points, dtype=np.int64).reshape(len(self.points), len(self.ground))


def _check_order(ground, order):
    if order is None:
        return list(ground)
    order = list(order)
    if sorted(order, key=sort_key) != sorted(ground, key=sort_key) or len(set(order)) != len(order):
        raise ValueError(f"order {order} is not a permutation of the ground set {list(ground)}")
    return order


def transfer(pset: LatticePointSet, x, a, b):
    """x - unit(a) + unit(b) if it stays in the set, else None.  a == b gives x."""
    x = tuple(x)
    if x not in pset:
        raise PointNotInSet(f"{x} is not in the set")
    if a == b:
        return x
    ia, ib = pset.index[a], pset.index[b]
    y = list(x)
    y[ia] -= 1
    y[ib] += 1
    y = tuple(y)
    return y if y in pset else None


@dataclass(frozen=True)
class ActivityProfile:
    point: tuple
    internal_inactive_count: int
    external_inactive_count: int
    internally_active: dict
    externally_active: dict

    @property
    def iota_bar(self):
        return self.internal_inactive_count

    @property
    def epsilon_bar(self):
        return self.external_inactive_count


def activity_profile(pset: LatticePointSet, order, x) -> ActivityProfile:
    """Internal/external activity of every ground element at x.

    s is internally active when no transfer s -> t with t < s is possible, and
    externally active when no transfer t -> s with t < s is possible.
    """
    order = _check_order(pset.ground, order)
    x = tuple(x)
    if x not in pset:
        raise PointNotInSet(f"{x} is not in the set")
    internal, external = {}, {}
    for k, s in enumerate(order):
        smaller = order[:k]
        internal[s] = not any(transfer(pset, x, s, t) is not None for t in smaller)
        external[s] = not any(transfer(pset, x, t, s) is not None for t in smaller)
    return ActivityProfile(
        point=x,
        internal_inactive_count=sum(not v for v in internal.values()),
        external_inactive_count=sum(not v for v in external.values()),
        internally_active=internal,
        externally_active=external,
    )


def activity_counts(pset: LatticePointSet, order=None) -> list[tuple[int, int]]:
    """(iota_bar, epsilon_bar) for every point, in the set's canonical point order."""
    order = _check_order(pset.ground, order)
    rank = [order.index(g) for g in pset.ground]
    members = pset._members
    n = len(pset.ground)
    # smaller[i] lists coordinates j earlier than i in the order
    smaller = [[j for j in range(n) if rank[j] < rank[i]] for i in range(n)]
    out = []
    for x in pset.points:
        ib = eb = 0
        for i in range(n):
            moved_out = moved_in = False
            for j in smaller[i]:
                if not moved_out and x[i] > 0:
                    y = list(x)
                    y[i] -= 1
                    y[j] += 1
                    moved_out = tuple(y) in members
                if not moved_in and x[j] > 0:
                    y = list(x)
                    y[j] -= 1
                    y[i] += 1
                    moved_in = tuple(y) in members
                if moved_out and moved_in:
                    break
            ib += moved_out
            eb += moved_in
        out.append((ib, eb))
    return out


def interior_poly(pset: LatticePointSet, order=None) -> UniPolynomial:
    if not len(pset):
        return UniPolynomial()
    return UniPolynomial.from_exponents(i for i, _ in activity_counts(pset, order))


def exterior_poly(pset: LatticePointSet, order=None) -> UniPolynomial:
    if not len(pset):
        return UniPolynomial()
    return UniPolynomial.from_exponents(e for _, e in activity_counts(pset, order))


def bivariate_activity_poly(pset: LatticePointSet, order=None) -> dict[tuple[int, int], int]:
    """Joint generating function {(iota_bar, epsilon_bar): count}.  Depends on the order."""
    return dict(Counter(activity_counts(pset, order)))


def order_independence_probe(pset: LatticePointSet, trials: int = 10, seed: int = 0) -> dict:
    """Compare I and X over the canonical order and ``trials`` random orders.

    Witnesses are the lexicographically first pair of orders that disagree.
    """
    rng = random.Random(seed)
    orders = [tuple(pset.ground)]
    for _ in range(trials):
        o = list(pset.ground)
        rng.shuffle(o)
        orders.append(tuple(o))
    results = {}
    for o in orders:
        if o not in results:
            results[o] = (interior_poly(pset, o), exterior_poly(pset, o))
    keys = sorted(results, key=lambda o: [sort_key(g) for g in o])
    ref = results[keys[0]]
    witness = None
    for o in keys[1:]:
        if results[o] != ref:
            witness = (keys[0], o)
            break
    return {
        "independent": witness is None,
        "orders_tried": len(results),
        "witness_orders": witness,
        "interior": ref[0],
        "exterior": ref[1],
    }


# ---------------------------------------------------------------------------
# set functions


class SetFunctionTable:
    """Integer set function on the subsets of an ordered ground set, keyed by bitmask.

    Bit i of a mask stands for ``ground[i]``.
    """

    def __init__(self, ground: Sequence, values):
        self.ground = tuple(ground)
        n = len(self.ground)
        if isinstance(values, dict):
            table = [None] * (1 << n)
            for k, v in values.items():
                table[self.mask(k) if not isinstance(k, int) else k] = int(v)
            if any(v is None for v in table):
                raise ValueError("set function table is not total")
            values = table
        values = [int(v) for v in values]
        if len(values) != 1 << n:
            raise ValueError(f"expected {1 << n} values, got {len(values)}")
        if values[0] != 0:
            raise ValueError("value of the empty set must be 0")
        self.values = np.array(values, dtype=np.int64)

    @classmethod
    def from_function(cls, ground, fn) -> "SetFunctionTable":
        ground = tuple(ground)
        return cls(ground, [fn(frozenset(ground[i] for i in range(len(ground)) if m >> i & 1))
                            for m in range(1 << len(ground))])

    def mask(self, subset) -> int:
        m = 0
        for s in subset:
            m |= 1 << self.ground.index(s)
        return m

    def subset(self, mask: int) -> frozenset:
        return frozenset(g for i, g in enumerate(self.ground) if mask >> i & 1)

    def __call__(self, subset) -> int:
        if isinstance(subset, (int, np.integer)):
            return int(self.values[subset])
        return int(self.values[self.mask(subset)])

    @property
    def full(self) -> int:
        return (1 << len(self.ground)) - 1

    def __repr__(self):
        return f"SetFunctionTable(ground={self.ground})"


def is_submodular(mu: SetFunctionTable) -> bool:
    """Local test: mu(U+a) + mu(U+b) >= mu(U+a+b) + mu(U) for all U and a, b outside U."""
    v = mu.values
    n = len(mu.ground)
    masks = np.arange(1 << n)
    for a in range(n):
        for b in range(a + 1, n):
            sel = masks[(masks >> a & 1) == 0]
            sel = sel[(sel >> b & 1) == 0]
            ua, ub = sel | (1 << a), sel | (1 << b)
            if np.any(v[ua] + v[ub] < v[ua | ub] + v[sel]):
                return False
    return True


def is_submodular_full(mu: SetFunctionTable) -> bool:
    """Definition check over all pairs of subsets (slow, for cross-checking)."""
    v = mu.values
    size = 1 << len(mu.ground)
    for u in range(size):
        for w in range(u + 1, size):
            if v[u] + v[w] < v[u & w] + v[u | w]:
                return False
    return True


def is_nondecreasing(mu: SetFunctionTable) -> bool:
    v = mu.values
    n = len(mu.ground)
    masks = np.arange(1 << n)
    for a in range(n):
        sel = masks[(masks >> a & 1) == 0]
        if np.any(v[sel | (1 << a)] < v[sel]):
            return False
    return True


def is_polymatroid(mu: SetFunctionTable) -> bool:
    return mu.values[0] == 0 and is_nondecreasing(mu) and is_submodular(mu)


def _require_polymatroid(mu):
    if not is_submodular(mu):
        raise ValueError("set function is not submodular")
    if not is_nondecreasing(mu):
        raise ValueError("set function is not non-decreasing")


def subset_sums(x: Sequence[int]) -> np.ndarray:
    """Array s with s[mask] = sum of x over the bits of mask."""
    s = np.zeros(1, dtype=np.int64)
    for c in x:
        s = np.concatenate([s, s + int(c)])
    return s


def in_base_polytope(mu: SetFunctionTable, x) -> bool:
    x = tuple(x)
    if len(x) != len(mu.ground) or min(x, default=0) < 0:
        return False
    s = subset_sums(x)
    return bool(s[-1] == mu.values[-1] and np.all(s <= mu.values))


def greedy_base(mu: SetFunctionTable, order=None) -> tuple:
    """Base tight on every prefix of the order: x(s_k) = mu(s_1..s_k) - mu(s_1..s_{k-1})."""
    _require_polymatroid(mu)
    order = _check_order(mu.ground, order)
    x = [0] * len(mu.ground)
    prev, mask = 0, 0
    for s in order:
        i = mu.ground.index(s)
        mask |= 1 << i
        x[i] = int(mu.values[mask]) - prev
        prev = int(mu.values[mask])
    return tuple(x)


def base_points(mu: SetFunctionTable) -> LatticePointSet:
    """All integer bases, by depth-first search over coordinates with bound pruning."""
    _require_polymatroid(mu)
    v = mu.values
    n = len(mu.ground)
    full = mu.full
    target = int(v[full])
    out = []
    x = [0] * n
    # sums[mask] for masks inside the current prefix
    sums = np.zeros(1 << n, dtype=np.int64)

    def rec(k, partial):
        if k == n:
            if partial == target:
                out.append(tuple(x))
            return
        rest_after = full & ~((1 << (k + 1)) - 1)
        low = 1 << k
        prefix_masks = np.arange(low)  # subsets of coordinates < k
        for c in range(int(v[low]) + 1):
            new_sums = sums[prefix_masks] + c
            if np.any(new_sums > v[prefix_masks | low]):
                break
            if target - partial - c > v[rest_after]:
                continue
            x[k] = c
            sums[prefix_masks | low] = new_sums
            rec(k + 1, partial + c)
        x[k] = 0

    rec(0, 0)
    return LatticePointSet(mu.ground, out)


def base_points_bruteforce(mu: SetFunctionTable) -> LatticePointSet:
    """Full box scan over [0, mu({s})]^S (oracle)."""
    n = len(mu.ground)
    ranges = [range(int(mu.values[1 << i]) + 1) for i in range(n)]
    return LatticePointSet(mu.ground, [x for x in itertools.product(*ranges) if in_base_polytope(mu, x)])


def transfer_closure(start: tuple, member, n: int) -> set:
    """BFS over single transfers from ``start`` using the predicate ``member``."""
    seen = {tuple(start)}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for a in range(n):
            if x[a] == 0:
                continue
            for b in range(n):
                if a == b:
                    continue
                y = list(x)
                y[a] -= 1
                y[b] += 1
                y = tuple(y)
                if y not in seen and member(y):
                    seen.add(y)
                    queue.append(y)
    return seen


def base_points_by_transfers(mu: SetFunctionTable) -> LatticePointSet:
    start = greedy_base(mu)
    return LatticePointSet(mu.ground, transfer_closure(start, lambda y: in_base_polytope(mu, y), len(mu.ground)))


def tight_sets(mu: SetFunctionTable, x) -> set[int]:
    s = subset_sums(x)
    return {int(m) for m in np.flatnonzero(s == mu.values)}


def tightness_closure_check(mu: SetFunctionTable, x) -> bool:
    """True iff the sets tight at x are closed under union and intersection."""
    s = subset_sums(x)
    if np.any(s > mu.values):
        raise ValueError(f"{tuple(x)} violates the bounds of the set function")
    tight = tight_sets(mu, x)
    return all((u | w) in tight and (u & w) in tight for u in tight for w in tight)


def support_function(pset: LatticePointSet) -> SetFunctionTable:
    """Smallest right-hand sides nu(U) = max over points of x . i_U."""
    arr = pset.array()
    n = len(pset.ground)
    vals = np.zeros(1 << n, dtype=np.int64)
    if len(arr):
        sums = np.zeros((len(arr), 1), dtype=np.int64)
        for i in range(n):
            sums = np.concatenate([sums, sums + arr[:, i:i + 1]], axis=1)
        vals = sums.max(axis=0)
    return SetFunctionTable(pset.ground, vals)


def modular(ground, weights) -> SetFunctionTable:
    weights = dict(zip(ground, weights)) if not isinstance(weights, dict) else weights
    return SetFunctionTable.from_function(ground, lambda U: sum(weights[u] for u in U))


# ---------------------------------------------------------------------------
# exchange properties as checkers


def _unit_move(x, a, b):
    y = list(x)
    y[a] -= 1
    y[b] += 1
    return tuple(y)


def _can(members, x, a, b):
    return a == b or (x[a] > 0 and _unit_move(x, a, b) in members)


def rhombus_violations(pset: LatticePointSet) -> list:
    """Triples where a->b and b->c are possible at x but a->c is not."""
    members = pset._members
    n = len(pset.ground)
    bad = []
    for x in pset.points:
        for a, b, c in itertools.permutations(range(n), 3):
            if _can(members, x, a, b) and _can(members, x, b, c) and not _can(members, x, a, c):
                bad.append((x, a, b, c))
    return bad


def staple_violations(pset: LatticePointSet) -> list:
    """Pairs f1, f2 agreeing off {e1, e2} with f1(e1) > f2(e1) that break the staple rule.

    Rule: e1 -> y possible at f1 implies e2 -> y possible at f2, and
    y -> e2 possible at f1 implies y -> e1 possible at f2 (for y outside {e1, e2}).
    """
    members = pset._members
    n = len(pset.ground)
    bad = []
    pts = pset.points
    for f1 in pts:
        for f2 in pts:
            if f1 == f2:
                continue
            diff = [i for i in range(n) if f1[i] != f2[i]]
            if len(diff) != 2:
                continue
            for e1, e2 in (diff, diff[::-1]):
                if f1[e1] <= f2[e1]:
                    continue
                for y in range(n):
                    if y in (e1, e2):
                        continue
                    if _can(members, f1, e1, y) and not _can(members, f2, e2, y):
                        bad.append((f1, f2, e1, e2, y, "out"))
                    if _can(members, f1, y, e2) and not _can(members, f2, y, e1):
                        bad.append((f1, f2, e1, e2, y, "in"))
    return bad


def rectangle_check(pset: LatticePointSet, p, q, r, s) -> list:
    """Rectangle property for four distinct ground elements.

    Points are grouped by their coordinates outside {p, q, r, s}.  In each group
    the face maximizing x_p + x_q is parametrized by (x_p, x_r); it should be
    the full product of the two coordinate ranges.  Returns the failing faces
    as lists of points.
    """
    ip, iq, ir, is_ = (pset.index[g] for g in (p, q, r, s))
    four = {ip, iq, ir, is_}
    if len(four) != 4:
        raise ValueError("need four distinct ground elements")
    groups: dict[tuple, list] = {}
    for x in pset.points:
        key = tuple(c for i, c in enumerate(x) if i not in four)
        groups.setdefault(key, []).append(x)
    failures = []
    for pts in groups.values():
        best = max(x[ip] + x[iq] for x in pts)
        face = [x for x in pts if x[ip] + x[iq] == best]
        pairs = {(x[ip], x[ir]) for x in face}
        ps = [a for a, _ in pairs]
        rs = [b for _, b in pairs]
        box = {(a, b) for a in range(min(ps), max(ps) + 1) for b in range(min(rs), max(rs) + 1)}
        if pairs != box:
            failures.append(sorted(face))
    return failures


def rectangle_failures(pset: LatticePointSet) -> list:
    out = []
    for quad in itertools.permutations(pset.ground, 4):
        for face in rectangle_check(pset, *quad):
            out.append((quad, face))
    return out


def is_transfer_connected(pset: LatticePointSet) -> bool:
    if not len(pset):
        return True
    reach = transfer_closure(pset.points[0], lambda y: y in pset, len(pset.ground))
    return len(reach) == len(pset)


# ---------------------------------------------------------------------------
# random polymatroids


def random_polymatroid(n: int, rng: random.Random, ground=None) -> SetFunctionTable:
    """Sum of a few coverage functions and truncated cardinalities; always a polymatroid."""
    ground = tuple(ground) if ground is not None else tuple(range(n))
    universe = rng.randint(2, 6)
    covers = []
    for _ in range(rng.randint(1, 2)):
        covers.append([frozenset(rng.sample(range(universe), rng.randint(0, universe))) for _ in range(n)])
    caps = [rng.randint(1, n) for _ in range(rng.randint(0, 2))]

    def fn(U):
        idx = [ground.index(u) for u in U]
        val = sum(len(frozenset().union(*(c[i] for i in idx))) for c in covers)
        val += sum(min(len(idx), k) for k in caps)
        return val

    return SetFunctionTable.from_function(ground, fn)
