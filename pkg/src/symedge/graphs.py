"""Graph, ribbon-structure and tree-tour primitives shared by the package.

Vertices are dense ids ``0..n-1`` and edges dense ids ``0..m-1``; every
downstream structure (orientations, spanning trees, tours) indexes into
these ids.  All values are immutable after construction.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional


class UnionFind:
    """Disjoint sets over ``0..n-1`` with union by size and path halving."""

    __slots__ = ("parent", "size", "components")

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n
        self.components = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True


def is_spanning_tree(n: int, pairs: Iterable[tuple[int, int]]) -> bool:
    """True when the vertex pairs form a cycle-free set spanning all n vertices."""
    uf = UnionFind(n)
    count = 0
    for u, v in pairs:
        if not uf.union(u, v):
            return False
        count += 1
    return count == n - 1


@dataclass(frozen=True)
class Graph:
    """Connected simple undirected graph; edge ids follow the list order."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        norm = []
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise ValueError(f"repeated edge {pair}")
            seen.add(pair)
            norm.append(pair)
        object.__setattr__(self, "edges", tuple(norm))
        uf = UnionFind(self.n)
        for u, v in self.edges:
            uf.union(u, v)
        if uf.components != 1:
            raise ValueError("graph is not connected")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Graph":
        pairs = [tuple(p) for p in pairs]
        n = max(max(p) for p in pairs) + 1 if pairs else 1
        return cls(n, tuple(pairs))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def cyclomatic_number(self) -> int:
        return self.m - self.n + 1

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids at each vertex, sorted by opposite endpoint then edge id."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            inc[u].append(eid)
            inc[v].append(eid)
        return tuple(
            tuple(sorted(lst, key=lambda e: (self.opposite(e, v), e)))
            for v, lst in enumerate(inc)
        )

    @cached_property
    def _edge_ids(self) -> dict[tuple[int, int], int]:
        return {pair: eid for eid, pair in enumerate(self.edges)}

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def opposite(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {eid}")

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._edge_ids[(u, v) if u < v else (v, u)]
        except KeyError:
            raise ValueError(f"no edge between {u} and {v}") from None

    def distances_from(self, root: int) -> list[int]:
        dist = [-1] * self.n
        dist[root] = 0
        queue = [root]
        for x in queue:
            for eid in self.incidence[x]:
                y = self.opposite(eid, x)
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def bipartition(self) -> Optional[tuple[frozenset[int], frozenset[int]]]:
        """The 2-coloring classes when the graph is bipartite, else None."""
        color = [-1] * self.n
        color[0] = 0
        queue = [0]
        for x in queue:
            for eid in self.incidence[x]:
                y = self.opposite(eid, x)
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
        return (
            frozenset(v for v in range(self.n) if color[v] == 0),
            frozenset(v for v in range(self.n) if color[v] == 1),
        )


@dataclass(frozen=True)
class Ribbon:
    """A cyclic order of the incident edge ids at every vertex."""

    orders: tuple[tuple[int, ...], ...]

    @cached_property
    def _next(self) -> dict[tuple[int, int], int]:
        nxt: dict[tuple[int, int], int] = {}
        for v, cyc in enumerate(self.orders):
            k = len(cyc)
            for i, e in enumerate(cyc):
                nxt[(v, e)] = cyc[(i + 1) % k]
        return nxt

    def successor(self, v: int, e: int) -> int:
        """The edge following e in the cyclic order at v."""
        try:
            return self._next[(v, e)]
        except KeyError:
            raise ValueError(f"edge {e} is not incident to vertex {v}") from None

    def restricted(self, keep: frozenset[int]) -> "Ribbon":
        """The ribbon induced on a subset of the edges (cyclic order inherited)."""
        return Ribbon(tuple(tuple(e for e in cyc if e in keep) for cyc in self.orders))


def default_ribbon(g: Graph) -> Ribbon:
    """At each vertex, incident edges ordered by opposite endpoint id."""
    return Ribbon(g.incidence)


def random_ribbon(g: Graph, rng: random.Random) -> Ribbon:
    orders = []
    for v in range(g.n):
        cyc = list(g.incidence[v])
        rng.shuffle(cyc)
        orders.append(tuple(cyc))
    return Ribbon(tuple(orders))


def validate_ribbon(g: Graph, ribbon: Ribbon) -> None:
    if len(ribbon.orders) != g.n:
        raise ValueError("ribbon must list one cyclic order per vertex")
    for v in range(g.n):
        if sorted(ribbon.orders[v]) != sorted(g.incidence[v]):
            raise ValueError(f"ribbon at vertex {v} is not a permutation of its incident edges")


class Basis(NamedTuple):
    """The starting node-edge pair of every tour."""

    vertex: int
    edge: int


def default_basis(g: Graph, ribbon: Ribbon) -> Basis:
    if not ribbon.orders[0]:
        raise ValueError("vertex 0 has no incident edge")
    return Basis(0, ribbon.orders[0][0])


def random_basis(g: Graph, rng: random.Random) -> Basis:
    v = rng.randrange(g.n)
    return Basis(v, rng.choice(g.incidence[v]))


def validate_basis(g: Graph, basis: Basis) -> None:
    if not (0 <= basis.vertex < g.n):
        raise ValueError(f"basis vertex {basis.vertex} out of range")
    if basis.edge not in g.incidence[basis.vertex]:
        raise ValueError(f"basis edge {basis.edge} is not incident to vertex {basis.vertex}")


class TourStep(NamedTuple):
    vertex: int
    edge: int
    action: str  # "traverse" | "skip"
    hidden: bool = False


def tour_of_tree(
    g: Graph,
    ribbon: Ribbon,
    basis: Basis,
    tree: frozenset[int],
    present: Optional[frozenset[int]] = None,
    track_hidden: bool = False,
) -> tuple[TourStep, ...]:
    """Walk a spanning tree from the basis pair, seeing each edge twice.

    From the pair ``(x, xy)``, a tree edge is traversed (continue at y with
    the successor of yx) and any other edge is skipped (stay at x, take the
    successor of xy); the walk stops right before the basis pair recurs.
    With ``track_hidden`` the walk runs over all edges of g and marks the
    skipped non-present ones; otherwise it is restricted to ``present`` and
    the basis edge must itself be present.
    """
    validate_basis(g, basis)
    if present is None:
        present = frozenset(range(g.m))
    if not tree <= present:
        raise ValueError("tree uses edges outside the host")
    if not is_spanning_tree(g.n, [g.endpoints(e) for e in tree]):
        raise ValueError("not a spanning tree of the host")
    if track_hidden:
        rib = ribbon
    else:
        if basis.edge not in present:
            raise ValueError("basis edge is hidden in the host")
        rib = ribbon.restricted(present)

    steps: list[TourStep] = []
    x, e = basis
    while True:
        if steps and (x, e) == basis:
            break
        if e in tree:
            steps.append(TourStep(x, e, "traverse", False))
            y = g.opposite(e, x)
            x, e = y, rib.successor(y, e)
        else:
            steps.append(TourStep(x, e, "skip", e not in present))
            e = rib.successor(x, e)
    return tuple(steps)


def fundamental_cut(
    g: Graph, tree: frozenset[int], eid: int, base: int
) -> tuple[frozenset[int], frozenset[int]]:
    """The two vertex components of tree minus the edge; the base side first."""
    if eid not in tree:
        raise ValueError(f"edge {eid} is not in the tree")
    reach = {base}
    queue = [base]
    for x in queue:
        for f in g.incidence[x]:
            if f in tree and f != eid:
                y = g.opposite(f, x)
                if y not in reach:
                    reach.add(y)
                    queue.append(y)
    side0 = frozenset(reach)
    return side0, frozenset(range(g.n)) - side0


def tree_parents(g: Graph, tree: frozenset[int], root: int) -> list[Optional[tuple[int, int]]]:
    """Per vertex, the (parent vertex, connecting edge) pair in the rooted tree."""
    parents: list[Optional[tuple[int, int]]] = [None] * g.n
    seen = [False] * g.n
    seen[root] = True
    queue = [root]
    for x in queue:
        for eid in g.incidence[x]:
            if eid in tree:
                y = g.opposite(eid, x)
                if not seen[y]:
                    seen[y] = True
                    parents[y] = (x, eid)
                    queue.append(y)
    return parents


def spanning_trees_of_edges(g: Graph, eids: Iterable[int]) -> Iterator[frozenset[int]]:
    """All spanning trees using only the given edge ids (brute force)."""
    pool = sorted(eids)
    for combo in itertools.combinations(pool, g.n - 1):
        if is_spanning_tree(g.n, [g.endpoints(e) for e in combo]):
            yield frozenset(combo)


def all_spanning_trees(g: Graph) -> Iterator[frozenset[int]]:
    return spanning_trees_of_edges(g, range(g.m))
