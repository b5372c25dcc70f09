"""Facet orientations of the symmetric edge polytope.

Each facet is cut out by an integer layering of the vertices: an edge is
present exactly when its endpoints sit in adjacent layers, directed toward
the larger layer, and the present edges must span the graph connectedly.
A generic rational weight on the vertices linearly orders the facets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

from .graphs import Graph, UnionFind


@dataclass(frozen=True)
class FacetGraph:
    """A spanning oriented subgraph cut out by a normalized layering.

    ``index`` is the 1-based rank in decreasing weight order, or None for a
    facet constructed outside a full enumeration.
    """

    graph: Graph
    layering: tuple[int, ...]
    index: Optional[int] = None

    def __post_init__(self) -> None:
        g = self.graph
        if len(self.layering) != g.n:
            raise ValueError("layering length must match the vertex count")
        uf = UnionFind(g.n)
        for u, v in g.edges:
            d = self.layering[v] - self.layering[u]
            if abs(d) > 1:
                raise ValueError(f"layer difference {d} across edge ({u},{v})")
            if d != 0:
                uf.union(u, v)
        if uf.components != 1:
            raise ValueError("adjacent-layer edges do not span the graph connectedly")

    def arc(self, eid: int) -> Optional[tuple[int, int]]:
        """(tail, head) of a present edge, or None when the edge is hidden."""
        u, v = self.graph.edges[eid]
        d = self.layering[v] - self.layering[u]
        if d == 1:
            return (u, v)
        if d == -1:
            return (v, u)
        return None

    @cached_property
    def arcs(self) -> tuple[tuple[int, int, int], ...]:
        """(eid, tail, head) for every present edge."""
        out = []
        for eid in range(self.graph.m):
            a = self.arc(eid)
            if a is not None:
                out.append((eid, a[0], a[1]))
        return tuple(out)

    @cached_property
    def present_edges(self) -> frozenset[int]:
        return frozenset(e for e, _, _ in self.arcs)

    @cached_property
    def hidden_edges(self) -> tuple[int, ...]:
        return tuple(e for e in range(self.graph.m) if e not in self.present_edges)


def _bfs_vertex_order(g: Graph, root: int) -> list[int]:
    order = [root]
    seen = [False] * g.n
    seen[root] = True
    for x in order:
        for eid in g.incidence[x]:
            y = g.opposite(eid, x)
            if not seen[y]:
                seen[y] = True
                order.append(y)
    return order


def _spans_connectedly(g: Graph, layering: list[int]) -> bool:
    uf = UnionFind(g.n)
    for u, v in g.edges:
        if layering[u] != layering[v]:
            uf.union(u, v)
    return uf.components == 1


def search_layerings(g: Graph, base: int) -> list[tuple[int, ...]]:
    """All normalized layerings (value 0 at the base vertex), sorted.

    Depth-first assignment over a breadth-first vertex order; a partial
    assignment is pruned when an edge constraint fails or a value leaves
    the band forced by the distance from the base vertex.
    """
    order = _bfs_vertex_order(g, base)
    dist = g.distances_from(base)
    earlier: dict[int, list[int]] = {v: [] for v in order}
    placed = set()
    for v in order:
        for eid in g.incidence[v]:
            u = g.opposite(eid, v)
            if u in placed:
                earlier[v].append(u)
        placed.add(v)

    lay: list[Optional[int]] = [None] * g.n
    lay[base] = 0
    found: list[tuple[int, ...]] = []

    def assign(i: int) -> None:
        if i == len(order):
            vals = [x for x in lay if x is not None]
            assert len(vals) == g.n
            if _spans_connectedly(g, vals):
                found.append(tuple(vals))
            return
        v = order[i]
        cands: Optional[set[int]] = None
        for u in earlier[v]:
            lu = lay[u]
            near = {lu - 1, lu, lu + 1}
            cands = near if cands is None else cands & near
        assert cands is not None
        for c in sorted(cands):
            if abs(c) <= dist[v]:
                lay[v] = c
                assign(i + 1)
                lay[v] = None

    assign(1)
    return sorted(found)


@dataclass(frozen=True)
class WeightFunction:
    """Rational vertex weights: 1 at the base, values in [-1,0] summing to -1 elsewhere."""

    base: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.values[self.base] != 1:
            raise ValueError("weight at the base vertex must be 1")
        rest = [w for v, w in enumerate(self.values) if v != self.base]
        if any(w < -1 or w > 0 for w in rest):
            raise ValueError("non-base weights must lie in [-1, 0]")
        if sum(rest) != -1:
            raise ValueError("non-base weights must sum to -1")


def facet_value(facet: FacetGraph, weight: WeightFunction) -> Fraction:
    """Weighted sum of the layering; invariant under constant layer shifts."""
    return sum(
        (Fraction(l) * w for l, w in zip(facet.layering, weight.values)),
        start=Fraction(0),
    )


def make_weight_function(
    g: Graph,
    base: int,
    seed: int = 0,
    facets: Optional[Iterable[FacetGraph]] = None,
) -> WeightFunction:
    """A seeded weight function whose facet values are pairwise distinct.

    Ties among facet values are detected exactly and resolved by advancing
    the seed; only the resulting order matters downstream.
    """
    if facets is None:
        facets = [FacetGraph(g, lay) for lay in search_layerings(g, base)]
    else:
        facets = list(facets)
    attempt = seed
    while True:
        rng = random.Random(attempt)
        raw = [rng.randrange(1, 1_000_000) for _ in range(g.n - 1)]
        total = sum(raw)
        values: list[Fraction] = []
        it = iter(raw)
        for v in range(g.n):
            values.append(Fraction(1) if v == base else Fraction(-next(it), total))
        weight = WeightFunction(base, tuple(values))
        seen = [facet_value(f, weight) for f in facets]
        if len(set(seen)) == len(seen):
            return weight
        attempt += 1


def facet_system(
    g: Graph, base: int = 0, seed: int = 0
) -> tuple[list[FacetGraph], WeightFunction]:
    """All facets with ids assigned in decreasing weight order, plus the weight."""
    raw = [FacetGraph(g, lay) for lay in search_layerings(g, base)]
    weight = make_weight_function(g, base, seed, facets=raw)
    ordered = sorted(raw, key=lambda f: facet_value(f, weight), reverse=True)
    return [replace(f, index=i + 1) for i, f in enumerate(ordered)], weight


def enumerate_facet_graphs(g: Graph, base: int = 0, seed: int = 0) -> list[FacetGraph]:
    return facet_system(g, base, seed)[0]


def first_facet_graph(g: Graph, base: int) -> FacetGraph:
    """The facet maximizing every admissible weight: layer = minus the distance."""
    dist = g.distances_from(base)
    return FacetGraph(g, tuple(-d for d in dist), index=1)


def is_semi_balanced(
    n: int, arcs: Iterable[tuple[int, int]], base: int = 0
) -> Optional[tuple[int, ...]]:
    """The normalized layering of a balanced orientation, or None.

    The arcs must weakly connect all n vertices; a layering exists exactly
    when every cycle has equally many arcs in its two directions.
    """
    arcs = list(arcs)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for t, h in arcs:
        adj[t].append((h, 1))
        adj[h].append((t, -1))
    lay: list[Optional[int]] = [None] * n
    lay[base] = 0
    queue = [base]
    for x in queue:
        for y, d in adj[x]:
            if lay[y] is None:
                lay[y] = lay[x] + d
                queue.append(y)
    if any(l is None for l in lay):
        raise ValueError("arcs do not weakly connect all vertices")
    for t, h in arcs:
        if lay[h] - lay[t] != 1:
            return None
    shift = lay[base]
    return tuple(l - shift for l in lay)


def facet_conormal(facet: FacetGraph) -> tuple[int, ...]:
    """The layering as an integer functional: at most 1 on the polytope, 1 on the facet."""
    return facet.layering


def classify_tail_edges(facet: FacetGraph, tree: frozenset[int], base: int) -> frozenset[int]:
    """Tree arcs whose tail lies on the base side of the tree minus the arc."""
    from .graphs import tree_parents

    parents = tree_parents(facet.graph, tree, base)
    tails = set()
    for v in range(facet.graph.n):
        if parents[v] is None:
            continue
        _, eid = parents[v]
        arc = facet.arc(eid)
        if arc is None:
            raise ValueError(f"tree edge {eid} is hidden in the facet")
        if arc[1] == v:
            # the head is the child, so the tail sits on the base side
            tails.add(eid)
    return frozenset(tails)


def classify_cut(
    n: int,
    arcs: Iterable[tuple[int, int]],
    side0: frozenset[int],
    side1: frozenset[int],
) -> str:
    """Classify the arcs crossing a vertex bipartition.

    Returns one of ``"toward-side1"``, ``"toward-side0"``, ``"undirected"``
    or ``"empty"``.
    """
    if not side0 or not side1:
        raise ValueError("both sides of a cut must be nonempty")
    if side0 & side1 or len(side0) + len(side1) != n or (side0 | side1) != frozenset(range(n)):
        raise ValueError("cut sides must partition the vertex set")
    forward = backward = 0
    for t, h in arcs:
        if t in side0 and h in side1:
            forward += 1
        elif t in side1 and h in side0:
            backward += 1
    if forward and backward:
        return "undirected"
    if forward:
        return "toward-side1"
    if backward:
        return "toward-side0"
    return "empty"


def is_directed_cut(
    facet: FacetGraph, side0: frozenset[int], side1: frozenset[int]
) -> str:
    """Classify a cut of a facet; hidden edges are ignored."""
    return classify_cut(
        facet.graph.n, ((t, h) for _, t, h in facet.arcs), side0, side1
    )
