"""Jaeger trees of facet orientations and the shelling orders built on them.

A Jaeger tree is a spanning tree whose tour first meets every present
non-tree edge at its tail.  Counting those trees by their number of tail
edges, over all facets, reads off the h*-vector; two total orders on the
trees realize that count as a shelling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, cmp_to_key
from typing import Iterable, Optional, Sequence, Union

from .errors import CrossCheckError
from .facets import (
    FacetGraph,
    WeightFunction,
    classify_tail_edges,
    enumerate_facet_graphs,
    facet_system,
    facet_value,
    first_facet_graph,
)
from .graphs import (
    Basis,
    Graph,
    Ribbon,
    UnionFind,
    is_spanning_tree,
    spanning_trees_of_edges,
    tour_of_tree,
)
from .polynomials import IntPoly, gamma_transform, hstar_from_histogram


@dataclass(frozen=True)
class JaegerTree:
    """A spanning tree of a facet, stored as directed edges via its host."""

    facet: FacetGraph
    edges: frozenset[int]
    tail_edges: frozenset[int]

    @property
    def tail_count(self) -> int:
        return len(self.tail_edges)

    @cached_property
    def directed_edges(self) -> tuple[tuple[int, int, int], ...]:
        out = []
        for eid in sorted(self.edges):
            tail, head = self.facet.arc(eid)
            out.append((eid, tail, head))
        return tuple(out)

    def key(self) -> tuple:
        """Identity of the tree: its facet layering plus its edge set."""
        return (self.facet.layering, self.edges)


@dataclass(frozen=True)
class BlockingCut:
    """The cut separating the reached set when a greedy walk cannot span."""

    side0: frozenset[int]
    side1: frozenset[int]


def facet_basis(facet: FacetGraph, ribbon: Ribbon, basis: Basis) -> Basis:
    """The basis with its edge slid forward to the first present edge.

    Walks the cyclic order at the base vertex starting from the configured
    base edge, so every facet starts its tours at a well-defined pair even
    when the global base edge is hidden in it.
    """
    e = basis.edge
    for _ in range(facet.graph.degree(basis.vertex)):
        if e in facet.present_edges:
            return Basis(basis.vertex, e)
        e = ribbon.successor(basis.vertex, e)
    raise ValueError("base vertex has no present edge in the facet")


def make_jaeger_tree(facet: FacetGraph, base: int, edges: frozenset[int]) -> JaegerTree:
    return JaegerTree(facet, edges, classify_tail_edges(facet, edges, base))


def is_jaeger_tree(
    facet: FacetGraph, ribbon: Ribbon, basis: Basis, tree: frozenset[int]
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Decide the tour condition; on failure, report the violating pair.

    The violation witness is the node-edge pair at which a present
    non-tree edge is first seen from its head.
    """
    eb = facet_basis(facet, ribbon, basis)
    trace = tour_of_tree(facet.graph, ribbon, eb, tree, present=facet.present_edges)
    seen: set[int] = set()
    for step in trace:
        e = step.edge
        if e in seen:
            continue
        seen.add(e)
        if e not in tree:
            _, head = facet.arc(e)
            if step.vertex == head:
                return False, (step.vertex, e)
    return True, None


def enumerate_jaeger_trees(
    facet: FacetGraph, ribbon: Ribbon, basis: Basis
) -> list[JaegerTree]:
    """All Jaeger trees of one facet, emitted in tour order.

    Simulates the tour with undecided edges.  An undecided edge first seen
    at its head is forced into the tree (the branch dies if that closes a
    cycle); one first seen at its tail branches into leave-out (explored
    first, which makes the output order the within-facet shelling order)
    and take-in.  A finished walk is kept exactly when its tree spans.
    """
    g = facet.graph
    n = g.n
    present = facet.present_edges
    rib = ribbon.restricted(present)
    b0, e0 = facet_basis(facet, ribbon, basis)
    heads = {eid: head for eid, _, head in facet.arcs}
    results: list[JaegerTree] = []

    def closes_cycle(tree: frozenset[int], eid: int) -> bool:
        uf = UnionFind(n)
        for f in tree:
            uf.union(*g.endpoints(f))
        return not uf.union(*g.endpoints(eid))

    def still_spannable(removed: frozenset[int]) -> bool:
        uf = UnionFind(n)
        for f in present:
            if f not in removed:
                uf.union(*g.endpoints(f))
        return uf.components == 1

    def walk(x: int, e: int, moved: bool, inside: frozenset[int], outside: frozenset[int]) -> None:
        while True:
            if moved and (x, e) == (b0, e0):
                if len(inside) == n - 1:
                    results.append(make_jaeger_tree(facet, b0, inside))
                return
            moved = True
            if e in inside:
                y = g.opposite(e, x)
                x, e = y, rib.successor(y, e)
            elif e in outside:
                e = rib.successor(x, e)
            elif x == heads[e]:
                if closes_cycle(inside, e):
                    return
                inside = inside | {e}
                y = g.opposite(e, x)
                x, e = y, rib.successor(y, e)
            else:
                out = outside | {e}
                if still_spannable(out):
                    walk(x, rib.successor(x, e), True, inside, out)
                if not closes_cycle(inside, e):
                    y = g.opposite(e, x)
                    walk(y, rib.successor(y, e), True, inside | {e}, outside)
                return

    walk(b0, e0, False, frozenset(), frozenset())
    return results


def brute_force_jaeger_trees(
    facet: FacetGraph, ribbon: Ribbon, basis: Basis
) -> list[JaegerTree]:
    """Filter all spanning trees by the tour condition (testing oracle)."""
    out = []
    for tree in spanning_trees_of_edges(facet.graph, facet.present_edges):
        ok, _ = is_jaeger_tree(facet, ribbon, basis, tree)
        if ok:
            out.append(make_jaeger_tree(facet, basis.vertex, tree))
    return out


def enumerate_all_jaeger(
    g: Graph,
    ribbon: Ribbon,
    basis: Basis,
    seed: int = 0,
    facets: Optional[Sequence[FacetGraph]] = None,
) -> tuple[list[JaegerTree], tuple[int, ...]]:
    """All Jaeger trees over all facets plus the tail-edge histogram."""
    if facets is None:
        facets = enumerate_facet_graphs(g, basis.vertex, seed)
    trees: list[JaegerTree] = []
    for facet in facets:
        trees.extend(enumerate_jaeger_trees(facet, ribbon, basis))
    hist = [0] * g.n
    for t in trees:
        hist[t.tail_count] += 1
    return trees, tuple(hist)


def hstar_of_graph(
    g: Graph,
    ribbon: Optional[Ribbon] = None,
    basis: Optional[Basis] = None,
    seed: int = 0,
) -> IntPoly:
    from .graphs import default_basis, default_ribbon

    ribbon = ribbon or default_ribbon(g)
    basis = basis or default_basis(g, ribbon)
    _, hist = enumerate_all_jaeger(g, ribbon, basis, seed)
    return hstar_from_histogram(hist)


def gamma_of_graph(
    g: Graph,
    ribbon: Optional[Ribbon] = None,
    basis: Optional[Basis] = None,
    seed: int = 0,
) -> IntPoly:
    return gamma_transform(hstar_of_graph(g, ribbon, basis, seed))


def _greedy_walk(
    facet: FacetGraph, ribbon: Ribbon, basis: Basis, special: Optional[int]
) -> Union[frozenset[int], BlockingCut]:
    """Shared walk for the greedy constructions.

    Edges first seen at their head are taken, edges first seen at their
    tail are skipped except the designated special edge; afterwards the
    walk just tours the growing tree.
    """
    g = facet.graph
    rib = ribbon.restricted(facet.present_edges)
    start = facet_basis(facet, ribbon, basis)
    heads = {eid: head for eid, _, head in facet.arcs}
    inside: set[int] = set()
    outside: set[int] = set()
    visited: set[tuple[int, int]] = set()
    x, e = start
    while (x, e) not in visited:
        visited.add((x, e))
        if e in inside or (e not in outside and (x == heads[e] or e == special)):
            inside.add(e)
            y = g.opposite(e, x)
            x, e = y, rib.successor(y, e)
        else:
            outside.add(e)
            e = rib.successor(x, e)
    reached = {v for v, _ in visited}
    if not is_spanning_tree(g.n, [g.endpoints(f) for f in inside]):
        # non-spanning: the walk stayed on the base side of a one-way cut
        if len(inside) == g.n - 1:
            raise CrossCheckError("greedy walk produced a non-tree edge set")
        side0 = frozenset(reached)
        side1 = frozenset(range(g.n)) - side0
        for _, tail, head in facet.arcs:
            if head in side0 and tail in side1:
                raise CrossCheckError("blocking cut has an edge pointing back at the base side")
        return BlockingCut(side0, side1)
    return frozenset(inside)


def greedy_tree(
    facet: FacetGraph, ribbon: Ribbon, basis: Basis
) -> Union[frozenset[int], BlockingCut]:
    """Tour-driven tree with no tail edges, or the cut that blocked it."""
    return _greedy_walk(facet, ribbon, basis, special=None)


def almost_greedy_tree(
    facet: FacetGraph, ribbon: Ribbon, basis: Basis, eid: int
) -> Union[frozenset[int], BlockingCut]:
    """Greedy walk that additionally takes one designated edge at its tail."""
    if facet.arc(eid) is None:
        raise ValueError(f"edge {eid} is hidden in the facet")
    return _greedy_walk(facet, ribbon, basis, special=eid)


def _reaches(facet: FacetGraph, target: int) -> set[int]:
    """Vertices with a directed path to the target inside the facet."""
    into: list[list[int]] = [[] for _ in range(facet.graph.n)]
    for _, tail, head in facet.arcs:
        into[head].append(tail)
    seen = {target}
    queue = [target]
    for x in queue:
        for y in into[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def stick_tree(
    g: Graph, ribbon: Ribbon, basis: Basis, tail: int, head: int
) -> Optional[tuple[FacetGraph, JaegerTree]]:
    """The unique Jaeger tree whose only tail edge is the given oriented edge.

    Returns None exactly when the orientation agrees with the zero-tail
    tree of the top facet.  Otherwise the hosting facet is found by
    lifting the layers of everything that can reach the head (by two
    across a reversal, by one across a newly-present edge, with the
    reachability closure of the hidden fringe lifted by one as well) and
    the tree is the almost-greedy tree there.
    """
    eid = g.edge_id(tail, head)
    b0 = basis.vertex
    top = first_facet_graph(g, b0)
    arc = top.arc(eid)

    if arc == (tail, head):
        t1 = greedy_tree(top, ribbon, basis)
        if isinstance(t1, BlockingCut):
            raise CrossCheckError("top facet has a blocking cut")
        if eid in t1:
            return None
        host = top
    else:
        lay = list(top.layering)
        if arc is None:
            for v in _reaches(top, head):
                lay[v] += 1
        else:
            lifted = _reaches(top, head)
            fringe: set[int] = set()
            for hid in top.hidden_edges:
                u, w = g.endpoints(hid)
                if (u in lifted) != (w in lifted):
                    fringe.add(w if u in lifted else u)
            halo: set[int] = set()
            for u in fringe:
                halo |= _reaches(top, u)
            halo -= lifted
            for v in lifted:
                lay[v] += 2
            for v in halo:
                lay[v] += 1
        shift = lay[b0]
        host = FacetGraph(g, tuple(l - shift for l in lay))
        if host.arc(eid) != (tail, head):
            raise CrossCheckError("layer lift did not reorient the requested edge")

    tree = almost_greedy_tree(host, ribbon, basis, eid)
    if isinstance(tree, BlockingCut):
        raise CrossCheckError("almost-greedy walk failed to span the lifted facet")
    jt = make_jaeger_tree(host, b0, tree)
    ok, witness = is_jaeger_tree(host, ribbon, basis, tree)
    if not ok or jt.tail_edges != frozenset({eid}):
        raise CrossCheckError(f"stick construction broke its contract at {witness}")
    return host, jt


def _compare_within_facet(
    a: frozenset[int],
    b: frozenset[int],
    facet: FacetGraph,
    ribbon: Ribbon,
    basis: Basis,
) -> int:
    """Tour order inside one facet: the first differing edge belongs to the later tree."""
    if a == b:
        return 0
    g = facet.graph
    rib = ribbon.restricted(facet.present_edges)
    start = facet_basis(facet, ribbon, basis)
    x, e = start
    moved = False
    while not (moved and (x, e) == start):
        moved = True
        in_a, in_b = e in a, e in b
        if in_a != in_b:
            return 1 if in_a else -1
        if in_a:
            y = g.opposite(e, x)
            x, e = y, rib.successor(y, e)
        else:
            e = rib.successor(x, e)
    raise CrossCheckError("distinct trees produced identical tours")


def compare_face_by_face(
    a: JaegerTree, b: JaegerTree, weight: WeightFunction, ribbon: Ribbon, basis: Basis
) -> int:
    """Facets in decreasing weight first, tour order within a facet."""
    if a.facet.layering == b.facet.layering:
        return _compare_within_facet(a.edges, b.edges, a.facet, ribbon, basis)
    va, vb = facet_value(a.facet, weight), facet_value(b.facet, weight)
    if va == vb:
        raise CrossCheckError("weight function is not generic: facet values tie")
    return -1 if va > vb else 1


_RANK_HEAD, _RANK_HIDDEN, _RANK_TAIL_OUT, _RANK_TAIL_IN = 0, 1, 2, 3


def _quad_status(tree: JaegerTree, e: int) -> tuple:
    arc = tree.facet.arc(e)
    if arc is None:
        return ("hidden",)
    return ("present", arc, e in tree.edges)


def _quad_rank(status: tuple, x: int) -> int:
    if status[0] == "hidden":
        return _RANK_HIDDEN
    _, (tail, head), member = status
    if x == tail:
        return _RANK_TAIL_IN if member else _RANK_TAIL_OUT
    if member:
        return _RANK_HEAD
    raise CrossCheckError("non-tree edge met head-first at a first difference")


def compare_quadratic(
    a: JaegerTree, b: JaegerTree, ribbon: Ribbon, basis: Basis
) -> int:
    """Single order over all facets, read off one lockstep tour of the graph.

    Both tours run in the whole graph with hidden edges tracked; at the
    first pair where the edge's state differs, the ranking is head edge,
    then hidden, then tail-first skipped, then tail edge.
    """
    if a.key() == b.key():
        return 0
    g = a.facet.graph
    x, e = basis
    moved = False
    while not (moved and (x, e) == basis):
        moved = True
        sa, sb = _quad_status(a, e), _quad_status(b, e)
        if sa != sb:
            return -1 if _quad_rank(sa, x) < _quad_rank(sb, x) else 1
        if sa[0] == "present" and sa[2]:
            y = g.opposite(e, x)
            x, e = y, ribbon.successor(y, e)
        else:
            e = ribbon.successor(x, e)
    raise CrossCheckError("distinct trees produced identical tracked tours")


def sort_face_by_face(
    trees: Iterable[JaegerTree], weight: WeightFunction, ribbon: Ribbon, basis: Basis
) -> list[JaegerTree]:
    return sorted(trees, key=cmp_to_key(lambda s, t: compare_face_by_face(s, t, weight, ribbon, basis)))


def sort_quadratic(
    trees: Iterable[JaegerTree], ribbon: Ribbon, basis: Basis
) -> list[JaegerTree]:
    return sorted(trees, key=cmp_to_key(lambda s, t: compare_quadratic(s, t, ribbon, basis)))


def interior_polynomial(facet: FacetGraph, ribbon: Ribbon, basis: Basis) -> IntPoly:
    """h*-vector of one facet: trees counted by tail edges with undirected cuts."""
    from .facets import is_directed_cut
    from .graphs import fundamental_cut

    g = facet.graph
    counts = [0] * g.n
    for tree in enumerate_jaeger_trees(facet, ribbon, basis):
        r = 0
        for eid in tree.tail_edges:
            side0, side1 = fundamental_cut(g, tree.edges, eid, basis.vertex)
            if is_directed_cut(facet, side0, side1) == "undirected":
                r += 1
        counts[r] += 1
    return IntPoly(tuple(counts))


def standard_orientation_facets(g: Graph) -> tuple[FacetGraph, FacetGraph]:
    """The two all-one-way orientations of a bipartite graph, as facets."""
    classes = g.bipartition()
    if classes is None:
        raise ValueError("standard orientations need a bipartite graph")
    zero, one = classes
    up = tuple(0 if v in zero else 1 for v in range(g.n))
    down = tuple(0 if v in zero else -1 for v in range(g.n))
    return FacetGraph(g, up), FacetGraph(g, down)


def interior_of_bipartite(
    g: Graph, ribbon: Optional[Ribbon] = None, basis: Optional[Basis] = None
) -> IntPoly:
    """Interior polynomial of a bipartite graph via its standard orientation.

    The two standard orientations are mirror images and must agree; this
    is asserted rather than assumed.
    """
    from .graphs import default_basis, default_ribbon

    ribbon = ribbon or default_ribbon(g)
    basis = basis or default_basis(g, ribbon)
    up, down = standard_orientation_facets(g)
    a = interior_polynomial(up, ribbon, basis)
    b = interior_polynomial(down, ribbon, basis)
    if a != b:
        raise CrossCheckError(f"mirror orientations disagree: {a.to_list()} vs {b.to_list()}")
    return a


def shelling_report(
    trees: Sequence[JaegerTree],
    order: str,
    ribbon: Ribbon,
    basis: Basis,
    weight: Optional[WeightFunction] = None,
    geometric: bool = False,
    seed: int = 0,
) -> dict:
    """Attachment data along a shelling order.

    Verifies the input really is sorted, reports the tail-edge count of
    each tree, and optionally checks the attachments geometrically: the
    barycenter (plus one random interior point) of every tail-edge face
    must lie in an earlier simplex, and of every head-edge face in none.
    """
    if order == "f":
        if weight is None:
            raise ValueError("the face-by-face order needs its weight function")
        cmp = lambda s, t: compare_face_by_face(s, t, weight, ribbon, basis)
    elif order == "quad":
        cmp = lambda s, t: compare_quadratic(s, t, ribbon, basis)
    else:
        raise ValueError(f"unknown order {order!r}")
    for s, t in zip(trees, trees[1:]):
        if cmp(s, t) >= 0:
            raise ValueError("trees are not sorted by the requested order")

    rows = []
    hist = [0] * (trees[0].facet.graph.n if trees else 1)
    for pos, tree in enumerate(trees, start=1):
        rows.append(
            {
                "position": pos,
                "facet": tree.facet.index,
                "attach_count": tree.tail_count,
                "tail_edges": sorted(tree.tail_edges),
                "edges": [list(arc) for arc in tree.directed_edges],
            }
        )
        hist[tree.tail_count] += 1
    if hist[0] != 1:
        raise CrossCheckError(f"a shelling must have exactly one free simplex, got {hist[0]}")

    if geometric:
        _check_attachments_geometrically(trees, seed)
    return {"rows": rows, "histogram": hist}


def _check_attachments_geometrically(trees: Sequence[JaegerTree], seed: int) -> None:
    from .geometry import affine_membership, barycenter, edge_vector, random_convex_point

    rng = random.Random(seed)
    earlier: list[list[tuple[int, ...]]] = []
    for tree in trees:
        n = tree.facet.graph.n
        vecs = {eid: edge_vector(t, h, n) for eid, t, h in tree.directed_edges}
        for eid in sorted(tree.edges):
            face = [vecs[f] for f in sorted(tree.edges - {eid})]
            if not face:
                continue  # two-vertex host: the faces of a point are empty
            probes = [barycenter(face), random_convex_point(face, rng)]
            expected = eid in tree.tail_edges
            for p in probes:
                covered = any(
                    affine_membership(p, simplex) != "outside" for simplex in earlier
                )
                if covered != expected:
                    kind = "tail" if expected else "head"
                    raise CrossCheckError(
                        f"{kind}-edge face {eid} of tree {sorted(tree.edges)} "
                        f"{'missed' if expected else 'hit'} the earlier simplices"
                    )
        earlier.append([vecs[eid] for eid in sorted(tree.edges)])
