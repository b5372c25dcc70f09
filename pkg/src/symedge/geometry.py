"""Exact rational lattice geometry for the symmetric edge polytope.

Everything here lives in the sum-zero hyperplane of Z^V.  The lattice
point counter is the independent oracle against which the combinatorial
pipeline is verified, so it only shares the facet inequalities with the
rest of the package, never the tree machinery.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import BudgetExceededError, CrossCheckError
from .facets import FacetGraph, enumerate_facet_graphs
from .graphs import Basis, Graph, Ribbon, all_spanning_trees, tour_of_tree
from .polynomials import IntPoly, hstar_from_lattice_counts

DEFAULT_BUDGET = 10**9
_CHUNK = 1 << 21


def edge_vector(tail: int, head: int, n: int) -> tuple[int, ...]:
    """The lattice point of a directed edge: +1 at the head, -1 at the tail."""
    vec = [0] * n
    vec[head] += 1
    vec[tail] -= 1
    return tuple(vec)


def polytope_vertices(g: Graph) -> list[tuple[int, ...]]:
    """Both orientations of every edge; these are exactly the vertices."""
    out = []
    for u, v in g.edges:
        out.append(edge_vector(u, v, g.n))
        out.append(edge_vector(v, u, g.n))
    return out


@dataclass(frozen=True)
class LatticeSimplex:
    """Origin apex plus the edge vectors of a directed spanning tree."""

    n: int
    vectors: tuple[tuple[int, ...], ...]


def simplex_for_tree(facet: FacetGraph, tree: frozenset[int]) -> LatticeSimplex:
    g = facet.graph
    vecs = []
    for eid in sorted(tree):
        arc = facet.arc(eid)
        if arc is None:
            raise ValueError(f"tree edge {eid} is hidden in the facet")
        vecs.append(edge_vector(arc[0], arc[1], g.n))
    return LatticeSimplex(g.n, tuple(vecs))


def _det_bareiss(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [row[:] for row in rows]
    k = len(a)
    sign = 1
    prev = 1
    for i in range(k - 1):
        if a[i][i] == 0:
            for j in range(i + 1, k):
                if a[j][i] != 0:
                    a[i], a[j] = a[j], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for j in range(i + 1, k):
            for c in range(i + 1, k):
                a[j][c] = (a[j][c] * a[i][i] - a[j][i] * a[i][c]) // prev
            a[j][i] = 0
        prev = a[i][i]
    return sign * a[-1][-1]


def is_unimodular(simplex: LatticeSimplex) -> bool:
    """Whether the edge vectors are a basis of the sum-zero sublattice.

    Dropping one fixed coordinate identifies that sublattice with
    Z^(n-1), so the test is a determinant of absolute value one.
    """
    rows = [list(v[:-1]) for v in simplex.vectors]
    if len(rows) != simplex.n - 1:
        raise ValueError("simplex must have n-1 edge vectors")
    det = _det_bareiss(rows)
    if det == 0:
        raise ValueError("degenerate simplex: vectors are affinely dependent")
    return abs(det) == 1


def count_lattice_points(g: Graph, facets: Sequence[FacetGraph], k: int) -> int:
    """Integer points of the k-th dilation, by exhaustive box enumeration.

    A point is inside exactly when its coordinates sum to zero and every
    facet layering evaluates to at most k on it; vertices have coordinates
    in {-1,0,1}, so the box of radius k is exhaustive.
    """
    if k < 0:
        raise ValueError("dilation must be nonnegative")
    for vec in polytope_vertices(g):
        assert all(abs(c) <= 1 for c in vec)
    if k == 0:
        return 1
    n = g.n
    conormals = np.array([f.layering for f in facets], dtype=np.int64).T  # n x F
    vals = np.arange(-k, k + 1, dtype=np.int64)
    width = 2 * k + 1

    def count_block(prefix: tuple[int, ...], free: int) -> int:
        if width**free > _CHUNK and free > 1:
            return sum(count_block(prefix + (v,), free - 1) for v in vals)
        grids = np.meshgrid(*([vals] * free), indexing="ij") if free else []
        cols = [np.full(width**free, p, dtype=np.int64) for p in prefix]
        cols += [grid.ravel() for grid in grids]
        body = np.stack(cols, axis=1) if cols else np.zeros((1, 0), dtype=np.int64)
        last = -body.sum(axis=1)
        keep = np.abs(last) <= k
        pts = np.concatenate([body[keep], last[keep, None]], axis=1)
        for col in range(conormals.shape[1]):
            if pts.shape[0] == 0:
                return 0
            pts = pts[pts @ conormals[:, col] <= k]
        return int(pts.shape[0])

    return count_block((), n - 1)


def ehrhart_hstar_oracle(
    g: Graph,
    facets: Optional[Sequence[FacetGraph]] = None,
    budget: int = DEFAULT_BUDGET,
    base: int = 0,
) -> IntPoly:
    """h*-polynomial straight from lattice-point counts of n dilations."""
    n = g.n
    estimate = n * (2 * n) ** n
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)
    if facets is None:
        facets = enumerate_facet_graphs(g, base)
    counts = [count_lattice_points(g, facets, k) for k in range(n)]
    return hstar_from_lattice_counts(counts, n - 1)


def _solve_exact(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> Optional[list[Fraction]]:
    """Solve an overdetermined full-column-rank system exactly.

    Returns None when inconsistent; raises on rank deficiency.
    """
    height = len(rows)
    width = len(rows[0]) if rows else 0
    aug = [rows[i][:] + [rhs[i]] for i in range(height)]
    pivots = []
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, height) if aug[i][col] != 0), None)
        if pivot is None:
            raise ValueError("degenerate simplex: vectors are affinely dependent")
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][col]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(height):
            if i != r and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == width:
            break
    for i in range(r, height):
        if aug[i][width] != 0:
            return None
    sol = [Fraction(0)] * width
    for i, col in enumerate(pivots):
        sol[col] = aug[i][width]
    return sol


def _classify(lambdas: Iterable[Fraction]) -> str:
    lambdas = list(lambdas)
    if any(l < 0 for l in lambdas):
        return "outside"
    if any(l == 0 for l in lambdas):
        return "boundary"
    return "interior"


def point_in_simplex(p: Sequence[Fraction], simplex: LatticeSimplex) -> str:
    """Locate a sum-zero point against the apex simplex, exactly."""
    if sum(p) != 0:
        raise ValueError("point must lie in the sum-zero hyperplane")
    n = simplex.n
    rows = [[Fraction(vec[i]) for vec in simplex.vectors] for i in range(n)]
    sol = _solve_exact(rows, [Fraction(x) for x in p])
    if sol is None:
        return "outside"
    apex = 1 - sum(sol)
    return _classify([apex, *sol])


def affine_membership(
    p: Sequence[Fraction], points: Sequence[Sequence[int]]
) -> str:
    """Locate a point against the affine simplex spanned by the points."""
    n = len(points[0])
    rows = [[Fraction(pt[i]) for pt in points] for i in range(n)]
    rows.append([Fraction(1)] * len(points))
    rhs = [Fraction(x) for x in p] + [Fraction(1)]
    sol = _solve_exact(rows, rhs)
    if sol is None:
        return "outside"
    return _classify(sol)


def barycenter(points: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    k = len(points)
    return tuple(Fraction(sum(col), k) for col in zip(*points))


def random_convex_point(
    points: Sequence[Sequence[int]], rng: random.Random
) -> tuple[Fraction, ...]:
    """A convex combination with random positive integer weights."""
    weights = [rng.randint(1, 999) for _ in points]
    total = sum(weights)
    return tuple(
        Fraction(sum(w * pt[i] for w, pt in zip(weights, points)), total)
        for i in range(len(points[0]))
    )


def dissection_spot_check(
    g: Graph,
    simplices: Sequence[LatticeSimplex],
    trials: int,
    seed: int = 0,
) -> dict:
    """Sample random interior points and verify cover-once semantics.

    Every sampled point must land in at least one simplex, and a point
    interior to one simplex must meet no other simplex at all; samples
    whose every hit is a boundary hit are redrawn.
    """
    rng = random.Random(seed)
    verts = polytope_vertices(g)
    resamples = 0
    done = 0
    while done < trials:
        p = random_convex_point(verts, rng)
        statuses = [point_in_simplex(p, s) for s in simplices]
        hits = sum(1 for s in statuses if s != "outside")
        inner = sum(1 for s in statuses if s == "interior")
        if hits == 0:
            raise CrossCheckError(f"point {p} is covered by no simplex")
        if inner == 0:
            resamples += 1
            if resamples > 50 * trials:
                raise CrossCheckError("boundary resampling did not terminate")
            continue
        if hits > 1:
            raise CrossCheckError(f"point {p} lies in {hits} simplices")
        done += 1
    return {"trials": done, "resamples": resamples}


def forced_nontree_arcs(
    g: Graph, ribbon: Ribbon, basis: Basis, tree: frozenset[int]
) -> dict[int, tuple[int, int]]:
    """Per non-tree edge, the orientation pointing away from its first visit."""
    trace = tour_of_tree(g, ribbon, basis, tree)
    forced = {}
    for step in trace:
        if step.edge not in tree and step.edge not in forced:
            forced[step.edge] = (step.vertex, g.opposite(step.edge, step.vertex))
    return forced


def visibility_rows(
    g: Graph,
    ribbon: Ribbon,
    basis: Basis,
    facets: Optional[Sequence[FacetGraph]] = None,
) -> Iterator[tuple[frozenset[int], list[int], list[int]]]:
    """Per spanning tree: (tree, facets visible from its witness point,
    facets in which the tree obeys the first-visit orientation)."""
    if facets is None:
        facets = enumerate_facet_graphs(g, basis.vertex)
    delta = Fraction(1, 2 * g.m)
    for tree in all_spanning_trees(g):
        forced = forced_nontree_arcs(g, ribbon, basis, tree)
        count = len(forced)
        coords = [Fraction(0)] * g.n
        for tail, head in forced.values():
            coords[head] += 1
            coords[tail] -= 1
        scale = (1 + delta) / count
        point = [c * scale for c in coords]
        visible = []
        matching = []
        for f in facets:
            value = sum((Fraction(l) * x for l, x in zip(f.layering, point)), Fraction(0))
            if value > 1:
                visible.append(f.index)
            if all(f.arc(eid) == arc for eid, arc in forced.items()):
                matching.append(f.index)
        yield tree, visible, matching


def visibility_volume(g: Graph, ribbon: Ribbon, basis: Basis) -> int:
    """Normalized volume as a sum of facet counts visible from tree points."""
    if g.bipartition() is None:
        raise ValueError("visibility counting needs a bipartite graph")
    if g.m == g.n - 1:
        raise ValueError("tree input: spanning trees leave no edge for the witness point")
    return sum(len(visible) for _, visible, _ in visibility_rows(g, ribbon, basis))
