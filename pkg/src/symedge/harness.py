"""Seeded random-graph experiments probing the polynomial conjectures.

Random connected bipartite graphs are generated by rejection sampling:
uniform partite split of a uniform total size, independent cross edges,
resample until connected.  Each graph is pushed through the full pipeline
and scored against three conjectured relations between its gamma and
interior polynomials.
"""

from __future__ import annotations

import io
import csv
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .facets import enumerate_facet_graphs
from .graphs import Basis, Graph, default_basis, default_ribbon
from .jaeger import (
    gamma_of_graph,
    interior_of_bipartite,
    interior_polynomial,
)
from .polynomials import IntPoly

CSV_SCHEMA = "symedge-conjectures-v1"
CSV_COLUMNS = [
    "graph_id",
    "n_vertices",
    "n_edges",
    "edges",
    "gamma",
    "interior",
    "deg_gamma",
    "deg_interior",
    "degrees_match",
    "standard_minimal",
    "gamma_collision_consistent",
]


@dataclass(frozen=True)
class ConjectureRecord:
    graph_id: int
    n: int
    m: int
    edges: tuple[tuple[int, int], ...]
    gamma: tuple[int, ...]
    interior: tuple[int, ...]
    degrees_match: bool
    standard_minimal: bool
    collision_consistent: bool


def random_connected_bipartite(
    rng: random.Random, n_min: int, n_max: int, edge_prob: float
) -> Graph:
    while True:
        total = rng.randint(n_min, n_max)
        left = rng.randint(1, total - 1)
        pairs = [
            (u, v)
            for u in range(left)
            for v in range(left, total)
            if rng.random() < edge_prob
        ]
        if len(pairs) < total - 1:
            continue
        try:
            return Graph(total, tuple(pairs))
        except ValueError:
            continue  # disconnected sample, redraw


def _coefficientwise_leq(a: IntPoly, b: IntPoly) -> bool:
    return all(a[i] <= b[i] for i in range(max(a.degree, b.degree) + 1))


def run_conjecture_batch(
    count: int,
    n_min: int = 6,
    n_max: int = 9,
    edge_prob: float = 0.5,
    seed: int = 0,
) -> tuple[list[ConjectureRecord], dict]:
    rng = random.Random(seed)
    records: list[ConjectureRecord] = []
    by_gamma: dict[tuple[int, ...], tuple[int, ...]] = {}
    inconsistencies = 0
    for gid in range(count):
        g = random_connected_bipartite(rng, n_min, n_max, edge_prob)
        ribbon = default_ribbon(g)
        basis = default_basis(g, ribbon)
        gamma = gamma_of_graph(g, ribbon, basis)
        interior = interior_of_bipartite(g, ribbon, basis)
        per_facet = [
            interior_polynomial(facet, ribbon, basis)
            for facet in enumerate_facet_graphs(g, basis.vertex)
        ]
        minimal = all(_coefficientwise_leq(interior, other) for other in per_facet)
        key = gamma.coeffs
        consistent = by_gamma.setdefault(key, interior.coeffs) == interior.coeffs
        if not consistent:
            inconsistencies += 1
        records.append(
            ConjectureRecord(
                graph_id=gid,
                n=g.n,
                m=g.m,
                edges=g.edges,
                gamma=gamma.coeffs,
                interior=interior.coeffs,
                degrees_match=gamma.degree == interior.degree,
                standard_minimal=minimal,
                collision_consistent=consistent,
            )
        )
    summary = {
        "graphs": count,
        "seed": seed,
        "degree_violations": sum(1 for r in records if not r.degrees_match),
        "minimality_violations": sum(1 for r in records if not r.standard_minimal),
        "gamma_classes": len(by_gamma),
        "collision_inconsistencies": inconsistencies,
    }
    return records, summary


def _poly_str(coeffs: Sequence[int]) -> str:
    return " ".join(str(c) for c in coeffs) if coeffs else "0"


def batch_to_csv(records: Sequence[ConjectureRecord], summary: dict) -> str:
    out = io.StringIO()
    out.write(f"# {CSV_SCHEMA}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(
            [
                r.graph_id,
                r.n,
                r.m,
                " ".join(f"{u}-{v}" for u, v in r.edges),
                _poly_str(r.gamma),
                _poly_str(r.interior),
                len(r.gamma) - 1,
                len(r.interior) - 1,
                int(r.degrees_match),
                int(r.standard_minimal),
                int(r.collision_consistent),
            ]
        )
    out.write(
        "# summary graphs={graphs} seed={seed} degree_violations={degree_violations} "
        "minimality_violations={minimality_violations} gamma_classes={gamma_classes} "
        "collision_inconsistencies={collision_inconsistencies}\n".format(**summary)
    )
    return out.getvalue()


def _densify(pairs: Sequence[tuple]) -> Graph:
    labels = sorted({x for pair in pairs for x in pair}, key=repr)
    idx = {lab: i for i, lab in enumerate(labels)}
    return Graph(len(labels), tuple((idx[u], idx[v]) for u, v in pairs))


def glue_product_check(
    edges1: Sequence[tuple], edges2: Sequence[tuple]
) -> dict:
    """Verify the product rules for graphs glued along one edge or one vertex.

    The inputs are edge lists over a shared label space; their label sets
    must intersect in exactly the two endpoints of one common edge, or in
    one vertex with no common edge.  Both the gamma and the interior
    polynomial of the union must factor as the product of the parts'.
    """
    set1 = {frozenset(e) for e in edges1}
    set2 = {frozenset(e) for e in edges2}
    verts1 = {x for e in edges1 for x in e}
    verts2 = {x for e in edges2 for x in e}
    shared_v = verts1 & verts2
    shared_e = set1 & set2
    if len(shared_v) == 2 and shared_e == {frozenset(shared_v)}:
        mode = "edge"
    elif len(shared_v) == 1 and not shared_e:
        mode = "vertex"
    else:
        raise ValueError("graphs must share exactly one edge or exactly one vertex")

    union_pairs = [tuple(sorted(e, key=repr)) for e in sorted(set1 | set2, key=repr)]
    g1, g2, gu = _densify(list(edges1)), _densify(list(edges2)), _densify(union_pairs)
    for g in (g1, g2, gu):
        if g.bipartition() is None:
            raise ValueError("product rules are stated for bipartite graphs")

    gammas = [gamma_of_graph(g) for g in (g1, g2, gu)]
    interiors = [interior_of_bipartite(g) for g in (g1, g2, gu)]
    return {
        "mode": mode,
        "gamma_parts": [p.to_list() for p in gammas[:2]],
        "gamma_union": gammas[2].to_list(),
        "gamma_product_holds": gammas[0] * gammas[1] == gammas[2],
        "interior_parts": [p.to_list() for p in interiors[:2]],
        "interior_union": interiors[2].to_list(),
        "interior_product_holds": interiors[0] * interiors[1] == interiors[2],
    }
