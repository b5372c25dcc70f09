"""Shared graph fixtures, including hand-drawn planar examples.

The planar fixtures carry the counterclockwise ribbon read off their
drawing plus a fixed basis, so the expected tours, trees and orders are
frozen constants rather than re-derived quantities.
"""

from __future__ import annotations

import itertools
import random

from symedge import Basis, Graph, Ribbon


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def diamond_graph() -> Graph:
    """Four-cycle 0-1-2-3 with the chord 1-3."""
    return Graph(4, ((0, 1), (0, 3), (1, 2), (1, 3), (2, 3)))


# --- bipartite7: 7 vertices, 9 edges, classes {0,1,2} | {3,4,5,6} ----------
# e0=03 e1=05 e2=06 e3=13 e4=14 e5=16 e6=24 e7=25 e8=26
BIPARTITE7_EDGES = ((0, 3), (0, 5), (0, 6), (1, 3), (1, 4), (1, 6), (2, 4), (2, 5), (2, 6))


def bipartite7() -> tuple[Graph, Ribbon, Basis]:
    g = Graph(7, BIPARTITE7_EDGES)
    ribbon = Ribbon(
        (
            (2, 1, 0),  # at 0: 06, 05, 03
            (4, 5, 3),  # at 1: 14, 16, 13
            (7, 8, 6),  # at 2: 25, 26, 24
            (3, 0),     # at 3: 13, 03
            (6, 4),     # at 4: 24, 14
            (7, 1),     # at 5: 25, 05
            (8, 2, 5),  # at 6: 26, 06, 16
        )
    )
    return g, ribbon, Basis(0, 0)


# the standard orientation {0,1,2} -> {3,4,5,6} as a layering
BIPARTITE7_STANDARD_LAYERING = (0, 0, 0, 1, 1, 1, 1)
BIPARTITE7_TREE_BAD = frozenset({0, 1, 3, 5, 6, 7})
BIPARTITE7_TREE_GOOD = frozenset({1, 3, 5, 6, 7, 8})
BIPARTITE7_TOUR_BAD = (
    (0, 0), (3, 3), (1, 4), (1, 5), (6, 8), (6, 2), (6, 5), (1, 3), (3, 0),
    (0, 2), (0, 1), (5, 7), (2, 8), (2, 6), (4, 4), (4, 6), (2, 7), (5, 1),
)
BIPARTITE7_TOUR_GOOD = (
    (0, 0), (0, 2), (0, 1), (5, 7), (2, 8), (6, 2), (6, 5), (1, 3), (3, 0),
    (3, 3), (1, 4), (1, 5), (6, 8), (2, 6), (4, 4), (4, 6), (2, 7), (5, 1),
)
BIPARTITE7_GOOD_TAILS = frozenset({1, 3, 6, 8})   # 05, 13, 24, 26
BIPARTITE7_GOOD_HEADS = frozenset({5, 7})         # 16, 25


# --- diamond4: the 4 ordered trees fixture ---------------------------------
# e0=01 e1=03 e2=12 e3=13 e4=23
def diamond4() -> tuple[Graph, Ribbon, Basis]:
    g = diamond_graph()
    ribbon = Ribbon(
        (
            (0, 1),        # at 0: 01, 03
            (2, 3, 0),     # at 1: 12, 13, 01
            (4, 2),        # at 2: 23, 12
            (3, 4, 1),     # at 3: 13, 23, 03
        )
    )
    return g, ribbon, Basis(0, 0)


# four trees in strictly increasing quadratic order, with their layerings
DIAMOND4_ORDERED = (
    ((0, -1, -2, -1), frozenset({0, 2, 4})),
    ((0, 0, -1, -1), frozenset({1, 2, 3})),
    ((0, 1, 2, 1), frozenset({1, 2, 4})),
    ((0, 1, 2, 1), frozenset({0, 2, 4})),
)
DIAMOND4_FIRST_TOUR = ((0, 0), (1, 2), (2, 4), (3, 1), (3, 3), (3, 4), (2, 2), (1, 3), (1, 0), (0, 1))


# --- planar8: greedy and stick-tree fixture --------------------------------
# e0=01 e1=02 e2=03 e3=14 e4=24 e5=25 e6=35 e7=36 e8=45 e9=57 e10=67
PLANAR8_EDGES = ((0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (4, 5), (5, 7), (6, 7))


def planar8() -> tuple[Graph, Ribbon, Basis]:
    g = Graph(8, PLANAR8_EDGES)
    ribbon = Ribbon(
        (
            (2, 1, 0),      # at 0: 03, 02, 01
            (3, 0),         # at 1: 14, 01
            (5, 4, 1),      # at 2: 25, 24, 02
            (7, 6, 2),      # at 3: 36, 35, 03
            (8, 3, 4),      # at 4: 45, 14, 24
            (9, 8, 5, 6),   # at 5: 57, 45, 25, 35
            (10, 7),        # at 6: 67, 36
            (9, 10),        # at 7: 57, 67
        )
    )
    return g, ribbon, Basis(0, 2)


PLANAR8_TOP_LAYERING = (0, -1, -1, -1, -2, -2, -2, -3)
PLANAR8_GREEDY_TREE = frozenset({0, 1, 2, 4, 6, 7, 10})
PLANAR8_STICK_HOST = (0, 1, -1, -1, 0, -1, -2, -2)     # query: edge 01 as 0->1
PLANAR8_STICK_TREE = frozenset({0, 1, 2, 3, 7, 8, 9})


# --- generators --------------------------------------------------------------
def all_connected_graphs(n: int):
    """Every labeled connected simple graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        chosen = tuple(pairs[i] for i in range(len(pairs)) if bits >> i & 1)
        if len(chosen) < n - 1:
            continue
        try:
            yield Graph(n, chosen)
        except ValueError:
            continue


def random_connected_graph(rng: random.Random, n_min: int = 2, n_max: int = 7,
                           edge_prob: float = 0.45) -> Graph:
    while True:
        n = rng.randint(n_min, n_max)
        pairs = [p for p in itertools.combinations(range(n), 2) if rng.random() < edge_prob]
        try:
            return Graph(n, tuple(pairs))
        except ValueError:
            continue


SMALL_FIXTURES = {
    "K2": lambda: path_graph(2),
    "P3": lambda: path_graph(3),
    "P4": lambda: path_graph(4),
    "star3": lambda: star_graph(3),
    "C3": lambda: cycle_graph(3),
    "C4": lambda: cycle_graph(4),
    "C5": lambda: cycle_graph(5),
    "K4": lambda: complete_graph(4),
    "diamond": diamond_graph,
}

MEDIUM_FIXTURES = {
    **SMALL_FIXTURES,
    "C6": lambda: cycle_graph(6),
    "K23": lambda: complete_bipartite(2, 3),
}
