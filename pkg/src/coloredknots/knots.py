"""Bundled knot diagrams.

Most are generated from their checkerboard graphs so that, with the white
regions of that graph, the Goeritz matrix is the one used in the worked
examples: 5_2 gives [[-2,1],[1,-4]], 12a_0803 gives [[-11,1],[1,-2]], 11n_141
the 5x5 matrix in :data:`GOERITZ_11N141`, 7_1 gives (-7).
"""

from __future__ import annotations

from .diagram import PlanarDiagram, from_tait_graph, parse_pd, tait_cycle, torus_knot

TREFOIL_PD = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"
FIGURE_EIGHT_PD = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]"

GOERITZ_5_2 = [[-2, 1], [1, -4]]
GOERITZ_12A0803 = [[-11, 1], [1, -2]]
GOERITZ_11N141 = [
    [-2, 1, 0, 0, 0],
    [1, -2, 1, 0, 0],
    [0, 1, -1, -1, 1],
    [0, 0, -1, 3, 0],
    [0, 0, 1, 0, -5],
]
GOERITZ_7_1 = [[-7]]


def trefoil() -> PlanarDiagram:
    """Left-handed trefoil."""
    return parse_pd(TREFOIL_PD, name="3_1")


def figure_eight() -> PlanarDiagram:
    return parse_pd(FIGURE_EIGHT_PD, name="4_1")


def twist_knot(half_twists: int, iota: int = 1, name: str | None = None) -> PlanarDiagram:
    # checkerboard graph: a triangle with one side replaced by parallel edges
    return tait_cycle([(1, iota), (1, iota), (half_twists, iota)], name=name)


def five_two() -> PlanarDiagram:
    return twist_knot(3, name="5_2")


def six_one() -> PlanarDiagram:
    return twist_knot(4, name="6_1")


def twelve_a_0803() -> PlanarDiagram:
    return twist_knot(10, name="12a_0803")


def seven_four() -> PlanarDiagram:
    """Pretzel P(3,1,3), in the chirality sharing cu with the left trefoil mod 3."""
    return tait_cycle([(3, -1), (1, -1), (3, -1)], name="7_4")


def eleven_n_141() -> PlanarDiagram:
    """Non-alternating 11-crossing knot whose checkerboard graph realises GOERITZ_11N141.

    White regions 1..5 are joined to the infinite region 0 along three
    paths: 0-1-2-3, 0=4-3 (double edge 0-4) and 0=5-3 (four edges 0-5).
    """
    edges = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, -1), (4, 0, -1), (4, 0, -1), (3, 5, 1)]
    edges += [(5, 0, 1)] * 4
    rotation = {
        0: [(0, 0), (4, 1), (5, 1), (7, 1), (8, 1), (9, 1), (10, 1)],
        1: [(0, 1), (1, 0)],
        2: [(1, 1), (2, 0)],
        3: [(6, 0), (3, 0), (2, 1)],
        4: [(3, 1), (5, 0), (4, 0)],
        5: [(6, 1), (10, 0), (9, 0), (8, 0), (7, 0)],
    }
    return from_tait_graph(edges, rotation, name="11n_141")


BUILDERS = {
    "3_1": trefoil,
    "4_1": figure_eight,
    "5_1": lambda: torus_knot(5, "left"),
    "5_2": five_two,
    "6_1": six_one,
    "7_1": lambda: torus_knot(7, "left"),
    "7_4": seven_four,
    "11n_141": eleven_n_141,
    "12a_0803": twelve_a_0803,
}


def bundled(name: str) -> PlanarDiagram:
    d = BUILDERS[name]()
    return PlanarDiagram(d.crossings, name=name)


def all_bundled() -> dict[str, PlanarDiagram]:
    return {name: bundled(name) for name in BUILDERS}
