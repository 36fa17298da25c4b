"""Checkerboard shadings, incidence numbers and Goeritz matrices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagram import PlanarDiagram
from .linalg import Matrix, det_exact

# Global sign of the incidence number. With +1 the left-handed (p,2)-torus
# knot, drawn as a twist region whose two white regions meet at every
# crossing, has Goeritz matrix (-p).
INCIDENCE_SIGN = 1

PRIMARY = "primary"
COMPLEMENT = "complement"


@dataclass(frozen=True)
class Shading:
    """Proper 2-colouring of the faces of a diagram.

    ``white`` lists the white faces with the infinite region first; the rest
    are the numbered regions R_1..R_n.
    """

    white: tuple[int, ...]
    black: tuple[int, ...]
    variant: str

    @property
    def infinite_region(self) -> int:
        return self.white[0]

    @property
    def numbered(self) -> tuple[int, ...]:
        return self.white[1:]

    def is_white(self, face: int) -> bool:
        return face in self._white_set

    @property
    def _white_set(self) -> frozenset[int]:
        return frozenset(self.white)

    def with_infinite_region(self, r0: int) -> Shading:
        if r0 not in self.white:
            raise ValueError(f"face {r0} is not white")
        rest = tuple(f for f in self.white if f != r0)
        return Shading((r0,) + rest, self.black, self.variant)


@lru_cache(maxsize=None)
def _two_colouring(d: PlanarDiagram) -> dict[int, int]:
    colour = {}
    adj: dict[int, set[int]] = {}
    for i in range(len(d.crossings)):
        for k in range(4):
            a, b = d.face_of((i, k)), d.face_of((i, (k + 1) % 4))
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
    for start in sorted(adj):
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if g not in colour:
                    colour[g] = 1 - colour[f]
                    stack.append(g)
                elif colour[g] == colour[f]:
                    raise RuntimeError("faces admit no checkerboard colouring")
    return colour


def shade(d: PlanarDiagram, variant: str = PRIMARY, r0: int | None = None) -> Shading:
    """Checkerboard shading of ``d``.

    In the primary variant the face on the left of edge 1 is white; the
    complement swaps the colours. The infinite region defaults to the
    lowest-numbered white face.
    """
    if variant not in (PRIMARY, COMPLEMENT):
        raise ValueError(f"unknown shading variant {variant!r}")
    colour = _two_colouring(d)
    tail, _ = d.edge_ends(1)
    left = d.face_of(tail)  # sector (i, k) lies left of the edge leaving slot k
    white_colour = colour[left] if variant == PRIMARY else 1 - colour[left]
    white = tuple(f for f in sorted(colour) if colour[f] == white_colour)
    black = tuple(f for f in sorted(colour) if colour[f] != white_colour)
    s = Shading(white, black, variant)
    return s if r0 is None else s.with_infinite_region(r0)


def shadings(d: PlanarDiagram) -> tuple[Shading, Shading]:
    return shade(d, PRIMARY), shade(d, COMPLEMENT)


def incidence(d: PlanarDiagram, i: int, s: Shading) -> int:
    """Incidence number of crossing ``i``.

    Sectors 1 and 3 sit counterclockwise after the over-strand; the sign
    records whether the white corners are those or sectors 0 and 2.
    """
    return INCIDENCE_SIGN if s.is_white(d.face_of((i, 1))) else -INCIDENCE_SIGN


def white_corners(d: PlanarDiagram, i: int, s: Shading) -> tuple[int, int]:
    k = 1 if s.is_white(d.face_of((i, 1))) else 0
    return d.face_of((i, k)), d.face_of((i, k + 2))


@dataclass(frozen=True)
class GoeritzData:
    """Pre-Goeritz matrix over all white faces (infinite region first) and the reduced G."""

    shading: Shading
    pre: Matrix
    G: Matrix


def pre_goeritz(d: PlanarDiagram, s: Shading) -> Matrix:
    index = {f: t for t, f in enumerate(s.white)}
    n = len(s.white)
    g = [[0] * n for _ in range(n)]
    for i in range(len(d.crossings)):
        a, b = white_corners(d, i, s)
        if a == b:
            continue  # nugatory crossing: touches one white region twice
        x, y = index[a], index[b]
        iota = incidence(d, i, s)
        g[x][y] += iota
        g[y][x] += iota
    for x in range(n):
        g[x][x] = -sum(g[x][y] for y in range(n) if y != x)
    return g


def goeritz_data(d: PlanarDiagram, s: Shading | None = None) -> GoeritzData:
    s = shade(d) if s is None else s
    pre = pre_goeritz(d, s)
    return GoeritzData(s, pre, [row[1:] for row in pre[1:]])


def goeritz(d: PlanarDiagram, s: Shading | None = None, r0: int | None = None) -> Matrix:
    """Goeritz matrix: the pre-Goeritz matrix without the infinite region's row and column."""
    s = shade(d) if s is None else s
    if r0 is not None:
        s = s.with_infinite_region(r0)
    return goeritz_data(d, s).G


def knot_determinant(d: PlanarDiagram) -> int:
    return abs(det_exact(goeritz(d)))
