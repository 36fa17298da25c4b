"""Fox p-colourings of knot diagrams and their classes under inner automorphisms of D_2p."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

from .diagram import OverArc, PlanarDiagram, connected_sum_with_maps
from .goeritz import knot_determinant
from .linalg import Matrix, is_prime, nullspace_modp


@dataclass(frozen=True)
class FoxColoring:
    """Labels in Z_p on the over-arcs of ``diagram`` (indexed as ``diagram.over_arcs``)."""

    diagram: PlanarDiagram
    p: int
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(x % self.p for x in self.labels))
        if len(self.labels) != len(self.diagram.over_arcs):
            raise ValueError("one label per over-arc required")
        for i in range(len(self.diagram.crossings)):
            over, u1, u2 = self.diagram.crossing_arcs(i)
            if (self.labels[u1] + self.labels[u2] - 2 * self.labels[over]) % self.p:
                raise ValueError(f"colouring condition fails at crossing {i}")

    @property
    def nontrivial(self) -> bool:
        return len(set(self.labels)) > 1

    def edge_labels(self) -> dict[int, int]:
        return {e: self.labels[a] for e, a in self.diagram.arc_of_edge.items()}

    def transform(self, eps: int, c: int) -> FoxColoring:
        """Apply the inner automorphism l -> eps*l + c."""
        return FoxColoring(self.diagram, self.p, tuple(eps * x + c for x in self.labels))

    def orbit(self) -> Iterator[FoxColoring]:
        for eps in (1, -1):
            for c in range(self.p):
                yield self.transform(eps, c)


def _check_p(p: int):
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def coloring_matrix(d: PlanarDiagram) -> Matrix:
    """One row 2*over - under_in - under_out per crossing, columns indexed by over-arcs."""
    n = len(d.over_arcs)
    rows = []
    for i in range(len(d.crossings)):
        over, u1, u2 = d.crossing_arcs(i)
        row = [0] * n
        row[over] += 2
        row[u1] -= 1
        row[u2] -= 1
        rows.append(row)
    return rows


def coloring_space(d: PlanarDiagram, p: int) -> list[list[int]]:
    """Basis over GF(p) of all colourings, constants included."""
    _check_p(p)
    return nullspace_modp(coloring_matrix(d), p)


def all_colorings(d: PlanarDiagram, p: int) -> Iterator[FoxColoring]:
    basis = coloring_space(d, p)
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        labels = [sum(c * b[j] for c, b in zip(coeffs, basis)) for j in range(len(d.over_arcs))]
        yield FoxColoring(d, p, tuple(labels))


@dataclass(frozen=True)
class ColoringClass:
    """Orbit of a nontrivial colouring under l -> +-l + c.

    The canonical member labels arc 0 with 0 and is lexicographically least
    among the based members.
    """

    canonical: FoxColoring

    @property
    def p(self) -> int:
        return self.canonical.p

    def members(self) -> set[tuple[int, ...]]:
        return {c.labels for c in self.canonical.orbit()}

    def __contains__(self, col: FoxColoring) -> bool:
        return col.labels in self.members()


def canonical_form(col: FoxColoring) -> FoxColoring:
    return min(
        (c for c in col.orbit() if c.labels[0] == 0),
        key=lambda c: c.labels,
    )


def coloring_classes(d: PlanarDiagram, p: int) -> list[ColoringClass]:
    """All classes of nontrivial p-colourings, ordered by canonical labels."""
    _check_p(p)
    # based colourings: arc 0 pinned to 0 by an extra row
    pin = [1] + [0] * (len(d.over_arcs) - 1)
    reduced = nullspace_modp([pin] + coloring_matrix(d), p)
    seen: set[tuple[int, ...]] = set()
    classes = []
    for coeffs in itertools.product(range(p), repeat=len(reduced)):
        if not any(coeffs):
            continue
        labels = tuple(sum(c * b[j] for c, b in zip(coeffs, reduced)) % p for j in range(len(d.over_arcs)))
        if labels in seen:
            continue
        neg = tuple(-x % p for x in labels)
        seen.update((labels, neg))
        classes.append(ColoringClass(FoxColoring(d, p, min(labels, neg))))
    classes.sort(key=lambda c: c.canonical.labels)
    return classes


def is_colorable(d: PlanarDiagram, p: int) -> bool:
    """p-colourability via p | det, cross-checked against the colouring space."""
    _check_p(p)
    by_det = knot_determinant(d) % p == 0
    by_space = len(coloring_space(d, p)) > 1
    if by_det != by_space:
        raise RuntimeError(f"determinant test and colouring enumeration disagree for p={p}")
    return by_det


def based_representative(cl: ColoringClass | FoxColoring, base: OverArc | int) -> FoxColoring:
    """Member of the class labelling ``base`` with 0; ties broken by eps = +1 first."""
    col = cl.canonical if isinstance(cl, ColoringClass) else cl
    b = base.index if isinstance(base, OverArc) else base
    return col.transform(1, -col.labels[b])


def sum_coloring(
    c1: FoxColoring, a1: OverArc | int, c2: FoxColoring, a2: OverArc | int
) -> FoxColoring:
    """Colouring of ``connected_sum(c1.diagram, a1, c2.diagram, a2)``.

    Each factor is first based so that its spliced arc has colour 0.
    """
    if c1.p != c2.p:
        raise ValueError("colourings use different moduli")
    d, map1, map2 = connected_sum_with_maps(c1.diagram, a1, c2.diagram, a2)
    edge_label: dict[int, int] = {}
    for col, arc, emap in ((c1, a1, map1), (c2, a2, map2)):
        based = based_representative(col, arc).edge_labels()
        for e, new_edges in emap.items():
            for ne in new_edges:
                edge_label[ne] = based[e]
    labels = [edge_label[a.edges[0]] for a in d.over_arcs]
    return FoxColoring(d, c1.p, tuple(labels))


def restrict(col: FoxColoring, edge_map: Mapping[int, tuple[int, ...]], factor: PlanarDiagram) -> tuple[int, ...]:
    """Labels seen on the arcs of ``factor`` through an edge map from :func:`connected_sum_with_maps`."""
    edges = col.edge_labels()
    return tuple(edges[edge_map[a.edges[0]][0]] for a in factor.over_arcs)
