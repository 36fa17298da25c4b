"""The colored untying invariant cu(K, rho) = v^T G v / p  (mod p).

``v`` is obtained from a Fox colouring by labelling regions: crossing an arc
of colour ``l`` from a region labelled ``x`` gives the neighbour ``l - x``,
starting from 0 on the infinite region. Its restriction to the numbered white
regions satisfies ``G v = 0 (mod p)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .coloring import (
    FoxColoring,
    coloring_classes,
    is_colorable,
    sum_coloring,
)
from .diagram import PlanarDiagram, mirror, torus_knot
from .goeritz import Shading, goeritz, goeritz_data, knot_determinant, shade
from .linalg import Matrix, matvec, nullspace_modp, quadratic_form


class PropagationError(RuntimeError):
    """Region labels disagree around some crossing: the input is not a colouring."""


def region_labels(col: FoxColoring, s: Shading) -> dict[int, int]:
    """Label of every face, with the infinite region at 0."""
    d, p = col.diagram, col.p
    edge = col.edge_labels()
    adj: dict[int, list[tuple[int, int]]] = {}
    for i, q in enumerate(d.crossings):
        for k in range(4):
            # the edge at slot k separates sectors k-1 and k
            a, b = d.face_of((i, (k - 1) % 4)), d.face_of((i, k))
            adj.setdefault(a, []).append((b, edge[q[k]]))
            adj.setdefault(b, []).append((a, edge[q[k]]))
    r0 = s.infinite_region
    label = {r0: 0}
    stack = [r0]
    while stack:
        f = stack.pop()
        for g, lam in adj[f]:
            want = (lam - label[f]) % p
            if g not in label:
                label[g] = want
                stack.append(g)
            elif label[g] != want:
                raise PropagationError(f"faces {f} and {g} get inconsistent labels")
    return label


def dehn_vector(col: FoxColoring, s: Shading | None = None) -> list[int]:
    """Colouring vector on the numbered white regions R_1..R_n, entries in 0..p-1."""
    s = shade(col.diagram) if s is None else s
    label = region_labels(col, s)
    v = [label[f] for f in s.numbered]
    G = goeritz(col.diagram, s)
    if any(x % col.p for x in matvec(G, v)):
        raise PropagationError("colouring vector is not in the kernel of G mod p")
    return v


def cu_from_vector(G: Matrix, v, p: int) -> int:
    q = quadratic_form(G, v)
    if q % p:
        raise ArithmeticError(f"v^T G v = {q} is not divisible by {p}")
    return (q // p) % p


def cu_of_coloring(col: FoxColoring, s: Shading | None = None) -> int:
    if not col.nontrivial:
        raise ValueError("cu is only defined for nontrivial colourings")
    s = shade(col.diagram) if s is None else s
    return cu_from_vector(goeritz(col.diagram, s), dehn_vector(col, s), col.p)


def cu_set(d: PlanarDiagram, p: int) -> list[int]:
    """Sorted set of cu values over all nontrivial colouring classes (empty if not p-colourable)."""
    return sorted({cu_of_coloring(cl.canonical) for cl in coloring_classes(d, p)})


def oracle_cu_set(d: PlanarDiagram, p: int, s: Shading | None = None) -> list[int]:
    """cu values over nonzero kernel vectors of G mod p, bypassing Fox colourings."""
    G = goeritz(d, s)
    basis = nullspace_modp(G, p)
    n = len(G)
    values = set()
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        if any(coeffs):
            v = [sum(c * b[j] for c, b in zip(coeffs, basis)) % p for j in range(n)]
            values.add(cu_from_vector(G, v, p))
    return sorted(values)


def torus_sum(p: int, k: int, hand: str = "left") -> FoxColoring:
    """k-fold connected sum of (p,2)-torus knots with the diagonal colouring.

    Every summand carries the same colouring, the one whose colours differ by
    1 across a crossing.
    """
    T = torus_knot(p, hand)
    base = _unit_step_coloring(T, p)
    col = base
    for _ in range(k - 1):
        col = sum_coloring(col, 0, base, 0)
    return col


def _unit_step_coloring(T: PlanarDiagram, p: int) -> FoxColoring:
    """Based colouring whose over and incoming under colours at crossing 0 differ by 1."""
    over, under, _ = T.crossing_arcs(0)
    for cl in coloring_classes(T, p):
        for col in cl.canonical.orbit():
            if col.labels[0] == 0 and (col.labels[over] - col.labels[under]) % p == 1:
                return col
    raise ValueError(f"{T.name or 'diagram'} has no colouring with unit step at crossing 0")


def representative_index(cu: int, p: int, base: int | None = None) -> int:
    """k in 1..p with cu equal to that of the k-fold sum of left (p,2)-torus knots."""
    if base is None:
        base = cu_of_coloring(_unit_step_coloring(torus_knot(p, "left"), p))
    inv = pow(base, -1, p)
    k = cu * inv % p
    return k if k else p


@dataclass
class ClassReport:
    labels: tuple[int, ...]
    cu: int
    representative_k: int


@dataclass
class Report:
    name: str
    p: int
    determinant: int
    colorable: bool
    classes: list[ClassReport]
    cu_set: list[int]
    goeritz: Matrix
    mirror_cu_set: list[int] = field(default_factory=list)

    @property
    def representative_k(self) -> list[int]:
        return [c.representative_k for c in self.classes]

    def check(self):
        """Cross-field consistency: colourable iff classes exist iff p | det."""
        assert self.colorable == bool(self.cu_set) == bool(self.classes)
        assert self.colorable == (self.determinant % self.p == 0)
        assert self.mirror_cu_set == sorted(-x % self.p for x in self.cu_set)


def classify(d: PlanarDiagram, p: int, name: str | None = None) -> Report:
    det = knot_determinant(d)
    colorable = is_colorable(d, p)
    base = cu_of_coloring(_unit_step_coloring(torus_knot(p, "left"), p))
    classes = []
    for cl in coloring_classes(d, p):
        value = cu_of_coloring(cl.canonical)
        classes.append(ClassReport(cl.canonical.labels, value, representative_index(value, p, base)))
    values = sorted({c.cu for c in classes})
    r = Report(
        name=name or d.name or "",
        p=p,
        determinant=det,
        colorable=colorable,
        classes=classes,
        cu_set=values,
        goeritz=goeritz_data(d).G,
        mirror_cu_set=sorted(-x % p for x in values),
    )
    r.check()
    return r


def mirror_cu_set(d: PlanarDiagram, p: int) -> list[int]:
    return cu_set(mirror(d), p)

