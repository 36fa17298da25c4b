"""Planar diagram (PD) codes for knots.

A crossing is a quadruple ``(a, b, c, d)`` of edge labels listed
counterclockwise, starting with the incoming under-strand (Knot Atlas
convention). Slots 0 and 2 are the under-strand, slots 1 and 3 the
over-strand.

Regions are handled through *sectors*: sector ``(i, k)`` is the corner of
crossing ``i`` lying between slot ``k`` and slot ``k + 1`` (counterclockwise).
Every face of the diagram is a cycle of sectors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Quad = tuple[int, int, int, int]
Slot = tuple[int, int]  # (crossing index, slot 0..3)


class PDSyntaxError(ValueError):
    """The text is not a well-formed PD code."""


class InvalidDiagramError(ValueError):
    """The PD code is well formed but does not describe a planar knot diagram."""


_TERM = re.compile(r"X\s*[\[(]\s*([^\])]*?)\s*[\])]")


def parse_pd(text: str, name: str | None = None) -> PlanarDiagram:
    """Parse ``X(1,4,2,5),X(3,6,4,1),...`` or ``PD[X[1,4,2,5],...]``."""
    s = text.strip()
    m = re.fullmatch(r"PD\s*[\[(](.*)[\])]", s, flags=re.S)
    if m:
        s = m.group(1)
    quads = []
    pos = 0
    for match in _TERM.finditer(s):
        if s[pos:match.start()].strip(" \t\r\n,;"):
            raise PDSyntaxError(f"unexpected text {s[pos:match.start()].strip()!r}")
        pos = match.end()
        parts = [t for t in re.split(r"[\s,]+", match.group(1)) if t]
        if len(parts) != 4 or not all(re.fullmatch(r"\d+", t) for t in parts):
            raise PDSyntaxError(f"malformed crossing {match.group(0)!r}")
        quads.append(tuple(int(t) for t in parts))
    if s[pos:].strip(" \t\r\n,;"):
        raise PDSyntaxError(f"unexpected text {s[pos:].strip()!r}")
    if not quads:
        raise PDSyntaxError("no crossings found")
    return PlanarDiagram(tuple(quads), name=name)


def serialize_pd(d: PlanarDiagram) -> str:
    return ",".join("X({},{},{},{})".format(*q) for q in d.crossings)


@dataclass(frozen=True)
class OverArc:
    """A maximal over-strand: edges listed in strand order, from under-crossing to under-crossing."""

    index: int
    edges: tuple[int, ...]


@dataclass(frozen=True)
class Face:
    """A region of the diagram, given as the cycle of corners that bound it."""

    index: int
    corners: tuple[Slot, ...]


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[Quad, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(x) for x in q) for q in self.crossings))
        if any(len(q) != 4 for q in self.crossings):
            raise InvalidDiagramError("every crossing needs four edge labels")
        if not self.crossings:
            raise InvalidDiagramError("a diagram needs at least one crossing")
        counts: dict[int, int] = {}
        for q in self.crossings:
            for e in q:
                counts[e] = counts.get(e, 0) + 1
        expected = set(range(1, 2 * len(self.crossings) + 1))
        if set(counts) != expected or any(c != 2 for c in counts.values()):
            bad = sorted(e for e in expected | set(counts) if counts.get(e, 0) != 2)
            raise InvalidDiagramError(f"edges must be 1..{len(expected)}, each used twice; offending: {bad}")
        # force the derived structure so that bad codes fail at construction
        self._traversal
        if len(self.faces) != len(self.crossings) + 2:
            raise InvalidDiagramError(
                f"Euler check failed: {len(self.crossings)} crossings, {self.edge_count} edges, "
                f"{len(self.faces)} faces; the code is not planar"
            )

    def __str__(self):
        return serialize_pd(self)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @cached_property
    def _positions(self) -> dict[int, tuple[Slot, Slot]]:
        pos: dict[int, list[Slot]] = {}
        for i, q in enumerate(self.crossings):
            for k, e in enumerate(q):
                pos.setdefault(e, []).append((i, k))
        return {e: (a, b) for e, (a, b) in pos.items()}

    def twin(self, slot: Slot) -> Slot:
        """The other end of the edge leaving ``slot``."""
        a, b = self._positions[self.crossings[slot[0]][slot[1]]]
        return b if a == slot else a

    @cached_property
    def _traversal(self) -> tuple[tuple[int, ...], dict[int, tuple[Slot, Slot]]]:
        for head in self._positions[1]:
            result = self._walk(head)
            if result is not None:
                return result
        raise InvalidDiagramError("no consistent orientation: under-strands disagree")

    def _walk(self, head: Slot):
        order = []
        ends = {}
        tail = self.twin(head)
        for _ in range(self.edge_count):
            e = self.crossings[head[0]][head[1]]
            if e in ends:
                break
            if head[1] == 2:
                return None
            order.append(e)
            ends[e] = (tail, head)
            tail = (head[0], (head[1] + 2) % 4)
            head = self.twin(tail)
        if len(order) != self.edge_count:
            raise InvalidDiagramError("diagram has more than one component")
        if self.crossings[head[0]][head[1]] != 1 or head[1] == 2:
            return None
        return tuple(order), ends

    @property
    def edge_order(self) -> tuple[int, ...]:
        """Edges in the order met when travelling the knot from edge 1."""
        return self._traversal[0]

    def edge_ends(self, e: int) -> tuple[Slot, Slot]:
        """(tail, head) slots of edge ``e`` under the traversal orientation."""
        return self._traversal[1][e]

    def over_incoming_slot(self, i: int) -> int:
        """1 or 3: the slot at which the over-strand enters crossing ``i``."""
        q = self.crossings[i]
        return 1 if self.edge_ends(q[1])[1] == (i, 1) else 3

    @cached_property
    def signs(self) -> tuple[int, ...]:
        # over-strand running from slot 3 to slot 1 is a positive crossing
        return tuple(1 if self.over_incoming_slot(i) == 3 else -1 for i in range(len(self.crossings)))

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @cached_property
    def _sector_face(self) -> dict[Slot, int]:
        face_of: dict[Slot, int] = {}
        n = 0
        for i in range(len(self.crossings)):
            for k in range(4):
                s = (i, k)
                while s not in face_of:
                    face_of[s] = n
                    s = self.twin((s[0], (s[1] + 1) % 4))
                if face_of[(i, k)] == n:
                    n += 1
        return face_of

    def face_of(self, sector: Slot) -> int:
        return self._sector_face[sector]

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        corners: dict[int, list[Slot]] = {}
        seen = set()
        for start in sorted(self._sector_face):
            s = start
            while s not in seen:
                seen.add(s)
                corners.setdefault(self._sector_face[start], []).append(s)
                s = self.twin((s[0], (s[1] + 1) % 4))
        return tuple(Face(f, tuple(cs)) for f, cs in sorted(corners.items()))

    @cached_property
    def over_arcs(self) -> tuple[OverArc, ...]:
        pos = {e: i for i, e in enumerate(self.edge_order)}
        parent = {e: e for e in pos}

        def find(e):
            while parent[e] != e:
                parent[e] = parent[parent[e]]
                e = parent[e]
            return e

        for q in self.crossings:
            parent[find(q[1])] = find(q[3])
        groups: dict[int, list[int]] = {}
        for e in self.edge_order:
            groups.setdefault(find(e), []).append(e)
        arcs = []
        for edges in groups.values():
            # strand order: start at the edge leaving an under-crossing
            starts = [e for e in edges if self.edge_ends(e)[0][1] == 2]
            first = pos[starts[0]] if starts else pos[edges[0]]
            edges.sort(key=lambda e: (pos[e] - first) % len(pos))
            arcs.append(edges)
        arcs.sort(key=lambda es: min(pos[e] for e in es))
        return tuple(OverArc(i, tuple(es)) for i, es in enumerate(arcs))

    @cached_property
    def arc_of_edge(self) -> dict[int, int]:
        return {e: a.index for a in self.over_arcs for e in a.edges}

    def crossing_arcs(self, i: int) -> tuple[int, int, int]:
        """(over arc, incoming under arc, outgoing under arc) at crossing ``i``."""
        q = self.crossings[i]
        return self.arc_of_edge[q[1]], self.arc_of_edge[q[0]], self.arc_of_edge[q[2]]


def over_arcs(d: PlanarDiagram) -> tuple[OverArc, ...]:
    return d.over_arcs


def faces(d: PlanarDiagram) -> tuple[Face, ...]:
    return d.faces


def relabel(quads: Sequence[Quad], start_edge: int = 1, name: str | None = None) -> PlanarDiagram:
    """Renumber edges 1..2n along the knot, beginning with ``start_edge``."""
    pos: dict[int, list[Slot]] = {}
    for i, q in enumerate(quads):
        for k, e in enumerate(q):
            pos.setdefault(e, []).append((i, k))

    def twin(s):
        a, b = pos[quads[s[0]][s[1]]]
        return b if a == s else a

    for head in pos[start_edge]:
        mapping: dict[int, int] = {}
        ok = True
        while True:
            e = quads[head[0]][head[1]]
            if e in mapping:
                break
            if head[1] == 2:
                ok = False
                break
            mapping[e] = len(mapping) + 1
            head = twin((head[0], (head[1] + 2) % 4))
        if ok and len(mapping) == len(pos):
            new = tuple(tuple(mapping[e] for e in q) for q in quads)
            return PlanarDiagram(new, name=name)
    raise InvalidDiagramError("cannot orient the diagram consistently")


def _edge_map(quads: Sequence[Quad]) -> dict[int, int]:
    """Old-label to new-label map produced by ``relabel`` from edge 1."""
    d = relabel(quads)
    old = [e for q in quads for e in q]
    new = [e for q in d.crossings for e in q]
    return dict(zip(old, new))


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Swap over and under at every crossing, keeping the projection."""
    quads = []
    for i, (a, b, c, e) in enumerate(d.crossings):
        quads.append((b, c, e, a) if d.over_incoming_slot(i) == 1 else (e, a, b, c))
    name = None if d.name is None else f"mirror({d.name})"
    return PlanarDiagram(tuple(quads), name=name)


def connected_sum(
    d1: PlanarDiagram, a1: OverArc | int, d2: PlanarDiagram, a2: OverArc | int
) -> PlanarDiagram:
    """Join two diagrams by splicing the first edges of the chosen over-arcs.

    The result is renumbered along the knot starting from edge 1 of ``d1``.
    """
    return connected_sum_with_maps(d1, a1, d2, a2)[0]


def connected_sum_with_maps(d1, a1, d2, a2):
    """:func:`connected_sum`, also returning where each factor's edges went.

    The two maps send an edge of ``d1`` (resp. ``d2``) to the tuple of edges
    of the sum lying on it; the two spliced edges map to both halves.
    """
    a1 = a1.index if isinstance(a1, OverArc) else a1
    a2 = a2.index if isinstance(a2, OverArc) else a2
    off, n1 = d1.edge_count, len(d1.crossings)
    e1 = d1.over_arcs[a1].edges[0]
    e2 = d2.over_arcs[a2].edges[0]
    quads = [list(q) for q in d1.crossings] + [[e + off for e in q] for q in d2.crossings]
    _, (h1, k1) = d1.edge_ends(e1)
    _, (h2, k2) = d2.edge_ends(e2)
    # e1 now runs into d2 and e2 runs back into d1
    quads[n1 + h2][k2] = e1
    quads[h1][k1] = e2 + off
    quads = [tuple(q) for q in quads]
    rename = _edge_map(quads)
    d = relabel(quads, name=_sum_name(d1, d2))
    halves = (rename[e1], rename[e2 + off])
    map1 = {e: (rename[e],) for e in range(1, off + 1)}
    map2 = {e: (rename[e + off],) for e in range(1, d2.edge_count + 1)}
    map1[e1] = map2[e2] = halves
    return d, map1, map2


def _sum_name(d1, d2):
    if d1.name and d2.name:
        return f"{d1.name}#{d2.name}"
    return None


def r1_twist(d: PlanarDiagram, edge: int, sign: int = 1) -> PlanarDiagram:
    """Add a kink of the given crossing sign on ``edge``."""
    if edge not in d._positions:
        raise ValueError(f"no edge {edge} in diagram")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = d.edge_count
    loop, out = n + 1, n + 2
    _, (hi, hk) = d.edge_ends(edge)
    quads = [list(q) for q in d.crossings]
    quads[hi][hk] = out
    # edge enters the kink under, loops round and leaves over
    quads.append([edge, out, loop, loop] if sign == 1 else [edge, loop, loop, out])
    return relabel([tuple(q) for q in quads], name=d.name)


def from_tait_graph(
    edges: Sequence[tuple[int, int, int]],
    rotation: Mapping[int, Sequence[tuple[int, int]]],
    name: str | None = None,
) -> PlanarDiagram:
    """Build the diagram whose checkerboard graph is the given plane graph.

    ``edges[j] = (u, v, iota)`` joins white regions ``u`` and ``v`` through a
    crossing whose incidence number (see :mod:`coloredknots.goeritz`) is
    ``iota``. ``rotation[u]`` lists the half-edges ``(j, end)`` at ``u`` in
    counterclockwise order, ``end`` being 0 at ``edges[j][0]`` and 1 at
    ``edges[j][1]``.
    """
    from .goeritz import INCIDENCE_SIGN

    # ports around crossing j, counterclockwise: 0 NE, 1 NW, 2 SW, 3 SE
    # (tail of the graph edge on the west, head on the east)
    def next_port(h):
        return 1 if h[1] == 0 else 3

    def prev_port(h):
        return 2 if h[1] == 0 else 0

    link: dict[tuple[int, int], tuple[int, int]] = {}
    for u, hs in rotation.items():
        for t, h in enumerate(hs):
            h2 = hs[(t + 1) % len(hs)]
            a, b = (h[0], next_port(h)), (h2[0], prev_port(h2))
            link[a], link[b] = b, a
    count = sum(len(hs) for hs in rotation.values())
    if count != 2 * len(edges) or len(link) != 4 * len(edges):
        raise InvalidDiagramError("rotation system does not match the edge list")

    labels: dict[tuple[int, int], int] = {}
    incoming: dict[tuple[int, int], bool] = {}
    entry = (0, 2)
    label = 0
    while True:
        out = (entry[0], (entry[1] + 2) % 4)
        label += 1
        incoming[entry], incoming[out] = True, False
        labels[out] = labels[link[out]] = label
        entry = link[out]
        if entry == (0, 2):
            break
    if len(labels) != 4 * len(edges):
        raise InvalidDiagramError("the checkerboard graph gives a link, not a knot")

    quads = []
    for j, (_, _, iota) in enumerate(edges):
        # NE-SW under puts the white corners at slots 1 and 3 of the PD quad
        axis = (0, 2) if iota == INCIDENCE_SIGN else (1, 3)
        start = next(q for q in axis if incoming[(j, q)])
        quads.append(tuple(labels[(j, (start + t) % 4)] for t in range(4)))
    return relabel(quads, name=name)


def tait_cycle(bundles: Sequence[tuple[int, int]], name: str | None = None) -> PlanarDiagram:
    """Diagram whose checkerboard graph is a cycle of parallel-edge bundles.

    ``bundles`` lists ``(multiplicity, iota)`` around the cycle. A single
    bundle gives two regions joined by parallel edges (a twist region, the
    (p,2)-torus knot); three bundles give pretzel knots.
    """
    k = len(bundles)
    edges: list[tuple[int, int, int]] = []
    groups = []
    for b, (mult, iota) in enumerate(bundles):
        u, v = (0, 1) if k == 1 else (b, (b + 1) % k)
        groups.append(range(len(edges), len(edges) + mult))
        edges.extend((u, v, iota) for _ in range(mult))
    if k == 1:
        rotation = {0: [(j, 0) for j in groups[0]], 1: [(j, 1) for j in reversed(groups[0])]}
    else:
        rotation = {
            b: [(j, 0) for j in groups[b]] + [(j, 1) for j in reversed(groups[b - 1])]
            for b in range(k)
        }
    return from_tait_graph(edges, rotation, name=name)


def torus_knot(p: int, hand: str = "left") -> PlanarDiagram:
    """The (p,2)-torus knot as a twist region of p half twists."""
    if p < 3 or p % 2 == 0:
        raise ValueError("torus_knot needs an odd p >= 3")
    hand = hand.lower()
    if hand not in ("left", "right"):
        raise ValueError("hand must be 'left' or 'right'")
    iota = 1 if hand == "left" else -1
    return tait_cycle([(p, iota)], name=f"T({p},2){'L' if hand == 'left' else 'R'}")


def connected_sum_many(parts: Iterable[PlanarDiagram]) -> PlanarDiagram:
    parts = list(parts)
    d = parts[0]
    for other in parts[1:]:
        d = connected_sum(d, 0, other, 0)
    return d
