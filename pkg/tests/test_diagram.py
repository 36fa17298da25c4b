import pytest

from coloredknots.diagram import (
    InvalidDiagramError,
    PDSyntaxError,
    PlanarDiagram,
    connected_sum,
    faces,
    mirror,
    over_arcs,
    parse_pd,
    r1_twist,
    serialize_pd,
    torus_knot,
)
from coloredknots.goeritz import knot_determinant
from coloredknots.knots import FIGURE_EIGHT_PD, TREFOIL_PD
from coloredknots.tables import bundled_table, load_csv


def test_parse_trefoil():
    d = parse_pd(TREFOIL_PD)
    assert d.crossings == ((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3))
    assert d.edge_count == 6


def test_parse_bracket_syntax():
    d = parse_pd(FIGURE_EIGHT_PD)
    assert len(d.crossings) == 4
    assert parse_pd(serialize_pd(d)) == d


@pytest.mark.parametrize("text", [TREFOIL_PD, FIGURE_EIGHT_PD, " X(1, 2, 2, 1) ", "X[1 4 2 5] X[3 6 4 1] X[5 2 6 3]"])
def test_round_trip(text):
    d = parse_pd(text)
    assert parse_pd(serialize_pd(d)) == d


@pytest.mark.parametrize("text", ["X(1,4,2)", "Y(1,2,2,1)", "X(1,2,2,1) junk", "", "X(1,a,2,1)", "PD[]"])
def test_malformed(text):
    with pytest.raises(PDSyntaxError):
        parse_pd(text)


def test_edge_multiplicity():
    with pytest.raises(InvalidDiagramError, match="each used twice"):
        parse_pd("X(1,4,2,5)")


def test_two_components_rejected():
    # Hopf link
    with pytest.raises(InvalidDiagramError):
        parse_pd("X(1,3,2,4),X(3,1,4,2)")


def test_non_planar_rejected():
    # consistent orientation but the rotation system is not planar
    with pytest.raises(InvalidDiagramError, match="Euler"):
        parse_pd("X(1,5,2,4),X(3,6,4,1),X(5,2,6,3)")


@pytest.mark.parametrize("name, count", [("3_1", 5), ("4_1", 6), ("7_1", 9), ("11n_141", 13)])
def test_face_counts(bundled, name, count):
    assert len(faces(bundled[name])) == count


def test_every_sector_on_one_face(bundled):
    for d in bundled.values():
        corners = [c for f in d.faces for c in f.corners]
        assert len(corners) == len(set(corners)) == 4 * len(d.crossings)


def test_over_arcs(bundled):
    assert [len(a.edges) for a in over_arcs(bundled["3_1"])] == [2, 2, 2]
    assert len(over_arcs(bundled["4_1"])) == 4
    assert len(over_arcs(parse_pd("X(1,2,2,1)"))) == 1


def test_over_arcs_partition(bundled):
    for d in bundled.values():
        edges = sorted(e for a in d.over_arcs for e in a.edges)
        assert edges == list(range(1, d.edge_count + 1))
        assert len(d.over_arcs) == len(d.crossings)
        for q in d.crossings:
            assert d.arc_of_edge[q[1]] == d.arc_of_edge[q[3]]


def test_signs_trefoil():
    assert parse_pd(TREFOIL_PD).signs == (-1, -1, -1)
    assert torus_knot(5, "left").writhe == -5
    assert torus_knot(5, "right").writhe == 5


def test_mirror(bundled):
    t = bundled["3_1"]
    assert mirror(mirror(t)) == t
    assert len(mirror(t).faces) == 5
    assert mirror(t).signs == (1, 1, 1)
    assert knot_determinant(mirror(bundled["5_2"])) == 7
    for d in bundled.values():
        assert mirror(mirror(d)) == d


def test_connected_sum_counts(bundled):
    t, f = bundled["3_1"], bundled["4_1"]
    s = connected_sum(t, 0, t, 0)
    assert len(s.crossings) == 6
    tf = connected_sum(t, t.over_arcs[1], f, f.over_arcs[2])
    assert knot_determinant(tf) == 15
    assert len(tf.faces) == len(t.faces) + len(f.faces) - 2


def test_connected_sum_arithmetic(sums):
    for a, _, b, _, s in sums:
        assert len(s.crossings) == len(a.crossings) + len(b.crossings)
        assert len(s.faces) == len(a.faces) + len(b.faces) - 2


@pytest.mark.parametrize("p", [3, 5, 7, 9, 11])
def test_torus_knot(p):
    for hand in ("left", "right"):
        d = torus_knot(p, hand)
        assert len(d.crossings) == p
        assert len(d.faces) == p + 2
    assert torus_knot(p, "right") == mirror(torus_knot(p, "left"))


@pytest.mark.parametrize("p", [2, 1, 4, -3])
def test_torus_knot_bad_p(p):
    with pytest.raises(ValueError):
        torus_knot(p)


@pytest.mark.parametrize("sign", [1, -1])
def test_r1_twist(bundled, sign):
    t = bundled["3_1"]
    for e in range(1, t.edge_count + 1):
        r = r1_twist(t, e, sign)
        assert len(r.crossings) == 4 and len(r.faces) == 6
        assert r.writhe == t.writhe + sign
        assert knot_determinant(r) == 3


def test_r1_twist_bad_edge(bundled):
    with pytest.raises(ValueError):
        r1_twist(bundled["3_1"], 7)


def test_bundled_table_matches_builders(bundled):
    records, skipped = load_csv(bundled_table())
    assert skipped == 0
    assert {r.name: r.parsed for r in records} == bundled


def test_diagram_is_hashable_and_immutable(bundled):
    d = bundled["5_2"]
    assert hash(d) == hash(PlanarDiagram(d.crossings))
    with pytest.raises(AttributeError):
        d.crossings = ()
