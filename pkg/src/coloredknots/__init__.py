"""Fox p-colourings of knot diagrams and the colored untying invariant cu(K, rho)."""

from .coloring import (
    ColoringClass,
    FoxColoring,
    based_representative,
    coloring_classes,
    coloring_matrix,
    is_colorable,
    sum_coloring,
)
from .cu import classify, cu_of_coloring, cu_set, dehn_vector, oracle_cu_set, torus_sum
from .diagram import (
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
from .goeritz import goeritz, incidence, knot_determinant, pre_goeritz, shade
from .linalg import det_exact, nullspace_modp, smith_normal_form

__version__ = "0.1.0"
