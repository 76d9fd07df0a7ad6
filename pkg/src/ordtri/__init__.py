"""Exact-arithmetic toolkit for c-ordinary triangles in planar point sets."""

from .geom import (
    IDENTICAL,
    PARALLEL,
    CanonicalLine,
    DegeneratePairError,
    Point,
    Rational,
    incident,
    intersect,
    line_through,
    orientation,
    point,
)
from .incidence import (
    DegeneracyClass,
    DegeneracyTag,
    IncidenceProfile,
    LineCensus,
    PointSet,
    SylvesterGallaiError,
    UnderdeterminedError,
    classify_degeneracy,
    enumerate_lines,
    find_ordinary_line,
    line_census,
    pair_line_multiplicity,
    points_on_line,
    spectrum_f,
    spectrum_table,
)
from .triangles import (
    DEFAULT_C_PRIME,
    DEFAULT_CONSTANTS,
    CaseTaken,
    Constants,
    PoorGraph,
    RichCasePreconditionError,
    RichCaseWitness,
    TriangleReport,
    build_poor_graph,
    count_c_ordinary,
    enumerate_all_c_ordinary,
    find_c_ordinary,
    find_case_poor_graph,
    find_case_rich_line,
    validate_c_ordinary,
)
from .bounds import (
    BoundReport,
    check_eg,
    check_incidence_bound,
    check_medium_sum,
    check_st,
    count_incidences,
    count_triangles,
    derive_constants,
    eg_lower_bound,
    st_threshold,
)
from .generators import (
    RANDOM_SCHEME,
    gen_cubic_progression,
    gen_grid,
    gen_projection_augmented,
    gen_random,
    gen_rich_line_plus,
    gen_two_line_union,
)
from .pointfile import PointFileError, format_points, parse_points

__version__ = "0.1.0"
