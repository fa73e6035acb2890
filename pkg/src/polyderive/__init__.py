"""Exact-arithmetic toolkit for support systems and derived polygons.

A closed space polygon is *regular* when vectors u_1..u_n exist whose
consecutive cross products reproduce its edges; those vectors, read as points
from a common origin, form its *derived polygon*. This package decides
regularity from the corner determinants, constructs the support systems
(rational for even n, quadratic-extension-valued for odd n), and verifies the
rigid geometry of the derivatives: planar zero-area quadrangles and
pentagons, and hexagons split across two parallel planes.
"""

from .derived import (
    DerivedPolygon,
    HexType,
    PlanarityReport,
    PlaneDecomposition,
    SecondDerivativeResult,
    derive,
    derived_deltas,
    hex_type,
    is_planar,
    planar_self_intersection,
    second_derivative_type,
    strongly_regular_check,
    two_plane_decomposition,
)
from .generators import (
    GenConfig,
    GenerationBudgetError,
    alternating_sign_hexagon,
    random_generic_polygon,
    random_regular_pentagon,
    regular_hexagon_via_lift,
    zero_area_planar_hexagon,
)
from .oracle import (
    FloatValidation,
    SupportMatrix,
    alternating_product_identity,
    build_support_matrix,
    derived_relation_defects,
    float_cross_validate,
    row_sum_defect,
    submatrix_delta,
)
from .polygon import (
    GenericityReport,
    NonGenericPolygonError,
    Polygon,
    SignPattern,
    delta_sign_pattern,
    deltas,
    derivability_defect,
    edge_vectors,
    ensure_generic,
    is_generic,
    mirror,
)
from .regularity import (
    IrregularPolygonError,
    RegularityVerdict,
    SupportBasis,
    SupportCheck,
    SupportSystem,
    build_support_system,
    canonical_alpha,
    check_regularity,
    closure_defect,
    nested_cross_identity,
    support_basis,
    support_system,
    verify_support,
)
from .scalars import (
    QuadExt,
    RadicandMismatchError,
    Scalar,
    format_scalar,
    parse_rational,
    parse_scalar,
    rational,
    scalar_sign,
)
from .vectors import Vec3, area_vector, cross, dot, mixed, vec3

__version__ = "0.1.0"

__all__ = [
    "DerivedPolygon",
    "FloatValidation",
    "GenConfig",
    "GenerationBudgetError",
    "GenericityReport",
    "HexType",
    "IrregularPolygonError",
    "NonGenericPolygonError",
    "PlanarityReport",
    "PlaneDecomposition",
    "Polygon",
    "QuadExt",
    "RadicandMismatchError",
    "RegularityVerdict",
    "Scalar",
    "SecondDerivativeResult",
    "SignPattern",
    "SupportBasis",
    "SupportCheck",
    "SupportMatrix",
    "SupportSystem",
    "Vec3",
    "alternating_product_identity",
    "alternating_sign_hexagon",
    "area_vector",
    "build_support_matrix",
    "build_support_system",
    "canonical_alpha",
    "check_regularity",
    "closure_defect",
    "cross",
    "delta_sign_pattern",
    "deltas",
    "derivability_defect",
    "derive",
    "derived_deltas",
    "derived_relation_defects",
    "dot",
    "edge_vectors",
    "ensure_generic",
    "float_cross_validate",
    "format_scalar",
    "hex_type",
    "is_generic",
    "is_planar",
    "mirror",
    "mixed",
    "nested_cross_identity",
    "parse_rational",
    "parse_scalar",
    "planar_self_intersection",
    "random_generic_polygon",
    "random_regular_pentagon",
    "rational",
    "regular_hexagon_via_lift",
    "row_sum_defect",
    "scalar_sign",
    "second_derivative_type",
    "strongly_regular_check",
    "submatrix_delta",
    "support_basis",
    "support_system",
    "two_plane_decomposition",
    "vec3",
    "verify_support",
    "zero_area_planar_hexagon",
]
