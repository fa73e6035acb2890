"""Derived polygons: construction and geometric structure.

The derived polygon of a regular polygon has the support vectors as vertices,
read from a common origin. Its geometry is rigid in small cases: derived
quadrangles are planar with zero oriented area and self-intersect, derived
pentagons are planar with zero oriented area, and derived hexagons split
across two parallel planes with half-turn-symmetric corner determinants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .polygon import NonGenericPolygonError, Polygon, deltas
from .regularity import SupportSystem, build_support_system
from .scalars import Scalar, scalar_sign
from .vectors import Vec3, area_vector, cross, dot, mixed

PolygonLike = Union["DerivedPolygon", Polygon]


@dataclass(frozen=True)
class DerivedPolygon:
    """Polygon whose vertices are support vectors read as points from one origin."""

    vertices: tuple[Vec3, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 3:
            raise ValueError("a derived polygon needs at least three vertices")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> tuple[Vec3, ...]:
        points = self.vertices
        count = len(points)
        return tuple(points[(i + 1) % count] - points[i] for i in range(count))


def derive(system: SupportSystem) -> DerivedPolygon:
    """Read the support vectors as vertices of the derived polygon."""
    return DerivedPolygon(tuple(system.vectors))


@dataclass(frozen=True)
class PlanarityReport:
    """``witness`` is the 1-based index of the first vertex off the plane."""

    planar: bool
    witness: int | None = None


def is_planar(polygon: PolygonLike) -> PlanarityReport:
    """Exact coplanarity of the vertices against the plane of the first three.

    Triangles are trivially planar. The check stays in the exact field even
    when the vertices carry extension-field coordinates.
    """
    points = polygon.vertices
    if len(points) < 4:
        return PlanarityReport(True)
    span_a = points[1] - points[0]
    span_b = points[2] - points[0]
    for k in range(3, len(points)):
        if mixed(span_a, span_b, points[k] - points[0]):
            return PlanarityReport(False, k + 1)
    return PlanarityReport(True)


def derived_deltas(polygon: DerivedPolygon) -> tuple[Scalar, ...]:
    """Corner determinants of the derived polygon's edge list."""
    return deltas(polygon.edges)


def strongly_regular_check(delta_values: Sequence[Scalar]) -> bool:
    """Half-turn symmetry of a hexagon's determinants: d_i = d_{i+3} for i=1..3."""
    values = tuple(delta_values)
    if len(values) != 6:
        raise ValueError("the half-turn determinant check applies to hexagons only")
    for i, value in enumerate(values):
        if not value:
            raise NonGenericPolygonError(f"corner determinant {i + 1} is zero")
    return values[0] == values[3] and values[1] == values[4] and values[2] == values[5]


@dataclass(frozen=True)
class HexType:
    """Canonical representative of the cyclic ratio d_1 : d_2 : d_3.

    Among the three cyclic rotations of the triple, each scaled so its first
    entry is one, the lexicographically smallest is the representative, which
    makes equality of types decidable.
    """

    ratio: tuple[Fraction, Fraction, Fraction]


def hex_type(delta_values: Sequence[Scalar]) -> HexType:
    """Type of a strongly regular hexagon as a canonical ratio triple."""
    if not strongly_regular_check(delta_values):
        raise ValueError("hexagon determinants lack the half-turn symmetry")
    base = tuple(delta_values[:3])
    candidates = []
    for r in range(3):
        first, second, third = base[r], base[(r + 1) % 3], base[(r + 2) % 3]
        candidates.append((Fraction(1), second / first, third / first))
    return HexType(min(candidates, key=lambda t: (t[1], t[2])))


@dataclass(frozen=True)
class PlaneDecomposition:
    """Two-plane structure of a derived hexagon.

    ``normal`` spans the plane through vertices 1, 3, 5; offsets are
    un-normalized signed heights against it. ``projections`` are the images
    of the even vertices in that plane, and ``projected_area_vector`` is the
    area vector of the flattened hexagon, which vanishes for genuine derived
    hexagons.
    """

    normal: Vec3
    odd_offsets: tuple[Scalar, Scalar, Scalar]
    even_offsets: tuple[Scalar, Scalar, Scalar]
    projections: tuple[Vec3, Vec3, Vec3]
    projected_area_vector: Vec3

    @property
    def parallel(self) -> bool:
        return self.even_offsets[0] == self.even_offsets[1] == self.even_offsets[2]


def two_plane_decomposition(polygon: PolygonLike) -> PlaneDecomposition:
    """Split a hexagon across the plane of its odd vertices.

    For the derivative of a regular hexagon the even vertices share one
    parallel plane and the projected hexagon has zero oriented area; both
    facts are returned as data rather than asserted.
    """
    points = polygon.vertices
    if len(points) != 6:
        raise ValueError("the two-plane decomposition applies to hexagons only")
    anchor = points[0]
    normal = cross(points[2] - anchor, points[4] - anchor)
    if normal.is_zero():
        raise ValueError("vertices 1, 3, 5 are collinear; no anchor plane exists")
    norm_sq = dot(normal, normal)

    def offset(point: Vec3) -> Scalar:
        return dot(point - anchor, normal)

    odd = (offset(points[0]), offset(points[2]), offset(points[4]))
    even = (offset(points[1]), offset(points[3]), offset(points[5]))
    projections = tuple(
        points[k] - (offset(points[k]) / norm_sq) * normal for k in (1, 3, 5)
    )
    flattened = [
        points[0],
        projections[0],
        points[2],
        projections[1],
        points[4],
        projections[2],
    ]
    return PlaneDecomposition(normal, odd, even, projections, area_vector(flattened))


@dataclass(frozen=True)
class SecondDerivativeResult:
    """Types and determinants of the first and second derivatives."""

    first_type: HexType
    second_type: HexType
    first_deltas: tuple[Scalar, ...]
    second_deltas: tuple[Scalar, ...]


def second_derivative_type(
    edges: Sequence[Vec3], alpha1: Fraction | int, alpha2: Fraction | int
) -> SecondDerivativeResult:
    """Derive a regular hexagon twice and report both types.

    The first derivative of a regular hexagon is strongly regular, hence
    itself regular, so the second derivative exists for any nonzero scale.
    A non-regular intermediate therefore signals a bug or a degenerate input
    and raises.
    """
    first = derive(build_support_system(edges, alpha=alpha1))
    first_values = deltas(first.edges)
    first_type = hex_type(first_values)
    second = derive(build_support_system(first.edges, alpha=alpha2))
    second_values = deltas(second.edges)
    second_type = hex_type(second_values)
    return SecondDerivativeResult(first_type, second_type, first_values, second_values)


def planar_self_intersection(polygon: PolygonLike) -> bool:
    """Proper crossing test for the opposite edge pairs of a planar quadrangle.

    Orientation signs are evaluated exactly inside the quadrangle's plane, so
    the answer is a combinatorial fact, not a tolerance call.
    """
    points = polygon.vertices
    if len(points) != 4:
        raise ValueError("the self-intersection test applies to quadrangles only")
    if not is_planar(polygon).planar:
        raise ValueError("the self-intersection test needs a planar quadrangle")
    normal = cross(points[1] - points[0], points[2] - points[0])
    if normal.is_zero():
        normal = cross(points[1] - points[0], points[3] - points[0])
    if normal.is_zero():
        raise ValueError("degenerate quadrangle: all vertices are collinear")

    def orient(p: Vec3, q: Vec3, r: Vec3) -> int:
        return scalar_sign(mixed(normal, q - p, r - p))

    def proper_cross(p: Vec3, q: Vec3, r: Vec3, s: Vec3) -> bool:
        o1, o2 = orient(p, q, r), orient(p, q, s)
        o3, o4 = orient(r, s, p), orient(r, s, q)
        return o1 * o2 < 0 and o3 * o4 < 0

    return proper_cross(points[0], points[1], points[2], points[3]) or proper_cross(
        points[1], points[2], points[3], points[0]
    )
