"""Randomized verification suites behind the ``verify`` command.

Each suite draws seeded fixtures, asserts one family of exact claims, and
reports per-sample failures with the first counterexample serialized. Suite
ids are the stable tokens of the CLI contract.

Bounded rational sampling occasionally lands on configurations outside a
claim's preconditions, e.g. a perfectly valid regular hexagon whose
derivative has a zero corner determinant. Such draws are redrawn with a
fresh seed and counted in the result; only violations of a claim's
conclusion count as failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .derived import (
    derive,
    hex_type,
    is_planar,
    planar_self_intersection,
    second_derivative_type,
    strongly_regular_check,
    two_plane_decomposition,
)
from .generators import (
    GenConfig,
    random_generic_polygon,
    random_regular_pentagon,
    regular_hexagon_via_lift,
)
from .oracle import (
    alternating_product_identity,
    derived_relation_defects,
    row_sum_defect,
)
from .polygon import NonGenericPolygonError, deltas, edge_vectors
from .regularity import build_support_system, check_regularity, nested_cross_identity
from .reports import polygon_to_json, vec3_to_json
from .vectors import Vec3, area_vector

SCALE_FACTORS = (Fraction(1), Fraction(2), Fraction(-3), Fraction(1, 2))
SCALE_PAIRS = (
    (Fraction(1), Fraction(1)),
    (Fraction(2), Fraction(1, 3)),
    (Fraction(-3), Fraction(2)),
    (Fraction(1, 2), Fraction(-1)),
)

_ATTEMPTS_PER_SAMPLE = 100


class _DegenerateDraw(Exception):
    """The sampled fixture missed a claim's precondition; redraw it."""


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    samples: int
    failures: int
    first_counterexample: dict | None
    redraws: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "samples": self.samples,
            "failures": self.failures,
            "redraws": self.redraws,
            "passed": self.passed,
            "counterexample": self.first_counterexample,
        }


def _child_seed(seed: int, salt: int, index: int) -> int:
    return (seed * 1_000_003 + salt * 7_919 + index) & 0x7FFF_FFFF_FFFF_FFFF


def _run(
    name: str,
    samples: int,
    seed: int,
    salt: int,
    check_one: Callable[[int], dict | None],
) -> SuiteResult:
    failures = 0
    redraws = 0
    first: dict | None = None
    for index in range(samples):
        counterexample: dict | None = None
        for attempt in range(_ATTEMPTS_PER_SAMPLE):
            child = _child_seed(seed, salt, index * (_ATTEMPTS_PER_SAMPLE + 1) + attempt)
            try:
                counterexample = check_one(child)
            except _DegenerateDraw:
                redraws += 1
                continue
            break
        else:
            counterexample = {
                "failed": f"no draw met the preconditions within {_ATTEMPTS_PER_SAMPLE} attempts",
                "sample": index,
            }
        if counterexample is not None:
            failures += 1
            if first is None:
                first = counterexample
    return SuiteResult(name, samples, failures, first, redraws)


def _random_rational_vec(rng: random.Random, bound: int = 9) -> Vec3:
    def part() -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    return Vec3(part(), part(), part())


def _suite_quadrangle_derivatives(samples: int, seed: int) -> SuiteResult:
    """Every generic quadrangle is regular with determinants (d, -d, d, -d);
    its derivative is planar, has zero area vector, and self-intersects."""

    def check_one(child: int) -> dict | None:
        cfg = GenConfig(seed=child)
        polygon = random_generic_polygon(4, cfg)
        edges = edge_vectors(polygon)
        values = deltas(edges)
        payload = {"polygon": polygon_to_json(polygon), "seed": cfg.seed}
        if not (
            values[1] == -values[0]
            and values[2] == values[0]
            and values[3] == -values[0]
        ):
            return {**payload, "failed": "determinant recurrence"}
        if not check_regularity(values).regular:
            return {**payload, "failed": "regularity"}
        derived = derive(build_support_system(edges, alpha=Fraction(1)))
        if not is_planar(derived).planar:
            return {**payload, "failed": "planarity"}
        if not area_vector(derived.vertices).is_zero():
            return {**payload, "failed": "zero area vector"}
        try:
            crossing = planar_self_intersection(derived)
        except ValueError as exc:
            if "degenerate" in str(exc):
                raise _DegenerateDraw from exc  # collinear derived vertices
            raise
        if not crossing:
            return {**payload, "failed": "self-intersection"}
        return None

    return _run("thm31", samples, seed, 31, check_one)


def _suite_pentagon_derivatives(samples: int, seed: int) -> SuiteResult:
    """Derivatives of regular pentagons are planar with zero area vector,
    exactly, in the quadratic extension carrying the scale root."""

    def check_one(child: int) -> dict | None:
        cfg = GenConfig(seed=child)
        polygon = random_regular_pentagon(cfg)
        edges = edge_vectors(polygon)
        payload = {"polygon": polygon_to_json(polygon), "seed": cfg.seed}
        derived = derive(build_support_system(edges))
        if not is_planar(derived).planar:
            return {**payload, "failed": "planarity"}
        if not area_vector(derived.vertices).is_zero():
            return {**payload, "failed": "zero area vector"}
        return None

    return _run("thm41", samples, seed, 41, check_one)


def _suite_hexagon_types(samples: int, seed: int) -> SuiteResult:
    """Derivatives of a regular hexagon are strongly regular and share one
    type across the whole scaling family."""

    def check_one(child: int) -> dict | None:
        cfg = GenConfig(seed=child)
        polygon, _system = regular_hexagon_via_lift(cfg)
        edges = edge_vectors(polygon)
        payload = {"polygon": polygon_to_json(polygon), "seed": cfg.seed}
        types = []
        for alpha in SCALE_FACTORS:
            derived = derive(build_support_system(edges, alpha=alpha))
            values = deltas(derived.edges)
            try:
                symmetric = strongly_regular_check(values)
            except NonGenericPolygonError as exc:
                raise _DegenerateDraw from exc  # zero derived determinant
            if not symmetric:
                return {**payload, "failed": f"strong regularity at alpha {alpha}"}
            types.append(hex_type(values))
        if any(t != types[0] for t in types[1:]):
            return {**payload, "failed": "type depends on the scale factor"}
        return None

    return _run("thm51", samples, seed, 51, check_one)


def _suite_second_derivatives(samples: int, seed: int) -> SuiteResult:
    """Second derivatives keep the type of the first, determinants shifting
    cyclically: d''_1/d''_2 = d'_2/d'_3 and its two rotations."""

    def check_one(child: int) -> dict | None:
        cfg = GenConfig(seed=child)
        polygon, _system = regular_hexagon_via_lift(cfg)
        edges = edge_vectors(polygon)
        payload = {"polygon": polygon_to_json(polygon), "seed": cfg.seed}
        alpha1, alpha2 = SCALE_PAIRS[child % len(SCALE_PAIRS)]
        try:
            result = second_derivative_type(edges, alpha1, alpha2)
        except NonGenericPolygonError as exc:
            raise _DegenerateDraw from exc  # degenerate first or second derivative
        if result.first_type != result.second_type:
            return {**payload, "failed": "type changed between derivatives"}
        first, second = result.first_deltas, result.second_deltas
        shifts = (
            second[0] * first[2] == second[1] * first[1],
            second[1] * first[0] == second[2] * first[2],
            second[2] * first[1] == second[0] * first[0],
        )
        if not all(shifts):
            return {**payload, "failed": "determinant shift relations"}
        return None

    return _run("thm52", samples, seed, 52, check_one)


def _suite_two_planes(samples: int, seed: int) -> SuiteResult:
    """Derived hexagons split across two parallel planes and project to a
    zero-area hexagon in the anchor plane."""

    def check_one(child: int) -> dict | None:
        cfg = GenConfig(seed=child)
        polygon, _system = regular_hexagon_via_lift(cfg)
        edges = edge_vectors(polygon)
        payload = {"polygon": polygon_to_json(polygon), "seed": cfg.seed}
        alpha = SCALE_FACTORS[child % len(SCALE_FACTORS)]
        derived = derive(build_support_system(edges, alpha=alpha))
        try:
            split = two_plane_decomposition(derived)
        except ValueError as exc:
            if "collinear" in str(exc):
                raise _DegenerateDraw from exc  # no anchor plane
            raise
        if any(split.odd_offsets):
            return {**payload, "failed": "anchor-plane offsets not zero"}
        if not split.parallel:
            return {**payload, "failed": "even offsets differ"}
        if not split.projected_area_vector.is_zero():
            return {**payload, "failed": "projected area vector not zero"}
        return None

    return _run("sec6", samples, seed, 6, check_one)


def _suite_nested_cross(samples: int, seed: int) -> SuiteResult:
    """cross(cross(a,b), cross(b,c)) equals mixed(a,b,c) * b on random triples."""

    def check_one(child: int) -> dict | None:
        rng = random.Random(child)
        a, b, c = (_random_rational_vec(rng) for _ in range(3))
        left, right = nested_cross_identity(a, b, c)
        if left != right:
            return {
                "vectors": [vec3_to_json(v) for v in (a, b, c)],
                "failed": "nested cross identity",
            }
        return None

    return _run("eq2", samples, seed, 2, check_one)


def _suite_alternating_products(samples: int, seed: int) -> SuiteResult:
    """The alternating determinant products of the cross-product rows agree
    for arbitrary six-vector samples, no closure imposed."""

    def check_one(child: int) -> dict | None:
        rng = random.Random(child)
        vectors = tuple(_random_rational_vec(rng) for _ in range(6))
        try:
            odd, even = alternating_product_identity(vectors)
        except NonGenericPolygonError as exc:
            raise _DegenerateDraw from exc  # zero row determinant
        if odd != even:
            return {
                "vectors": [vec3_to_json(v) for v in vectors],
                "failed": "alternating product identity",
            }
        return None

    return _run("auto-id", samples, seed, 9, check_one)


def _suite_derived_relations(samples: int, seed: int) -> SuiteResult:
    """Both derived-edge determinant combinations vanish on closed fixtures."""

    def check_one(child: int) -> dict | None:
        cfg = GenConfig(seed=child)
        _polygon, system = regular_hexagon_via_lift(cfg)
        payload = {"seed": cfg.seed}
        if not row_sum_defect(system.vectors).is_zero():
            return {**payload, "failed": "row sum defect not zero"}
        try:
            first, second = derived_relation_defects(system.vectors)
        except NonGenericPolygonError as exc:
            raise _DegenerateDraw from exc  # degenerate derived hexagon
        if first or second:
            return {**payload, "failed": "derived determinant relations"}
        return None

    return _run("eq4", samples, seed, 4, check_one)


SUITES: dict[str, Callable[[int, int], SuiteResult]] = {
    "thm31": _suite_quadrangle_derivatives,
    "thm41": _suite_pentagon_derivatives,
    "thm51": _suite_hexagon_types,
    "thm52": _suite_second_derivatives,
    "sec6": _suite_two_planes,
    "eq2": _suite_nested_cross,
    "auto-id": _suite_alternating_products,
    "eq4": _suite_derived_relations,
}


def run_suite(name: str, samples: int, seed: int) -> SuiteResult:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return suite(samples, seed)
