"""Identity oracles and the float cross-validation path."""

from __future__ import annotations

import copy
import random
from fractions import Fraction

import pytest

import golden
from golden import vecs
from polyderive import (
    GenConfig,
    NonGenericPolygonError,
    Polygon,
    alternating_product_identity,
    build_support_matrix,
    derived_relation_defects,
    float_cross_validate,
    regular_hexagon_via_lift,
    row_sum_defect,
    submatrix_delta,
    vec3,
)
from polyderive.reports import analyze_report, check_report, derive_report

BASIS_REPEATED = vecs((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 0), (0, 1, 0), (0, 0, 1))


def random_six(rng: random.Random) -> tuple:
    def coord() -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    return tuple(vec3(coord(), coord(), coord()) for _ in range(6))


class TestSupportMatrix:
    def test_rows_of_repeated_basis(self):
        matrix = build_support_matrix(BASIS_REPEATED)
        assert matrix.rows == vecs(
            (0, 1, 0), (0, 0, 1), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 0)
        )

    def test_rows_of_golden_support_are_the_edges(self):
        matrix = build_support_matrix(golden.REGULAR_HEXAGON_SUPPORT)
        assert matrix.rows == golden.REGULAR_HEXAGON_EDGES

    def test_equal_consecutive_vectors_give_a_zero_row(self):
        vectors = list(BASIS_REPEATED)
        vectors[1] = vectors[0]
        matrix = build_support_matrix(vectors)
        assert matrix.rows[1].is_zero()

    def test_needs_exactly_six(self):
        with pytest.raises(ValueError, match="six"):
            build_support_matrix(BASIS_REPEATED[:5])


class TestSubmatrixDelta:
    def test_first_consecutive_triple(self):
        matrix = build_support_matrix(golden.REGULAR_HEXAGON_SUPPORT)
        assert submatrix_delta(matrix, 1, 2, 3) == Fraction(1)

    def test_last_consecutive_triple(self):
        matrix = build_support_matrix(golden.REGULAR_HEXAGON_SUPPORT)
        assert submatrix_delta(matrix, 4, 5, 6) == Fraction(15)

    def test_index_validation(self):
        matrix = build_support_matrix(BASIS_REPEATED)
        for bad in [(0, 1, 2), (1, 1, 2), (2, 1, 3), (4, 5, 7)]:
            with pytest.raises(ValueError):
                submatrix_delta(matrix, *bad)


class TestAlternatingProductIdentity:
    def test_golden_support_products(self):
        assert alternating_product_identity(golden.REGULAR_HEXAGON_SUPPORT) == (
            Fraction(-180),
            Fraction(-180),
        )

    def test_strongly_regular_support_products(self):
        assert alternating_product_identity(golden.STRONGLY_REGULAR_HEXAGON_SUPPORT) == (
            Fraction(-5),
            Fraction(-5),
        )

    def test_holds_without_closure_on_random_samples(self):
        rng = random.Random(2024)
        checked = 0
        while checked < 100:
            try:
                odd, even = alternating_product_identity(random_six(rng))
            except NonGenericPolygonError:
                continue
            assert odd == even
            checked += 1

    def test_degenerate_sample_is_flagged_for_redraw(self):
        vectors = list(BASIS_REPEATED)
        vectors[1] = vectors[0]  # zero row forces zero determinants
        with pytest.raises(NonGenericPolygonError, match="redraw"):
            alternating_product_identity(vectors)


class TestRowSumDefect:
    def test_golden_supports_are_closed(self):
        assert row_sum_defect(golden.REGULAR_HEXAGON_SUPPORT).is_zero()
        assert row_sum_defect(golden.STRONGLY_REGULAR_HEXAGON_SUPPORT).is_zero()

    def test_lift_fixtures_are_closed(self):
        for seed in range(5):
            _polygon, system = regular_hexagon_via_lift(GenConfig(seed=seed))
            assert row_sum_defect(system.vectors).is_zero()

    def test_random_vectors_are_generically_open(self):
        rng = random.Random(99)
        assert not row_sum_defect(random_six(rng)).is_zero()


class TestDerivedRelationDefects:
    def test_golden_support(self):
        assert derived_relation_defects(golden.REGULAR_HEXAGON_SUPPORT) == (0, 0)

    def test_lift_fixtures(self):
        for seed in range(10):
            _polygon, system = regular_hexagon_via_lift(GenConfig(seed=seed))
            assert derived_relation_defects(system.vectors) == (0, 0)

    def test_open_configurations_are_out_of_contract(self):
        rng = random.Random(1)
        with pytest.raises(ValueError, match="closed"):
            derived_relation_defects(random_six(rng))


class TestFloatCrossValidation:
    def test_quadrangle_derive_report(self):
        polygon = Polygon(golden.QUADRANGLE_VERTICES)
        report = derive_report(polygon, alpha=Fraction(1))
        validation = float_cross_validate(report, tolerance=1e-9)
        assert validation.ok, validation.mismatches
        assert validation.checks > 20

    def test_regular_hexagon_derive_report(self):
        polygon = Polygon.from_edges(golden.REGULAR_HEXAGON_EDGES)
        report = derive_report(polygon, alpha=Fraction(1))
        validation = float_cross_validate(report, tolerance=1e-9)
        assert validation.ok, validation.mismatches

    def test_pentagon_derive_report_with_extension_scale(self):
        polygon = Polygon.from_edges(golden.PENTAGON_EDGES)
        report = derive_report(polygon)
        validation = float_cross_validate(report, tolerance=1e-9)
        assert validation.ok, validation.mismatches

    def test_check_and_analyze_reports(self):
        polygon = Polygon.from_edges(golden.STRONGLY_REGULAR_HEXAGON_EDGES)
        assert float_cross_validate(check_report(polygon)).ok
        assert float_cross_validate(analyze_report(polygon)).ok

    def test_corrupted_report_names_the_field(self):
        polygon = Polygon.from_edges(golden.REGULAR_HEXAGON_EDGES)
        report = derive_report(polygon, alpha=Fraction(1))
        corrupted = copy.deepcopy(report)
        corrupted["deltas"][2] = "10"  # true value is 9
        validation = float_cross_validate(corrupted)
        assert not validation.ok
        assert any(m.field == "deltas[3]" for m in validation.mismatches)

    def test_corrupted_support_vector_is_caught(self):
        polygon = Polygon.from_edges(golden.REGULAR_HEXAGON_EDGES)
        report = derive_report(polygon, alpha=Fraction(1))
        corrupted = copy.deepcopy(report)
        corrupted["support_system"]["vectors"][3][0] = "-33/9"
        validation = float_cross_validate(corrupted)
        assert not validation.ok
        assert any(
            m.field.startswith("support_system.vectors[4]") for m in validation.mismatches
        )
