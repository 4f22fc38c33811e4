import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ordpareto.core import A_TAIL, ConeMatrix, tail_transform
from ordpareto.nondominance import (
    EmptyPointSetError,
    PointSet,
    cone_filter,
    is_supported,
    mapping_check,
    pareto_filter,
    supporting_weights,
    tail_filter,
)

from conftest import random_point_set

point_sets = st.integers(1, 5).flatmap(
    lambda k: st.lists(
        st.lists(st.integers(0, 20), min_size=k, max_size=k).map(tuple),
        min_size=1,
        max_size=20,
    )
)


class TestParetoFilter:
    def test_routes_tails(self):
        tails = ((3, 2, 1), (2, 1, 1), (2, 2, 0), (2, 2, 0), (3, 1, 0), (4, 2, 0))
        kept = pareto_filter(PointSet(tails, space_tag="tail"))
        assert kept.points == ((2, 1, 1), (2, 2, 0), (2, 2, 0), (3, 1, 0))

    def test_four_vector_example(self):
        pts = ((4, 1, 0), (3, 3, 1), (2, 2, 2), (3, 2, 2))
        kept = pareto_filter(PointSet(pts))
        assert set(kept.points) == {(4, 1, 0), (3, 3, 1), (2, 2, 2)}

    def test_singleton(self):
        assert pareto_filter(PointSet(((5, 5),))).points == ((5, 5),)

    def test_empty_errors(self):
        with pytest.raises(EmptyPointSetError):
            pareto_filter(PointSet(()))

    def test_max_sense(self):
        kept = pareto_filter(PointSet(((1, 2), (2, 1), (0, 0))), sense="max")
        assert set(kept.points) == {(1, 2), (2, 1)}

    @given(point_sets)
    def test_idempotent(self, pts):
        ps = PointSet(tuple(pts))
        once = pareto_filter(ps)
        assert pareto_filter(once).points == once.points

    @given(point_sets)
    def test_no_synthesized_points(self, pts):
        ps = PointSet(tuple(pts))
        assert set(pareto_filter(ps).points) <= set(pts)

    @given(point_sets)
    def test_kept_points_undominated(self, pts):
        from ordpareto.core import pareto_dominates

        kept = pareto_filter(PointSet(tuple(pts)))
        for y in kept.points:
            assert not any(pareto_dominates(p, y) for p in pts)


class TestConeFilter:
    def test_routes_countings(self):
        counts = ((1, 1, 1), (1, 0, 1), (0, 2, 0), (0, 2, 0), (2, 1, 0), (2, 2, 0))
        kept = cone_filter(PointSet(counts), ConeMatrix(3, A_TAIL))
        assert set(kept.points) == {(1, 0, 1), (0, 2, 0), (2, 1, 0)}

    def test_four_vector_countings(self):
        counts = ((3, 1, 0), (0, 2, 1), (0, 0, 2), (1, 0, 2))
        kept = cone_filter(PointSet(counts), ConeMatrix(3, A_TAIL))
        assert set(kept.points) == {(3, 1, 0), (0, 2, 1), (0, 0, 2)}

    def test_singleton(self):
        kept = cone_filter(PointSet(((1, 2, 3),)), ConeMatrix(3, A_TAIL))
        assert kept.points == ((1, 2, 3),)

    def test_tail_filter_convenience(self):
        counts = ((1, 1, 1), (1, 0, 1))
        assert tail_filter(PointSet(counts)).points == ((1, 0, 1),)


class TestMappingCheck:
    def test_routes_instance(self):
        counts = ((1, 1, 1), (1, 0, 1), (0, 2, 0), (0, 2, 0), (2, 1, 0), (2, 2, 0))
        assert mapping_check(PointSet(counts), ConeMatrix(3, A_TAIL))

    def test_singleton(self):
        assert mapping_check(PointSet(((4, 0, 1),)), ConeMatrix(3, A_TAIL))

    def test_random_sets(self):
        rng = random.Random(99)
        for _ in range(100):
            pts = random_point_set(rng)
            cone = ConeMatrix(len(pts[0]), A_TAIL)
            assert mapping_check(PointSet(tuple(pts)), cone)


class TestSupportedness:
    Y = PointSet(((4, 1), (5, 0), (2, 2)))

    def test_unsupported_point(self):
        # (4,1) is non-dominated but not minimal for any positive weighting
        assert set(pareto_filter(self.Y).points) == {(4, 1), (5, 0), (2, 2)}
        assert not is_supported((4, 1), self.Y)

    def test_supported_points(self):
        assert is_supported((5, 0), self.Y)
        assert is_supported((2, 2), self.Y)

    def test_singleton_supported(self):
        assert is_supported((3, 3), PointSet(((3, 3),)))

    def test_dominated_point_rejected(self):
        with pytest.raises(Exception):
            is_supported((9, 9), PointSet(((9, 9), (1, 1))))

    def test_witness_weights_minimize(self):
        lam = supporting_weights((2, 2), self.Y)
        assert lam is not None
        assert all(w > 0 for w in lam)
        assert sum(lam) == 1
        value = sum(w * c for w, c in zip(lam, (2, 2)))
        for other in self.Y.points:
            assert value <= sum(w * c for w, c in zip(lam, other))

    def test_unsupported_has_no_witness(self):
        assert supporting_weights((4, 1), self.Y) is None

    @settings(deadline=None, max_examples=25)
    @given(point_sets)
    def test_witnesses_on_random_sets(self, pts):
        ps = PointSet(tuple(pts))
        for y in set(pareto_filter(ps).points):
            lam = supporting_weights(y, ps)
            if lam is None:
                continue
            assert all(isinstance(w, Fraction) and w > 0 for w in lam)
            value = sum(w * c for w, c in zip(lam, y))
            assert all(
                value <= sum(w * c for w, c in zip(lam, p)) for p in pts
            )
