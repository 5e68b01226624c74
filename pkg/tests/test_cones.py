"""Efficiency cones: products, extreme rays, membership, unit-cycle repair."""

from fractions import Fraction

import pytest

from effvec import (
    HamiltonianCycle,
    MonomialTransform,
    consistent_matrix,
    cycle_product,
    efficiency_cone,
    is_efficient,
    is_singleton_cone,
    monomial_similarity,
    resolve_unit_cycle,
)
from effvec.cones import chain_solution, cone_extremes, cone_membership
from helpers import fractions, identity_cycle, in_conic_hull, unit_cycle_fixture


@pytest.fixture
def subunit_cycle():
    return HamiltonianCycle.from_vertices((0, 3, 2, 1))


class TestCycleProduct:
    def test_circulant_products(self, circulant4, subunit_cycle):
        assert cycle_product(circulant4, subunit_cycle) == Fraction(1, 16)
        assert cycle_product(circulant4, identity_cycle(4)) == 16

    def test_consistent_products_all_one(self, consistent3):
        for cycle in (identity_cycle(3), HamiltonianCycle.from_vertices((0, 2, 1))):
            assert cycle_product(consistent3, cycle) == 1


class TestConeExtremes:
    def test_circulant_extremes_frozen(self, circulant4, subunit_cycle):
        extremes = cone_extremes(circulant4, subunit_cycle)
        expected = {
            fractions(1, 8, 4, 2),
            fractions(1, "1/2", "1/4", "1/8"),
            fractions(1, "1/2", "1/4", 2),
            fractions(1, "1/2", 4, 2),
        }
        assert set(extremes) == expected

    def test_extremes_satisfy_all_inequalities(self, circulant4, subunit_cycle):
        cone = efficiency_cone(circulant4, subunit_cycle)
        for ext in cone.extremes:
            assert cone.contains(ext)
            assert is_efficient(circulant4, ext).efficient

    def test_chain_solution_solves_omitted_system(self, circulant4, subunit_cycle):
        # Omitting edge t turns the other n-1 inequalities into equalities.
        edges = subunit_cycle.edges()
        for omit in range(4):
            w = chain_solution(circulant4, subunit_cycle, omit)
            for t, (i, j) in enumerate(edges):
                if t != omit:
                    assert w[i] == circulant4.entries[i][j] * w[j]

    def test_product_above_one_rejected(self, circulant4):
        with pytest.raises(ValueError):
            cone_extremes(circulant4, identity_cycle(4))

    def test_unit_product_single_ray(self, consistent3):
        extremes = cone_extremes(consistent3, identity_cycle(3))
        assert len(extremes) == 1
        cone = efficiency_cone(consistent3, identity_cycle(3))
        assert cone.singleton and is_singleton_cone(consistent3, identity_cycle(3))

    def test_subunit_cone_has_n_distinct_extremes(self, double4):
        for order in ((0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3)):
            cycle = HamiltonianCycle.from_vertices(order)
            if cycle_product(double4, cycle) < 1:
                assert len(cone_extremes(double4, cycle)) == 4


class TestConeMembership:
    def test_interior_point(self, circulant4, subunit_cycle):
        assert cone_membership(circulant4, subunit_cycle, fractions(1, 1, 1, 1))

    def test_outside_point(self, circulant4, subunit_cycle):
        assert not cone_membership(circulant4, subunit_cycle, fractions(1, 16, 1, 1))

    def test_membership_equals_conic_hull(self, circulant4, subunit_cycle):
        import random

        rng = random.Random(9)
        extremes = cone_extremes(circulant4, subunit_cycle)
        for _ in range(200):
            w = tuple(Fraction(rng.randint(1, 12), rng.randint(1, 12)) for _ in range(4))
            assert cone_membership(circulant4, subunit_cycle, w) == in_conic_hull(
                extremes, w
            )

    def test_conic_combinations_stay_inside(self, circulant4, subunit_cycle):
        import random

        rng = random.Random(10)
        extremes = cone_extremes(circulant4, subunit_cycle)
        for _ in range(200):
            coeffs = [Fraction(rng.randint(0, 8), rng.randint(1, 5)) for _ in extremes]
            if not any(coeffs):
                coeffs[0] = Fraction(1)
            blend = tuple(
                sum(c * e[i] for c, e in zip(coeffs, extremes)) for i in range(4)
            )
            assert cone_membership(circulant4, subunit_cycle, blend)


class TestResolveUnitCycle:
    def check(self, a, cycle=None):
        cycle = cycle or identity_cycle(a.n)
        out = resolve_unit_cycle(a, cycle)
        entries = [a.entries[i][j] for i, j in out.edges()]
        assert all(e <= 1 for e in entries)
        assert any(e < 1 for e in entries)
        return out

    def test_consecutive_case(self):
        a = unit_cycle_fixture(4, {2: (Fraction(1, 2), 1)})
        out = self.check(a)
        assert out.order == (0, 2, 1, 3)

    def test_wrap_case_long_offset(self):
        a = unit_cycle_fixture(6, {3: (1, 2, Fraction(1, 2))})
        out = self.check(a)
        assert out.order == (0, 1, 3, 4, 2, 5)

    def test_wrap_case_even(self):
        a = unit_cycle_fixture(4, {2: (1, Fraction(1, 2))})
        out = self.check(a)
        assert out.order == (0, 1, 3, 2)

    def test_wrap_case_odd(self):
        a = unit_cycle_fixture(5, {2: (1, 2, Fraction(1, 2))})
        out = self.check(a)
        assert out.order == (0, 2, 4, 3, 1)

    def test_transposed_consecutive_case(self):
        a = unit_cycle_fixture(4, {2: (2, 1)})
        out = self.check(a)
        assert out.order == (0, 3, 1, 2)

    def test_higher_offset_scan(self):
        # First off-unit diagonal sits at offset 3.
        a = unit_cycle_fixture(6, {3: (Fraction(1, 3), 1, 1)})
        self.check(a)

    def test_relabeled_cycle(self):
        # Same structure reached through a non-identity vertex labeling.
        a = unit_cycle_fixture(5, {2: (1, 2, Fraction(1, 2))})
        t = MonomialTransform(scale=fractions(1, 1, 1, 1, 1), perm=(3, 0, 4, 1, 2))
        b = monomial_similarity(a, t)
        cycle = HamiltonianCycle.from_vertices(tuple(t.perm[v] for v in range(5)))
        assert cycle_product(b, cycle) == 1
        out = self.check(b, cycle)
        assert sorted(out.order) == [0, 1, 2, 3, 4]

    def test_scaled_cycle_entries(self):
        # Scaling moves cycle entries off 1; reject such cycles.
        a = unit_cycle_fixture(4, {2: (1, Fraction(1, 2))})
        t = MonomialTransform(scale=fractions(1, 3, 1, 1), perm=(0, 1, 2, 3))
        b = monomial_similarity(a, t)
        with pytest.raises(ValueError):
            resolve_unit_cycle(b, identity_cycle(4))

    def test_consistent_matrix_rejected(self, consistent3):
        with pytest.raises(ValueError):
            resolve_unit_cycle(consistent3, identity_cycle(3))

    def test_output_in_subunit_set(self):
        from effvec import enumerate_cycles

        a = unit_cycle_fixture(5, {2: (1, 2, Fraction(1, 2))})
        out = self.check(a)
        _, below = enumerate_cycles(a)
        assert out in below
