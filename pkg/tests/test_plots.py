from fractions import Fraction as F

import pytest
from hypothesis import given
import hypothesis.strategies as st

from cornerjet import (
    FlatGerm,
    Jet1,
    LaurentJet,
    TruncationError,
    make_boundary_plot,
    make_interior_plot,
    realize_jet,
)

from conftest import unit_jet1s


class TestMakeBoundaryPlot:
    def test_square_map(self):
        germ = make_boundary_plot(1, 1)
        assert realize_jet(germ, 4) == LaurentJet(2, [1])

    def test_quartic_contact(self):
        assert realize_jet(make_boundary_plot(2, 1), 6) == LaurentJet(4, [1])

    def test_unit_factor(self):
        germ = make_boundary_plot(1, Jet1([1, 1]))
        # oracle: t^2 * (1 + t) multiplied out by hand
        assert realize_jet(germ, 4) == LaurentJet(2, [1, 1])

    @pytest.mark.parametrize("m, unit", [(0, 1), (-3, 1), (1, -1), (1, 0)])
    def test_not_nonnegative(self, m, unit):
        with pytest.raises(ValueError, match="not certified nonnegative"):
            make_boundary_plot(m, unit)

    def test_unit_with_negative_constant_jet(self):
        with pytest.raises(ValueError, match="not certified nonnegative"):
            make_boundary_plot(1, Jet1([-1, 2]))


class TestRealizeJet:
    def test_interior(self):
        germ = make_interior_plot(1, Jet1([1, 1]))
        assert realize_jet(germ, 2) == LaurentJet(0, [1, 1])

    def test_interior_extends_polynomial_jet(self):
        germ = make_interior_plot(F(1, 2))
        jet = realize_jet(germ, 5)
        assert jet == LaurentJet(0, [F(1, 2), 1])

    def test_flat_has_no_jet(self):
        with pytest.raises(ValueError, match="no finite jet"):
            realize_jet(FlatGerm(), 4)

    def test_truncation_below_contact(self):
        with pytest.raises(TruncationError):
            realize_jet(make_boundary_plot(3, 1), 4)

    def test_truncates_unit_tail(self):
        germ = make_boundary_plot(1, Jet1([1, 0, 0, 0, 1]))  # t^2 + t^6
        assert realize_jet(germ, 4) == LaurentJet(2, [1])

    @given(st.integers(1, 5), unit_jet1s())
    def test_boundary_realization_is_shifted_unit(self, m, unit):
        order = 2 * m + unit.order
        realized = realize_jet(make_boundary_plot(m, unit), order)
        assert realized == LaurentJet(2 * m, unit.coeffs)
        # structural nonnegativity: even valuation, positive leading term
        assert realized.valuation == 2 * m
        assert realized.valuation % 2 == 0
        assert realized.coeffs[0] > 0


class TestInteriorValidation:
    def test_base_point_positive(self):
        with pytest.raises(ValueError, match="positive"):
            make_interior_plot(0)

    def test_jet_must_match_base_point(self):
        with pytest.raises(ValueError, match="constant term"):
            make_interior_plot(1, Jet1([2, 1]))
