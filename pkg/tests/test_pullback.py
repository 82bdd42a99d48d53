from fractions import Fraction as F

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from cornerjet import (
    FlatGerm,
    Jet1,
    LaurentJet,
    LaurentJet2,
    PairGerm,
    SqMap2,
    Status,
    TruncationError,
    make_boundary_plot,
    make_halfline_tensor,
    make_interior_plot,
    make_quadrant_tensor,
    parity_decompose2,
    pullback_form,
    pullback_halfline,
    pullback_quadrant_path,
    pullback_sq2,
    realize_jet,
    tau_sing,
)

from conftest import laurent_jets, polynomial_laurent2s, unit_jet1s


def symbolic_pullback(coeff: LaurentJet, plot, k: int, order: int = 24) -> LaurentJet:
    """Oracle: substitute the realized plot jet term by term and multiply out.

    Only valid when no truncation effects can reach the compared window, so
    callers keep degrees small.
    """
    from cornerjet import differentiate, laurent_divide

    jet = realize_jet(plot, order)
    jet1 = Jet1(tuple(jet.coefficient(d) for d in range(order + 1)))
    composed = LaurentJet()
    for d, c in coeff.terms():
        if d >= 0:
            composed = composed + (jet ** d) * c
        else:
            one = LaurentJet(0, [1] + [0] * order)
            composed = composed + laurent_divide(one, jet ** (-d), terms=order) * c
    deriv = differentiate(jet1).to_laurent()
    return (composed * deriv ** k).truncated(composed.valuation + deriv.valuation * k + 8)


class TestPullbackHalfline:
    def test_singular_tensor_along_square_map(self):
        verdict = pullback_halfline(tau_sing(), make_boundary_plot(1, 1))
        assert verdict.status is Status.SMOOTH
        assert verdict.witness == LaurentJet(0, [4])

    def test_singular_tensor_along_quartic(self):
        verdict = pullback_halfline(tau_sing(), make_boundary_plot(2, 1))
        # oracle: (4t^3)^2 / t^4 = 16 t^2
        assert verdict.status is Status.SMOOTH
        assert verdict.witness == LaurentJet(2, [16])

    def test_double_pole_along_square_map(self):
        tensor = make_halfline_tensor(2, LaurentJet(-2, [1]))
        verdict = pullback_halfline(tensor, make_boundary_plot(1, 1))
        # oracle: (2t)^2 / t^4 = 4 t^-2
        assert verdict.status is Status.POLE
        assert verdict.pole_order == 2
        assert verdict.witness == LaurentJet(-2, [4])

    def test_simple_pole_cubed_differential(self):
        tensor = make_halfline_tensor(3, LaurentJet(-1, [1]))
        verdict = pullback_halfline(tensor, make_boundary_plot(1, 1))
        # oracle: (2t)^3 / t^2 = 8 t
        assert verdict.status is Status.SMOOTH
        assert verdict.witness == LaurentJet(1, [8])

    def test_order_precondition(self):
        with pytest.raises(ValueError, match="at least 2"):
            pullback_halfline(tau_sing(), make_boundary_plot(1, 1), order=1)

    def test_interior_germ_pullback(self):
        verdict = pullback_halfline(tau_sing(), make_interior_plot(1), order=4)
        # oracle: 1/(1+t) * 1 = 1 - t + t^2 - ...
        assert verdict.status is Status.SMOOTH
        assert verdict.witness == LaurentJet(0, [1, -1, 1, -1, 1])

    def test_interior_polynomial_cancellation_is_resolved_exactly(self):
        coeff = LaurentJet(0, [-1, 1]) ** 20  # vanishes to order 20 at x = 1
        tensor = make_halfline_tensor(2, coeff)
        verdict = pullback_halfline(tensor, make_interior_plot(1), order=16)
        # polynomial coefficients compose exactly, so the deep zero is visible
        assert verdict.status is Status.SMOOTH
        assert verdict.witness.valuation == 20

    def test_interior_deep_cancellation_with_pole_raises(self):
        # (x - 1)^20 / x at x0 = 1: the inversion truncates, the cancellation
        # hides the valuation, and no verdict may be fabricated
        coeff = (LaurentJet(0, [-1, 1]) ** 20).shifted(-1)
        tensor = make_halfline_tensor(2, coeff)
        with pytest.raises(TruncationError, match="insufficient truncation"):
            pullback_halfline(tensor, make_interior_plot(1), order=16)

    def test_zero_tensor_is_smooth(self):
        verdict = pullback_halfline(
            make_halfline_tensor(2, LaurentJet()), make_boundary_plot(1, 1)
        )
        assert verdict.status is Status.SMOOTH
        assert verdict.witness == LaurentJet()

    @settings(max_examples=150)
    @given(
        st.integers(0, 8),
        st.integers(0, 5),
        st.integers(1, 6),
        unit_jet1s(max_order=3),
    )
    def test_valuation_law(self, k, p, m, unit):
        tensor = make_halfline_tensor(k, LaurentJet(-p, [1]))
        verdict = pullback_halfline(tensor, make_boundary_plot(m, unit))
        expected = k * (2 * m - 1) - 2 * m * p
        assert verdict.witness.valuation == expected
        assert verdict.is_smooth == (expected >= 0)

    @settings(max_examples=80)
    @given(
        st.integers(0, 5),
        st.integers(0, 4),
        st.integers(1, 4),
        unit_jet1s(max_order=3),
        unit_jet1s(max_order=3),
    )
    def test_verdict_is_unit_independent(self, k, p, m, unit_a, unit_b):
        tensor = make_halfline_tensor(k, LaurentJet(-p, [1]))
        va = pullback_halfline(tensor, make_boundary_plot(m, unit_a))
        vb = pullback_halfline(tensor, make_boundary_plot(m, unit_b))
        assert va.witness.valuation == vb.witness.valuation
        assert va.status == vb.status

    @settings(max_examples=80)
    @given(
        laurent_jets(min_valuation=-4, max_degree=5),
        st.integers(0, 4),
        st.fractions(min_value=F(1, 3), max_value=3, max_denominator=6),
    )
    def test_interior_always_smooth(self, coeff, k, x0):
        tensor = make_halfline_tensor(k, coeff)
        try:
            verdict = pullback_halfline(tensor, make_interior_plot(x0), order=12)
        except TruncationError:
            return  # deep cancellation at x0: no verdict is fabricated
        assert verdict.is_smooth

    @settings(max_examples=60)
    @given(
        st.integers(1, 6),
        unit_jet1s(max_order=2),
        laurent_jets(min_valuation=-1, max_degree=4),
    )
    def test_boundary_witness_matches_symbolic_oracle(self, m, unit, coeff):
        plot = make_boundary_plot(m, unit)
        tensor = make_halfline_tensor(2, coeff)
        verdict = pullback_halfline(tensor, plot, order=8)
        if coeff.is_zero:
            assert verdict.witness.is_zero
            return
        oracle = symbolic_pullback(coeff, plot, 2, order=40)
        window = verdict.witness.valuation + 8
        assert verdict.witness.truncated(window) == oracle.truncated(window)


class TestPullbackForm:
    def test_constant_form_vanishes_to_first_order(self):
        verdict = pullback_form(make_halfline_tensor(1, 1), make_boundary_plot(1, 1))
        assert verdict.status is Status.SMOOTH
        assert verdict.witness == LaurentJet(1, [2])
        assert verdict.vanishing_order == 1

    def test_linear_coefficient(self):
        verdict = pullback_form(
            make_halfline_tensor(1, LaurentJet(1, [1])), make_boundary_plot(1, 1)
        )
        # oracle: t^2 * 2t = 2 t^3
        assert verdict.witness == LaurentJet(3, [2])
        assert verdict.vanishing_order == 3

    def test_pole_form_has_capacity_zero(self):
        verdict = pullback_form(
            make_halfline_tensor(1, LaurentJet(-1, [1])), make_boundary_plot(1, 1)
        )
        assert verdict.status is Status.POLE
        assert verdict.pole_order == 1
        assert verdict.witness == LaurentJet(-1, [2])

    def test_requires_degree_one(self):
        with pytest.raises(ValueError, match="1-form"):
            pullback_form(tau_sing(), make_boundary_plot(1, 1))


class TestFlatGerms:
    @pytest.mark.parametrize(
        "k, p, expected",
        [
            (2, 1, Status.FLAT_SMOOTH),
            (2, 2, Status.FLAT_INDETERMINATE),
            (1, 0, Status.FLAT_SMOOTH),
            (1, 1, Status.FLAT_INDETERMINATE),
            (8, 4, Status.FLAT_SMOOTH),
            (8, 5, Status.FLAT_INDETERMINATE),
        ],
    )
    def test_capacity_rule(self, k, p, expected):
        tensor = make_halfline_tensor(k, LaurentJet(-p, [1]) if p else LaurentJet(0, [1]))
        verdict = pullback_halfline(tensor, FlatGerm())
        assert verdict.status is expected
        assert verdict.witness is None


class TestPullbackSq2:
    def test_singular_tensor_in_x_slot(self):
        t = make_quadrant_tensor({(-1, 0): 1}, 0, 0)
        pulled = pullback_sq2(t)
        assert pulled.du2 == LaurentJet2({(0, 0): 4})
        assert pulled.dv2.is_zero and pulled.dudv.is_zero

    def test_euclidean_restriction(self):
        pulled = pullback_sq2(make_quadrant_tensor(1, 1, 0))
        assert pulled.du2 == LaurentJet2({(2, 0): 4})
        assert pulled.dv2 == LaurentJet2({(0, 2): 4})
        assert pulled.dudv.is_zero

    def test_cross_pole(self):
        pulled = pullback_sq2(make_quadrant_tensor(0, 0, {(-1, 0): 1}))
        # oracle: 8uv * u^-2 = 8 v u^-1
        assert pulled.dudv == LaurentJet2({(-1, 1): 8})

    @settings(max_examples=100)
    @given(polynomial_laurent2s(), polynomial_laurent2s(), polynomial_laurent2s())
    def test_parity_selection_rule(self, a, b, c):
        pulled = pullback_sq2(make_quadrant_tensor(a, b, c))
        order = max(
            (i + j for comp in pulled for i, j, _ in comp.terms()), default=0
        )
        for component, even_slot in ((pulled.du2, True), (pulled.dv2, True)):
            parts = parity_decompose2(component.to_jet2(order))
            assert parts.even_even == component.to_jet2(order)
        cross_parts = parity_decompose2(pulled.dudv.to_jet2(order))
        assert cross_parts.odd_odd == pulled.dudv.to_jet2(order)


class TestPullbackQuadrantPath:
    def test_demo_tensor_along_diagonal_square(self):
        t = make_quadrant_tensor({(-1, 2): 1}, {(0, -1): 1}, {(1, 1): 1})
        germ = PairGerm(make_boundary_plot(1, 1), make_boundary_plot(1, 1))
        verdict = pullback_quadrant_path(t, germ, order=8)
        # oracle by hand: (t^4/t^2)(2t)^2 + t^-2 (2t)^2 + 2 t^4 (2t)(2t) = 4 + 4t^4 + 8t^6
        assert verdict.status is Status.SMOOTH
        assert verdict.witness == LaurentJet(0, [4, 0, 0, 0, 4, 0, 8])

    def test_cross_pole_detected_along_path(self):
        t = make_quadrant_tensor(0, 0, {(-1, 0): 1})
        germ = PairGerm(make_boundary_plot(1, 1), make_boundary_plot(1, 1))
        verdict = pullback_quadrant_path(t, germ, order=8)
        # oracle: 2 * t^-2 * (2t)(2t) = 8; smooth along this diagonal even
        # though the square-map pullback rejects the tensor
        assert verdict.status is Status.SMOOTH
        assert verdict.witness == LaurentJet(0, [8])

    def test_axial_pole_along_mixed_path(self):
        t = make_quadrant_tensor({(-2, 0): 1}, 0, 0)
        germ = PairGerm(make_boundary_plot(1, 1), make_interior_plot(1))
        verdict = pullback_quadrant_path(t, germ, order=8)
        # oracle: t^-4 * (2t)^2 = 4 t^-2
        assert verdict.status is Status.POLE
        assert verdict.pole_order == 2

    def test_sq_map_marker_is_rejected(self):
        with pytest.raises(TypeError, match="pullback_sq2"):
            pullback_quadrant_path(make_quadrant_tensor(1, 1, 0), SqMap2())

    def test_exact_cancellation_along_diagonal(self):
        # a = 1, b = -1 along (t^2, t^2): px'^2 and py'^2 cancel exactly
        t = make_quadrant_tensor(1, {(0, 0): -1}, 0)
        germ = PairGerm(make_boundary_plot(1, 1), make_boundary_plot(1, 1))
        verdict = pullback_quadrant_path(t, germ, order=8)
        assert verdict.status is Status.SMOOTH
        assert verdict.witness == LaurentJet()
