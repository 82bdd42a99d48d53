"""Constructive singular/regular decomposition on the half-line and the quadrant.

The half-line algorithm follows the constructive route end to end: pull the
tensor back through the square map, check the result is even, descend to a
series in x = t^2, then split off the constant term.  Shortcutting to a
valuation split would give the same answer; the test suite keeps that
shortcut as an independent oracle precisely so the two routes can be compared.

On the quadrant the same steps run per component, and the sign-change
symmetries of the corner decide which components may carry an axial pole at
all: the dx^2 and dy^2 coefficients pull back even-even, the cross term
odd-odd, and a pole in the cross term is structurally impossible for a smooth
tensor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .jets import (
    DEFAULT_ORDER,
    Jet1,
    LaurentJet,
    LaurentJet2,
    parity_masses,
    whitney_descend,
)
from .plots import make_boundary_plot
from .pullback import NotSmoothError, SquarePullback, pullback_halfline, pullback_sq2
from .tensors import (
    Decomposition,
    DecompositionTrace,
    HalfLineTensor,
    QuadrantTensor,
)

__all__ = [
    "ComponentParity",
    "ParityReport",
    "QuadrantDecomposition",
    "decompose_halfline",
    "decompose_quadrant",
    "check_gamma_parity",
]


def decompose_halfline(tensor: HalfLineTensor, order: int | None = None) -> Decomposition:
    """Split coeff(x) dx^2 into c * (dx^2 / x) plus a pole-free tensor, exactly.

    ``order`` fixes the order at which the regular part is reported (default:
    the highest degree present in the input).  Inputs whose pole is too deep
    to be smooth are rejected, with the pullback along t^2 attached as the
    witness.
    """
    if tensor.degree != 2:
        raise ValueError("decomposition requires a symmetric 2-tensor")
    coeff = tensor.coeff
    if coeff.pole_order >= 2:
        verdict = pullback_halfline(tensor, make_boundary_plot(1, 1))
        raise NotSmoothError(
            "not a smooth tensor on the half-line: capacity exceeded", verdict=verdict
        )
    natural = max(coeff.degree or 0, 0)
    if order is None:
        order = natural
    elif order < natural:
        raise ValueError(
            "order %d cannot represent the input (degree %d)" % (order, natural)
        )
    # g(t) = 4 t^2 f(t^2): exact exponent doubling, then the shift by t^2.
    g = (coeff.substitute_square().shifted(2) * 4).to_jet1(2 * order + 2)
    h = whitney_descend(g)
    c = h.constant_term / 4
    regular = Jet1(h.coeffs[1:]) * Fraction(1, 4)
    return Decomposition(c=c, regular=regular, trace=DecompositionTrace(g=g, h=h))


@dataclass(frozen=True)
class ComponentParity:
    """Parity-sector occupancy of one pulled-back component."""

    component: str
    expected: str
    masses: dict[str, int]
    min_degrees: tuple[int, int] | None
    sector_ok: bool
    smooth: bool

    @property
    def ok(self) -> bool:
        return self.sector_ok and self.smooth


@dataclass(frozen=True)
class ParityReport:
    du2: ComponentParity
    dv2: ComponentParity
    dudv: ComponentParity

    @property
    def rule_holds(self) -> bool:
        return self.du2.ok and self.dv2.ok and self.dudv.ok

    def components(self) -> tuple[ComponentParity, ComponentParity, ComponentParity]:
        return (self.du2, self.dv2, self.dudv)


def _component_parity(name: str, expected: str, jet: LaurentJet2) -> ComponentParity:
    masses = parity_masses(jet)
    occupied = [sector for sector, count in masses.items() if count]
    vx, vy = jet.valuations
    return ComponentParity(
        component=name,
        expected=expected,
        masses=masses,
        min_degrees=None if jet.is_zero else (vx, vy),
        sector_ok=all(sector == expected for sector in occupied),
        smooth=jet.is_zero or (vx >= 0 and vy >= 0),
    )


def _parity_report(pulled: SquarePullback) -> ParityReport:
    return ParityReport(
        du2=_component_parity("du^2", "even-even", pulled.du2),
        dv2=_component_parity("dv^2", "even-even", pulled.dv2),
        dudv=_component_parity("du*dv", "odd-odd", pulled.dudv),
    )


def check_gamma_parity(tensor: QuadrantTensor) -> ParityReport:
    """Which parity sectors each pulled-back component occupies, and whether
    the corner selection rule (axial even-even, cross odd-odd, no poles) holds."""
    return _parity_report(pullback_sq2(tensor, order=_wide_enough(tensor)))


def _wide_enough(tensor: QuadrantTensor) -> int:
    spans = [DEFAULT_ORDER]
    for component in (tensor.a, tensor.b, tensor.c):
        vx, vy = component.valuations
        dx, dy = component.max_degrees
        spans.append(max(abs(vx), abs(vy), dx, dy))
    return max(spans)


@dataclass(frozen=True)
class QuadrantDecomposition:
    """A(y)/x dx^2 + B(x)/y dy^2 plus pole-free regular components."""

    A: Jet1
    B: Jet1
    regular_dx2: LaurentJet2
    regular_dy2: LaurentJet2
    regular_cross: LaurentJet2
    parity_report: ParityReport

    def reconstruct(self) -> QuadrantTensor:
        a = LaurentJet2(
            {(-1, j): c for j, c in enumerate(self.A.coeffs) if c != 0}
        ) + self.regular_dx2
        b = LaurentJet2(
            {(i, -1): c for i, c in enumerate(self.B.coeffs) if c != 0}
        ) + self.regular_dy2
        return QuadrantTensor(a, b, self.regular_cross)


def decompose_quadrant(
    tensor: QuadrantTensor, order: int | None = None
) -> QuadrantDecomposition:
    """Extract the axial singular profiles A(y), B(x) and the regular remainder.

    Rejections carry the parity report of the square-map pullback as witness:
    a pole in the cross coefficient lands in the odd-odd sector at negative
    degree, and axial poles deeper than one violate smoothness of the
    pulled-back even-even coefficients.
    """
    pulled = pullback_sq2(tensor, order=_wide_enough(tensor))
    report = _parity_report(pulled)
    cx, cy = tensor.c.valuations
    if cx < 0 or cy < 0:
        raise NotSmoothError(
            "singular cross term: violates odd-odd parity", parity=report
        )
    for name, component, axis_jet in (
        ("dx^2", tensor.a, pulled.du2),
        ("dy^2", tensor.b, pulled.dv2),
    ):
        own = component.valuations[0] if name == "dx^2" else component.valuations[1]
        other = component.valuations[1] if name == "dx^2" else component.valuations[0]
        if own < -1 or other < 0:
            raise NotSmoothError(
                "not a smooth tensor on the quadrant: %s coefficient pulls back"
                " with a pole" % name,
                parity=report,
            )
    # Axial route, dx^2 side: descend 4 u^2 a(u^2, v^2) to K(x, y) = 4 x a(x, y),
    # then split K at x = 0.
    k_a = pulled.du2.halve_degrees()
    a_profile = k_a.slice_x(0) * Fraction(1, 4)
    regular_dx2 = k_a.restrict(lambda i, j: i >= 1).shifted(-1, 0) * Fraction(1, 4)
    k_b = pulled.dv2.halve_degrees()
    b_profile = k_b.slice_y(0) * Fraction(1, 4)
    regular_dy2 = k_b.restrict(lambda i, j: j >= 1).shifted(0, -1) * Fraction(1, 4)
    # Cross route: strip the forced odd factor u v, descend, undo the scale.
    regular_cross = pulled.dudv.shifted(-1, -1).halve_degrees() * Fraction(1, 8)
    order_a = _axis_order(a_profile, order)
    order_b = _axis_order(b_profile, order)
    return QuadrantDecomposition(
        A=a_profile.to_jet1(order_a),
        B=b_profile.to_jet1(order_b),
        regular_dx2=regular_dx2,
        regular_dy2=regular_dy2,
        regular_cross=regular_cross,
        parity_report=report,
    )


def _axis_order(profile: LaurentJet, order: int | None) -> int:
    natural = max(profile.degree or 0, 0)
    if order is None:
        return natural
    if order < natural:
        raise ValueError(
            "order %d cannot represent the axial profile (degree %d)" % (order, natural)
        )
    return order
