"""Normal-form germs of smooth curves into the half-line and the quadrant.

A curve that stays in [0, inf) and touches 0 must do so to even order with a
positive unit factor, so boundary contact is encoded structurally as
t^(2m) * unit(t).  Germs are recentred at t = 0.  Curves that are flat at the
contact point carry no usable jet and are a separate variant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .jets import Jet1, LaurentJet, Rational, TruncationError, as_fraction

__all__ = [
    "InteriorGerm",
    "BoundaryGerm",
    "FlatGerm",
    "PlotGerm",
    "PairGerm",
    "SqMap2",
    "QuadrantPlotGerm",
    "make_boundary_plot",
    "make_interior_plot",
    "realize_jet",
]


@dataclass(frozen=True)
class InteriorGerm:
    """Germ based at x0 > 0; ``jet`` is the full curve jet (constant term x0)."""

    x0: Fraction
    jet: Jet1

    def __post_init__(self):
        if self.x0 <= 0:
            raise ValueError("interior base point must be positive")
        if self.jet.constant_term != self.x0:
            raise ValueError("interior jet constant term must equal the base point")


@dataclass(frozen=True)
class BoundaryGerm:
    """Germ touching 0 as t^(2m) * unit(t) with unit(0) > 0."""

    m: int
    unit: Jet1

    def __post_init__(self):
        if self.m < 1 or self.unit.constant_term <= 0:
            raise ValueError("not certified nonnegative")

    @property
    def contact_degree(self) -> int:
        return 2 * self.m


@dataclass(frozen=True)
class FlatGerm:
    """All derivatives vanish at the contact point; no finite jet exists."""


PlotGerm = Union[InteriorGerm, BoundaryGerm, FlatGerm]


@dataclass(frozen=True)
class PairGerm:
    """Component-pair germ (px(t), py(t)) into the quadrant."""

    px: PlotGerm
    py: PlotGerm


@dataclass(frozen=True)
class SqMap2:
    """The two-parameter square map (u, v) -> (u^2, v^2)."""


QuadrantPlotGerm = Union[PairGerm, SqMap2]


def make_boundary_plot(m: int, unit: Jet1 | Rational) -> BoundaryGerm:
    """Build the germ t^(2m) * unit(t); rejects data that cannot stay nonnegative."""
    if not isinstance(unit, Jet1):
        unit = Jet1.constant(as_fraction(unit))
    if m < 1 or unit.constant_term <= 0:
        raise ValueError("not certified nonnegative")
    return BoundaryGerm(m, unit)


def make_interior_plot(x0: Rational, jet: Jet1 | None = None) -> InteriorGerm:
    """Interior germ at x0 > 0; default curve jet is x0 + t."""
    base = as_fraction(x0)
    if jet is None:
        jet = Jet1((base, Fraction(1)))
    return InteriorGerm(base, jet)


def realize_jet(p: PlotGerm, order: int) -> LaurentJet:
    """The curve's jet truncated to ``order``; valuation 0 (interior) or 2m (boundary)."""
    if isinstance(p, FlatGerm):
        raise ValueError("flat germ has no finite jet representation")
    if order < 1:
        raise ValueError("order must be at least 1")
    if isinstance(p, InteriorGerm):
        jet = p.jet if p.jet.order >= order else p.jet.extended(order)
        return jet.truncated(order).to_laurent()
    if isinstance(p, BoundaryGerm):
        if p.contact_degree > order:
            raise TruncationError(
                "order %d is below the plot contact degree %d" % (order, p.contact_degree)
            )
        return LaurentJet(p.contact_degree, p.unit.coeffs).truncated(order)
    raise TypeError("not a plot germ: %r" % (p,))
