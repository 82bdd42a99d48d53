"""Covariant tensor fields on the half-line and the quadrant, with axial poles.

A half-line tensor of degree k is coeff(x) * dx^k with a Laurent-jet
coefficient; a quadrant tensor is a symmetric 2-tensor
a(x,y) dx^2 + b(x,y) dy^2 + c(x,y) dx dy, where c is the total symmetric
cross coefficient (stored once, not halved).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .jets import Jet1, LaurentJet, LaurentJet2, Rational, as_fraction

MIN_VALUATION = -4

__all__ = [
    "MIN_VALUATION",
    "HalfLineTensor",
    "QuadrantTensor",
    "Decomposition",
    "DecompositionTrace",
    "tau_sing",
    "make_halfline_tensor",
    "make_quadrant_tensor",
]


@dataclass(frozen=True)
class HalfLineTensor:
    """coeff(x) * dx^degree on [0, inf)."""

    degree: int
    coeff: LaurentJet

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("tensor degree must be nonnegative")

    @property
    def pole_order(self) -> int:
        return self.coeff.pole_order

    def __add__(self, other):
        if not isinstance(other, HalfLineTensor):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("cannot add tensors of different degree")
        return HalfLineTensor(self.degree, self.coeff + other.coeff)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return HalfLineTensor(self.degree, self.coeff * scalar)
        return NotImplemented

    __rmul__ = __mul__


def tau_sing() -> HalfLineTensor:
    """The canonical singular symmetric 2-tensor dx (x) dx / x."""
    return HalfLineTensor(2, LaurentJet(-1, (1,)))


def _as_laurent(coeff: LaurentJet | Jet1 | Rational) -> LaurentJet:
    if isinstance(coeff, LaurentJet):
        return coeff
    if isinstance(coeff, Jet1):
        return coeff.to_laurent()
    return LaurentJet(0, (as_fraction(coeff),))


def make_halfline_tensor(k: int, coeff: LaurentJet | Jet1 | Rational) -> HalfLineTensor:
    return HalfLineTensor(k, _as_laurent(coeff))


@dataclass(frozen=True)
class QuadrantTensor:
    """a dx^2 + b dy^2 + c dx dy with two-variable Laurent coefficients."""

    a: LaurentJet2
    b: LaurentJet2
    c: LaurentJet2


def _as_laurent2(component) -> LaurentJet2:
    if isinstance(component, LaurentJet2):
        return component
    if isinstance(component, Mapping):
        return LaurentJet2.from_terms(component)
    return LaurentJet2({(0, 0): as_fraction(component)})


def make_quadrant_tensor(a, b, c, min_valuation: int = MIN_VALUATION) -> QuadrantTensor:
    """Assemble a quadrant tensor, bounding how deep input poles may reach."""
    parts = []
    for name, component in (("dx^2", a), ("dy^2", b), ("dx*dy", c)):
        jet = _as_laurent2(component)
        vx, vy = jet.valuations
        if vx < min_valuation or vy < min_valuation:
            raise ValueError(
                "%s coefficient valuation below the configured minimum %d"
                % (name, min_valuation)
            )
        parts.append(jet)
    return QuadrantTensor(*parts)


@dataclass(frozen=True)
class DecompositionTrace:
    """Intermediate jets of the constructive split: g(t) = 4 t^2 f(t^2), h with g = h(t^2)."""

    g: Jet1
    h: Jet1


@dataclass(frozen=True)
class Decomposition:
    """Result of splitting coeff(x) dx^2 into c/x * dx^2 plus a pole-free part."""

    c: Fraction
    regular: Jet1
    trace: DecompositionTrace

    def reconstruct(self) -> HalfLineTensor:
        return HalfLineTensor(2, LaurentJet(-1, (self.c,)) + self.regular.to_laurent())
