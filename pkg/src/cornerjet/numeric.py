"""Floating-point oracle complementing the exact engine.

Sample functions are polynomials with exact rational coefficients (optionally
certified nonnegative as sums of squares), so differentiation is exact and
double precision enters only at grid evaluation.  The module verifies the
discriminant inequality f'(t)^2 <= 2 sup|f''| f(t) for nonnegative f on a
grid, and probes boundedness of pulled-back tensors by refining the grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .jets import LaurentJet, as_fraction
from .tensors import HalfLineTensor

_SIMPLE_POLE = LaurentJet(-1, (1,))

__all__ = [
    "SampledFunction",
    "GlaeserLandauReport",
    "PullbackProbeReport",
    "glaeser_landau_check",
    "numeric_pullback_probe",
]


def _poly_derivative(coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    if len(coeffs) <= 1:
        return (Fraction(0),)
    return tuple(i * c for i, c in enumerate(coeffs) if i >= 1)


def _poly_values(coeffs: tuple[Fraction, ...], grid: np.ndarray) -> np.ndarray:
    return np.polyval([float(c) for c in reversed(coeffs)], grid)


@dataclass(frozen=True)
class SampledFunction:
    """Polynomial sample function on a rational interval.

    ``squares`` holds the sum-of-squares representation when there is one;
    such functions are nonnegative everywhere by construction and are
    evaluated square by square (f = sum q^2, f' = sum 2 q q', f'' = sum
    2(q'^2 + q q'')), which avoids the catastrophic cancellation the expanded
    coefficients suffer near high-multiplicity roots.  Plain polynomials get
    their nonnegativity checked on the grid instead.
    """

    coeffs: tuple[Fraction, ...]
    interval: tuple[Fraction, Fraction]
    grid_n: int = 1024
    squares: tuple[tuple[Fraction, ...], ...] | None = None

    def __post_init__(self):
        if self.interval[0] >= self.interval[1]:
            raise ValueError("interval must satisfy a < b")
        if self.grid_n < 16:
            raise ValueError("grid_n must be at least 16")

    @property
    def sos_certified(self) -> bool:
        return self.squares is not None

    @classmethod
    def polynomial(
        cls, coeffs, interval, grid_n: int = 1024
    ) -> "SampledFunction":
        return cls(
            tuple(as_fraction(c) for c in coeffs),
            (as_fraction(interval[0]), as_fraction(interval[1])),
            grid_n,
        )

    @classmethod
    def sum_of_squares(
        cls, squares, interval, grid_n: int = 1024
    ) -> "SampledFunction":
        """f = q_1^2 + ... + q_r^2, kept factored and also expanded exactly."""
        kept = tuple(tuple(as_fraction(c) for c in q) for q in squares)
        total: dict[int, Fraction] = {}
        for qc in kept:
            for i, a in enumerate(qc):
                for j, b in enumerate(qc):
                    total[i + j] = total.get(i + j, Fraction(0)) + a * b
        degree = max(total, default=0)
        coeffs = tuple(total.get(d, Fraction(0)) for d in range(degree + 1))
        return cls(
            coeffs,
            (as_fraction(interval[0]), as_fraction(interval[1])),
            grid_n,
            squares=kept,
        )

    def grid(self, n: int | None = None, enlargement: float = 0.0) -> np.ndarray:
        a, b = float(self.interval[0]), float(self.interval[1])
        if enlargement:
            pad = enlargement * (b - a)
            a, b = a - pad, b + pad
        return np.linspace(a, b, n if n is not None else self.grid_n)

    def values(self, grid: np.ndarray) -> np.ndarray:
        if self.squares is None:
            return _poly_values(self.coeffs, grid)
        total = np.zeros_like(grid)
        for q in self.squares:
            total += _poly_values(q, grid) ** 2
        return total

    def derivative_values(self, grid: np.ndarray) -> np.ndarray:
        if self.squares is None:
            return _poly_values(_poly_derivative(self.coeffs), grid)
        total = np.zeros_like(grid)
        for q in self.squares:
            total += 2.0 * _poly_values(q, grid) * _poly_values(_poly_derivative(q), grid)
        return total

    def second_derivative_values(self, grid: np.ndarray) -> np.ndarray:
        if self.squares is None:
            return _poly_values(_poly_derivative(_poly_derivative(self.coeffs)), grid)
        total = np.zeros_like(grid)
        for q in self.squares:
            dq = _poly_values(_poly_derivative(q), grid)
            ddq = _poly_values(_poly_derivative(_poly_derivative(q)), grid)
            total += 2.0 * (dq ** 2 + _poly_values(q, grid) * ddq)
        return total


@dataclass(frozen=True)
class GlaeserLandauReport:
    """Grid verification of f'(t)^2 <= 2 C f(t) with C = sup |f''|.

    C is a grid supremum (of a polynomial), so it may undershoot the true sup
    by an interpolation error that the tolerance absorbs; an optional
    enlargement of the interval covers Taylor excursions past its ends.
    """

    C: float
    max_violation: float
    passed: bool
    tol: float


def glaeser_landau_check(
    f: SampledFunction, tol: float = 1e-9, enlargement: float = 0.0
) -> GlaeserLandauReport:
    grid = f.grid()
    fv = f.values(grid)
    if not f.sos_certified and float(fv.min()) < -tol:
        raise ValueError("function not nonnegative on interval")
    c_sup = float(np.abs(f.second_derivative_values(f.grid(enlargement=enlargement))).max())
    violation = f.derivative_values(grid) ** 2 - 2.0 * c_sup * fv
    worst = float(violation.max())
    return GlaeserLandauReport(C=c_sup, max_violation=worst, passed=worst <= tol, tol=tol)


@dataclass(frozen=True)
class PullbackProbeReport:
    """Grid boundedness probe of coeff(P(t)) P'(t)^k.

    ``bounded`` compares the supremum on the base grid with the supremum on a
    4x refined grid: a genuine pole at a zero of P multiplies the observed sup
    by at least 4 under that refinement, while a smooth pullback stabilizes.
    For the canonical simple-pole 2-tensor the report also checks the
    curvature bound sup <= 2 sup|P''| + tol.
    """

    sup: float
    refined_sup: float
    growth: float
    bounded: bool
    bound: float | None = None
    bound_ok: bool | None = None


def numeric_pullback_probe(
    tensor: HalfLineTensor, f: SampledFunction, tol: float = 1e-9
) -> PullbackProbeReport:
    base_values = f.values(f.grid())
    if not f.sos_certified and float(base_values.min()) < -tol:
        raise ValueError("function not nonnegative on interval")

    def sup_on(n: int) -> float:
        grid = f.grid(n)
        pv = f.values(grid)
        mask = pv != 0.0
        if not mask.any():
            return 0.0
        pv = pv[mask]
        dv = f.derivative_values(grid)[mask]
        coeff_at = np.zeros_like(pv)
        for degree, c in tensor.coeff.terms():
            coeff_at += float(c) * pv ** float(degree)
        with np.errstate(over="ignore"):
            values = coeff_at * dv ** tensor.degree
        return float(np.abs(values).max())

    sup = sup_on(f.grid_n)
    refined = sup_on(4 * f.grid_n)
    growth = refined / sup if sup > 0.0 else 1.0
    bounded = bool(np.isfinite(refined) and growth <= 2.0)
    bound = bound_ok = None
    if tensor.degree == 2 and tensor.coeff == _SIMPLE_POLE:
        bound = 2.0 * float(np.abs(f.second_derivative_values(f.grid())).max())
        bound_ok = refined <= bound + tol
    return PullbackProbeReport(
        sup=sup,
        refined_sup=refined,
        growth=growth,
        bounded=bounded,
        bound=bound,
        bound_ok=bound_ok,
    )
