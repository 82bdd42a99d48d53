"""Singular capacity: how deep a pole a degree-k tensor supports at the boundary.

A curve touching the boundary as t^(2m) contributes a factor t^(k(2m-1)) from
its differentials while a pole of order p costs t^(-2mp); the margin
k(2m-1) - 2mp must stay nonnegative for every m >= 1.  The reports here
compute those margins directly and cross-check every one against the actual
pullback valuation, so the worst case (m = 1 once k >= 2p) is rediscovered
rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .jets import DEFAULT_ORDER, LaurentJet
from .plots import make_boundary_plot
from .pullback import pullback_halfline
from .tensors import make_halfline_tensor

__all__ = ["CapacityReport", "capacity", "verify_capacity", "capacity_table"]


def capacity(k: int) -> int:
    """Maximal admissible pole order for a covariant k-tensor: floor(k/2)."""
    if k < 0:
        raise ValueError("tensor degree must be nonnegative")
    return k // 2


@dataclass(frozen=True)
class CapacityReport:
    k: int
    p: int
    margins: tuple[int, ...]
    admissible: bool
    binding_m: int


def verify_capacity(
    k: int, p: int, m_max: int = 6, order: int = DEFAULT_ORDER
) -> CapacityReport:
    """Margins k(2m-1) - 2mp for m = 1..m_max, matched against pullback valuations."""
    if k < 0 or p < 0:
        raise ValueError("degree and pole order must be nonnegative")
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    tensor = make_halfline_tensor(k, LaurentJet(-p, (1,)))
    margins = []
    for m in range(1, m_max + 1):
        margin = k * (2 * m - 1) - 2 * m * p
        verdict = pullback_halfline(tensor, make_boundary_plot(m, 1), order)
        observed = verdict.witness.valuation
        if observed != margin:
            raise RuntimeError(
                "capacity margin %d disagrees with pullback valuation %d"
                " at k=%d p=%d m=%d" % (margin, observed, k, p, m)
            )
        margins.append(margin)
    binding = 1 + min(range(m_max), key=lambda i: margins[i])
    return CapacityReport(
        k=k,
        p=p,
        margins=tuple(margins),
        admissible=min(margins) >= 0,
        binding_m=binding,
    )


def capacity_table(k_max: int, m_max: int = 6) -> list[tuple[int, int]]:
    """(k, largest admissible pole order) for k = 0..k_max, found by search."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    table = []
    for k in range(k_max + 1):
        frontier = 0
        p = 1
        while verify_capacity(k, p, m_max).admissible:
            frontier = p
            p += 1
        table.append((k, frontier))
    return table
