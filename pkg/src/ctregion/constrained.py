"""Membership in c-constrained capacity regions.

A constrained rate point ``(R1, R2, c)`` measures each user's rate over its
own codeword, with ``c = n1 / n2``. When ``c < 1`` user 1 stops early and
user 2 spends the remaining ``(1 - c)`` fraction of its block alone at the
point-to-point rate, so its joint-phase rate only needs to cover what the
solo phase does not. Each test deflates the point back to a joint-phase rate
pair and checks it against an ordinary capacity region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channels import (
    GbcParams, GmacParams, MEMBER_TOL, PiecewiseLinearRegion, _gbc_f, gamma,
    gmac_capacity_region,
)

__all__ = [
    "ConstrainedRatePoint", "PowerSplit", "deflate", "mac_constrained_member",
    "gbc_constrained_member", "gic_constrained_member_bounds",
    "gmac_block_power_member", "gbc_block_power_member",
]


@dataclass(frozen=True)
class ConstrainedRatePoint:
    R1: float
    R2: float
    c: float

    def __post_init__(self):
        for name in ("R1", "R2"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise ValueError(f"{name} must be finite and >= 0, got {v!r}")
        if not (math.isfinite(self.c) and self.c > 0):
            raise ValueError(f"c must be finite and > 0, got {self.c!r}")

    def swapped(self) -> "ConstrainedRatePoint":
        return ConstrainedRatePoint(self.R2, self.R1, 1.0 / self.c)


@dataclass(frozen=True)
class PowerSplit:
    """Solo user's powers in the joint phase and in its own solo phase.

    ``fraction`` is the share of the solo user's block spent in the joint
    phase, i.e. ``min(c, 1/c)``.
    """

    p_first: float
    p_second: float
    fraction: float

    def __post_init__(self):
        for name in ("p_first", "p_second"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise ValueError(f"{name} must be finite and >= 0, got {v!r}")
        if not (0 < self.fraction <= 1):
            raise ValueError(f"fraction must lie in (0, 1], got {self.fraction!r}")

    @property
    def average(self) -> float:
        return self.fraction * self.p_first + (1 - self.fraction) * self.p_second

    @classmethod
    def uniform(cls, power: float, c: float) -> "PowerSplit":
        return cls(power, power, min(c, 1.0 / c))

    def check_budget(self, budget: float, c: float) -> None:
        frac = min(c, 1.0 / c)
        if abs(self.fraction - frac) > 1e-12 * max(1.0, frac):
            raise ValueError(f"split fraction {self.fraction} does not match c={c}")
        if abs(self.average - budget) > 1e-12 * max(1.0, budget):
            raise ValueError(f"split averages to {self.average}, budget is {budget}")


def deflate(pt: ConstrainedRatePoint, r1_star: float, r2_star: float) -> tuple[float, float]:
    """Joint-phase rate pair that a constrained point needs.

    For ``c <= 1`` returns ``(R1, [R2/c - (1/c - 1) r2*]+)``, for ``c >= 1``
    ``([c R1 - (c - 1) r1*]+, R2)``.
    """
    c = pt.c
    if c <= 1:
        return pt.R1, max(pt.R2 / c - (1.0 / c - 1.0) * r2_star, 0.0)
    return max(c * pt.R1 - (c - 1.0) * r1_star, 0.0), pt.R2


def mac_constrained_member(region: PiecewiseLinearRegion, r2_star: float, r1_star: float,
                           pt: ConstrainedRatePoint) -> bool:
    """Constrained membership for a MAC given its ordinary capacity region."""
    x, y = deflate(pt, r1_star, r2_star)
    ok = region.contains(x, y)
    if pt.c == 1:
        # the c >= 1 clause must agree with the c <= 1 clause used above
        assert ok == region.contains(max(pt.R1, 0.0), pt.R2)
    return ok


def _gbc_solo(params: GbcParams, deflation: str):
    if deflation == "gain":
        return gamma(params.h1 * params.p), gamma(params.h2 * params.p)
    if deflation == "literal":
        g = gamma(params.p)
        return g, g
    raise ValueError(f"deflation must be 'gain' or 'literal', got {deflation!r}")


def gbc_constrained_member(params: GbcParams, pt: ConstrainedRatePoint, deflation: str = "gain") -> bool:
    """Constrained membership for the degraded Gaussian broadcast channel.

    Parameters
    ----------
    deflation : {"gain", "literal"}
        Solo-phase rate used in the deflation. ``"gain"`` (default) uses the
        receiving user's own point-to-point capacity ``gamma(h_i P)``;
        ``"literal"`` uses ``gamma(P)`` for both users.
    """
    if params.swapped:
        pt = pt.swapped()
    r1s, r2s = _gbc_solo(params, deflation)
    x, y = deflate(pt, r1s, r2s)
    return _gbc_f(params.h1, params.h2, params.p, x, y) <= MEMBER_TOL


def gic_constrained_member_bounds(inner: PiecewiseLinearRegion, outer: PiecewiseLinearRegion,
                                  p1: float, p2: float, pt: ConstrainedRatePoint) -> tuple[bool, bool]:
    """``(inside inner bound, inside outer bound)`` for an interference channel.

    The solo phase of either user is interference free, so the deflation uses
    ``gamma(P1)`` and ``gamma(P2)``.
    """
    r1s, r2s = gamma(p1), gamma(p2)
    return (mac_constrained_member(inner, r2s, r1s, pt),
            mac_constrained_member(outer, r2s, r1s, pt))


def gmac_block_power_member(params: GmacParams, pt: ConstrainedRatePoint, split: PowerSplit) -> bool:
    """Constrained GMAC membership when the solo user may vary its power by phase.

    ``split`` belongs to the user that transmits alone (user 2 when
    ``c < 1``, user 1 when ``c > 1``) and must average to that user's power.
    """
    c = pt.c
    if c <= 1:
        split.check_budget(params.p2, c)
        joint = GmacParams(params.p1, split.p_first) if split.p_first > 0 else None
        solo = gamma(split.p_second)
        x, y = deflate(pt, 0.0, solo)
    else:
        split.check_budget(params.p1, c)
        joint = GmacParams(split.p_first, params.p2) if split.p_first > 0 else None
        solo = gamma(split.p_second)
        x, y = deflate(pt, solo, 0.0)
    if joint is None:
        # the solo user is silent in the joint phase
        if c <= 1:
            return x <= gamma(params.p1) * (1 + MEMBER_TOL) + MEMBER_TOL and y <= MEMBER_TOL
        return y <= gamma(params.p2) * (1 + MEMBER_TOL) + MEMBER_TOL and x <= MEMBER_TOL
    return gmac_capacity_region(joint).contains(x, y)


def gbc_block_power_member(params: GbcParams, pt: ConstrainedRatePoint, split: PowerSplit) -> bool:
    """Constrained GBC membership with phase-dependent transmit power.

    The transmitter uses ``split.p_first`` while both users are served and
    ``split.p_second`` once one of them is done; the split must average to
    ``P`` over the longer block.
    """
    if params.swapped:
        pt = pt.swapped()
    c = pt.c
    split.check_budget(params.p, c)
    h1, h2 = params.h1, params.h2
    if c <= 1:
        x, y = deflate(pt, 0.0, gamma(h2 * split.p_second))
    else:
        x, y = deflate(pt, gamma(h1 * split.p_second), 0.0)
    return _gbc_f(h1, h2, split.p_first, x, y) <= MEMBER_TOL
