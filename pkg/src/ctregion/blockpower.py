"""Completion-time boundaries when power is constrained on average over a block.

With a per-block (rather than per-symbol) power constraint, the user that
transmits alone at the end may shift power between its joint and solo
phases. For every block-length ratio ``c`` the boundary point on the ray
``d1/d2 = c`` is found by maximizing, over the power split, how far the
corresponding rate ray reaches inside the constrained capacity region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize as so

from ._search import maximize_unimodal
from .channels import GbcParams, GmacParams, Load, RatePair, _gbc_f, gamma
from .constrained import PowerSplit
from .mapping import TimePair
from .regions import gbc_region_boundary, gmac_region_boundary

__all__ = [
    "BlockPowerTrace", "gmac_block_rays", "gmac_optimal_split", "gmac_block_boundary",
    "gbc_optimal_split", "gbc_block_boundary", "DEFAULT_GRID",
]

DEFAULT_GRID = 128


@dataclass(frozen=True)
class BlockPowerTrace:
    """Boundary points ``d(c)`` on increasing ratios ``c``, with their power splits.

    The grid runs from the vertical-ray ratio ``c_B`` through 1 to the
    horizontal-ray ratio ``c_A``; ``diag_origin`` is the point at ``c = 1``.
    """

    c_grid: tuple
    points: tuple
    splits: tuple
    diag_origin: TimePair
    vertical_origin: TimePair
    horizontal_origin: TimePair

    def subregion(self, which: int) -> "BlockPowerTrace":
        """Part of the trace with ``c <= 1`` (``which=1``) or ``c >= 1`` (``which=2``)."""
        keep = [i for i, c in enumerate(self.c_grid) if (c <= 1 if which == 1 else c >= 1)]
        pick = lambda seq: tuple(seq[i] for i in keep)
        return BlockPowerTrace(pick(self.c_grid), pick(self.points), pick(self.splits),
                               self.diag_origin, self.vertical_origin, self.horizontal_origin)


# ---------------------------------------------------------------------------
# GMAC

def gmac_block_rays(params: GmacParams, load: Load, subregion: int) -> tuple[TimePair, TimePair]:
    """``(d_C, d_B)`` for ``subregion=1`` or ``(d_C, d_A)`` for ``subregion=2``.

    ``d_C`` is the equal-completion point; the axis points correspond to one
    user transmitting alone at full power and then the other.
    """
    if subregion not in (1, 2):
        raise ValueError("subregion must be 1 or 2")
    g1, g2 = gamma(params.p1), gamma(params.p2)
    t1, t2 = load.tau1, load.tau2
    t_c = _gmac_ray_radius(g1, g2, params.caps[2], t1, t2, 1.0, 0.0)
    d_c = TimePair(1.0 / t_c, 1.0 / t_c)
    if subregion == 2:
        return d_c, TimePair(t2 / g2 + t1 / g1, t2 / g2)
    return d_c, TimePair(t1 / g1, t1 / g1 + t2 / g2)


def _gmac_ray_radius(g_solo_first, g_other, g_sum, t_solo, t_other, c, g_solo_second):
    # largest t with R = t(t_solo / c, t_other) in the c-constrained region, c >= 1,
    # where the solo user runs at rates g_solo_first (joint) and g_solo_second (alone)
    extra = (c - 1.0) * g_solo_second
    return min(g_other / t_other,
               (g_solo_first + extra) / t_solo,
               (g_sum + extra) / (t_solo + t_other))


def _gmac_split_c_ge_1(p_solo, p_other, t_solo, t_other, c, uniform):
    g_other = gamma(p_other)
    if c == 1.0 or uniform:
        t = _gmac_ray_radius(gamma(p_solo), g_other, gamma(p_solo + p_other), t_solo, t_other, c,
                             gamma(p_solo))
        return t, p_solo, p_solo

    def radius(p_first):
        p_second = max((p_solo - p_first / c) / (1.0 - 1.0 / c), 0.0)
        return _gmac_ray_radius(gamma(p_first), g_other, gamma(p_first + p_other), t_solo, t_other, c,
                                gamma(p_second))

    x, t, _ = maximize_unimodal(radius, 0.0, c * p_solo, label="block-power ray radius")
    # no nearby split reaches further along the ray
    delta = 1e-4 * p_solo
    for y in (x - delta, x + delta):
        if 0.0 <= y <= c * p_solo:
            assert radius(y) <= t * (1 + 1e-9), "split search missed the optimum"
    p_second = max((p_solo - x / c) / (1.0 - 1.0 / c), 0.0)
    return t, x, p_second


def gmac_optimal_split(params: GmacParams, load: Load, c: float, uniform: bool = False) -> tuple[PowerSplit, RatePair]:
    """Best power split for the user that finishes last, and the rate point it reaches.

    For ``c > 1`` user 1 transmits alone at the end and the split is
    ``(P11, P12)`` with ``P11/c + (1 - 1/c) P12 = P1``; for ``c <= 1`` the roles
    are exchanged, matching :func:`gmac_block_power_member`. ``uniform=True`` pins the split to the flat allocation.
    """
    if not (c > 0 and math.isfinite(c)):
        raise ValueError("c must be finite and > 0")
    if c > 1:
        t, pf, ps = _gmac_split_c_ge_1(params.p1, params.p2, load.tau1, load.tau2, c, uniform)
        rate = RatePair(t * load.tau1 / c, t * load.tau2)
        return PowerSplit(pf, ps, 1.0 / c), rate
    t, pf, ps = _gmac_split_c_ge_1(params.p2, params.p1, load.tau2, load.tau1, 1.0 / c, uniform)
    rate = RatePair(t * load.tau1, t * load.tau2 * c)
    return PowerSplit(pf, ps, c), rate


def _ratio_grid(c_lo, c_hi, n_grid):
    if n_grid < 2:
        raise ValueError("n_grid must be >= 2")
    left = np.linspace(c_lo, 1.0, n_grid)
    right = np.linspace(1.0, c_hi, n_grid)
    return [float(c) for c in left] + [float(c) for c in right[1:]]


def gmac_block_boundary(params: GmacParams, load: Load, n_grid: int = DEFAULT_GRID,
                        uniform: bool = False) -> BlockPowerTrace:
    """Trace ``d(c)`` over ``[c_B, 1]`` and ``[1, c_A]`` with ``n_grid`` points each."""
    d_c, d_b = gmac_block_rays(params, load, 1)
    _, d_a = gmac_block_rays(params, load, 2)
    grid = _ratio_grid(d_b.c, d_a.c, n_grid)
    points, splits = [], []
    for c in grid:
        split, rate = gmac_optimal_split(params, load, c, uniform)
        points.append(TimePair(load.tau1 / rate.r1, load.tau2 / rate.r2))
        splits.append(split)
    return BlockPowerTrace(tuple(grid), tuple(points), tuple(splits), d_c, d_b, d_a)


# ---------------------------------------------------------------------------
# GBC (normalized user order, h1 >= h2)

def _gbc_radius(h_solo, h_other, t_solo, t_other, c, p_joint, p_alone, solo_is_weak):
    # largest t with the deflated point inside the broadcast region at power p_joint;
    # c >= 1 in the solo user's frame, R = t(t_solo / c, t_other)
    if p_joint <= 0:
        return 0.0
    g_alone = gamma(h_solo * p_alone)

    def f(t):
        x = max(t * t_solo - (c - 1.0) * g_alone, 0.0)
        y = t * t_other
        # _gbc_f wants (strong rate, weak rate)
        if solo_is_weak:
            return _gbc_f(h_other, h_solo, p_joint, y, x)
        return _gbc_f(h_solo, h_other, p_joint, x, y)

    h_strong = max(h_solo, h_other)
    hi = (gamma(h_strong * p_joint) + (c - 1.0) * g_alone) / min(t_solo, t_other) + 1.0
    while f(hi) < 0:
        hi *= 2.0
    if f(0.0) >= 0:
        return 0.0
    return so.brentq(f, 0.0, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)


def _gbc_split(h1, h2, p, t1, t2, c, uniform):
    # returns (t, p_joint, p_alone) and the ordering flag for the mapped point
    if c >= 1:
        h_solo, h_other, t_solo, t_other, cc, weak = h1, h2, t1, t2, c, False
    else:
        h_solo, h_other, t_solo, t_other, cc, weak = h2, h1, t2, t1, 1.0 / c, True
    if cc == 1.0 or uniform:
        return _gbc_radius(h_solo, h_other, t_solo, t_other, cc, p, p, weak), p, p

    def p_alone(pa):
        return max((p - pa / cc) / (1.0 - 1.0 / cc), 0.0)

    radius = lambda pa: _gbc_radius(h_solo, h_other, t_solo, t_other, cc, pa, p_alone(pa), weak)
    x, t, _ = maximize_unimodal(radius, 0.0, cc * p, label="broadcast block-power ray radius")
    return t, x, p_alone(x)


def gbc_optimal_split(params: GbcParams, load: Load, c: float, uniform: bool = False) -> tuple[PowerSplit, RatePair]:
    """Transmit powers for the joint and the single-user phase, and the rate point reached.

    ``c`` and the returned rates use the caller's user order.
    """
    if not (c > 0 and math.isfinite(c)):
        raise ValueError("c must be finite and > 0")
    if params.swapped:
        load, cn = load.swapped(), 1.0 / c
    else:
        cn = c
    t, pa, pb = _gbc_split(params.h1, params.h2, params.p, load.tau1, load.tau2, cn, uniform)
    if cn >= 1:
        rate = RatePair(t * load.tau1 / cn, t * load.tau2)
    else:
        rate = RatePair(t * load.tau1, t * load.tau2 * cn)
    if params.swapped:
        rate = rate.swapped()
    return PowerSplit(pa, pb, min(c, 1.0 / c)), rate


def gbc_block_boundary(params: GbcParams, load: Load, n_grid: int = DEFAULT_GRID,
                       uniform: bool = False) -> BlockPowerTrace:
    """Trace over ``[c_B, c_A]`` taken from the per-symbol broadcast region's axis points."""
    ref = gbc_region_boundary(params, load, n_samples=2)
    grid = _ratio_grid(ref.d_b.c, ref.d_a.c, n_grid)
    points, splits = [], []
    for c in grid:
        split, rate = gbc_optimal_split(params, load, c, uniform)
        points.append(TimePair(load.tau1 / rate.r1, load.tau2 / rate.r2))
        splits.append(split)
    return BlockPowerTrace(tuple(grid), tuple(points), tuple(splits), ref.d_c, ref.d_b, ref.d_a)


def per_symbol_boundary(params, load, n_samples: int = 512):
    """Per-symbol-power boundary of the matching channel, for overlays and checks."""
    if isinstance(params, GmacParams):
        return gmac_region_boundary(params, load, n_samples)
    return gbc_region_boundary(params, load, n_samples)
