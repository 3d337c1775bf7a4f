"""Brute-force checks that do not rely on any closed-form region.

The oracle decides membership of a completion-time pair straight from its
definition: turn ``d`` into constrained rates ``R = (tau1/d1, tau2/d2)``
with ``c = d1/d2`` and ask the constrained-capacity test. Grid comparison,
convexity probing and the relay arithmetic build on top of that.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .channels import (
    GbcParams, GicParams, GmacParams, Load, Regime, gamma, gic_regime, gic_strong_capacity_region,
    gmac_capacity_region,
)
from .constrained import (
    ConstrainedRatePoint, gbc_constrained_member, gic_constrained_member_bounds,
    mac_constrained_member,
)
from .mapping import TimePair

__all__ = [
    "GridReport", "membership_oracle", "gmac_oracle", "gbc_oracle", "gic_oracle",
    "compare_on_grid", "boundary_distance", "convexity_probe", "midpoint_witness",
    "RelayReport", "relay_example_check", "thread_count",
]

Predicate = Callable[[TimePair], bool]


def membership_oracle(constrained_member: Callable[[ConstrainedRatePoint], bool], load: Load, d: TimePair) -> bool:
    """Definitional completion-time membership."""
    if not d.finite:
        raise ValueError("oracle needs finite completion times")
    pt = ConstrainedRatePoint(load.tau1 / d.d1, load.tau2 / d.d2, d.d1 / d.d2)
    return constrained_member(pt)


def gmac_oracle(params: GmacParams, load: Load) -> Predicate:
    region = gmac_capacity_region(params)
    g1, g2 = gamma(params.p1), gamma(params.p2)
    cm = lambda pt: mac_constrained_member(region, g2, g1, pt)
    return lambda d: membership_oracle(cm, load, d)


def gbc_oracle(params: GbcParams, load: Load, deflation: str = "gain") -> Predicate:
    cm = lambda pt: gbc_constrained_member(params, pt, deflation)
    return lambda d: membership_oracle(cm, load, d)


def gic_oracle(params: GicParams, load: Load, bounds=None):
    """Exact predicate in the strong regimes, ``(inner, outer)`` pair predicate otherwise."""
    regime = gic_regime(params)
    g1, g2 = gamma(params.p1), gamma(params.p2)
    if regime in (Regime.STRONG, Regime.VERY_STRONG):
        region = gic_strong_capacity_region(params)
        cm = lambda pt: mac_constrained_member(region, g2, g1, pt)
        return lambda d: membership_oracle(cm, load, d)
    if bounds is None:
        from .gic_bounds import weak_bounds
        bounds = weak_bounds(params)
    inner, outer = bounds

    def both(d):
        pt = ConstrainedRatePoint(load.tau1 / d.d1, load.tau2 / d.d2, d.d1 / d.d2)
        return gic_constrained_member_bounds(inner, outer, params.p1, params.p2, pt)
    return both


@dataclass(frozen=True)
class GridReport:
    grid_dims: tuple
    agreements: int
    disagreements: tuple = field(default_factory=tuple)

    @property
    def size(self) -> int:
        return self.agreements + len(self.disagreements)

    def far(self, slack: float = 1e-7) -> tuple:
        """Disagreements farther than ``slack`` from the closed-form boundary."""
        return tuple(x for x in self.disagreements if x[3] > slack)


def _threshold(pred, make, lo, hi, iters=200):
    # pred(make(s)) is False at lo and True at hi; returns the switch point
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if pred(make(mid)):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _crossing(pred, make, x0, inside):
    # distance along one axis-like parameter from x0 to where pred flips
    if inside:
        lo, hi = x0, x0
        while lo > 1e-12 * x0:
            lo *= 0.5
            if not pred(make(lo)):
                return abs(x0 - _threshold(pred, make, lo, hi))
            hi = lo
        return math.inf
    lo, hi = x0, x0
    for _ in range(200):
        hi *= 2.0
        if pred(make(hi)):
            return abs(_threshold(pred, make, lo, hi) - x0)
        lo = hi
    return math.inf


def boundary_distance(pred: Predicate, d: TimePair) -> float:
    """Smallest of the radial, horizontal and vertical distances from ``d`` to the flip of ``pred``."""
    inside = pred(d)
    norm = math.hypot(d.d1, d.d2)
    radial = _crossing(pred, lambda s: TimePair(s * d.d1, s * d.d2), 1.0, inside) * norm
    horiz = _crossing(pred, lambda x: TimePair(x, d.d2), d.d1, inside)
    vert = _crossing(pred, lambda y: TimePair(d.d1, y), d.d2, inside)
    return min(radial, horiz, vert)


def thread_count() -> int:
    """Worker cap from ``CTR_THREADS`` (default 1)."""
    raw = os.environ.get("CTR_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def compare_on_grid(closed_form: Predicate, oracle: Predicate, box: tuple[TimePair, TimePair],
                    dims: tuple[int, int]) -> GridReport:
    """Evaluate both predicates on a ``dims`` grid spanning ``box`` (corners included).

    Each disagreement is recorded as ``(d, closed_form(d), oracle(d), distance)``
    with the distance measured to the closed-form boundary.
    """
    lo, hi = box
    n1, n2 = dims
    if n1 < 1 or n2 < 1:
        raise ValueError("grid dims must be positive")
    xs = np.linspace(lo.d1, hi.d1, n1) if n1 > 1 else np.array([lo.d1])
    ys = np.linspace(lo.d2, hi.d2, n2) if n2 > 1 else np.array([lo.d2])
    pts = [TimePair(float(x), float(y)) for x in xs for y in ys]

    def check(d):
        a, b = closed_form(d), oracle(d)
        return d, a, b

    workers = thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(check, pts))
    else:
        results = [check(d) for d in pts]
    bad = [(d, a, b, boundary_distance(closed_form, d)) for d, a, b in results if a != b]
    return GridReport((n1, n2), len(pts) - len(bad), tuple(bad))


def _radial_boundary(member, theta, scale):
    u1, u2 = math.cos(theta), math.sin(theta)
    make = lambda s: TimePair(s * u1, s * u2)
    hi = scale
    while not member(make(hi)):
        hi *= 2.0
    lo = hi
    while member(make(lo)):
        lo *= 0.5
        if lo < 1e-300:
            return make(lo)
    s = _threshold(member, make, lo, hi)
    # step to the member side of the bisection bracket
    return make(s * (1 + 1e-13))


def midpoint_witness(member: Predicate, p: TimePair, q: TimePair, nudge: float = 1e-9):
    """``(is_witness, midpoint)`` for two member points; the midpoint is pushed out by ``nudge``."""
    m = TimePair(0.5 * (p.d1 + q.d1) * (1 + nudge), 0.5 * (p.d2 + q.d2) * (1 + nudge))
    return (member(p) and member(q) and not member(m)), m


def convexity_probe(member: Predicate, samples: int, seed: int, mode: str = "straddle",
                    sector: tuple[float, float] = (10.0, 80.0), spread: float = 0.1,
                    scale: float = 1.0) -> list:
    """Search for member pairs whose midpoint is not a member.

    Endpoints are boundary points in random directions, pushed outward by a
    random factor ``1 + spread * u**2``. ``mode="straddle"`` takes one
    endpoint on each side of the diagonal; ``mode="within"`` keeps both on
    the same, randomly chosen side. Angles are in degrees from the ``d1``
    axis and limited to ``sector``.
    """
    if mode not in ("straddle", "within"):
        raise ValueError("mode must be 'straddle' or 'within'")
    lo, hi = (math.radians(a) for a in sector)
    mid = math.pi / 4
    rng = np.random.default_rng(seed)
    cache = {}

    def boundary(theta):
        if theta not in cache:
            cache[theta] = _radial_boundary(member, theta, scale)
        return cache[theta]

    out = []
    for _ in range(samples):
        if mode == "straddle":
            ta = rng.uniform(lo, mid)
            tb = rng.uniform(mid, hi)
        else:
            if rng.random() < 0.5:
                ta, tb = rng.uniform(lo, mid, size=2)
            else:
                ta, tb = rng.uniform(mid, hi, size=2)
        ua, ub = rng.random(2)
        pa, pb = boundary(float(ta)), boundary(float(tb))
        ka, kb = 1 + spread * ua ** 2, 1 + spread * ub ** 2
        p = TimePair(pa.d1 * ka, pa.d2 * ka)
        q = TimePair(pb.d1 * kb, pb.d2 * kb)
        hit, m = midpoint_witness(member, p, q)
        if hit:
            out.append((p, q, m))
    return out


@dataclass(frozen=True)
class RelayReport:
    achievable_mi_surplus: float
    sum_bound_gap: float
    two_phase_impossible: bool


def relay_example_check(p: float, p_r: float, tau: float = 1.0) -> RelayReport:
    """Arithmetic behind the in-band half-duplex relay counterexample.

    ``achievable_mi_surplus`` is the slack of the interference-decoding
    condition at receiver 2 for the completion-time pair ``(2 tau, 6 tau)``.
    ``sum_bound_gap`` is how much the sum rate ``2 gamma(P)`` needed in a
    joint phase exceeds the sum-rate upper bound ``gamma(2P + P_R + 2 P P_R)``.
    Both positive means the pair is reachable with the relay but not by
    two-phase operation.
    """
    if not (p > 0 and p_r > 0 and tau > 0):
        raise ValueError("powers and tau must be > 0")
    surplus = 2 * tau * gamma(p / (1 + p)) + 4 * tau * gamma(p_r) - 2 * tau * gamma(p)
    gap = 2 * gamma(p) - gamma(2 * p + p_r + 2 * p * p_r)
    return RelayReport(surplus, gap, surplus > 0 and gap > 0)
