"""Completion-time regions: closed forms, parametric forms and a generic pipeline.

Every region here is the union of two convex subregions, ``D1`` (user 1
finishes first, ``d1 <= d2``) and ``D2`` (the mirror). Its boundary is
described by a :class:`BoundaryCurve`: a vertical ray up from ``d_B``, a
curve from ``d_B`` to the diagonal point ``d_C``, a 45-degree ray out of
``d_C``, a curve from ``d_C`` to ``d_A`` and a horizontal ray to the right of
``d_A``.
"""

from __future__ import annotations

import enum
import functools
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import optimize as so

from .channels import (
    GbcParams, GicParams, GmacParams, Load, PiecewiseLinearRegion, RatePair,
    Regime, gamma, gic_regime, gic_sum_cap,
)
from .mapping import NEVER, LineCoeffs, TimePair, map_g, transport_line

__all__ = [
    "GmacCase", "BoundaryCurve", "gmac_case", "gmac_corners", "gmac_region_member",
    "gmac_region_boundary", "gbc_solve_p1c", "gbc_region_member", "gbc_region_boundary",
    "gic_region_member", "gic_region_boundary", "generic_ct_boundary", "generic_ct_member",
    "sample_polyline", "DEFAULT_SAMPLES",
]

log = logging.getLogger(__name__)

DEFAULT_SAMPLES = 512
_TOL = 1e-12


class GmacCase(enum.Enum):
    I = "I"
    II = "II"
    III = "III"


@dataclass(frozen=True)
class BoundaryCurve:
    """Boundary of a completion-time region plus its exact membership test.

    ``curve1`` runs from ``d_B`` to ``d_C`` and ``curve2`` from ``d_C`` to
    ``d_A``; both include their end points. ``knots`` names the corner points
    that the curves pass through.
    """

    vertical_ray_origin: TimePair
    horizontal_ray_origin: TimePair
    diag_ray_origin: TimePair
    curve1: tuple
    curve2: tuple
    member_fn: Callable[[TimePair], bool] = field(compare=False, repr=False)
    knots: tuple = ()

    @property
    def curve_samples(self) -> tuple:
        """Samples from ``d_B`` through ``d_C`` to ``d_A`` (``d_C`` listed once)."""
        return tuple(self.curve1) + tuple(self.curve2[1:])

    @property
    def d_a(self) -> TimePair:
        return self.horizontal_ray_origin

    @property
    def d_b(self) -> TimePair:
        return self.vertical_ray_origin

    @property
    def d_c(self) -> TimePair:
        return self.diag_ray_origin

    def knot(self, name: str) -> TimePair:
        return dict(self.knots)[name]

    def member(self, d: TimePair) -> bool:
        return self.member_fn(d)

    def bbox(self) -> tuple[tuple[float, float], tuple[float, float]]:
        """``((d1_min, d2_min), (d1_max, d2_max))`` over the finite boundary."""
        pts = self.curve_samples
        xs = [p.d1 for p in pts]
        ys = [p.d2 for p in pts]
        return (min(xs), min(ys)), (max(xs), max(ys))

    def boundary_along(self, direction: tuple[float, float], iters: int = 200) -> TimePair:
        """Boundary point on the ray from the origin in ``direction`` (bisection)."""
        u1, u2 = direction
        if u1 <= 0 or u2 <= 0:
            raise ValueError("direction must point into the open positive quadrant")
        (_, _), (x1, y1) = self.bbox()
        hi = 2.0 * max(x1 / u1, y1 / u2)
        while not self.member(TimePair(hi * u1, hi * u2)):
            hi *= 2.0
        lo = hi
        while lo > 1e-300 and self.member(TimePair(lo * u1, lo * u2)):
            lo *= 0.5
        for _ in range(iters):
            mid = 0.5 * (lo + hi)
            if mid in (lo, hi):
                break
            if self.member(TimePair(mid * u1, mid * u2)):
                hi = mid
            else:
                lo = mid
        return TimePair(hi * u1, hi * u2)

    def is_boundary_point(self, d: TimePair, eps: float = 1e-9) -> bool:
        """``d`` is a member while ``d`` shrunk by ``eps`` towards the origin is not."""
        inner = TimePair(d.d1 * (1 - eps), d.d2 * (1 - eps))
        return self.member(d) and not self.member(inner)

    def swapped(self) -> "BoundaryCurve":
        """Same region with the user labels exchanged."""
        fn = self.member_fn
        return BoundaryCurve(
            vertical_ray_origin=self.horizontal_ray_origin.swapped(),
            horizontal_ray_origin=self.vertical_ray_origin.swapped(),
            diag_ray_origin=self.diag_ray_origin.swapped(),
            curve1=tuple(p.swapped() for p in reversed(self.curve2)),
            curve2=tuple(p.swapped() for p in reversed(self.curve1)),
            member_fn=lambda d: fn(d.swapped()),
            knots=tuple((_swap_name(n), p.swapped()) for n, p in self.knots),
        )


def _swap_name(name):
    return {"d_A": "d_B", "d_B": "d_A", "d_D": "d_E", "d_E": "d_D"}.get(name, name)


def _never_aware(member, solo1, solo2):
    # a user that never finishes leaves the channel to the other one
    def fn(d: TimePair) -> bool:
        if d.d1 is NEVER and d.d2 is NEVER:
            return True
        if d.d1 is NEVER:
            return d.d2 >= solo2 * (1 - _TOL)
        if d.d2 is NEVER:
            return d.d1 >= solo1 * (1 - _TOL)
        return member(d.d1, d.d2)
    return fn


def sample_polyline(knots: Sequence[tuple[float, float]], n: int) -> list[tuple[float, float]]:
    """``n`` points spread uniformly in arclength along a polyline.

    Interior knots replace the nearest uniform sample, so corners are always
    represented exactly and the count stays ``n`` (as long as there are
    fewer knots than samples).
    """
    if n < 2:
        raise ValueError("need at least two samples per curve")
    pts = np.asarray(knots, dtype=float)
    seg = np.hypot(np.diff(pts[:, 0]), np.diff(pts[:, 1]))
    total = float(seg.sum())
    if total == 0.0:
        return [tuple(pts[0])] * n
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    s = np.linspace(0.0, total, n)
    out = np.empty((n, 2))
    idx = np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(seg) - 1)
    for i, (si, k) in enumerate(zip(s, idx)):
        t = 0.0 if seg[k] == 0 else (si - cum[k]) / seg[k]
        out[i] = pts[k] + min(max(t, 0.0), 1.0) * (pts[k + 1] - pts[k])
    out[0], out[-1] = pts[0], pts[-1]
    taken = {0, n - 1}
    for k in range(1, len(pts) - 1):
        j = int(np.argmin(np.abs(s - cum[k])))
        if j in taken:
            # nearest free slot keeps the order intact
            free = [i for i in range(1, n - 1) if i not in taken]
            if not free:
                continue
            j = min(free, key=lambda i: abs(s[i] - cum[k]))
        out[j] = pts[k]
        taken.add(j)
    # a snapped knot can land out of order when knots crowd; reorder by arclength
    order = np.argsort(_arclength_param(out, pts, cum), kind="stable")
    return [tuple(p) for p in out[order]]


def _arclength_param(samples, pts, cum):
    # project each sample onto the polyline and return its arclength coordinate
    res = np.empty(len(samples))
    for i, q in enumerate(samples):
        best, best_s = math.inf, 0.0
        for k in range(len(pts) - 1):
            a, b = pts[k], pts[k + 1]
            ab = b - a
            L2 = float(ab @ ab)
            t = 0.0 if L2 == 0 else min(max(float((q - a) @ ab) / L2, 0.0), 1.0)
            dist = float(np.hypot(*(a + t * ab - q)))
            if dist < best - 1e-15:
                best, best_s = dist, cum[k] + t * math.sqrt(L2)
        res[i] = best_s
    return res


def _as_pairs(points):
    return tuple(TimePair(float(x), float(y)) for x, y in points)


# ---------------------------------------------------------------------------
# MAC-form regions (GMAC and strong-interference GIC)

@dataclass(frozen=True)
class _MacForm:
    g1: float
    g2: float
    g12: float
    tau1: float
    tau2: float

    @property
    def case(self) -> GmacCase:
        q1 = (self.g12 - self.g1) / self.g1
        q2 = self.g2 / (self.g12 - self.g2)
        ratio = self.tau2 / self.tau1
        # at a threshold both cases give the same region; absorb rounding there
        if ratio <= q1 * (1 + 1e-12):
            return GmacCase.I
        if ratio >= q2 * (1 - 1e-12):
            return GmacCase.III
        return GmacCase.II

    def member(self, d1: float, d2: float) -> bool:
        g1, g2, g12, t1, t2 = self.g1, self.g2, self.g12, self.tau1, self.tau2
        tt = (t1 + t2) * (1 - _TOL)
        if d1 < t1 / g1 * (1 - _TOL) or d2 < t2 / g2 * (1 - _TOL):
            return False
        # image of the sum facet on the user-1-first side, and its mirror
        first = (g12 - g2) * d1 + g2 * d2 >= tt
        second = g1 * d1 + (g12 - g1) * d2 >= tt
        case = self.case
        if case is GmacCase.I:
            return second
        if case is GmacCase.III:
            return first
        return first or second

    def corners(self) -> dict:
        g1, g2, g12, t1, t2 = self.g1, self.g2, self.g12, self.tau1, self.tau2
        case = self.case
        phi1 = (t1 + t2 - (g12 - g1) * t2 / g2) / g1
        phi2 = (t1 + t2 - (g12 - g2) * t1 / g1) / g2
        d_a = (t1 / g1 + t2 / g2, t2 / g2)
        d_b = (t1 / g1, t1 / g1 + t2 / g2)
        if case is GmacCase.I:
            d_c = (t1 / g1, t1 / g1)
            d_d = (phi1, t2 / g2)
            d_e = (t1 / g1, t2 / (g12 - g1))
            c1 = [d_b, d_c]
            c2 = [d_c, d_e, d_d, d_a]
        elif case is GmacCase.II:
            s = (t1 + t2) / g12
            d_c = (s, s)
            d_d = (phi1, t2 / g2)
            d_e = (t1 / g1, phi2)
            c1 = [d_b, d_e, d_c]
            c2 = [d_c, d_d, d_a]
        else:
            d_c = (t2 / g2, t2 / g2)
            d_d = (t1 / (g12 - g2), t2 / g2)
            d_e = (t1 / g1, phi2)
            c1 = [d_b, d_e, d_d, d_c]
            c2 = [d_c, d_a]
        return {"case": case, "d_A": d_a, "d_B": d_b, "d_C": d_c, "d_D": d_d,
                "d_E": d_e, "curve1": c1, "curve2": c2}

    def boundary(self, n_samples: int) -> BoundaryCurve:
        cr = self.corners()
        c1 = sample_polyline(_dedupe(cr["curve1"]), n_samples)
        c2 = sample_polyline(_dedupe(cr["curve2"]), n_samples)
        return BoundaryCurve(
            vertical_ray_origin=TimePair(*cr["d_B"]),
            horizontal_ray_origin=TimePair(*cr["d_A"]),
            diag_ray_origin=TimePair(*cr["d_C"]),
            curve1=_as_pairs(c1),
            curve2=_as_pairs(c2),
            member_fn=_never_aware(self.member, self.tau1 / self.g1, self.tau2 / self.g2),
            knots=tuple((k, TimePair(*cr[k])) for k in ("d_A", "d_B", "d_C", "d_D", "d_E")),
        )


def _dedupe(points):
    out = []
    for p in points:
        if out and abs(p[0] - out[-1][0]) <= 1e-15 * max(1.0, abs(p[0])) \
                and abs(p[1] - out[-1][1]) <= 1e-15 * max(1.0, abs(p[1])):
            continue
        out.append(p)
    if len(out) == 1:
        out.append(out[0])
    return out


def _gmac_form(params: GmacParams, load: Load) -> _MacForm:
    g1, g2, g12 = params.caps
    return _MacForm(g1, g2, g12, load.tau1, load.tau2)


def gmac_case(params: GmacParams, load: Load) -> GmacCase:
    """Where the load ray ``r2/r1 = tau2/tau1`` leaves the capacity pentagon.

    Case I: through the ``r1`` cap; Case II: through the sum-rate facet;
    Case III: through the ``r2`` cap. Ties go to the outer cases.
    """
    return _gmac_form(params, load).case


def gmac_corners(params: GmacParams, load: Load) -> dict:
    """Corner points ``d_A`` .. ``d_E`` (as float tuples) and the case."""
    return _gmac_form(params, load).corners()


def gmac_region_member(params: GmacParams, load: Load, d: TimePair) -> bool:
    form = _gmac_form(params, load)
    return _never_aware(form.member, load.tau1 / form.g1, load.tau2 / form.g2)(d)


def gmac_region_boundary(params: GmacParams, load: Load, n_samples: int = DEFAULT_SAMPLES) -> BoundaryCurve:
    return _gmac_form(params, load).boundary(n_samples)


# ---------------------------------------------------------------------------
# Gaussian broadcast channel

def _g(x):
    return 0.5 * math.log2(1.0 + x)


@dataclass(frozen=True)
class _GbcFrame:
    """Broadcast region in the normalized user order (``h1 >= h2``)."""

    h1: float
    h2: float
    p: float
    tau1: float
    tau2: float

    @property
    def solo(self):
        return _g(self.h1 * self.p), _g(self.h2 * self.p)

    def rate(self, p1):
        return _g(self.h1 * p1), max(_g(self.h2 * self.p) - _g(self.h2 * p1), 0.0)

    def p1c(self) -> float:
        r2s = _g(self.h2 * self.p)

        def phi(x):
            return self.tau1 * (r2s - _g(self.h2 * x)) - self.tau2 * _g(self.h1 * x)

        return so.brentq(phi, 0.0, self.p, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)

    def map1(self, p1):
        r1, r2 = self.rate(p1)
        r2s = self.solo[1]
        return self.tau1 / r1, self.tau2 / r2s + (r2s - r2) * self.tau1 / (r2s * r1)

    def map2(self, p1):
        r1, r2 = self.rate(p1)
        r1s = self.solo[0]
        return self.tau1 / r1s + (r1s - r1) * self.tau2 / (r1s * r2), self.tau2 / r2

    def bound1(self, p1):
        # lower bound on d2 in D1 for split p1 (user 1 finishes first)
        r1s, r2s = self.solo
        ratio = self.h2 / self.h1 if p1 == 0 else _g(self.h2 * p1) / _g(self.h1 * p1)
        return self.tau2 / r2s + ratio * self.tau1 / r2s

    def bound2(self, p1):
        # lower bound on d1 in D2 for split p1 (user 2 finishes first)
        r1s, r2s = self.solo
        return self.tau1 / r1s + (r1s - _g(self.h1 * p1)) * self.tau2 / (r1s * (r2s - _g(self.h2 * p1)))


class _GbcMember:
    """Membership test for the broadcast completion-time region.

    The region is an existential over the power split. On each side the
    relevant bound is monotone in the split (checked here on a grid), so the
    existential collapses to evaluating the bound at the extreme feasible
    split. If the check fails the test scans the split instead.
    """

    SCAN = 1024

    def __init__(self, frame: _GbcFrame):
        self.f = frame
        self.p1c = frame.p1c()
        grid1 = np.linspace(self.p1c, frame.p, 257)
        b1 = np.array([frame.bound1(x) for x in grid1])
        self.mono1 = bool(np.all(np.diff(b1) >= -1e-12 * np.abs(b1[1:])))
        grid2 = np.linspace(0.0, self.p1c, 257)
        b2 = np.array([frame.bound2(x) for x in grid2])
        self.mono2 = bool(np.all(np.diff(b2) <= 1e-12 * np.abs(b2[1:])))
        if not (self.mono1 and self.mono2):
            log.warning("broadcast bound not monotone in the power split; using scan fallback")

    def _scan_min(self, fn, lo, hi):
        xs = np.linspace(lo, hi, self.SCAN)
        vals = np.array([fn(x) for x in xs])
        k = int(np.argmin(vals))
        a, b = xs[max(k - 1, 0)], xs[min(k + 1, len(xs) - 1)]
        if b > a:
            res = so.minimize_scalar(fn, bounds=(a, b), method="bounded", options={"xatol": 1e-13})
            return min(vals[k], res.fun)
        return vals[k]

    def in_d1(self, d1, d2) -> bool:
        f = self.f
        if d2 < d1 * (1 - _TOL):
            return False
        r1s, _ = f.solo
        if d1 < f.tau1 / r1s * (1 - _TOL):
            return False
        need = (2.0 ** (2.0 * f.tau1 / d1) - 1.0) / f.h1
        lo = min(max(self.p1c, need), f.p)
        if self.mono1:
            bound = f.bound1(lo)
        else:
            bound = self._scan_min(f.bound1, lo, f.p)
        return d2 >= bound * (1 - _TOL)

    def in_d2(self, d1, d2) -> bool:
        f = self.f
        if d1 < d2 * (1 - _TOL):
            return False
        _, r2s = f.solo
        if d2 < f.tau2 / r2s * (1 - _TOL):
            return False
        lvl = max(r2s - f.tau2 / d2, 0.0)
        most = (2.0 ** (2.0 * lvl) - 1.0) / f.h2
        hi = max(min(self.p1c, most), 0.0)
        if self.mono2:
            bound = f.bound2(hi)
        else:
            bound = self._scan_min(f.bound2, 0.0, hi)
        return d1 >= bound * (1 - _TOL)

    def __call__(self, d1, d2) -> bool:
        return self.in_d1(d1, d2) or self.in_d2(d1, d2)


def _gbc_frame(params: GbcParams, load: Load) -> _GbcFrame:
    if params.swapped:
        load = load.swapped()
    return _GbcFrame(params.h1, params.h2, params.p, load.tau1, load.tau2)


@functools.lru_cache(maxsize=64)
def _gbc_member(params: GbcParams, load: Load) -> _GbcMember:
    return _GbcMember(_gbc_frame(params, load))


def gbc_solve_p1c(params: GbcParams, load: Load) -> float:
    """Power split at which the broadcast boundary meets the load ray.

    The split is the power given to the stronger user (``params.h1``).
    """
    return _gbc_frame(params, load).p1c()


def gbc_region_member(params: GbcParams, load: Load, d: TimePair) -> bool:
    m = _gbc_member(params, load)
    r1s, r2s = m.f.solo
    fn = _never_aware(m, m.f.tau1 / r1s, m.f.tau2 / r2s)
    return fn(d.swapped() if params.swapped else d)


def gbc_region_boundary(params: GbcParams, load: Load, n_samples: int = DEFAULT_SAMPLES) -> BoundaryCurve:
    """Boundary traced by sweeping the power split uniformly on each side of ``P1C``."""
    if n_samples < 2:
        raise ValueError("need at least two samples per curve")
    m = _gbc_member(params, load)
    f, p1c = m.f, m.p1c
    c1 = [f.map1(x) for x in np.linspace(f.p, p1c, n_samples)]
    c2 = [f.map2(x) for x in np.linspace(p1c, 0.0, n_samples)]
    d_c = f.map1(p1c)
    # both maps agree at d_C; pin it exactly onto the diagonal
    s = 0.5 * (d_c[0] + d_c[1])
    c1[-1] = c2[0] = d_c = (s, s)
    r1s, r2s = f.solo
    member = _never_aware(m, f.tau1 / r1s, f.tau2 / r2s)
    curve = BoundaryCurve(
        vertical_ray_origin=TimePair(*c1[0]),
        horizontal_ray_origin=TimePair(*c2[-1]),
        diag_ray_origin=TimePair(*d_c),
        curve1=_as_pairs(c1),
        curve2=_as_pairs(c2),
        member_fn=lambda d: member(d),
        knots=(("d_A", TimePair(*c2[-1])), ("d_B", TimePair(*c1[0])), ("d_C", TimePair(*d_c))),
    )
    return curve.swapped() if params.swapped else curve


# ---------------------------------------------------------------------------
# Generic pipeline for piecewise-linear capacity regions

class _HalfplaneMember:
    def __init__(self, region: PiecewiseLinearRegion, r1_star, r2_star, load: Load):
        self.tau1, self.tau2 = load.tau1, load.tau2
        lines = [LineCoeffs(a1 / b, a2 / b) for a1, a2, b in region.halfplanes]
        self.side1 = [transport_line(1, ln, load, r2_star) for ln in lines]
        self.side2 = [transport_line(2, ln, load, r1_star) for ln in lines]
        self.min1 = load.tau1 / region.r_b.r1
        self.min2 = load.tau2 / region.r_a.r2

    def __call__(self, d1, d2) -> bool:
        lo = 1 - _TOL
        if d1 <= d2 * (1 + _TOL) and d1 >= self.min1 * lo:
            if all(ln.a1 * d1 + ln.a2 * d2 >= lo for ln in self.side1):
                return True
        if d2 <= d1 * (1 + _TOL) and d2 >= self.min2 * lo:
            if all(ln.a1 * d1 + ln.a2 * d2 >= lo for ln in self.side2):
                return True
        return False


def _check_solo(region, r1_star, r2_star):
    if r1_star < region.r_b.r1 * (1 - 1e-12) or r2_star < region.r_a.r2 * (1 - 1e-12):
        raise ValueError("solo-phase rates must be at least the region's axis intercepts")


def generic_ct_member(region: PiecewiseLinearRegion, r1_star: float, r2_star: float, load: Load) -> Callable[[TimePair], bool]:
    """Exact membership predicate of the completion-time region of ``region``.

    Each rate halfplane becomes one time halfplane per completion order.
    """
    _check_solo(region, r1_star, r2_star)
    m = _HalfplaneMember(region, r1_star, r2_star, load)
    return _never_aware(m, m.min1, m.min2)


def generic_ct_boundary(region: PiecewiseLinearRegion, r1_star: float, r2_star: float, load: Load,
                        n_samples: int = DEFAULT_SAMPLES) -> BoundaryCurve:
    """Completion-time boundary of any piecewise-linear capacity region."""
    _check_solo(region, r1_star, r2_star)
    verts = list(region.vertices)
    r_c, k = region.ray_intersection(load.ratio)
    below = [r_c] + verts[k + 1:]          # r_C .. r_B
    above = [r_c] + verts[k::-1]           # r_C .. r_A
    c1 = [tuple(map_g(1, r, load, r2_star)) for r in reversed(below)]
    c2 = [tuple(map_g(2, r, load, r1_star)) for r in above]
    # both maps agree at r_C; use their mean to sit exactly on the diagonal
    s = 0.5 * (c1[-1][0] + c1[-1][1])
    c1[-1] = c2[0] = (s, s)
    c1, c2 = _dedupe(c1), _dedupe(c2)
    knots = [("d_A", TimePair(*c2[-1])), ("d_B", TimePair(*c1[0])), ("d_C", TimePair(s, s))]
    return BoundaryCurve(
        vertical_ray_origin=TimePair(*c1[0]),
        horizontal_ray_origin=TimePair(*c2[-1]),
        diag_ray_origin=TimePair(s, s),
        curve1=_as_pairs(sample_polyline(c1, n_samples)),
        curve2=_as_pairs(sample_polyline(c2, n_samples)),
        member_fn=generic_ct_member(region, r1_star, r2_star, load),
        knots=tuple(knots),
    )


# ---------------------------------------------------------------------------
# Interference channel

def _gic_strong_form(params: GicParams, load: Load, regime: Regime) -> _MacForm:
    g1, g2 = gamma(params.p1), gamma(params.p2)
    g12 = g1 + g2 if regime is Regime.VERY_STRONG else gic_sum_cap(params)
    return _MacForm(g1, g2, g12, load.tau1, load.tau2)


def _gic_bounds(params: GicParams, regime: Regime, bounds):
    if bounds is not None:
        return bounds
    if regime is Regime.WEAK:
        from .gic_bounds import weak_bounds
        return weak_bounds(params)
    raise ValueError("mixed-interference bounds must be supplied as (inner, outer) regions")


def gic_region_member(params: GicParams, load: Load, d: TimePair, bounds=None):
    """Completion-time membership for the interference channel.

    Returns a bool in the very strong and strong regimes, where the region
    is known exactly, and ``(inner, outer)`` booleans otherwise. ``bounds``
    overrides the built-in weak-interference inner/outer rate regions and is
    required in the mixed regime.
    """
    regime = gic_regime(params)
    if regime in (Regime.VERY_STRONG, Regime.STRONG):
        form = _gic_strong_form(params, load, regime)
        if regime is Regime.VERY_STRONG:
            fn = lambda d1, d2: d1 >= form.tau1 / form.g1 * (1 - _TOL) and d2 >= form.tau2 / form.g2 * (1 - _TOL)
        else:
            fn = form.member
        return _never_aware(fn, load.tau1 / form.g1, load.tau2 / form.g2)(d)
    inner, outer = _gic_bounds(params, regime, bounds)
    r1s, r2s = gamma(params.p1), gamma(params.p2)
    return (generic_ct_member(inner, r1s, r2s, load)(d), generic_ct_member(outer, r1s, r2s, load)(d))


def gic_region_boundary(params: GicParams, load: Load, n_samples: int = DEFAULT_SAMPLES, bounds=None):
    """A :class:`BoundaryCurve`, or an ``(inner, outer)`` pair of them in the weak/mixed regimes."""
    regime = gic_regime(params)
    r1s, r2s = gamma(params.p1), gamma(params.p2)
    if regime is Regime.VERY_STRONG:
        from .channels import gic_strong_capacity_region
        curve = generic_ct_boundary(gic_strong_capacity_region(params), r1s, r2s, load, n_samples)
        return BoundaryCurve(curve.vertical_ray_origin, curve.horizontal_ray_origin, curve.diag_ray_origin,
                             curve.curve1, curve.curve2,
                             member_fn=lambda d: gic_region_member(params, load, d), knots=curve.knots)
    if regime is Regime.STRONG:
        form = _gic_strong_form(params, load, regime)
        return form.boundary(n_samples)
    inner, outer = _gic_bounds(params, regime, bounds)
    return (generic_ct_boundary(inner, r1s, r2s, load, n_samples),
            generic_ct_boundary(outer, r1s, r2s, load, n_samples))
