"""Channel parameters, the Gaussian rate function and capacity regions.

All rates are in bits per channel use and all logarithms are base 2.
Capacity regions with a polygonal boundary are carried by
:class:`PiecewiseLinearRegion`; the Gaussian broadcast channel, whose
boundary is curved, is described by its boundary parameterization instead.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

__all__ = [
    "gamma", "GmacParams", "GbcParams", "GicParams", "Load", "RatePair",
    "Regime", "UnsupportedRegime", "PiecewiseLinearRegion",
    "gmac_capacity_f", "gmac_capacity_region", "gbc_boundary_point",
    "gbc_capacity_f", "gic_regime", "gic_strong_capacity_region",
]

# relative slack for closed-region membership tests
MEMBER_TOL = 1e-12


def gamma(x: float) -> float:
    """Gaussian point-to-point rate ``0.5 * log2(1 + x)``."""
    if not math.isfinite(x) or x < 0:
        raise ValueError(f"gamma is defined for finite x >= 0, got {x!r}")
    return 0.5 * math.log2(1.0 + x)


def _check_positive(name, value):
    if not (math.isfinite(value) and value > 0):
        raise ValueError(f"{name} must be finite and > 0, got {value!r}")


def _check_nonnegative(name, value):
    if not (math.isfinite(value) and value >= 0):
        raise ValueError(f"{name} must be finite and >= 0, got {value!r}")


@dataclass(frozen=True)
class GmacParams:
    """Two-user Gaussian multi-access channel with unit noise."""

    p1: float
    p2: float

    def __post_init__(self):
        _check_positive("p1", self.p1)
        _check_positive("p2", self.p2)

    @property
    def caps(self) -> tuple[float, float, float]:
        """``(gamma(p1), gamma(p2), gamma(p1 + p2))``."""
        return gamma(self.p1), gamma(self.p2), gamma(self.p1 + self.p2)


@dataclass(frozen=True)
class GbcParams:
    """Two-user degraded Gaussian broadcast channel.

    The constructor normalizes so that ``h1 >= h2``. When the caller's
    users had to be exchanged, ``swapped`` is set; every completion-time or
    rate-plane function that takes user-ordered data (loads, rate pairs,
    time pairs) translates to and from the caller's order on its own, so
    callers never see the normalized indexing except through ``h1``/``h2``.
    """

    h1: float
    h2: float
    p: float
    swapped: bool = field(default=False, init=False)

    def __post_init__(self):
        _check_positive("h1", self.h1)
        _check_positive("h2", self.h2)
        _check_positive("p", self.p)
        if self.h1 < self.h2:
            h1, h2 = self.h2, self.h1
            object.__setattr__(self, "h1", h1)
            object.__setattr__(self, "h2", h2)
            object.__setattr__(self, "swapped", True)

    @property
    def solo_rates(self) -> tuple[float, float]:
        """Point-to-point rates ``(gamma(h1 P), gamma(h2 P))``."""
        return gamma(self.h1 * self.p), gamma(self.h2 * self.p)


@dataclass(frozen=True)
class GicParams:
    """Gaussian interference channel ``Y1 = X1 + sqrt(b) X2 + Z1``, ``Y2 = sqrt(a) X1 + X2 + Z2``."""

    p1: float
    p2: float
    a: float
    b: float

    def __post_init__(self):
        _check_positive("p1", self.p1)
        _check_positive("p2", self.p2)
        _check_nonnegative("a", self.a)
        _check_nonnegative("b", self.b)


@dataclass(frozen=True)
class Load:
    """Bit-pool sizes ``(tau1, tau2)``."""

    tau1: float
    tau2: float

    def __post_init__(self):
        _check_positive("tau1", self.tau1)
        _check_positive("tau2", self.tau2)

    @property
    def ratio(self) -> float:
        return self.tau2 / self.tau1

    def swapped(self) -> "Load":
        return Load(self.tau2, self.tau1)


@dataclass(frozen=True)
class RatePair:
    """Standard rates ``(r1, r2)``.

    ``dominated`` is only set by the inverse completion-time maps, when the
    time pair lay beyond the band in which the inverse is affine.
    """

    r1: float
    r2: float
    dominated: bool = field(default=False, compare=False)

    def __post_init__(self):
        _check_nonnegative("r1", self.r1)
        _check_nonnegative("r2", self.r2)

    def swapped(self) -> "RatePair":
        return RatePair(self.r2, self.r1, self.dominated)

    def __iter__(self):
        yield self.r1
        yield self.r2


class Regime(enum.Enum):
    VERY_STRONG = "very_strong"
    STRONG = "strong"
    WEAK = "weak"
    MIXED = "mixed"


class UnsupportedRegime(ValueError):
    """Raised for GIC gains that fall in none of the four regimes."""


class PiecewiseLinearRegion:
    """Convex rate region ``{r >= 0 : a1 r1 + a2 r2 <= b for every halfplane}``.

    Halfplane coefficients must be non-negative with ``b > 0``, which makes
    the boundary non-increasing. The outer boundary is available as
    :attr:`vertices`, ordered from the ``r2``-axis intercept to the
    ``r1``-axis intercept.

    Parameters
    ----------
    halfplanes : sequence of (a1, a2, b)
        Each triple encodes ``a1 r1 + a2 r2 <= b``.
    """

    def __init__(self, halfplanes: Sequence[tuple[float, float, float]]):
        hp = []
        for a1, a2, b in halfplanes:
            a1, a2, b = float(a1), float(a2), float(b)
            if not all(map(math.isfinite, (a1, a2, b))):
                raise ValueError("halfplane coefficients must be finite")
            if a1 < 0 or a2 < 0 or (a1 == 0 and a2 == 0):
                raise ValueError(f"halfplane ({a1}, {a2}, {b}) is not a monotone constraint")
            if b <= 0:
                raise ValueError("halfplane offsets must be > 0 (region must contain a neighbourhood of 0)")
            hp.append((a1, a2, b))
        if not any(a1 > 0 for a1, _, _ in hp) or not any(a2 > 0 for _, a2, _ in hp):
            raise ValueError("region is unbounded")
        self.halfplanes: tuple[tuple[float, float, float], ...] = tuple(hp)
        self.vertices: tuple[RatePair, ...] = self._boundary_vertices()

    def __repr__(self):
        return f"PiecewiseLinearRegion({list(self.halfplanes)!r})"

    def value(self, r1: float, r2: float) -> float:
        """Largest normalized violation ``max_k (a.r / b - 1)``; ``<= 0`` inside."""
        return max((a1 * r1 + a2 * r2) / b - 1.0 for a1, a2, b in self.halfplanes)

    def contains(self, r1: float, r2: float, slack: float = MEMBER_TOL) -> bool:
        if r1 < -slack or r2 < -slack:
            return False
        return self.value(r1, r2) <= slack

    @property
    def r_a(self) -> RatePair:
        """Intercept of the boundary with the ``r2`` axis."""
        return self.vertices[0]

    @property
    def r_b(self) -> RatePair:
        """Intercept of the boundary with the ``r1`` axis."""
        return self.vertices[-1]

    def _boundary_vertices(self):
        # candidate corners: pairwise intersections incl. the two axes
        lines = list(self.halfplanes) + [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0)]
        scale = max(b / max(a1, a2) for a1, a2, b in self.halfplanes)
        pts = []
        for i in range(len(lines)):
            for j in range(i + 1, len(lines)):
                a1, a2, b = lines[i]
                c1, c2, e = lines[j]
                det = a1 * c2 - a2 * c1
                if abs(det) < 1e-15 * max(abs(a1 * c2), abs(a2 * c1), 1e-300):
                    continue
                x = (b * c2 - a2 * e) / det
                y = (a1 * e - b * c1) / det
                tol = 1e-12 * scale
                if x < -tol or y < -tol:
                    continue
                x, y = max(x, 0.0) + 0.0, max(y, 0.0) + 0.0
                if self.value(x, y) > 1e-12:
                    continue
                pts.append((x, y))
        # drop the origin, dedupe, order along the boundary
        tol = 1e-12 * scale
        pts = [p for p in pts if p[0] > tol or p[1] > tol]
        pts.sort(key=lambda p: (p[0], -p[1]))
        uniq = []
        for p in pts:
            if uniq and abs(p[0] - uniq[-1][0]) <= tol and abs(p[1] - uniq[-1][1]) <= tol:
                continue
            uniq.append(p)
        # keep only outer-boundary corners: r2 non-increasing as r1 grows
        # (points on the axes below the intercepts are interior of an axis edge)
        outer = [q for q in uniq if not (q[0] <= tol and q[1] < uniq[0][1] - tol)]
        r_b_x = max(q[0] for q in outer)
        outer = [q for q in outer if not (q[1] <= tol and q[0] < r_b_x - tol)]
        # remove collinear middles
        hull = []
        for q in outer:
            while len(hull) >= 2:
                (x0, y0), (x1, y1) = hull[-2], hull[-1]
                cross = (x1 - x0) * (q[1] - y0) - (y1 - y0) * (q[0] - x0)
                if abs(cross) <= 1e-12 * scale * scale:
                    hull.pop()
                else:
                    break
            hull.append(q)
        if len(hull) < 2:
            raise ValueError("region is empty or degenerate")
        return tuple(RatePair(x, y) for x, y in hull)

    def facets(self):
        """Boundary edges as ``(start, end, (a1, a2, b))`` from ``r_a`` to ``r_b``."""
        out = []
        for u, v in zip(self.vertices[:-1], self.vertices[1:]):
            mid = (0.5 * (u.r1 + v.r1), 0.5 * (u.r2 + v.r2))
            best = min(self.halfplanes,
                       key=lambda h: abs((h[0] * mid[0] + h[1] * mid[1]) / h[2] - 1.0))
            out.append((u, v, best))
        return out

    def ray_intersection(self, slope: float) -> tuple[RatePair, int]:
        """Point where the ray ``r2 = slope * r1`` leaves the region.

        Returns the point and the index of the facet it lies on; at a vertex
        the facet with the smaller ``r1`` wins.
        """
        if not (slope > 0 and math.isfinite(slope)):
            raise ValueError("slope must be finite and > 0")
        for k, (u, v, (a1, a2, b)) in enumerate(self.facets()):
            # facets run with r1 increasing, so r2 - slope*r1 decreases
            if u.r2 - slope * u.r1 >= 0 >= v.r2 - slope * v.r1:
                r1 = b / (a1 + slope * a2)
                r1 = min(max(r1, u.r1), v.r1)
                return RatePair(r1, slope * r1), k
        raise RuntimeError("ray did not meet the boundary")  # unreachable for valid regions


def gmac_capacity_f(params: GmacParams, r: RatePair) -> float:
    """Piecewise-linear boundary function of the GMAC capacity region.

    Returns ``f(r)`` with ``f(r) <= 0`` iff ``r`` is achievable. The piece is
    selected by the ``r1``/``r2`` thresholds ``gamma(Pi / (1 + Pj))``; points
    past the individual caps fall on the sum-rate piece, which keeps the
    sign correct everywhere.
    """
    g1, g2, g12 = params.caps
    if r.r1 <= g12 - g2:
        return r.r2 - g2
    if r.r2 <= g12 - g1:
        return r.r1 - g1
    return r.r1 + r.r2 - g12


def gmac_capacity_region(params: GmacParams) -> PiecewiseLinearRegion:
    g1, g2, g12 = params.caps
    return PiecewiseLinearRegion([(1.0, 0.0, g1), (0.0, 1.0, g2), (1.0, 1.0, g12)])


def _gbc_f(h1, h2, p, r1, r2):
    # boundary function of the broadcast region at total power p (h1 >= h2)
    return r2 + 0.5 * math.log2(1.0 + (2.0 ** (2.0 * r1) - 1.0) * h2 / h1) - 0.5 * math.log2(1.0 + h2 * p)


def gbc_boundary_point(params: GbcParams, p1_split: float) -> RatePair:
    """Superposition-coding boundary point with power ``p1_split`` for the strong user.

    The strong user is the one with the larger gain; the result is returned
    in the caller's user order.
    """
    if not (0.0 <= p1_split <= params.p):
        raise ValueError(f"p1_split must lie in [0, {params.p}], got {p1_split!r}")
    h1, h2, p = params.h1, params.h2, params.p
    r = RatePair(gamma(h1 * p1_split), max(gamma(h2 * p) - gamma(h2 * p1_split), 0.0))
    return r.swapped() if params.swapped else r


def gbc_capacity_f(params: GbcParams, r: RatePair) -> float:
    """``r2 + gamma((2^(2 r1) - 1) h2/h1) - gamma(h2 P)`` for the strong user first."""
    if params.swapped:
        r = r.swapped()
    return _gbc_f(params.h1, params.h2, params.p, r.r1, r.r2)


def gic_regime(params: GicParams) -> Regime:
    """Classify the interference gains.

    A link is weak below 1, strong on ``[1, 1 + P)`` and very strong from
    ``1 + P`` on, where ``P`` is the power of the user it interferes with.
    Combinations that the four regimes do not cover raise
    :class:`UnsupportedRegime`.
    """
    a, b, p1, p2 = params.a, params.b, params.p1, params.p2
    if a >= 1 + p2 and b >= 1 + p1:
        return Regime.VERY_STRONG
    a_strong = 1 <= a < 1 + p2
    b_strong = 1 <= b < 1 + p1
    if a_strong and b_strong:
        return Regime.STRONG
    if a < 1 and b < 1:
        return Regime.WEAK
    if (a_strong and b < 1) or (b_strong and a < 1):
        return Regime.MIXED
    raise UnsupportedRegime(f"gains a={a}, b={b} fall outside the four interference regimes")


def gic_sum_cap(params: GicParams) -> float:
    """Sum-rate cap ``min(gamma(P1 + b P2), gamma(a P1 + P2))`` of the compound MAC."""
    return min(gamma(params.p1 + params.b * params.p2), gamma(params.a * params.p1 + params.p2))


def gic_strong_capacity_region(params: GicParams) -> PiecewiseLinearRegion:
    regime = gic_regime(params)
    if regime not in (Regime.STRONG, Regime.VERY_STRONG):
        raise ValueError(f"strong-interference capacity region requested in {regime.value} regime")
    g1, g2 = gamma(params.p1), gamma(params.p2)
    if regime is Regime.VERY_STRONG:
        return PiecewiseLinearRegion([(1.0, 0.0, g1), (0.0, 1.0, g2)])
    return PiecewiseLinearRegion([(1.0, 0.0, g1), (0.0, 1.0, g2), (1.0, 1.0, gic_sum_cap(params))])


def gamma_array(x):
    """Vectorized :func:`gamma` for numpy inputs (no domain checks)."""
    return 0.5 * np.log2(1.0 + np.asarray(x, dtype=float))
