"""Weighted-sum completion-time minimization.

The objective is ``w d1 + (1 - w) d2``. For the GMAC the optimum is always
one of the two corners ``d_D``/``d_E``; for the GBC it is found on each
convex subregion by locating the boundary point whose tangent matches the
weight, then taking the better of the two subregions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize as so

from .channels import GbcParams, GmacParams, Load
from .mapping import TimePair
from .regions import BoundaryCurve, _gbc_member

__all__ = [
    "WeightedObjective", "KappaPair", "Minimizer", "gmac_min_weighted", "gbc_kappa",
    "gbc_kappa_inverse", "gbc_min_weighted", "gbc_subregion_minimizers", "generic_min_weighted",
]

TIE_TOL = 1e-12


@dataclass(frozen=True)
class WeightedObjective:
    w: float

    def __post_init__(self):
        if not (0.0 <= self.w <= 1.0):
            raise ValueError(f"weight must lie in [0, 1], got {self.w!r}")

    def __call__(self, d: TimePair) -> float:
        return self.w * d.d1 + (1.0 - self.w) * d.d2


@dataclass(frozen=True)
class KappaPair:
    kappa1: float
    kappa2: float


@dataclass(frozen=True)
class Minimizer:
    d: TimePair
    objective_value: float
    active_branch: str


def gmac_min_weighted(params: GmacParams, load: Load, obj: WeightedObjective) -> Minimizer:
    """Closed-form minimizer: ``d_D`` up to a case-dependent weight threshold, ``d_E`` above."""
    from .regions import gmac_corners

    cr = gmac_corners(params, load)
    case = cr["case"]
    g1, g2, g12 = params.caps
    threshold = {
        "I": g1 / g12,
        "II": load.tau1 / (load.tau1 + load.tau2),
        "III": (g12 - g2) / g12,
    }[case.value]
    tag = f"Case {case.value}"
    if abs(obj.w - threshold) <= TIE_TOL:
        d, branch = cr["d_D"], f"{tag} d_D (tie with d_E)"
    elif obj.w < threshold:
        d, branch = cr["d_D"], f"{tag} d_D"
    else:
        d, branch = cr["d_E"], f"{tag} d_E"
    d = TimePair(*d)
    return Minimizer(d, obj(d), branch)


def _kappa_norm(h1, h2, p, p1):
    g = lambda x: 0.5 * math.log2(1.0 + x)
    r1 = g(h1 * p1)
    r2 = max(g(h2 * p) - g(h2 * p1), 0.0)
    slope = (1.0 / h1 + p1) / (1.0 / h2 + p1)
    den = r2 + slope * r1
    a1 = slope / den
    a2 = 1.0 / den
    return 1.0 - a2 * g(h2 * p), a1 * g(h1 * p)


def gbc_kappa(params: GbcParams, p1_split: float) -> KappaPair:
    """Tangent weights of the broadcast boundary at power split ``p1_split``.

    ``p1_split`` is the power of the stronger user (``params.h1``). ``kappa1``
    is the weight at which the objective line touches the user-1-first
    subregion at the image of that boundary point, ``kappa2`` the same for
    the other subregion. Both indices refer to the normalized user order.
    """
    if not (0.0 <= p1_split <= params.p):
        raise ValueError(f"p1_split must lie in [0, {params.p}], got {p1_split!r}")
    return KappaPair(*_kappa_norm(params.h1, params.h2, params.p, p1_split))


def gbc_kappa_inverse(params: GbcParams, which: int, w: float, bracket: tuple[float, float] | None = None) -> float:
    """Power split at which ``kappa_which`` equals ``w``, by bisection.

    Raises ``ValueError`` when ``w`` lies outside ``[kappa(lo), kappa(hi)]``.
    """
    if which not in (1, 2):
        raise ValueError(f"which must be 1 or 2, got {which!r}")
    lo, hi = bracket if bracket is not None else (0.0, params.p)
    k = lambda x: _kappa_norm(params.h1, params.h2, params.p, x)[which - 1]
    k_lo, k_hi = k(lo), k(hi)
    if not (k_lo <= w <= k_hi):
        raise ValueError(f"weight {w} outside [{k_lo}, {k_hi}] for kappa{which}")
    if w == k_lo:
        return lo
    if w == k_hi:
        return hi
    return so.bisect(lambda x: k(x) - w, lo, hi, xtol=1e-12, rtol=4 * np.finfo(float).eps, maxiter=200)


def _relabel(branch):
    # exchange user roles in a branch label
    return (branch.replace("D1", "#").replace("D2", "D1").replace("#", "D2")
            .replace("d_A", "#").replace("d_B", "d_A").replace("#", "d_B"))


def gbc_subregion_minimizers(params: GbcParams, load: Load, obj: WeightedObjective) -> tuple[Minimizer, Minimizer]:
    """Optimum over the user-1-first subregion and over the user-2-first subregion.

    Results are in the caller's user order; the first entry always belongs
    to the subregion where the caller's user 1 finishes first.
    """
    m = _gbc_member(params, load)
    f, p1c = m.f, m.p1c
    w = 1.0 - obj.w if params.swapped else obj.w
    h1, h2, p = f.h1, f.h2, f.p
    kap = lambda x: _kappa_norm(h1, h2, p, x)
    ds = f.map1(p1c)
    s = 0.5 * (ds[0] + ds[1])
    d_c = (s, s)

    k_lo, k_hi = kap(p1c)[0], kap(p)[0]
    if w <= k_lo:
        d1, b1 = d_c, "D1 d_C"
    elif w >= k_hi:
        d1, b1 = f.map1(p), "D1 d_B"
    else:
        x = gbc_kappa_inverse(params, 1, w, (p1c, p))
        d1, b1 = f.map1(x), "D1 tangent"

    k_lo, k_hi = kap(0.0)[1], kap(p1c)[1]
    if w <= k_lo:
        d2, b2 = f.map2(0.0), "D2 d_A"
    elif w >= k_hi:
        d2, b2 = d_c, "D2 d_C"
    else:
        x = gbc_kappa_inverse(params, 2, w, (0.0, p1c))
        d2, b2 = f.map2(x), "D2 tangent"

    first, second = (TimePair(*d1), b1), (TimePair(*d2), b2)
    if params.swapped:
        first, second = (second[0].swapped(), _relabel(second[1])), (first[0].swapped(), _relabel(first[1]))
    return (Minimizer(first[0], obj(first[0]), first[1]),
            Minimizer(second[0], obj(second[0]), second[1]))


def gbc_min_weighted(params: GbcParams, load: Load, obj: WeightedObjective) -> Minimizer:
    """Best of the two subregion optima; equal objectives favour the user-1-first side."""
    a, b = gbc_subregion_minimizers(params, load, obj)
    return a if a.objective_value <= b.objective_value else b


def generic_min_weighted(curve: BoundaryCurve, obj: WeightedObjective) -> Minimizer:
    """Best sampled boundary point, ray origins included.

    The origins are checked first, so a sample replaces them only when it is
    better by more than rounding noise.
    """
    cands = [("d_B origin", curve.vertical_ray_origin), ("d_A origin", curve.horizontal_ray_origin),
             ("d_C origin", curve.diag_ray_origin)]
    best_name, best_d = cands[0]
    best = obj(best_d)
    for name, d in cands[1:]:
        v = obj(d)
        if v < best - 1e-12 * max(1.0, abs(best)):
            best, best_name, best_d = v, name, d
    for i, d in enumerate(curve.curve_samples):
        v = obj(d)
        if v < best - 1e-12 * max(1.0, abs(best)):
            best, best_name, best_d = v, f"sample {i}", d
    return Minimizer(best_d, best, best_name)
