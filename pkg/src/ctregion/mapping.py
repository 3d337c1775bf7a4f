"""Affine maps between the rate plane and the completion-time plane.

``map_g(1, ...)`` describes the two-phase operation in which user 1 finishes
first: both users transmit jointly at rates ``r`` until user 1 is done, then
user 2 continues alone at its point-to-point rate ``r2*``. ``map_g(2, ...)``
is the mirror image. The maps send straight lines to straight lines, which
is what makes piecewise-linear capacity regions produce piecewise-linear
completion-time boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channels import Load, RatePair

__all__ = ["NEVER", "TimePair", "LineCoeffs", "map_g", "inverse_g", "transport_line"]


class _Never:
    """Completion time of a user that never finishes."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NEVER"

    def __reduce__(self):
        return (_Never, ())


NEVER = _Never()


def _valid_time(x):
    return x is NEVER or (isinstance(x, (int, float)) and math.isfinite(x) and x > 0)


@dataclass(frozen=True)
class TimePair:
    """Normalized completion times ``(d1, d2)``; either may be :data:`NEVER`."""

    d1: float
    d2: float

    def __post_init__(self):
        for name in ("d1", "d2"):
            v = getattr(self, name)
            if not _valid_time(v):
                raise ValueError(f"{name} must be finite and > 0 (or NEVER), got {v!r}")
            if v is not NEVER:
                object.__setattr__(self, name, float(v))

    @property
    def finite(self) -> bool:
        return self.d1 is not NEVER and self.d2 is not NEVER

    @property
    def c(self) -> float:
        """Block-length ratio ``d1 / d2``."""
        if not self.finite:
            raise ValueError("ratio undefined for a never-completing user")
        return self.d1 / self.d2

    def swapped(self) -> "TimePair":
        return TimePair(self.d2, self.d1)

    def __iter__(self):
        yield self.d1
        yield self.d2


@dataclass(frozen=True)
class LineCoeffs:
    """Line ``a1 x + a2 y = 1``."""

    a1: float
    a2: float

    def __post_init__(self):
        if self.a1 == 0 and self.a2 == 0:
            raise ValueError("line coefficients must not both vanish")
        if not (math.isfinite(self.a1) and math.isfinite(self.a2)):
            raise ValueError("line coefficients must be finite")


def _check_which(which):
    if which not in (1, 2):
        raise ValueError(f"which must be 1 or 2, got {which!r}")


def _g1(r1, r2, tau1, tau2, r2_star):
    # user 1 finishes first: (d1, d2)
    if r2_star <= 0:
        raise ValueError("solo-phase rate must be > 0")
    if r2 > r2_star * (1 + 1e-12):
        raise ValueError(f"joint-phase rate {r2} exceeds the solo-phase rate {r2_star}")
    r2 = min(r2, r2_star)
    if r1 == 0:
        # user 1 never finishes; user 2 finishes only if it already runs at full rate
        return NEVER, (tau2 / r2_star if r2 == r2_star else NEVER)
    d1 = tau1 / r1
    d2 = tau2 / r2_star + (r2_star - r2) * tau1 / (r2_star * r1)
    return d1, d2


def map_g(which: int, r: RatePair, load: Load, r_star_other: float) -> TimePair:
    """Completion times reached from joint rates ``r`` when user ``which`` finishes first.

    Parameters
    ----------
    which : 1 or 2
        The user that finishes first.
    r : RatePair
        Joint-phase rates.
    load : Load
    r_star_other : float
        Point-to-point rate of the other user during its solo phase.
    """
    _check_which(which)
    if which == 1:
        d1, d2 = _g1(r.r1, r.r2, load.tau1, load.tau2, r_star_other)
        return TimePair(d1, d2)
    d2, d1 = _g1(r.r2, r.r1, load.tau2, load.tau1, r_star_other)
    return TimePair(d1, d2)


def _g1_inv(d1, d2, tau1, tau2, r2_star):
    if d2 < d1 * (1 - 1e-12):
        raise ValueError("inverse map needs the first user to finish first")
    d2 = max(d2, d1)
    r1 = tau1 / d1
    raw = tau2 / d1 - (d2 - d1) * r2_star / d1
    dominated = d2 > tau2 / r2_star + d1
    return r1, max(raw, 0.0), dominated


def inverse_g(which: int, d: TimePair, load: Load, r_star_other: float) -> RatePair:
    """Joint rates that produce ``d`` under :func:`map_g`.

    Beyond the band where the inverse is affine (the second user could have
    finished sooner even with zero joint rate) the second rate clamps at
    zero and the result carries ``dominated=True``.
    """
    _check_which(which)
    if not d.finite:
        raise ValueError("inverse map needs finite completion times")
    if r_star_other <= 0:
        raise ValueError("solo-phase rate must be > 0")
    if which == 1:
        r1, r2, dom = _g1_inv(d.d1, d.d2, load.tau1, load.tau2, r_star_other)
        return RatePair(r1, r2, dom)
    r2, r1, dom = _g1_inv(d.d2, d.d1, load.tau2, load.tau1, r_star_other)
    return RatePair(r1, r2, dom)


def transport_line(which: int, coeffs: LineCoeffs, load: Load, r_star_other: float) -> LineCoeffs:
    """Image of the rate-plane line ``coeffs`` under ``map_g(which, ...)``.

    A rate halfplane ``a.r <= 1`` corresponds to the time halfplane
    ``a'.d >= 1`` whenever the returned denominator ``a1 tau1 + a2 tau2`` is
    positive, which holds for every constraint with non-negative weights.
    """
    _check_which(which)
    if which == 1:
        a_f, a_o, t_f, t_o = coeffs.a1, coeffs.a2, load.tau1, load.tau2
    else:
        a_f, a_o, t_f, t_o = coeffs.a2, coeffs.a1, load.tau2, load.tau1
    den = a_f * t_f + a_o * t_o
    if den == 0 or not math.isfinite(den):
        raise ValueError("degenerate line: a1*tau1 + a2*tau2 vanishes")
    first = (1.0 - a_o * r_star_other) / den
    other = a_o * r_star_other / den
    if which == 1:
        return LineCoeffs(first, other)
    return LineCoeffs(other, first)
