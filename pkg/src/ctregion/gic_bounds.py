"""Built-in rate-region bounds for the weak-interference Gaussian channel.

The outer bound is the standard one-bit-gap outer bound for the two-user
Gaussian interference channel; the inner bound is the simple Han-Kobayashi
scheme whose private messages arrive at the unintended receiver at the noise
level. Both are polytopes, so they feed straight into the generic
completion-time pipeline. Any other pair of regions can be passed instead.
"""

from __future__ import annotations

from .channels import GicParams, PiecewiseLinearRegion, Regime, gamma, gic_regime

__all__ = ["weak_outer_bound", "weak_inner_bound", "weak_bounds"]


def weak_outer_bound(params: GicParams) -> PiecewiseLinearRegion:
    p1, p2 = params.p1, params.p2
    i1 = params.b * p2  # interference power seen at receiver 1
    i2 = params.a * p1  # ... at receiver 2
    g = gamma
    return PiecewiseLinearRegion([
        (1, 0, g(p1)),
        (0, 1, g(p2)),
        (1, 1, g(p1) + g(p2 / (1 + i2))),
        (1, 1, g(p2) + g(p1 / (1 + i1))),
        (1, 1, g(i1 + p1 / (1 + i2)) + g(i2 + p2 / (1 + i1))),
        (2, 1, g(p1 + i1) + g(p1 / (1 + i2)) + g(i2 + p2 / (1 + i1))),
        (1, 2, g(p2 + i2) + g(p2 / (1 + i1)) + g(i1 + p1 / (1 + i2))),
    ])


def weak_inner_bound(params: GicParams) -> PiecewiseLinearRegion:
    p1, p2, a, b = params.p1, params.p2, params.a, params.b
    # private power chosen so it reaches the other receiver at noise level
    p1p = min(p1, 1.0 / a) if a > 0 else p1
    p2p = min(p2, 1.0 / b) if b > 0 else p2
    p1c, p2c = p1 - p1p, p2 - p2p
    n1 = 1 + b * p2p
    n2 = 1 + a * p1p
    g = gamma
    return PiecewiseLinearRegion([
        (1, 0, g(p1 / n1)),
        (0, 1, g(p2 / n2)),
        (1, 1, g((p1 + b * p2c) / n1) + g(p2p / n2)),
        (1, 1, g((p2 + a * p1c) / n2) + g(p1p / n1)),
        (1, 1, g((p1p + b * p2c) / n1) + g((p2p + a * p1c) / n2)),
        (2, 1, g((p1 + b * p2c) / n1) + g(p1p / n1) + g((p2p + a * p1c) / n2)),
        (1, 2, g((p2 + a * p1c) / n2) + g(p2p / n2) + g((p1p + b * p2c) / n1)),
    ])


def weak_bounds(params: GicParams) -> tuple[PiecewiseLinearRegion, PiecewiseLinearRegion]:
    """``(inner, outer)`` rate regions; only defined in the weak regime."""
    regime = gic_regime(params)
    if regime is not Regime.WEAK:
        raise ValueError(f"built-in bounds cover the weak regime only, got {regime.value}")
    return weak_inner_bound(params), weak_outer_bound(params)
