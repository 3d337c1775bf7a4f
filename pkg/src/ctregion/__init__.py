"""Completion-time regions and weighted completion-time minimization for two-user Gaussian channels."""

from .channels import (
    GbcParams, GicParams, GmacParams, Load, PiecewiseLinearRegion, RatePair, Regime,
    UnsupportedRegime, gamma, gbc_boundary_point, gbc_capacity_f, gic_regime,
    gic_strong_capacity_region, gmac_capacity_f, gmac_capacity_region,
)
from .constrained import (
    ConstrainedRatePoint, PowerSplit, gbc_block_power_member, gbc_constrained_member,
    gic_constrained_member_bounds, gmac_block_power_member, mac_constrained_member,
)
from .mapping import NEVER, LineCoeffs, TimePair, inverse_g, map_g, transport_line
from .regions import (
    BoundaryCurve, GmacCase, gbc_region_boundary, gbc_region_member, gbc_solve_p1c,
    generic_ct_boundary, generic_ct_member, gic_region_boundary, gic_region_member,
    gmac_case, gmac_corners, gmac_region_boundary, gmac_region_member,
)
from .optimize import (
    KappaPair, Minimizer, WeightedObjective, gbc_kappa, gbc_kappa_inverse, gbc_min_weighted,
    generic_min_weighted, gmac_min_weighted,
)
from .blockpower import (
    BlockPowerTrace, gbc_block_boundary, gbc_optimal_split, gmac_block_boundary,
    gmac_block_rays, gmac_optimal_split,
)
from .oracle import (
    GridReport, RelayReport, compare_on_grid, convexity_probe, gbc_oracle, gic_oracle,
    gmac_oracle, membership_oracle, midpoint_witness, relay_example_check,
)

__version__ = "0.1.0"
