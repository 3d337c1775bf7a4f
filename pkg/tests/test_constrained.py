import numpy as np
import pytest

from ctregion.channels import GbcParams, GmacParams, gamma, gmac_capacity_region, _gbc_f
from ctregion.constrained import (
    ConstrainedRatePoint as CP, PowerSplit, gbc_block_power_member, gbc_constrained_member,
    gic_constrained_member_bounds, gmac_block_power_member, mac_constrained_member,
)
from ctregion.gic_bounds import weak_bounds
from ctregion.channels import GicParams

MAC = gmac_capacity_region(GmacParams(1, 1))
G_4 = 1.16096404744368117393515971474
G_9 = 1.66096404744368117393515971474


def test_mac_examples():
    assert not mac_constrained_member(MAC, 0.5, 0.5, CP(0.4, 0.4, 1))
    assert mac_constrained_member(MAC, 0.5, 0.5, CP(0.3, 0.3, 1))
    assert not mac_constrained_member(MAC, 0.5, 0.5, CP(0.5, 0.45, 0.5))


def test_point_validation():
    with pytest.raises(ValueError):
        CP(-0.1, 0, 1)
    with pytest.raises(ValueError):
        CP(0.1, 0, 0)


def test_c_one_equals_standard_membership():
    g1, g2, _ = GmacParams(1, 1).caps
    for r1 in np.linspace(0, 0.6, 50):
        for r2 in np.linspace(0, 0.6, 50):
            assert mac_constrained_member(MAC, g2, g1, CP(r1, r2, 1.0)) == MAC.contains(r1, r2)


def test_membership_lost_as_c_grows():
    # a shorter first block leaves user 2 more solo time, so membership can only be lost
    g1, g2, _ = GmacParams(1, 1).caps
    for r1 in np.linspace(0, 0.5, 15):
        for r2 in np.linspace(0, g2, 15):
            cs = np.linspace(0.05, 1.0, 30)
            res = [mac_constrained_member(MAC, g2, g1, CP(r1, r2, c)) for c in cs]
            first_out = res.index(False) if False in res else len(res)
            assert not any(res[first_out:])


def test_clamp_consistency():
    g1, g2, _ = GmacParams(1, 1).caps
    for r1 in np.linspace(0, 0.6, 20):
        c = 0.4
        r2 = 0.5 * (1 - c) * g2
        assert mac_constrained_member(MAC, g2, g1, CP(r1, r2, c)) == MAC.contains(r1, 0)


def test_gbc_examples():
    p = GbcParams(4, 1, 9)
    assert gbc_constrained_member(p, CP(G_4, G_4, 1.0))
    r2 = (G_4 + G_9) / 2
    assert gbc_constrained_member(p, CP(G_4, r2, 0.5))
    assert not gbc_constrained_member(p, CP(G_4, r2 + 1e-6, 0.5))
    assert gbc_constrained_member(p, CP(1.0, 0.5 * G_9 * 0.99, 0.5))


def test_gbc_c_one_matches_capacity_f():
    p = GbcParams(4, 1, 9)
    for r1 in np.linspace(0, 2.7, 30):
        for r2 in np.linspace(0, 1.7, 30):
            f = _gbc_f(4, 1, 9, r1, r2)
            if abs(f) > 1e-9:
                assert gbc_constrained_member(p, CP(r1, r2, 1.0)) == (f <= 0)


def test_gbc_literal_deflation_option():
    p = GbcParams(4, 1, 9)
    # gamma(P) = gamma(h2 P) when h2 = 1, so the c < 1 side agrees
    pt = CP(G_4, (G_4 + G_9) / 2, 0.5)
    assert gbc_constrained_member(p, pt, "literal") == gbc_constrained_member(p, pt, "gain")
    with pytest.raises(ValueError):
        gbc_constrained_member(p, pt, "other")


def test_gbc_swapped_users():
    a, b = GbcParams(4, 1, 9), GbcParams(1, 4, 9)
    for r1 in np.linspace(0.1, 2.5, 12):
        for r2 in np.linspace(0.1, 2.0, 12):
            for c in (0.3, 1.0, 2.5):
                assert gbc_constrained_member(a, CP(r1, r2, c)) == gbc_constrained_member(b, CP(r2, r1, 1 / c))


def test_gic_bounds_membership():
    prm = GicParams(10, 15, 0.64, 0.36)
    inner, outer = weak_bounds(prm)
    assert gic_constrained_member_bounds(inner, outer, 10, 15, CP(0.1, 0.1, 1)) == (True, True)
    assert gic_constrained_member_bounds(inner, outer, 10, 15, CP(3, 3, 1)) == (False, False)
    v = outer.vertices[1]
    assert gic_constrained_member_bounds(inner, outer, 10, 15, CP(v.r1 * 0.999, v.r2 * 0.999, 1)) == (False, True)


def test_block_power_uniform_matches_per_symbol():
    prm = GmacParams(1, 1)
    g1, g2, _ = prm.caps
    for r1 in np.linspace(0, 0.6, 25):
        for r2 in np.linspace(0, 0.6, 25):
            for c in (0.3, 1.0, 2.5):
                pt = CP(r1, r2, c)
                solo = prm.p2 if c <= 1 else prm.p1
                want = mac_constrained_member(MAC, g2, g1, pt)
                assert gmac_block_power_member(prm, pt, PowerSplit.uniform(solo, c)) == want


def test_block_power_substitution():
    prm = GmacParams(1, 10)
    split = PowerSplit(4, 16, 0.5)
    region = gmac_capacity_region(GmacParams(1, 4))
    for r1 in np.linspace(0, 0.6, 20):
        for r2 in np.linspace(0, 2.5, 20):
            pt = CP(r1, r2, 0.5)
            y = max(r2 / 0.5 - (1 / 0.5 - 1) * gamma(16), 0)
            assert gmac_block_power_member(prm, pt, split) == region.contains(r1, y)


def test_block_power_budget_checked():
    with pytest.raises(ValueError):
        gmac_block_power_member(GmacParams(1, 10), CP(0.1, 0.1, 0.5), PowerSplit(4, 15, 0.5))
    with pytest.raises(ValueError):
        gmac_block_power_member(GmacParams(1, 10), CP(0.1, 0.1, 0.5), PowerSplit(10, 10, 0.7))


def test_gbc_block_uniform_matches_per_symbol():
    prm = GbcParams(4, 1, 9)
    for r1 in np.linspace(0.05, 2.6, 15):
        for r2 in np.linspace(0.05, 1.7, 15):
            for c in (0.4, 1.0, 3.0):
                pt = CP(r1, r2, c)
                assert gbc_block_power_member(prm, pt, PowerSplit.uniform(9, c)) == gbc_constrained_member(prm, pt)
