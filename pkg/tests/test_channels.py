import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ctregion.channels import (
    GbcParams, GicParams, GmacParams, Load, PiecewiseLinearRegion, RatePair, Regime,
    UnsupportedRegime, gamma, gbc_boundary_point, gbc_capacity_f, gic_regime,
    gic_strong_capacity_region, gmac_capacity_f, gmac_capacity_region, gic_sum_cap,
)

# 30-digit references computed with mpmath
G_HALF = 0.292481250360578090726869471974
G_2 = 0.792481250360578090726869471974
G_5 = 1.29248125036057809072686947197
G_10 = 1.72971580931864862809968152336
G_36 = 2.60472668281447489092890208881
G_9 = 1.66096404744368117393515971474
G_4 = 1.16096404744368117393515971474


def test_gamma_values():
    assert gamma(0) == 0.0
    assert gamma(1) == 0.5
    assert gamma(3) == 1.0
    assert gamma(2) == pytest.approx(G_2, abs=1e-15)


@pytest.mark.parametrize("bad", [-1e-9, math.inf, math.nan])
def test_gamma_domain(bad):
    with pytest.raises(ValueError):
        gamma(bad)


@given(st.floats(0, 1e6), st.floats(0, 1e6))
def test_gamma_increasing_and_concave(x, y):
    x, y = min(x, y), max(x, y)
    if y - x > 1e-9 * max(1.0, y):
        assert gamma(x) < gamma(y)
    assert gamma((x + y) / 2) >= (gamma(x) + gamma(y)) / 2 - 1e-12


@pytest.mark.parametrize("p1,p2", [(0, 1), (1, -2), (math.inf, 1)])
def test_gmac_params_reject(p1, p2):
    with pytest.raises(ValueError):
        GmacParams(p1, p2)


def test_gmac_capacity_f_examples():
    p = GmacParams(1, 1)
    assert gmac_capacity_f(p, RatePair(0, 0)) == pytest.approx(-0.5)
    assert gmac_capacity_f(p, RatePair(G_HALF, 0.5)) == pytest.approx(0.0, abs=1e-15)
    assert gmac_capacity_f(p, RatePair(0.6, 0.6)) == pytest.approx(1.2 - G_2, abs=1e-15)


@pytest.mark.parametrize("p1,p2", [(1, 1), (5, 10), (10, 1)])
def test_gmac_capacity_f_sign_matches_inequalities(p1, p2):
    prm = GmacParams(p1, p2)
    g1, g2, g12 = prm.caps
    for r1 in np.linspace(0, g1 + 0.5, 100):
        for r2 in np.linspace(0, g2 + 0.5, 100):
            direct = r1 <= g1 and r2 <= g2 and r1 + r2 <= g12
            f = gmac_capacity_f(prm, RatePair(r1, r2))
            if abs(f) > 1e-12:
                assert (f <= 0) == direct


def test_gmac_region_vertices():
    reg = gmac_capacity_region(GmacParams(1, 1))
    got = [(v.r1, v.r2) for v in reg.vertices]
    want = [(0, 0.5), (G_HALF, 0.5), (0.5, G_HALF), (0.5, 0)]
    assert np.allclose(got, want, atol=1e-14)


def test_gmac_region_caps_and_symmetry():
    g1, g2, g12 = GmacParams(5, 10).caps
    assert (g1, g2, g12) == pytest.approx((G_5, G_10, 2.0), abs=1e-14)
    a = gmac_capacity_region(GmacParams(5, 10)).vertices
    b = gmac_capacity_region(GmacParams(10, 5)).vertices
    assert np.allclose([(v.r1, v.r2) for v in a], [(v.r2, v.r1) for v in reversed(b)], atol=1e-14)


def test_region_rejects_unbounded_and_bad_halfplanes():
    with pytest.raises(ValueError):
        PiecewiseLinearRegion([(1, 0, 1)])
    with pytest.raises(ValueError):
        PiecewiseLinearRegion([(-1, 1, 1), (1, 0, 1)])
    with pytest.raises(ValueError):
        PiecewiseLinearRegion([(1, 0, 0), (0, 1, 1)])


def test_region_drops_redundant_halfplanes():
    reg = PiecewiseLinearRegion([(1, 0, 1), (0, 1, 1), (1, 1, 5), (1, 1, 1.5)])
    assert [(v.r1, v.r2) for v in reg.vertices] == [(0, 1), (0.5, 1), (1, 0.5), (1, 0)]


def test_region_ray_intersection_and_vertex_tie():
    reg = gmac_capacity_region(GmacParams(1, 1))
    r, k = reg.ray_intersection(1.0)
    assert (r.r1, r.r2) == pytest.approx((G_2 / 2, G_2 / 2))
    assert k == 1
    # ray exactly through a vertex: the facet with smaller r1 wins
    sq = PiecewiseLinearRegion([(1, 0, 1), (0, 1, 1), (1, 1, 1.5)])
    r, k = sq.ray_intersection(2.0)
    assert k == 0 and (r.r1, r.r2) == (0.5, 1.0)


@given(st.lists(st.tuples(st.floats(0.01, 5), st.floats(0.01, 5), st.floats(0.1, 5)), min_size=2, max_size=6))
def test_region_vertices_monotone(hp):
    reg = PiecewiseLinearRegion(hp)
    v = reg.vertices
    for a, b in zip(v[:-1], v[1:]):
        assert b.r1 >= a.r1 - 1e-12 and b.r2 <= a.r2 + 1e-12
    for x in v:
        assert reg.value(x.r1, x.r2) <= 1e-9


def test_gbc_params_normalize():
    p = GbcParams(1, 4, 9)
    assert (p.h1, p.h2, p.swapped) == (4, 1, True)
    assert not GbcParams(4, 1, 9).swapped


def test_gbc_boundary_point_examples():
    p = GbcParams(4, 1, 9)
    assert tuple(gbc_boundary_point(p, 0)) == pytest.approx((0, G_9))
    assert tuple(gbc_boundary_point(p, 9)) == pytest.approx((G_36, 0), abs=1e-15)
    assert tuple(gbc_boundary_point(p, 1)) == pytest.approx((G_4, G_4))
    with pytest.raises(ValueError):
        gbc_boundary_point(p, 9.01)


def test_gbc_boundary_point_unswaps():
    a = gbc_boundary_point(GbcParams(4, 1, 9), 2.0)
    b = gbc_boundary_point(GbcParams(1, 4, 9), 2.0)
    assert (a.r1, a.r2) == (b.r2, b.r1)


def test_gbc_capacity_f_examples():
    p = GbcParams(4, 1, 9)
    assert gbc_capacity_f(p, RatePair(0, G_9)) == pytest.approx(0, abs=1e-15)
    assert gbc_capacity_f(p, RatePair(G_4, G_4)) == pytest.approx(0, abs=1e-9)
    assert gbc_capacity_f(p, RatePair(G_4, 1.5)) == pytest.approx(0.339035952556318826, abs=1e-12)


@given(st.floats(0.1, 20), st.floats(0.1, 20), st.floats(0.1, 50), st.floats(0, 1))
def test_gbc_boundary_points_on_boundary(h1, h2, p, frac):
    prm = GbcParams(h1, h2, p)
    assert abs(gbc_capacity_f(prm, gbc_boundary_point(prm, frac * prm.p))) < 1e-9


@pytest.mark.parametrize("prm,want", [
    ((10, 15, 0.64, 0.36), Regime.WEAK),
    ((1, 1, 2, 2), Regime.VERY_STRONG),
    ((1, 1, 1.5, 1.5), Regime.STRONG),
    ((1, 1, 1.5, 0.5), Regime.MIXED),
    ((1, 1, 0.5, 1.0), Regime.MIXED),
])
def test_gic_regime(prm, want):
    assert gic_regime(GicParams(*prm)) is want


@pytest.mark.parametrize("prm", [(1, 1, 2, 0.5), (1, 1, 2, 1.5), (1, 1, 1.5, 3)])
def test_gic_regime_unsupported(prm):
    with pytest.raises(UnsupportedRegime):
        gic_regime(GicParams(*prm))


def test_gic_strong_regions():
    vs = gic_strong_capacity_region(GicParams(1, 1, 2, 2))
    assert [(v.r1, v.r2) for v in vs.vertices] == [(0, 0.5), (0.5, 0.5), (0.5, 0)]
    assert gic_sum_cap(GicParams(1, 1, 1.5, 1.5)) == pytest.approx(0.903677461028802054, abs=1e-15)
    assert gic_sum_cap(GicParams(1, 1, 1.2, 1.8)) == pytest.approx(0.839035952556318866, abs=1e-15)
    with pytest.raises(ValueError):
        gic_strong_capacity_region(GicParams(10, 15, 0.64, 0.36))


@pytest.mark.parametrize("prm", [(1, 1, 1.5, 1.5), (1, 1, 1.2, 1.8), (3, 2, 1.1, 3.9), (1, 1, 2, 2)])
def test_strong_region_sits_between_gmac_and_rectangle(prm):
    gic = GicParams(*prm)
    strong = gic_strong_capacity_region(gic)
    mac = gmac_capacity_region(GmacParams(gic.p1, gic.p2))
    for v in mac.vertices:
        assert strong.contains(v.r1, v.r2)
    g1, g2 = gamma(gic.p1), gamma(gic.p2)
    for v in strong.vertices:
        assert v.r1 <= g1 + 1e-12 and v.r2 <= g2 + 1e-12


def test_load_validation():
    with pytest.raises(ValueError):
        Load(0, 1)
    assert Load(1, 2).swapped() == Load(2, 1)
