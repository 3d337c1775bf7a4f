import pytest
from hypothesis import given, strategies as st

from ctregion.channels import Load, RatePair
from ctregion.mapping import NEVER, LineCoeffs, TimePair, inverse_g, map_g, transport_line

R_D = RatePair(0.292481250360578090726869471974, 0.5)
PHI1 = 2.8300749985576876370925221121


def test_map_g2_corner():
    d = map_g(2, R_D, Load(1, 1), 0.5)
    assert (d.d1, d.d2) == pytest.approx((PHI1, 2.0), abs=1e-14)


def test_inverse_of_corner():
    r = inverse_g(2, TimePair(PHI1, 2.0), Load(1, 1), 0.5)
    assert (r.r1, r.r2) == pytest.approx((R_D.r1, R_D.r2), rel=1e-12)
    assert not r.dominated


def test_map_without_deflation():
    d = map_g(1, RatePair(0.3, 0.5), Load(2, 1), 0.5)
    assert d.d2 == pytest.approx(1 / 0.5)


def test_inverse_band_edges():
    load = Load(1, 1)
    r = inverse_g(1, TimePair(3.0, 3.0), load, 0.5)
    assert r.r2 == pytest.approx(1 / 3.0)
    r = inverse_g(1, TimePair(3.0, 3.0 + 1 / 0.5), load, 0.5)
    assert r.r2 == pytest.approx(0, abs=1e-15) and not r.dominated
    r = inverse_g(1, TimePair(3.0, 9.0), load, 0.5)
    assert r.r2 == 0 and r.dominated


def test_inverse_rejects_wrong_order():
    with pytest.raises(ValueError):
        inverse_g(1, TimePair(3.0, 2.0), Load(1, 1), 0.5)


def test_never_sentinel():
    d = map_g(1, RatePair(0, 0.5), Load(1, 1), 0.5)
    assert d.d1 is NEVER and d.d2 == 2.0
    d = map_g(1, RatePair(0, 0.2), Load(1, 1), 0.5)
    assert d.d1 is NEVER and d.d2 is NEVER
    assert not d.finite
    with pytest.raises(ValueError):
        d.c


def test_map_rejects_rate_above_solo():
    with pytest.raises(ValueError):
        map_g(1, RatePair(0.3, 0.6), Load(1, 1), 0.5)


def test_time_pair_validation():
    with pytest.raises(ValueError):
        TimePair(0, 1)
    with pytest.raises(ValueError):
        TimePair(float("inf"), 1)
    with pytest.raises(ValueError):
        LineCoeffs(0, 0)


def test_transport_vertical_line():
    ln = transport_line(1, LineCoeffs(2.0, 0.0), Load(3, 1), 0.5)
    assert ln.a2 == 0 and 1 / ln.a1 == pytest.approx(2.0 * 3)


def test_transport_sum_facet_matches_closed_form():
    g1, g12 = 0.5, 0.792481250360578090726869471974
    ln = transport_line(2, LineCoeffs(1 / g12, 1 / g12), Load(1, 1), g1)
    # expected facet: g1 d1 + (g12 - g1) d2 = tau1 + tau2
    assert ln.a1 == pytest.approx(g1 / 2, rel=1e-14)
    assert ln.a2 == pytest.approx((g12 - g1) / 2, rel=1e-14)


rates = st.floats(0.01, 3.0)
loads = st.builds(Load, st.floats(0.1, 10), st.floats(0.1, 10))


@given(st.sampled_from([1, 2]), rates, st.floats(0, 1), loads, st.floats(1.0, 2.0))
def test_round_trip(which, r_first, frac, load, boost):
    r_star = r_first * boost
    # stay on the side where user ``which`` really finishes first
    t_f, t_o = (load.tau1, load.tau2) if which == 1 else (load.tau2, load.tau1)
    other = frac * min(r_star, r_first * t_o / t_f)
    r = RatePair(r_first, other) if which == 1 else RatePair(other, r_first)
    d = map_g(which, r, load, r_star)
    back = inverse_g(which, d, load, r_star)
    assert back.r1 == pytest.approx(r.r1, rel=1e-10, abs=1e-12)
    assert back.r2 == pytest.approx(r.r2, rel=1e-10, abs=1e-12)


@given(rates, rates, st.floats(0, 1), st.floats(0, 1), loads)
def test_monotone_non_increasing(x, y, s, t, load):
    r_star = 3.0
    lo = RatePair(min(x, y), min(s, t) * r_star)
    hi = RatePair(max(x, y), max(s, t) * r_star)
    a, b = map_g(1, hi, load, r_star), map_g(1, lo, load, r_star)
    assert a.d1 <= b.d1 * (1 + 1e-12) and a.d2 <= b.d2 * (1 + 1e-12)


@given(rates, loads)
def test_maps_agree_on_load_ray(t, load):
    r = RatePair(t * load.tau1 / 10, t * load.tau2 / 10)
    a = map_g(1, r, load, 5.0)
    b = map_g(2, r, load, 5.0)
    assert a.d1 == pytest.approx(b.d1, rel=1e-12) and a.d2 == pytest.approx(b.d2, rel=1e-12)
    assert a.d1 == pytest.approx(a.d2, rel=1e-12)
