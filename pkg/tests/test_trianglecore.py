import math
from fractions import Fraction

import pytest

from bisectarea import corpus
from bisectarea.trianglecore import (
    InvalidAltitudes,
    InvalidMedians,
    InvalidTriangle,
    NonPositiveInput,
    Triangle,
    altitudes,
    angles,
    area_from_altitudes,
    area_from_medians,
    area_heron,
    area_heron_hp,
    bisectors,
    bisectors_side_form,
    inradius,
    medians,
    metrics,
    symmetric_invariants,
    tangent_lengths,
    vrf_residuals,
)

# sqrt(p(p-a)(p-b)(p-c)) at 50 digits for the binary double nearest 1.999.
THIN_AREA = 0.031603014095769253715394735479312310984721929946459


def rel(x, y):
    return abs(x - y) / abs(y)


class TestHeron:
    def test_right_triangle(self):
        assert area_heron(3, 4, 5) == 6

    def test_equilateral(self):
        assert area_heron(2, 2, 2) == pytest.approx(math.sqrt(3), rel=1e-15)

    def test_thin_triangle_against_frozen_high_precision(self):
        assert rel(area_heron(1, 1, 1.999), THIN_AREA) < 1e-14
        assert rel(float(area_heron_hp(1, 1, 1.999, 50)), THIN_AREA) < 1e-15

    @pytest.mark.parametrize("sides", [(1, 1, 2), (1, 2, 3.0001), (0, 1, 1), (-1, 2, 2), (1, 1, math.inf)])
    def test_degenerate_rejected(self, sides):
        with pytest.raises(InvalidTriangle):
            area_heron(*sides)
        with pytest.raises(InvalidTriangle):
            Triangle(*sides)


def test_medians():
    ma, mb, mc = medians(3, 4, 5)
    assert mc == 2.5
    assert ma == pytest.approx(0.5 * math.sqrt(73), rel=1e-15)
    assert medians(2, 2, 2) == pytest.approx((math.sqrt(3),) * 3, rel=1e-15)


def test_area_from_medians():
    assert area_from_medians(*medians(3, 4, 5)) == pytest.approx(6, rel=1e-15)
    s3 = math.sqrt(3)
    assert area_from_medians(s3, s3, s3) == pytest.approx(s3, rel=1e-15)
    assert area_from_medians(*medians(5, 6, 7)) == pytest.approx(area_heron(5, 6, 7), rel=1e-14)
    with pytest.raises(InvalidMedians):
        area_from_medians(1, 1, 3)


def test_altitudes():
    assert altitudes(3, 4, 5)[2] == pytest.approx(12 / 5, rel=1e-15)
    assert area_from_altitudes(*altitudes(3, 4, 5)) == pytest.approx(6, rel=1e-15)
    assert area_from_altitudes(*altitudes(7, 8, 9)) == pytest.approx(12 * math.sqrt(5), rel=1e-14)
    with pytest.raises(InvalidAltitudes):
        area_from_altitudes(1, 1, 0.1)


def test_angles():
    al, be, ga = angles(3, 4, 5)
    assert ga == pytest.approx(math.pi / 2, rel=1e-15)
    assert angles(2, 2, 2) == pytest.approx((math.pi / 3,) * 3, rel=1e-15)
    # Law of sines as the oracle for (4, 5, 6).
    sides = (4, 5, 6)
    ratios = [s / math.sin(t) for s, t in zip(sides, angles(*sides))]
    assert max(ratios) - min(ratios) < 1e-13 * ratios[0]
    assert sum(angles(*sides)) == pytest.approx(math.pi, rel=1e-15)


def test_bisectors():
    la, lb, lc = bisectors(3, 4, 5)
    assert lc == pytest.approx(12 * math.sqrt(2) / 7, rel=1e-14)
    assert la == pytest.approx(2 / 9 * math.sqrt(360), rel=1e-14)
    assert bisectors(2, 2, 2) == pytest.approx((math.sqrt(3),) * 3, rel=1e-14)


def test_bisector_cross_check_flag():
    assert bisectors(4, 5, 6, cross_check=True) == pytest.approx(bisectors_side_form(4, 5, 6), rel=1e-14)


def test_tangent_lengths_sum_to_semiperimeter():
    for t in corpus.triangles(11, 100):
        assert sum(tangent_lengths(*t.sides)) == pytest.approx(sum(t.sides) / 2, rel=1e-14)


def test_inradius_and_invariants():
    assert inradius(3, 4, 5) == 1
    inv = symmetric_invariants(1, 2, 3)
    assert inv.as_tuple() == (Fraction(49, 36), Fraction(1, 6), Fraction(7, 18))
    assert symmetric_invariants(1, 1, 1).as_tuple() == (3, 1, 3)
    assert isinstance(symmetric_invariants(1.0, 2, 3).a2, float)
    with pytest.raises(NonPositiveInput):
        symmetric_invariants(1, 0, 2)


def test_power_mean_inequality_on_invariants():
    for t in corpus.triangles(12, 200):
        inv = symmetric_invariants(*bisectors(*t.sides))
        assert inv.a2**2 >= 3 * inv.a4 * (1 - 1e-12)


@pytest.mark.parametrize("sides", [(2, 2, 2), (3, 4, 5), (4, 5, 6)])
def test_vrf_examples(sides):
    r1, r2 = vrf_residuals(Triangle(*sides))
    assert r1 <= 1e-10 and r2 <= 1e-10


def test_metrics_invariants():
    for t in corpus.triangles(13, 200):
        m = metrics(*t.sides)
        assert m.alpha + m.beta + m.gamma == pytest.approx(math.pi, rel=1e-12)
        assert m.S == pytest.approx(m.p * m.r, rel=1e-14)
        assert all(v > 0 for v in m.as_dict().values())


def test_cross_formula_agreement_corpus():
    for t in corpus.triangles(14, 1000):
        S = area_heron(*t.sides)
        assert rel(area_from_medians(*medians(*t.sides)), S) <= 1e-11
        assert rel(area_from_altitudes(*altitudes(*t.sides)), S) <= 1e-11


def test_bisector_routes_agree_corpus():
    for t in corpus.triangles(15, 1000):
        for x, y in zip(bisectors(*t.sides), bisectors_side_form(*t.sides)):
            assert rel(x, y) <= 1e-12


@pytest.mark.parametrize("k", [1 / 3, 2, 10])
def test_scaling_covariance(k):
    for t in corpus.triangles(16, 50):
        m = metrics(*t.sides)
        mk = metrics(*t.scaled(k).sides)
        for name in ("p", "r", "m_a", "m_b", "m_c", "h_a", "h_b", "h_c", "l_a", "l_b", "l_c"):
            assert getattr(mk, name) == pytest.approx(k * getattr(m, name), rel=1e-12)
        assert mk.S == pytest.approx(k * k * m.S, rel=1e-12)
        assert mk.alpha == pytest.approx(m.alpha, rel=1e-12)
        inv = symmetric_invariants(m.l_a, m.l_b, m.l_c)
        invk = symmetric_invariants(mk.l_a, mk.l_b, mk.l_c)
        assert invk.a2 == pytest.approx(k**-2 * inv.a2, rel=1e-12)
        assert invk.a3 == pytest.approx(k**-3 * inv.a3, rel=1e-12)
        assert invk.a4 == pytest.approx(k**-4 * inv.a4, rel=1e-12)
