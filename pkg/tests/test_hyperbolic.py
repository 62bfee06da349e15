import cmath
import math

import pytest
from hypothesis import given

from diskmetrics.errors import CoincidentPoints, DegenerateQuadruple, DiskMetricsError, OutsideDisk, PoleInput
from diskmetrics.geom_core import Circle, apply_inversion, circumcenter, inversion_center, line_circle_intersections
from diskmetrics.hyperbolic import (
    DiskAutomorphism,
    ahlfors_bracket,
    chord_midpoint,
    cross_ratio,
    geodesic_endpoints,
    hyperbolic_midpoint,
    mobius_Ta,
    rho,
    rho_via_cross_ratio,
    sh_half_rho,
)
from diskmetrics.oracle import random_pair, random_point

from .conftest import disk_points

# 40-digit mpmath evaluation
RHO_03_06I = 1.586372466186980


class TestRho:
    def test_examples(self):
        assert rho(0, 0.5) == pytest.approx(math.log(3), abs=1e-15)
        assert sh_half_rho(0.3, 0.6j) == pytest.approx(0.3 * math.sqrt(5) / math.sqrt(0.91 * 0.64), rel=1e-15)
        assert rho(0.3, 0.6j) == pytest.approx(RHO_03_06I, rel=1e-13)
        assert rho(0.4 + 0.1j, 0.4 + 0.1j) == 0

    def test_radial_is_log(self):
        for r in (0.1, 0.5, 0.9, 0.999):
            assert rho(0, r) == pytest.approx(math.log((1 + r) / (1 - r)), rel=1e-13)

    def test_outside(self):
        with pytest.raises(OutsideDisk):
            rho(0, 1)
        with pytest.raises(OutsideDisk):
            rho(0.2, 1.5j)

    @given(disk_points(), disk_points(), disk_points())
    def test_mobius_invariance(self, a, b, w):
        d = rho(a, b)
        assert rho(mobius_Ta(w, a), mobius_Ta(w, b)) == pytest.approx(d, rel=1e-9, abs=1e-12)

    @given(disk_points(), disk_points())
    def test_symmetric(self, a, b):
        assert rho(a, b) == rho(b, a)


class TestMobius:
    def test_examples(self):
        assert mobius_Ta(0.5, 0.5) == 0
        assert mobius_Ta(0.5, 0) == pytest.approx(-0.5, abs=1e-15)
        assert mobius_Ta(0, 0.3 + 0.2j) == 0.3 + 0.2j
        assert abs(mobius_Ta(0.4j, cmath.exp(0.7j))) == pytest.approx(1, abs=1e-15)

    def test_inverse(self, rng):
        for _ in range(100):
            a, z = random_pair(rng)
            assert abs(mobius_Ta(-a, mobius_Ta(a, z)) - z) < 1e-14

    def test_pole(self):
        with pytest.raises(PoleInput):
            mobius_Ta(0.5, 2.0)
        with pytest.raises(OutsideDisk):
            mobius_Ta(1.0, 0.0)


class TestCrossRatio:
    def test_example(self):
        assert cross_ratio(-1, -0.5, 0.5, 1) == pytest.approx(9, rel=1e-15)
        assert math.log(cross_ratio(-1, -0.5, 0.5, 1)) == pytest.approx(rho(-0.5, 0.5), rel=1e-14)

    def test_degenerate(self):
        with pytest.raises(DegenerateQuadruple):
            cross_ratio(0.2, 0.2, 0.5, 1)


class TestGeodesicEndpoints:
    def test_diameter(self):
        ea, eb = geodesic_endpoints(-0.5, 0.5)
        assert ea == pytest.approx(-1, abs=1e-15)
        assert eb == pytest.approx(1, abs=1e-15)

    def test_zero_extension(self):
        # the order ep(a,b), a, b, ep(b,a) holds with 0 as an end point
        ea, eb = geodesic_endpoints(0.5j, 0)
        assert ea == pytest.approx(1j, abs=1e-15)
        assert eb == pytest.approx(-1j, abs=1e-15)
        assert rho_via_cross_ratio(0.5j, 0) == pytest.approx(math.log(3), rel=1e-14)
        assert rho_via_cross_ratio(0, 0.5j) == pytest.approx(math.log(3), rel=1e-14)

    def test_on_circle_and_ordered(self, rng):
        for _ in range(500):
            a, b = random_pair(rng)
            ea, eb = geodesic_endpoints(a, b)
            assert abs(abs(ea) - 1) < 1e-12 and abs(abs(eb) - 1) < 1e-12
            # ep(a,b) is nearer a than b in the hyperbolic sense
            assert abs(ea - a) < abs(ea - b)
            assert rho_via_cross_ratio(a, b) == pytest.approx(rho(a, b), abs=1e-10)

    def test_lie_on_geodesic_circle(self, rng):
        # the geodesic through a and b is the circle through a, b and 1/conj(a)
        n = 0
        while n < 200:
            a, b = random_pair(rng)
            try:
                inversion_center(a, b)
            except DiskMetricsError:
                continue
            m = circumcenter(a, b, 1 / a.conjugate())
            r = abs(m - a)
            for e in geodesic_endpoints(a, b):
                assert abs(abs(e - m) - r) < 1e-9 * max(1.0, r)
            n += 1

    def test_coincident(self):
        with pytest.raises(CoincidentPoints):
            geodesic_endpoints(0.1, 0.1)


class TestMidpoints:
    def test_ahlfors_bracket_identity(self, rng):
        for _ in range(200):
            a, b = random_pair(rng)
            alt = math.sqrt(abs(a - b) ** 2 + (1 - abs(a) ** 2) * (1 - abs(b) ** 2))
            assert ahlfors_bracket(a, b) == pytest.approx(alt, rel=1e-13)

    def test_hyperbolic_midpoint_examples(self):
        assert hyperbolic_midpoint(-0.5, 0.5) == pytest.approx(0, abs=1e-15)
        z = hyperbolic_midpoint(0, 0.8)
        assert z == pytest.approx(0.5, abs=1e-15)

    @given(disk_points(), disk_points())
    def test_hyperbolic_midpoint_property(self, a, b):
        z = hyperbolic_midpoint(a, b)
        d = rho(a, b)
        assert abs(rho(a, z) - rho(z, b)) < 1e-9 * max(1.0, d)
        assert abs(rho(a, z) - d / 2) < 1e-9 * max(1.0, d)

    def test_chord_midpoint_examples(self):
        assert chord_midpoint(0.5j - 0.3, 0.5j + 0.4) == pytest.approx(0.5j, abs=1e-15)
        assert chord_midpoint(-0.5, 0.5) == pytest.approx(0, abs=1e-15)
        with pytest.raises(CoincidentPoints):
            chord_midpoint(0.3, 0.3)

    def test_chord_midpoint_is_midpoint_of_chord(self, rng):
        for _ in range(300):
            a, b = random_pair(rng)
            e1, e2 = line_circle_intersections(a, b, Circle(0j, 1.0))
            assert abs(chord_midpoint(a, b) - (e1 + e2) / 2) < 1e-9


class TestAutomorphisms:
    def test_kinds(self, rng):
        z = 0.3 - 0.4j
        assert DiskAutomorphism.identity()(z) == z
        assert DiskAutomorphism.mobius(0.2)(z) == mobius_Ta(0.2, z)
        c = 2 + 1j
        assert DiskAutomorphism.inversion(c)(z) == apply_inversion(c, z)
        f = DiskAutomorphism.radial_stretch(2.0)
        assert f(z) == pytest.approx(z * abs(z) ** -0.5, rel=1e-15)
        assert f(0j) == 0
        assert f.K == 2.0 and DiskAutomorphism.mobius(0.1).K == 1.0

    def test_invalid(self):
        with pytest.raises(ValueError):
            DiskAutomorphism("shear")
        with pytest.raises(OutsideDisk):
            DiskAutomorphism.mobius(1.2)
        with pytest.raises(DiskMetricsError):
            DiskAutomorphism.inversion(0.5)
        with pytest.raises(DiskMetricsError):
            DiskAutomorphism.radial_stretch(0.5)

    def test_images_stay_in_disk(self, rng):
        maps = [DiskAutomorphism.mobius(random_point(rng)), DiskAutomorphism.radial_stretch(4.0)]
        for _ in range(200):
            z = random_point(rng)
            for f in maps:
                assert abs(f(z)) < 1
