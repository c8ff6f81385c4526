import numpy as np
import pytest

import oracle_data as oracle
from relscat import special
from relscat.errors import DomainError


class TestBesselKReal:
    @pytest.mark.parametrize("x,want", oracle.K0_REAL)
    def test_k0_oracle(self, x, want):
        assert special.bessel_k(0, x) == pytest.approx(want, rel=1e-13)

    @pytest.mark.parametrize("x,want", oracle.K1_REAL)
    def test_k1_oracle(self, x, want):
        assert special.bessel_k(1, x) == pytest.approx(want, rel=1e-13)

    def test_spec_values(self):
        assert special.bessel_k(0, 1.0) == pytest.approx(0.42102443824070834, rel=1e-13)
        assert special.bessel_k(1, 1.0) == pytest.approx(0.6019072301972346, rel=1e-13)

    def test_small_argument_log_behaviour(self):
        # K0(x) -> -log(x/2) - gamma as x -> 0+
        approx = -np.log(0.5e-8) - special.EULER_GAMMA
        assert special.bessel_k(0, 1e-8) == pytest.approx(approx, rel=1e-3)
        assert special.bessel_k(0, 1e-8) == pytest.approx(18.532, abs=5e-3)

    def test_underflow_is_graceful(self):
        assert special.bessel_k(0, 800.0) == 0.0

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            special.bessel_k(0, 0.0)
        with pytest.raises(DomainError):
            special.bessel_k(1, -2.0)
        with pytest.raises(DomainError):
            special.bessel_k(2, 1.0)

    def test_branch_seam_agreement(self):
        # mid and far table branches must agree at the x = 8 seam
        x = np.array([8.0])
        for mid_t, far_t in [(special._tables.CHEB_K0_MID, special._tables.CHEB_K0_FAR),
                             (special._tables.CHEB_K1_MID, special._tables.CHEB_K1_FAR)]:
            mid = special._clenshaw(mid_t, (x - 5.0) / 3.0)
            far = special._clenshaw(far_t, 16.0 / x - 1.0)
            assert abs(mid[0] - far[0]) <= 1e-11 * abs(far[0])
        # series and mid branch agree at the x = 2 seam
        for order in (0, 1):
            ser = special._k01_series(np.array([2.0]), order)[0]
            tab = special._k01_real(np.array([2.0 + 1e-14]), order)[0]
            assert ser == pytest.approx(tab, rel=1e-11)

    def test_monotone_decreasing(self):
        x = np.geomspace(1e-3, 100.0, 200)
        for f in (special.k0, special.k1):
            v = f(x)
            assert np.all(np.diff(v) < 0)


class TestI0:
    @pytest.mark.parametrize("x,want", oracle.I0_REAL)
    def test_oracle(self, x, want):
        assert special.i0(np.array([x]))[0] == pytest.approx(want, rel=1e-13)


class TestHankel:
    @pytest.mark.parametrize("z,want", oracle.H0_COMPLEX)
    def test_oracle_grid(self, z, want):
        got = special.hankel1_0(z)
        assert abs(got - want) <= 1e-12 * abs(want)

    def test_spec_point_imaginary(self):
        want = -2j / np.pi * special.bessel_k(0, 1.0)
        got = special.hankel1_0(1j)
        assert abs(got - want) <= 1e-12 * abs(want)
        assert abs(got.imag - (-0.26803)) < 1e-5

    def test_spec_point_real(self):
        got = special.hankel1_0(1.0)
        assert got.real == pytest.approx(0.7651976865579666, rel=1e-12)
        assert got.imag == pytest.approx(0.08825696421567697, rel=1e-12)

    def test_cross_identity_k0(self):
        # K0(w) = (i pi / 2) H0^(1)(i w) on a log-spaced grid
        for w in np.geomspace(1e-3, 50.0, 41):
            lhs = special.bessel_k(0, w)
            rhs = 0.5j * np.pi * special.hankel1_0(1j * w)
            assert abs(rhs.imag) <= 1e-15 * abs(lhs)
            assert abs(rhs.real - lhs) <= 1e-12 * abs(lhs)

    def test_decay_on_imaginary_axis(self):
        for kappa in [1.0, 3.0, 10.0, 40.0]:
            assert abs(special.hankel1_0(1j * kappa)) <= np.exp(-kappa)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            special.hankel1_0(0.0)
        with pytest.raises(DomainError):
            special.hankel1_0(1.0 - 0.5j)

    def test_region_seams(self):
        # both evaluation branches agree where the dispatcher switches over
        for theta in [0.0, 0.4, 0.9, 1.4, 0.5 * np.pi]:
            w = np.array([19.0 * np.exp(1j * theta)])
            tay = special._taylor_groups(w, special._K0_ANCHORS,
                                         special._tables.K0_RING0,
                                         special._tables.K0_NRING)[0]
            asym = special._k0c_asym(w)[0]
            assert abs(tay - asym) <= 1e-11 * abs(asym)
        # plain series vs Taylor continuation at the cancellation cutoff
        for theta in [0.7, 1.0, 1.4, 0.5 * np.pi]:
            r = 6.0 / (1.0 + np.cos(theta))
            if r > 19.0:
                r = 19.0
            w = np.array([r * np.exp(1j * theta)])
            ser = special._k0c_series(w)[0]
            tay = special._taylor_groups(w, special._K0_ANCHORS,
                                         special._tables.K0_RING0,
                                         special._tables.K0_NRING)[0]
            assert abs(ser - tay) <= 1e-11 * abs(tay)


class TestJ0Complex:
    @pytest.mark.parametrize("z,want", oracle.J0_COMPLEX)
    def test_oracle_grid(self, z, want):
        got = special.j0_complex(np.array([z]))[0]
        assert abs(got - want) <= 1e-12 * abs(want)


class TestSphericalBessel:
    def test_closed_forms(self):
        assert special.mod_sph_bessel("i", 0, 1.0) == pytest.approx(
            np.sinh(1.0), rel=1e-14)
        assert special.mod_sph_bessel("k", 0, 1.0) == pytest.approx(
            np.exp(-1.0), rel=1e-14)

    def test_small_argument_product_law(self):
        # x * i_3(x) * k_3(x) -> 1/(2l+1) = 1/7 as x -> 0
        x = 1e-4
        prod = x * special.mod_sph_bessel("i", 3, x) * special.mod_sph_bessel("k", 3, x)
        assert prod == pytest.approx(1.0 / 7.0, rel=1e-6)

    @pytest.mark.parametrize("l,x,i_want,k_want", oracle.SPH_SCALED)
    def test_scaled_oracle(self, l, x, i_want, k_want):
        isc, ksc = special.sph_ik_scaled(l, x)
        assert isc[l] == pytest.approx(i_want, rel=1e-12)
        assert ksc[l] == pytest.approx(k_want, rel=1e-12)

    @pytest.mark.parametrize("l", [0, 1, 2, 5, 10, 20])
    @pytest.mark.parametrize("x", [0.1, 1.0, 10.0])
    def test_wronskian(self, l, x):
        # i_l(x) k_l'(x) - i_l'(x) k_l(x) = -1/x^2 (scaled form is identical)
        isc, ksc = special.sph_ik_scaled(l, x)
        ipr = special.sph_i_scaled_derivative(l, x)
        kpr = special.sph_k_scaled_derivative(l, x)
        w = isc[l] * kpr[l] - ipr[l] * ksc[l]
        assert w == pytest.approx(-1.0 / x ** 2, rel=1e-10)

    def test_k_monotone_decreasing_in_x(self):
        x = np.linspace(0.2, 20.0, 60)
        for l in (0, 3):
            vals = [special.mod_sph_bessel("k", l, xi) for xi in x]
            assert np.all(np.diff(vals) < 0)

    def test_positivity(self):
        for l in (0, 2, 7):
            for x in (0.05, 1.0, 30.0):
                assert special.mod_sph_bessel("i", l, x) > 0
                assert special.mod_sph_bessel("k", l, x) > 0

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            special.mod_sph_bessel("i", 0, -1.0)
        with pytest.raises(DomainError):
            special.mod_sph_bessel("j", 0, 1.0)
        with pytest.raises(DomainError):
            special.mod_sph_bessel("i", 61, 1.0)
