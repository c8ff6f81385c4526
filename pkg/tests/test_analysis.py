import numpy as np
import pytest

from relscat import analysis, geometry as geo, layer2d
from relscat.analysis import RelShiftSample
from relscat.errors import InputError, NumericalError, SceneError


def circle_pair(gap=1.0, r1=1.0, r2=1.0):
    return geo.Scene(2, (geo.Circle((0.0, 0.0), r1),
                         geo.Circle((r1 + r2 + gap, 0.0), r2)))


def synthetic_samples(prefactor, rate, kappas):
    return [layer2d.XiSample(1j * k, complex(-prefactor * np.exp(-rate * k)), 0)
            for k in kappas]


class TestFitDecay:
    def test_synthetic_identity(self):
        fit = analysis.fit_decay(
            synthetic_samples(0.3, 2.0, np.linspace(4, 10, 13)), 1.0)
        assert fit.slope == pytest.approx(-2.0, abs=1e-12)
        assert fit.prefactor == pytest.approx(0.3, rel=1e-12)
        assert fit.residual <= 1e-12

    def test_circle_pair_slope_and_prefactor(self):
        scene = circle_pair(1.0)
        samples = analysis.xi_imaginary_sweep(scene, np.geomspace(4, 10, 13),
                                              n=256)
        fit = analysis.fit_decay(samples, scene.delta)
        assert fit.slope == pytest.approx(-2.0, abs=0.02)
        want = 1.0 / (2.0 * np.sqrt(3.0))
        assert fit.prefactor == pytest.approx(want, rel=0.02)
        assert fit.slope < 0
        assert fit.residual < 0.01

    def test_tiny_samples_excluded_with_warning(self):
        kappas = np.linspace(4, 10, 13)
        samples = synthetic_samples(0.3, 2.0, kappas)
        dead = layer2d.XiSample(200j, complex(-1e-300), 0)
        with pytest.warns(UserWarning):
            fit = analysis.fit_decay(samples + [dead], 1.0)
        assert fit.n_samples == 13

    def test_sphere_pair_prefactor_invariant(self):
        # 3D spheres, L >= 12: fitted prefactor within 3% of the billiards
        # route over a window reaching 2 delta kappa = 20
        scene = geo.Scene(3, (geo.Sphere((0, 0, 0), 1.0),
                              geo.Sphere((0, 0, 3.0), 1.0)))
        samples = analysis.xi_imaginary_sweep(scene, np.geomspace(4, 10, 13),
                                              lmax=16)
        fit = analysis.fit_decay(samples, scene.delta)
        assert fit.prefactor == pytest.approx(1.0 / 12.0, rel=0.03)
        assert fit.slope == pytest.approx(-2.0, abs=0.02)

    def test_input_errors(self):
        with pytest.raises(InputError):
            analysis.fit_decay(
                synthetic_samples(0.3, 2.0, np.linspace(4, 10, 5)), 1.0)
        with pytest.raises(InputError):
            analysis.fit_decay(
                synthetic_samples(0.3, 2.0, np.linspace(1.0, 2.0, 9)), 1.0)
        off_axis = [layer2d.XiSample(1.0 + 1j * k, complex(-0.1), 0)
                    for k in np.linspace(4, 10, 9)]
        with pytest.raises(InputError):
            analysis.fit_decay(off_axis, 1.0)


class TestCasimirEnergy:
    def test_negative_and_decreasing_with_gap(self):
        energies = []
        for gap in (1.0, 2.0, 3.0):
            res = analysis.casimir_energy(circle_pair(gap), tol=1e-6, n=96)
            assert res.energy < 0
            energies.append(res.energy)
        assert abs(energies[0]) > abs(energies[1]) > abs(energies[2])

    def test_error_estimate_honest_under_tol_halving(self):
        scene = circle_pair(1.0)
        res = analysis.casimir_energy(scene, tol=1e-6, n=96)
        res2 = analysis.casimir_energy(scene, tol=5e-7, n=96)
        assert abs(res.energy - res2.energy) <= res.abs_error_estimate

    def test_tail_bound_invariant(self):
        res = analysis.casimir_energy(circle_pair(1.0), tol=1e-6, n=96)
        assert res.tail_bound <= 0.5e-6
        assert res.kappa_max > 0 and res.panels

    def test_far_scene_small_energy(self):
        # the exponential body of the integral vanishes at large gaps; what
        # survives is the infrared kappa < 1/delta region, which in 2D is
        # only logarithmically suppressed (E ~ 5e-5 at gap 100, not 1e-8)
        near = analysis.casimir_energy(circle_pair(1.0), tol=1e-6, n=96)
        far = analysis.casimir_energy(circle_pair(100.0), tol=1e-8, n=64)
        assert abs(far.energy) <= 1e-4
        assert abs(far.energy) <= 2e-3 * abs(near.energy)
        assert far.tail_bound <= 0.5e-8

    def test_integrand_real(self):
        # energy path inherits reality; sampled integrand imaginary parts
        scene = circle_pair(1.0)
        for kappa in (1e-3, 0.5, 4.0):
            assert abs(analysis.xi_on_axis(scene, kappa, n=96).xi.imag) <= 1e-12

    def test_3d_energy_negative(self):
        scene = geo.Scene(3, (geo.Sphere((0, 0, 0), 1.0),
                              geo.Sphere((0, 0, 3.0), 1.0)))
        res = analysis.casimir_energy(scene, tol=1e-6, lmax=10)
        assert res.energy < 0

    def test_single_obstacle_rejected(self):
        with pytest.raises(SceneError):
            analysis.casimir_energy(
                geo.Scene(2, (geo.Circle((0, 0), 1.0),)), tol=1e-6)


class TestCasimirForce:
    def test_attractive(self):
        force = analysis.casimir_force(circle_pair(1.0), h=0.02, tol=1e-7, n=96)
        assert force < 0

    def test_magnitude_decreasing_with_gap(self):
        f1 = analysis.casimir_force(circle_pair(1.0), h=0.02, tol=1e-7, n=96)
        f2 = analysis.casimir_force(circle_pair(2.0), h=0.02, tol=1e-7, n=96)
        assert abs(f1) > abs(f2)

    def test_translation_antisymmetry(self):
        # moving obstacle 1 by +s or obstacle 2 by -s gives equal energies
        scene = circle_pair(1.0)
        s = 0.01
        moved1 = geo.Scene(2, (geo.Circle((s, 0.0), 1.0), scene.obstacles[1]))
        moved2 = geo.Scene(2, (scene.obstacles[0], geo.Circle((3.0 - s, 0.0), 1.0)))
        e1 = analysis.casimir_energy(moved1, tol=1e-7, n=96).energy
        e2 = analysis.casimir_energy(moved2, tol=1e-7, n=96).energy
        assert abs(e1 - e2) <= 1e-10

    def test_unreliable_result_raises(self):
        with pytest.raises(NumericalError):
            analysis.casimir_force(circle_pair(1.0), h=1e-7, tol=1e-4, n=64)


class TestXiRealAxis:
    def test_epsilon_stability_used_as_error_bar(self):
        scene = circle_pair(1.0)
        wide = analysis.xi_real_axis(scene, [5.0], epsilon=0.1, n=128)[0]
        narrow = analysis.xi_real_axis(scene, [5.0], epsilon=0.05, n=128)[0]
        shift = abs(wide.xi_rel - narrow.xi_rel)
        assert 0 < shift < 0.5 * abs(narrow.xi_rel)

    def test_bounded_toward_zero(self):
        scene = circle_pair(1.0)
        grid = [0.05, 0.1, 0.2, 0.5]
        samples = analysis.xi_real_axis(scene, grid, epsilon=0.05, n=96)
        assert all(np.isfinite(s.xi_rel) and abs(s.xi_rel) < 10 for s in samples)

    def test_relabeling_invariance(self):
        scene = circle_pair(1.0)
        flipped = geo.Scene(2, scene.obstacles[::-1])
        a = analysis.xi_real_axis(scene, [5.0], n=128)[0].xi_rel
        b = analysis.xi_real_axis(flipped, [5.0], n=128)[0].xi_rel
        assert abs(a - b) <= 1e-12

    def test_bad_inputs(self):
        with pytest.raises(InputError):
            analysis.xi_real_axis(circle_pair(1.0), [1.0], epsilon=-0.1)
        with pytest.raises(InputError):
            analysis.xi_real_axis(circle_pair(1.0), [-1.0])

    def test_resonance_retry_doubles_epsilon(self, monkeypatch):
        real_eval = layer2d.xi_eval
        calls = []

        def flaky(scene, lam, n=None, **kw):
            calls.append(lam)
            if len(calls) == 1:
                raise NumericalError("synthetic factorization failure")
            return real_eval(scene, lam, n, **kw)

        monkeypatch.setattr(layer2d, "xi_eval", flaky)
        monkeypatch.setattr(analysis.layer2d, "xi_eval", flaky)
        sample = analysis.xi_real_axis(circle_pair(1.0), [5.0],
                                       epsilon=0.05, n=64)[0]
        assert sample.retried
        assert sample.epsilon == pytest.approx(0.1)
        assert len(calls) == 2


class TestWaveTrace:
    def grid(self):
        return np.arange(1, 161) * 0.25

    def test_synthetic_peak_location(self):
        lams = self.grid()
        delta = 1.0
        syn = [RelShiftSample(l, 0.05,
                              np.sin(2 * delta * l) * np.exp(-0.05 * l) / max(l, 0.3))
               for l in lams]
        t_grid = np.linspace(0.0, 6.0, 1201)
        res = analysis.wave_trace_demo(syn, t_grid, delta=delta)
        assert res.detected
        assert abs(res.measured_peak - 2.0 * delta) <= t_grid[1] - t_grid[0]
        assert res.t_star == 2.0 * delta

    def test_no_signal_flagged(self):
        syn = [RelShiftSample(l, 0.05, 0.0) for l in self.grid()]
        res = analysis.wave_trace_demo(syn, np.linspace(0, 6, 601), delta=1.0)
        assert not res.detected

    def test_grid_validation(self):
        lams = self.grid()
        syn = [RelShiftSample(l, 0.05, 1.0) for l in lams]
        with pytest.raises(InputError):
            analysis.wave_trace_demo(syn[:40], np.linspace(0, 6, 601), delta=1.0)
        jitter = [RelShiftSample(l + 0.01 * (i % 2), 0.05, 1.0)
                  for i, l in enumerate(lams)]
        with pytest.raises(InputError):
            analysis.wave_trace_demo(jitter, np.linspace(0, 6, 601))
