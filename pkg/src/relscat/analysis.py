"""Turn Xi samples into verdicts: decay fits, Casimir energy and force,
real-axis relative spectral shift, and the wave-trace singularity demo."""

import warnings
from dataclasses import dataclass, field

import numpy as np

from . import billiards, geometry, layer2d, quadrature, spheres
from .errors import InputError, NumericalError, SceneError

_XI_FLOOR = 1e-280


@dataclass(frozen=True)
class AsymptoticFit:
    slope: float            # fitted d log|Xi(i kappa)| / d kappa
    prefactor: float        # extrapolated -Xi e^{2 delta kappa} as kappa -> inf
    residual: float         # relative rms residual of the prefactor fit
    kappa_window: tuple
    n_samples: int


@dataclass(frozen=True)
class EnergyResult:
    energy: float
    abs_error_estimate: float
    kappa_min: float
    kappa_max: float
    tail_bound: float
    sliver_bound: float
    n_evaluations: int
    panels: tuple = field(repr=False)   # (left, right) quadrature provenance


@dataclass(frozen=True)
class RelShiftSample:
    lam: float
    epsilon: float
    xi_rel: float
    retried: bool = False


@dataclass(frozen=True)
class WaveTraceSingularity:
    t_star: float           # predicted location 2 delta (None without a scene)
    coefficient: float      # sum of delta / (pi |det(I-P)|^(1/2)) (None w/o orbits)
    measured_peak: float
    peak_magnitude: float
    detected: bool


def xi_on_axis(scene, kappa, n=None, lmax=None):
    """Xi(i kappa) through the dimension-appropriate backend."""
    if scene.dimension == 2:
        return layer2d.xi_eval(scene, 1j * kappa, n)
    return spheres.xi_eval_3d(scene, kappa, lmax)


def xi_imaginary_sweep(scene, kappas, n=None, lmax=None, estimate_error=False):
    """Xi(i kappa) over a kappa grid; returns a list of XiSample."""
    out = []
    for kappa in kappas:
        if scene.dimension == 2:
            out.append(layer2d.xi_eval(scene, 1j * float(kappa), n,
                                       estimate_error=estimate_error))
        else:
            out.append(spheres.xi_eval_3d(scene, float(kappa), lmax))
    return out


def fit_decay(samples, delta):
    """Exponential-decay fit of imaginary-axis Xi samples.

    The slope comes from least squares on log|Xi|, the prefactor from least
    squares of -Xi e^{2 delta kappa} against a + b/kappa (returning a).
    Samples below 1e-280 in magnitude are excluded with a warning.
    """
    usable = []
    for s in samples:
        if abs(s.xi) < _XI_FLOOR:
            warnings.warn(f"excluding Xi sample at {s.lam} below magnitude "
                          f"floor {_XI_FLOOR}")
            continue
        if s.lam.real != 0.0 or abs(s.xi.imag) > 1e-6 * abs(s.xi) + 1e-30:
            raise InputError("decay fits need real-valued samples from the "
                             "imaginary axis")
        usable.append((s.lam.imag, s.xi.real))
    if len(usable) < 8:
        raise InputError(f"need at least 8 usable samples, got {len(usable)}")
    kappas = np.array([u[0] for u in usable])
    vals = np.array([u[1] for u in usable])
    two_dk = 2.0 * delta * kappas
    if two_dk.max() < 14.0 or two_dk.max() - two_dk.min() < 6.0:
        raise InputError(
            "kappa window too short for asymptotic fitting: need the "
            "dimensionless span 2 delta kappa to reach 14 and cover >= 6")

    slope = float(np.polyfit(kappas, np.log(np.abs(vals)), 1)[0])
    y = -vals * np.exp(two_dk)
    design = np.vstack([np.ones_like(kappas), 1.0 / kappas]).T
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    scale = max(abs(coef[0]), np.max(np.abs(y)), 1e-300)
    resid = float(np.sqrt(np.mean((y - design @ coef) ** 2)) / scale)
    return AsymptoticFit(slope=slope, prefactor=float(coef[0]), residual=resid,
                         kappa_window=(float(kappas.min()), float(kappas.max())),
                         n_samples=len(usable))


def casimir_energy(scene, tol=1e-6, n=None, lmax=None, kappa_min=1e-3):
    """Casimir interaction energy (1/2 pi) integral of Xi(i kappa), kappa >= 0.

    Adaptive Gauss-Kronrod on [kappa_min, kappa_max] with kappa_max grown
    until the analytic exponential tail bound drops below tol/2.  The
    unresolved [0, kappa_min] sliver is estimated by endpoint value times
    width and added to the error budget, not to the result.
    """
    if len(scene.obstacles) < 2:
        raise SceneError("the Casimir energy needs at least two obstacles")
    delta = scene.delta
    neval = 0

    def f(kappa_arr):
        nonlocal neval
        vals = np.empty(len(kappa_arr))
        for i, kappa in enumerate(kappa_arr):
            vals[i] = xi_on_axis(scene, float(kappa), n=n, lmax=lmax).xi.real
            neval += 1
        return vals

    kappa_max = max(2.0, 4.0 / (2.0 * delta))
    for _ in range(60):
        edge = abs(xi_on_axis(scene, kappa_max, n=n, lmax=lmax).xi.real)
        neval += 1
        tail = 2.0 * edge / (2.0 * delta) / (2.0 * np.pi)
        if tail <= 0.5 * tol:
            break
        kappa_max *= 1.5
    else:
        raise NumericalError("could not place the quadrature cutoff: the "
                             "tail bound never fell below tol/2")

    sliver = abs(xi_on_axis(scene, kappa_min, n=n, lmax=lmax).xi.real) \
        * kappa_min / (2.0 * np.pi)
    neval += 1
    budget = max(0.25 * tol, tol - tail - sliver) * 2.0 * np.pi
    integral, quad_err, nq, panels = quadrature.integrate(
        f, kappa_min, kappa_max, budget, max_intervals=400)
    energy = integral / (2.0 * np.pi)
    return EnergyResult(
        energy=energy,
        abs_error_estimate=quad_err / (2.0 * np.pi) + tail + sliver,
        kappa_min=kappa_min, kappa_max=kappa_max, tail_bound=tail,
        sliver_bound=sliver, n_evaluations=neval,
        panels=tuple((p[0], p[1]) for p in panels))


def separation_axis(scene):
    """Unit vector from obstacle 1 toward obstacle 2 (two-obstacle scenes)."""
    if len(scene.obstacles) != 2:
        raise SceneError("the separation axis needs exactly two obstacles")
    c1 = np.asarray(scene.obstacles[0].center, dtype=float)
    c2 = np.asarray(scene.obstacles[1].center, dtype=float)
    d = c2 - c1
    return d / np.linalg.norm(d)


def casimir_force(scene, h=0.02, tol=1e-7, n=None, lmax=None):
    """-dE/d delta by central differences; negative values mean attraction.

    Obstacle 2 is translated by +-h delta along the separation axis.  When
    the propagated quadrature errors exceed half the energy difference the
    result is unusable and a NumericalError is raised.
    """
    delta = scene.delta
    axis = separation_axis(scene)
    step = h * delta
    results = []
    for sign in (+1.0, -1.0):
        moved = geometry.Scene(scene.dimension, (
            scene.obstacles[0],
            _translate_shape(scene.obstacles[1], sign * step * axis)))
        results.append(casimir_energy(moved, tol=tol, n=n, lmax=lmax))
    diff = results[0].energy - results[1].energy
    err = results[0].abs_error_estimate + results[1].abs_error_estimate
    if err > 0.5 * abs(diff):
        raise NumericalError(
            f"force unreliable: quadrature error {err:.3e} exceeds half the "
            f"energy difference {diff:.3e}; tighten tol or enlarge h")
    return -diff / (2.0 * step)


def _translate_shape(shape, offset):
    center = tuple(c + o for c, o in zip(shape.center, offset))
    if isinstance(shape, geometry.Circle):
        return geometry.Circle(center, shape.radius)
    if isinstance(shape, geometry.Ellipse):
        return geometry.Ellipse(center, shape.semi_axes, shape.rotation)
    if isinstance(shape, geometry.Star):
        return geometry.Star(center, shape.cosine_coefficients)
    return geometry.Sphere(center, shape.radius)


def xi_real_axis(scene, lambda_grid, epsilon=0.05, n=None):
    """Relative spectral shift xi_rel(lambda) = -(1/pi) Im Xi(lambda + i eps).

    Factorization failures near single-obstacle resonances are retried at
    2 eps; the sample records the epsilon actually used.
    """
    if epsilon <= 0:
        raise InputError("epsilon must be positive")
    out = []
    for lam in lambda_grid:
        lam = float(lam)
        if lam <= 0:
            raise InputError("real-axis grids must be positive")
        eps, retried = epsilon, False
        try:
            sample = layer2d.xi_eval(scene, lam + 1j * eps, n)
        except NumericalError:
            eps, retried = 2.0 * epsilon, True
            sample = layer2d.xi_eval(scene, lam + 1j * eps, n)
        out.append(RelShiftSample(lam=lam, epsilon=eps,
                                  xi_rel=-sample.xi.imag / np.pi,
                                  retried=retried))
    return out


def sine_transform(samples, t_grid):
    """Hann-windowed discrete sine transform of real-axis xi_rel samples."""
    lams = np.array([s.lam for s in samples])
    vals = np.array([s.xi_rel for s in samples])
    if len(lams) < 16:
        raise InputError("need at least 16 real-axis samples")
    steps = np.diff(lams)
    if steps.min() <= 0 or np.ptp(steps) > 1e-9 * steps.mean():
        raise InputError("the sine transform needs a uniform ascending grid")
    window = 0.5 * (1.0 - np.cos(2.0 * np.pi * np.arange(len(lams))
                                 / (len(lams) - 1)))
    t_grid = np.asarray(t_grid, dtype=float)
    return steps.mean() * np.sin(np.outer(t_grid, lams)) @ (window * vals)


def wave_trace_demo(samples, t_grid, delta=None, orbits=None):
    """Locate the first wave-trace singularity from real-axis xi_rel data.

    Computes a Hann-windowed discrete sine transform of xi_rel over t_grid
    and reports the location of the peak magnitude for t > 0.  This
    demonstrates the singularity location only: the epsilon-smoothing damps
    amplitudes by e^{-eps t}, so the coefficient is not validated here.
    """
    lams = np.array([s.lam for s in samples])
    if delta is not None and lams.size and \
            2.0 * delta * lams.max() < 80.0 - 1e-9:
        raise InputError("grid too short: need 2 delta lambda_max >= 80")
    t_grid = np.asarray(t_grid, dtype=float)
    pos = t_grid > 0
    wave = sine_transform(samples, t_grid[pos])
    mag = np.abs(wave)
    if mag.size == 0:
        raise InputError("t_grid has no positive entries")
    imax = int(np.argmax(mag))
    peak_t = t_grid[pos][imax]
    # quadratic refinement off the grid when the peak is interior
    if 0 < imax < mag.size - 1:
        y0, y1, y2 = mag[imax - 1:imax + 2]
        denom = y0 - 2.0 * y1 + y2
        if denom != 0:
            peak_t += 0.5 * (y0 - y2) / denom * (t_grid[pos][1] - t_grid[pos][0])
    peak_mag = float(mag[imax])
    detected = bool(peak_mag > 10.0 * np.median(mag) and peak_mag > 1e-150)
    return WaveTraceSingularity(
        t_star=None if delta is None else 2.0 * delta,
        coefficient=None if orbits is None
        else billiards.wave_trace_coefficient(orbits),
        measured_peak=float(peak_t), peak_magnitude=peak_mag,
        detected=detected)
