"""Command-line entry point: scene files in, CSV tables, flat reports and
figures out.

Commands: xi, energy, force, orbits, asymptotics, wavetrace, validate.
Exit codes: 0 success, 2 bad configuration, 3 scene validation failure,
4 numerical failure, 5 acceptance-check failure (validate only).

Numeric output is CSV with a header row and a leading comment line carrying
the scene hash, discretization and library version; floats are written with
repr so identical runs produce byte-identical files.  Report-producing
commands also render a matplotlib figure next to each output file unless
--no-plot is given.  Xi samples are cached under --cache-dir (or the
RELSCAT_CACHE environment variable) keyed by scene hash, spectral point and
discretization; cache hits reproduce computed values bitwise.
"""

import argparse
import concurrent.futures
import hashlib
import json
import os
import sys
import tempfile

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from . import __version__, analysis, billiards, geometry, layer2d, spheres
from .errors import (ConfigurationError, InputError, NumericalError,
                     RelscatError, SceneError)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SCENE = 3
EXIT_NUMERICAL = 4
EXIT_ACCEPTANCE = 5


# ----------------------------------------------------------------------------
# Small shared helpers
# ----------------------------------------------------------------------------

def parse_grid(spec):
    """Parse 'start:stop:count[log|lin]' into an ascending grid."""
    text = spec.strip()
    kind = "lin"
    if text.endswith("log"):
        kind, text = "log", text[:-3]
    elif text.endswith("lin"):
        text = text[:-3]
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigurationError(f"bad grid spec {spec!r}; "
                                 "expected start:stop:count[log|lin]")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ConfigurationError(f"bad grid spec {spec!r}: {exc}") from exc
    if count < 2 or not stop > start:
        raise ConfigurationError("grids need count >= 2 and start < stop")
    if kind == "log":
        if start <= 0:
            raise ConfigurationError("log grids need start > 0")
        return np.geomspace(start, stop, count)
    return np.linspace(start, stop, count)


def _meta_line(scene, n=None, lmax=None):
    h = geometry.scene_hash(scene)[:16]
    return (f"# scene={h} n={n if n is not None else '-'} "
            f"L={lmax if lmax is not None else '-'} version={__version__}")


def write_csv(path, scene, columns, rows, n=None, lmax=None):
    lines = [_meta_line(scene, n, lmax), ",".join(columns)]
    for row in rows:
        lines.append(",".join(repr(float(v)) for v in row))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def write_report(path, scene, pairs, n=None, lmax=None):
    lines = [_meta_line(scene, n, lmax)]
    for key, value in pairs:
        lines.append(f"{key}={value!r}" if isinstance(value, float)
                     else f"{key}={value}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _figure_path(out):
    return os.path.splitext(out)[0] + ".png"


class XiCache:
    """File cache for Xi samples keyed by (scene hash, lambda, n or L).

    Values are stored as repr strings, so a hit reproduces the original
    float bit pattern exactly.  Writes go through a temp file and an atomic
    rename, which makes the cache safe under concurrent writers.
    """

    def __init__(self, directory, scene):
        self.dir = directory
        self.scene_hash = geometry.scene_hash(scene)
        if directory:
            os.makedirs(directory, exist_ok=True)

    def _path(self, lam, n, lmax):
        key = f"{self.scene_hash}:{complex(lam)!r}:{n}:{lmax}"
        return os.path.join(self.dir,
                            hashlib.sha256(key.encode()).hexdigest() + ".json")

    def get(self, lam, n, lmax):
        if not self.dir:
            return None
        path = self._path(lam, n, lmax)
        if not os.path.exists(path):
            return None
        with open(path) as fh:
            doc = json.load(fh)
        err = doc.get("err")
        return layer2d.XiSample(
            lam=complex(lam), xi=complex(float(doc["xi_re"]),
                                         float(doc["xi_im"])),
            n=doc["n"], error_estimate=None if err is None else float(err))

    def put(self, sample, n, lmax):
        if not self.dir:
            return
        doc = {"xi_re": repr(sample.xi.real), "xi_im": repr(sample.xi.imag),
               "n": sample.n,
               "err": None if sample.error_estimate is None
               else repr(float(sample.error_estimate))}
        path = self._path(sample.lam, n, lmax)
        fd, tmp = tempfile.mkstemp(dir=self.dir, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh)
        os.replace(tmp, path)


def _xi_sweep(scene, lams, n, lmax, cache, threads, estimate_error=False):
    """Xi over a list of spectral points, cached and optionally threaded.

    Results are assembled in grid order regardless of completion order, so
    output is independent of the thread schedule.
    """
    def one(lam):
        hit = cache.get(lam, n, lmax)
        if hit is not None:
            return hit
        if scene.dimension == 2:
            sample = layer2d.xi_eval(scene, lam, n,
                                     estimate_error=estimate_error)
        else:
            sample = spheres.xi_eval_3d(scene, lam.imag, lmax)
        cache.put(sample, n, lmax)
        return sample

    if threads > 1:
        with concurrent.futures.ThreadPoolExecutor(threads) as pool:
            return list(pool.map(one, lams))
    return [one(lam) for lam in lams]


# ----------------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------------

def cmd_xi(args, scene):
    grid = parse_grid(args.grid)
    lams = [1j * float(k) for k in grid]
    cache = XiCache(args.cache_dir, scene)
    samples = _xi_sweep(scene, lams, args.n, args.lmax, cache, args.threads,
                        estimate_error=args.estimate_error)
    rows = [(k, s.xi.real,
             float("nan") if s.error_estimate is None else s.error_estimate)
            for k, s in zip(grid, samples)]
    write_csv(args.out, scene, ("kappa", "xi", "err"), rows,
              n=args.n, lmax=args.lmax)
    if not args.no_plot:
        fig, ax = plt.subplots(figsize=(5, 3.5))
        vals = np.abs([r[1] for r in rows])
        ax.semilogy(grid, np.where(vals > 0, vals, np.nan), "o-", ms=3)
        ax.set_xlabel(r"$\kappa$")
        ax.set_ylabel(r"$|\Xi(i\kappa)|$")
        fig.tight_layout()
        fig.savefig(_figure_path(args.out), dpi=150)
        plt.close(fig)
    print(f"wrote {args.out} ({len(rows)} samples)")
    return EXIT_OK


def cmd_energy(args, scene):
    if args.tol <= 0:
        raise ConfigurationError("--tol must be positive")
    res = analysis.casimir_energy(scene, tol=args.tol, n=args.n,
                                  lmax=args.lmax)
    write_report(args.out, scene, [
        ("energy", res.energy),
        ("abs_error_estimate", res.abs_error_estimate),
        ("kappa_min", res.kappa_min),
        ("kappa_max", res.kappa_max),
        ("tail_bound", res.tail_bound),
        ("sliver_bound", res.sliver_bound),
        ("n_evaluations", res.n_evaluations),
        ("n_panels", len(res.panels)),
    ], n=args.n, lmax=args.lmax)
    if not args.no_plot:
        edges = sorted({p[0] for p in res.panels} | {p[1] for p in res.panels})
        mids = np.array([0.5 * (a + b) for a, b in res.panels])
        vals = [abs(analysis.xi_on_axis(scene, m, n=args.n,
                                        lmax=args.lmax).xi.real)
                for m in mids[:: max(1, len(mids) // 40)]]
        fig, ax = plt.subplots(figsize=(5, 3.5))
        ax.semilogy(mids[:: max(1, len(mids) // 40)], vals, "o-", ms=3)
        for e in edges:
            ax.axvline(e, color="0.9", lw=0.5, zorder=0)
        ax.set_xlabel(r"$\kappa$")
        ax.set_ylabel(r"$|\Xi(i\kappa)|$ (quadrature panels)")
        fig.tight_layout()
        fig.savefig(_figure_path(args.out), dpi=150)
        plt.close(fig)
    print(f"energy={res.energy!r} +- {res.abs_error_estimate:.3e}")
    return EXIT_OK


def cmd_force(args, scene):
    if args.tol <= 0 or args.h <= 0:
        raise ConfigurationError("--tol and --h must be positive")
    force = analysis.casimir_force(scene, h=args.h, tol=args.tol, n=args.n,
                                   lmax=args.lmax)
    write_report(args.out, scene, [
        ("force", force),
        ("h", args.h),
        ("sign_convention", "negative=attraction"),
    ], n=args.n, lmax=args.lmax)
    print(f"force={force!r} (negative = attraction)")
    return EXIT_OK


def cmd_orbits(args, scene):
    orbits = billiards.find_bouncing_orbits(
        scene, include_nonminimal=args.all_pairs)
    pairs = [("delta", scene.delta), ("n_orbits", len(orbits))]
    for i, orb in enumerate(orbits):
        pre = f"orbit{i}."
        pairs += [
            (pre + "obstacles", f"{orb.endpoints[0].obstacle_index},"
                                f"{orb.endpoints[1].obstacle_index}"),
            (pre + "length", orb.length),
            (pre + "minimal", orb.is_minimal),
            (pre + "c", orb.c),
            (pre + "det_factor_sqrt", float(np.sqrt(orb.det_factor))),
            (pre + "prefactor", orb.prefactor),
            (pre + "prefactor_checked",
             billiards.xi_prefactor(scene, orb)),
        ]
        for key, val in sorted(orb.curvature_data.items()):
            pairs.append((pre + key, float(val)))
    write_report(args.out, scene, pairs)
    if not args.no_plot and scene.dimension == 2:
        fig, ax = plt.subplots(figsize=(5, 5))
        t = np.linspace(0, 2 * np.pi, 256)
        for shape in scene.obstacles:
            p = shape.position(t)
            ax.plot(p[:, 0], p[:, 1], "k-", lw=1)
        for orb in orbits:
            a, b = orb.endpoints
            ax.plot([a.position[0], b.position[0]],
                    [a.position[1], b.position[1]],
                    "r-" if orb.is_minimal else "b--", lw=1.5)
        ax.set_aspect("equal")
        fig.tight_layout()
        fig.savefig(_figure_path(args.out), dpi=150)
        plt.close(fig)
    print(f"wrote {args.out} ({len(orbits)} orbits)")
    return EXIT_OK


def cmd_asymptotics(args, scene):
    grid = parse_grid(args.grid)
    cache = XiCache(args.cache_dir, scene)
    samples = _xi_sweep(scene, [1j * float(k) for k in grid], args.n,
                        args.lmax, cache, args.threads)
    fit = analysis.fit_decay(samples, scene.delta)
    pairs = [
        ("slope", fit.slope),
        ("prefactor", fit.prefactor),
        ("residual", fit.residual),
        ("kappa_min", fit.kappa_window[0]),
        ("kappa_max", fit.kappa_window[1]),
        ("n_samples", fit.n_samples),
        ("predicted_slope", -2.0 * scene.delta),
    ]
    try:
        orbits = billiards.find_bouncing_orbits(scene)
        predicted = sum(o.prefactor for o in orbits)
        pairs += [("predicted_prefactor", predicted),
                  ("prefactor_rel_gap",
                   abs(fit.prefactor - predicted) / predicted)]
    except RelscatError as exc:
        pairs.append(("predicted_prefactor", f"unavailable ({exc})"))
    pairs.append(("slope_rel_gap",
                  abs(fit.slope + 2.0 * scene.delta) / (2.0 * scene.delta)))
    write_report(args.out, scene, pairs, n=args.n, lmax=args.lmax)
    if not args.no_plot:
        fig, ax = plt.subplots(figsize=(5, 3.5))
        vals = np.array([abs(s.xi.real) for s in samples])
        ax.semilogy(grid, vals, "o", ms=4, label="data")
        kk = np.linspace(grid.min(), grid.max(), 200)
        ax.semilogy(kk, fit.prefactor * np.exp(fit.slope * kk), "-",
                    label=f"fit slope {fit.slope:.4f}")
        ax.set_xlabel(r"$\kappa$")
        ax.set_ylabel(r"$|\Xi(i\kappa)|$")
        ax.legend(fontsize=8)
        fig.tight_layout()
        fig.savefig(_figure_path(args.out), dpi=150)
        plt.close(fig)
    print(f"slope={fit.slope!r} prefactor={fit.prefactor!r}")
    return EXIT_OK


def cmd_wavetrace(args, scene):
    lams = np.arange(1, args.count + 1) * args.lambda_max / args.count
    samples = analysis.xi_real_axis(scene, lams, epsilon=args.epsilon,
                                    n=args.n)
    rows = [(s.lam, s.epsilon, s.xi_rel) for s in samples]
    write_csv(args.out, scene, ("lambda", "epsilon", "xi_rel"), rows,
              n=args.n)
    t_grid = np.linspace(0.0, args.tmax, args.tcount)
    try:
        orbits = billiards.find_bouncing_orbits(scene)
    except RelscatError:
        orbits = None
    res = analysis.wave_trace_demo(samples, t_grid, delta=scene.delta,
                                   orbits=orbits)
    report = os.path.splitext(args.out)[0] + "_peak.txt"
    write_report(report, scene, [
        ("t_star", res.t_star),
        ("measured_peak", res.measured_peak),
        ("peak_magnitude", res.peak_magnitude),
        ("detected", res.detected),
        ("coefficient", "unavailable" if res.coefficient is None
         else res.coefficient),
        ("epsilon", args.epsilon),
        ("note", "location-only check; epsilon smoothing damps the amplitude"),
    ], n=args.n)
    if not args.no_plot:
        pos = t_grid > 0
        wave = analysis.sine_transform(samples, t_grid[pos])
        fig, ax = plt.subplots(figsize=(5, 3.5))
        ax.plot(t_grid[pos], np.abs(wave), "-")
        ax.axvline(res.t_star, color="r", ls="--", lw=1,
                   label=r"$t = 2\delta$")
        ax.axvline(res.measured_peak, color="g", ls=":", lw=1, label="peak")
        ax.set_xlabel("t")
        ax.set_ylabel("|sine transform|")
        ax.legend(fontsize=8)
        fig.tight_layout()
        fig.savefig(_figure_path(args.out), dpi=150)
        plt.close(fig)
    print(f"peak at t={res.measured_peak!r} (prediction {res.t_star!r})")
    return EXIT_OK


def cmd_validate(args, scene):
    print(json.dumps(geometry.scene_to_dict(scene), indent=2))
    checks = []

    def check(name, ok, detail=""):
        checks.append(ok)
        print(f"[{'PASS' if ok else 'FAIL'}] {name}" +
              (f" ({detail})" if detail else ""))

    if len(scene.obstacles) < 2:
        print("single-obstacle scene: structural validation only")
        return EXIT_OK

    delta = scene.delta
    check("obstacles disjoint, delta > 0", delta > 0, f"delta={delta!r}")
    kappa = 2.0 / delta
    if scene.dimension == 2:
        n = args.n or 96
        s = layer2d.xi_eval(scene, 1j * kappa, n)
        check("Xi real on the imaginary axis", abs(s.xi.imag) <= 1e-10,
              f"Im={s.xi.imag:.2e}")
        flipped = geometry.Scene(2, scene.obstacles[::-1])
        s2 = layer2d.xi_eval(flipped, 1j * kappa, n)
        check("relabeling invariance",
              abs(s.xi.real - s2.xi.real) <= 1e-12,
              f"gap={abs(s.xi.real - s2.xi.real):.2e}")
        moved = geometry.translate(scene, (1.7, -0.4))
        s3 = layer2d.xi_eval(moved, 1j * kappa, n)
        check("translation invariance",
              abs(s.xi.real - s3.xi.real) <= 1e-10,
              f"gap={abs(s.xi.real - s3.xi.real):.2e}")
        if len(scene.obstacles) == 2:
            sb = layer2d.xi_eval(scene, 1j * kappa, n, use_block_form=True)
            check("Schur form matches block form",
                  abs(s.xi - sb.xi) <= 1e-11, f"gap={abs(s.xi - sb.xi):.2e}")
        conv = layer2d.xi_eval(scene, 1j * kappa, n, estimate_error=True)
        check("discretization self-convergence",
              conv.error_estimate <= 1e-8,
              f"|Xi_n - Xi_2n|={conv.error_estimate:.2e}")
    else:
        lmax = args.lmax or 12
        s = spheres.xi_eval_3d(scene, kappa, lmax)
        check("Xi real on the imaginary axis", abs(s.xi.imag) <= 1e-10)
        flipped = geometry.Scene(3, scene.obstacles[::-1])
        s2 = spheres.xi_eval_3d(flipped, kappa, lmax)
        check("sphere-swap invariance",
              abs(s.xi.real - s2.xi.real) <= 1e-9 * max(abs(s.xi.real), 1e-300),
              f"gap={abs(s.xi.real - s2.xi.real):.2e}")
        check("truncation tail reported",
              s.error_estimate is not None,
              f"|Xi_L - Xi_L+2|={s.error_estimate:.2e}")
    try:
        orbits = billiards.find_bouncing_orbits(scene)
        ok = True
        for orb in orbits:
            try:
                billiards.xi_prefactor(scene, orb)
            except NumericalError:
                ok = False
        check("Poincare prefactor dual-route agreement", ok,
              f"{len(orbits)} orbit(s)")
    except RelscatError as exc:
        print(f"[SKIP] orbit checks unavailable: {exc}")

    return EXIT_OK if all(checks) else EXIT_ACCEPTANCE


# ----------------------------------------------------------------------------
# Argument parsing and dispatch
# ----------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="relscat",
        description="Relative scattering determinants, Casimir energies and "
                    "bouncing-ball orbit invariants for disjoint Dirichlet "
                    "obstacles.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, grid=None):
        p.add_argument("--scene", required=True, help="scene JSON file")
        p.add_argument("--n", type=int, default=None,
                       help="2D quadrature size per obstacle")
        p.add_argument("--L", dest="lmax", type=int, default=None,
                       help="3D spherical-harmonic truncation")
        p.add_argument("--threads", type=int, default=1,
                       help="worker pool size for sweeps")
        p.add_argument("--cache-dir",
                       default=os.environ.get("RELSCAT_CACHE"),
                       help="Xi sample cache directory "
                            "(default: $RELSCAT_CACHE)")
        p.add_argument("--no-plot", action="store_true",
                       help="skip the figure next to the output file")
        if grid:
            p.add_argument("--grid", default=grid,
                           help="kappa grid start:stop:count[log|lin]")

    p = sub.add_parser("xi", help="sweep Xi(i kappa) to CSV")
    common(p, grid="0.5:10:40log")
    p.add_argument("--estimate-error", action="store_true",
                   help="add an n vs 2n error estimate column (2D)")
    p.add_argument("--out", default="xi.csv")

    p = sub.add_parser("energy", help="Casimir interaction energy")
    common(p)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out", default="energy.txt")

    p = sub.add_parser("force", help="Casimir force -dE/d delta")
    common(p)
    p.add_argument("--tol", type=float, default=1e-7)
    p.add_argument("--h", type=float, default=0.02,
                   help="relative step of the central difference")
    p.add_argument("--out", default="force.txt")

    p = sub.add_parser("orbits", help="shortest bouncing-ball orbits")
    common(p)
    p.add_argument("--all-pairs", action="store_true",
                   help="also report non-minimal 2-link orbits")
    p.add_argument("--out", default="orbits.txt")

    p = sub.add_parser("asymptotics", help="decay fit against orbit data")
    common(p, grid="4:10:13log")
    p.add_argument("--out", default="asymptotics.txt")

    p = sub.add_parser("wavetrace", help="real-axis xi_rel sweep and "
                                         "sine-transform peak")
    common(p)
    p.add_argument("--lambda-max", type=float, default=40.0)
    p.add_argument("--count", type=int, default=160,
                   help="number of uniform lambda samples")
    p.add_argument("--epsilon", type=float, default=0.05)
    p.add_argument("--tmax", type=float, default=6.0)
    p.add_argument("--tcount", type=int, default=1201)
    p.add_argument("--out", default="xi_real.csv")

    p = sub.add_parser("validate", help="scene-relevant acceptance checks")
    common(p)
    return parser


_DISPATCH = {
    "xi": cmd_xi,
    "energy": cmd_energy,
    "force": cmd_force,
    "orbits": cmd_orbits,
    "asymptotics": cmd_asymptotics,
    "wavetrace": cmd_wavetrace,
    "validate": cmd_validate,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else 0
    try:
        scene = geometry.load_scene(args.scene)
    except FileNotFoundError:
        print(f"scene file not found: {args.scene}", file=sys.stderr)
        return EXIT_SCENE
    except SceneError as exc:
        print(f"scene validation failed: {exc}", file=sys.stderr)
        return EXIT_SCENE
    try:
        return _DISPATCH[args.command](args, scene)
    except (ConfigurationError, InputError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SceneError as exc:
        print(f"scene error: {exc}", file=sys.stderr)
        return EXIT_SCENE
    except RelscatError as exc:
        print(f"numerical failure: {type(exc).__name__}: {exc}",
              file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
