"""Discretized single-layer operators on 2D boundaries and Xi(lambda).

Self blocks use the spectral quadrature for periodic logarithmic kernels:
the kernel is split into a smooth coefficient times log(4 sin^2((t-s)/2))
plus a smooth remainder, the log part integrated with the exact trigonometric
weights, the remainder with the trapezoid rule.  Cross blocks between
disjoint obstacles are smooth and get the plain tensor-product trapezoid rule.

Matrices are assembled in the symmetric square-root-weight convention
Q_ij = sqrt(w_i) k(t_i, t_j) sqrt(w_j), a similarity transform of the plain
Nystrom matrix that leaves det(Q Qtilde^{-1}) unchanged and makes the blocks
exactly symmetric for real kernels.

On the imaginary axis lambda = i kappa everything is real arithmetic
(kernels (1/2pi) K0(kappa r), split coefficient I0); off the axis the
Helmholtz kernel (i/4) H0^(1)(lambda r) with split coefficient J0 is used.

All functions are pure; calls at distinct lambda are independent and safe to
run concurrently against a shared scene.
"""

from dataclasses import dataclass

import numpy as np

from . import geometry, special
from .errors import DomainError, NumericalError, SceneError

_GAMMA = special.EULER_GAMMA


@dataclass(frozen=True)
class XiSample:
    """One spectral point lambda (Im > 0) with the computed Xi value."""

    lam: complex
    xi: complex
    n: int
    error_estimate: float = None


@dataclass(frozen=True)
class OperatorBlocks:
    """Discretized single-layer matrices of one scene at one lambda.

    ``self_blocks[j]`` is the Nystrom matrix Q_jj on obstacle j;
    ``cross_blocks[(j, k)]`` couples obstacle k to obstacle j; ``grids``
    carries the per-obstacle node sets the matrices were built on.
    """

    lam: complex
    self_blocks: tuple
    cross_blocks: dict
    grids: tuple


def _validate_lambda(lam):
    lam = complex(lam)
    if not np.isfinite(lam.real) or not np.isfinite(lam.imag) or lam.imag <= 0:
        raise DomainError(f"lambda must lie in the open upper half-plane, "
                          f"got {lam}")
    return lam


def _on_imaginary_axis(lam):
    return lam.real == 0.0


def log_rule_weights(n):
    """Quadrature weights R_m for the periodic log kernel, m = (i - j) mod n.

    Exact for trigonometric polynomials of degree n/2 against
    log(4 sin^2(t/2)); derived from the Fourier series of the kernel.
    """
    m = np.arange(n)
    k = np.arange(1, n // 2)
    r = -(4.0 * np.pi / n) * np.sum(
        np.cos(2.0 * np.pi * np.outer(m, k) / n) / k, axis=1)
    r -= (4.0 * np.pi / n ** 2) * np.where(m % 2 == 0, 1.0, -1.0)
    return r


def _pairwise_dist(pa, pb):
    diff = pa[:, None, :] - pb[None, :, :]
    return np.sqrt(np.sum(diff * diff, axis=-1))


def assemble_self_block(shape, n, lam):
    """Nystrom matrix of the single-layer operator on one 2D boundary."""
    lam = _validate_lambda(lam)
    grid = geometry.boundary_sample(shape, n)
    t = grid.params
    sp = grid.speeds
    r = _pairwise_dist(grid.points, grid.points)
    np.fill_diagonal(r, 1.0)

    dt = t[:, None] - t[None, :]
    log4sin2 = np.log(4.0 * np.sin(0.5 * dt) ** 2
                      + np.where(np.eye(n, dtype=bool), 1.0, 0.0))

    sqw = np.sqrt(grid.weights)
    wfac = np.outer(sqw, sqw)          # sqrt(w_i w_j), includes h and speeds
    h = 2.0 * np.pi / n
    rmat = log_rule_weights(n)[(np.arange(n)[:, None] - np.arange(n)) % n]

    if _on_imaginary_axis(lam):
        kappa = lam.imag
        a = -(1.0 / (4.0 * np.pi)) * special.i0(kappa * r)
        np.fill_diagonal(a, -1.0 / (4.0 * np.pi))   # I0(0) = 1, r diag is a dummy
        b = (1.0 / (2.0 * np.pi)) * special.k0((kappa * r).ravel()).reshape(n, n) \
            - a * log4sin2
        np.fill_diagonal(b, (1.0 / (2.0 * np.pi))
                         * (-_GAMMA - np.log(0.5 * kappa * sp)))
        return (rmat * a + h * b) * wfac / h

    z = lam * r
    coef = special.j0_complex(z.ravel()).reshape(n, n)
    a = -(1.0 / (4.0 * np.pi)) * coef
    np.fill_diagonal(a, -1.0 / (4.0 * np.pi))       # J0(0) = 1, r diag is a dummy
    hank = special.hankel1_0_array(z.ravel()).reshape(n, n)
    b = 0.25j * hank - a * log4sin2
    np.fill_diagonal(b, 0.25j - _GAMMA / (2.0 * np.pi)
                     - np.log(0.5 * lam * sp) / (2.0 * np.pi))
    return (rmat * a + h * b) * wfac / h


def assemble_cross_block(shape_j, shape_k, n_j, n_k, lam):
    """Trapezoid Nystrom matrix of the smooth kernel between two boundaries."""
    lam = _validate_lambda(lam)
    ga = geometry.boundary_sample(shape_j, n_j)
    gb = geometry.boundary_sample(shape_k, n_k)
    d = _pairwise_dist(ga.points, gb.points)
    wfac = np.outer(np.sqrt(ga.weights), np.sqrt(gb.weights))
    if _on_imaginary_axis(lam):
        return (1.0 / (2.0 * np.pi)) * special.k0(lam.imag * d.ravel()) \
            .reshape(d.shape) * wfac
    return 0.25j * special.hankel1_0_array((lam * d).ravel()) \
        .reshape(d.shape) * wfac


def _log1p_complex(z):
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    small = np.abs(z) < 1e-4
    zs = z[small]
    out[small] = zs * (1.0 - zs * (0.5 - zs * (1.0 / 3.0 - 0.25 * zs)))
    out[~small] = np.log(1.0 + z[~small])
    return out


def default_n(scene, lam, floor=64):
    """Default per-obstacle discretization: 16 points per wavelength at |lambda|."""
    per = max(geometry.perimeter(o) for o in scene.obstacles)
    n = max(floor, int(np.ceil(16.0 * abs(lam) * per / (2.0 * np.pi))))
    return n + n % 2


def _solve_block(q, rhs, index):
    try:
        return np.linalg.solve(q, rhs)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(
            f"factorization of the self block for obstacle {index} failed "
            f"({exc}); lambda may be too close to a real-axis resonance") \
            from exc


def assemble_blocks(scene, n, lam):
    """All self and cross blocks of a 2D scene at one spectral point."""
    lam = _validate_lambda(lam)
    selfs = tuple(assemble_self_block(o, n, lam) for o in scene.obstacles)
    crosses = {}
    for j, oj in enumerate(scene.obstacles):
        for k, ok in enumerate(scene.obstacles):
            if j != k:
                crosses[(j, k)] = assemble_cross_block(oj, ok, n, n, lam)
    grids = tuple(geometry.boundary_sample(o, n) for o in scene.obstacles)
    return OperatorBlocks(lam=lam, self_blocks=selfs, cross_blocks=crosses,
                          grids=grids)


def xi_eval(scene, lam, n=None, estimate_error=False, use_block_form=False):
    """Xi(lambda) = log det(Q_lambda Qtilde_lambda^{-1}) for a 2D scene.

    Computed as the principal-branch eigenvalue sum of log det(I + M) where
    M carries the blocks Q_jj^{-1} C_jk; for two obstacles the equivalent
    Schur form log det(I - Q11^{-1} C12 Q22^{-1} C21) is used unless
    ``use_block_form`` forces the general path.  ``estimate_error`` adds an
    n versus 2n self-convergence estimate.
    """
    if scene.dimension != 2:
        raise SceneError("xi_eval handles 2D scenes; use spheres for 3D")
    nobs = len(scene.obstacles)
    if nobs < 2:
        raise SceneError("Xi needs at least two obstacles")
    scene.delta  # raises SceneError for touching/overlapping obstacles
    lam = _validate_lambda(lam)
    if n is None:
        n = default_n(scene, lam)

    blocks = assemble_blocks(scene, n, lam)
    selfs = blocks.self_blocks

    if nobs == 2 and not use_block_form:
        m1 = _solve_block(selfs[0], blocks.cross_blocks[(0, 1)], 0)
        m2 = _solve_block(selfs[1], blocks.cross_blocks[(1, 0)], 1)
        mu = np.linalg.eigvals(m1 @ m2)
        xi = complex(np.sum(_log1p_complex(-mu)))
    else:
        dtype = float if _on_imaginary_axis(lam) else complex
        big = np.zeros((nobs * n, nobs * n), dtype=dtype)
        for j in range(nobs):
            cols = [k for k in range(nobs) if k != j]
            cross = np.concatenate(
                [blocks.cross_blocks[(j, k)] for k in cols], axis=1)
            sol = _solve_block(selfs[j], cross, j)
            for pos, k in enumerate(cols):
                big[j * n:(j + 1) * n, k * n:(k + 1) * n] = \
                    sol[:, pos * n:(pos + 1) * n]
        nu = np.linalg.eigvals(big)
        xi = complex(np.sum(_log1p_complex(nu)))

    err = None
    if estimate_error:
        finer = xi_eval(scene, lam, 2 * n, estimate_error=False,
                        use_block_form=use_block_form)
        err = abs(xi - finer.xi)
    return XiSample(lam=lam, xi=xi, n=n, error_estimate=err)
