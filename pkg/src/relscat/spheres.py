"""Xi(i kappa) for two-sphere scenes via spherical-harmonic Galerkin.

The single-sphere operator diagonalizes over spherical harmonics with
eigenvalues s_l = kappa R^2 i_l(kappa R) k_l(kappa R); the cross blocks
couple Y_lm on one sphere to Y_l'm on the other through the smooth Yukawa
kernel and are computed by product quadrature (Gauss-Legendre in the polar
direction, uniform in azimuth, FFT over the relative azimuth so all m come
out of one kernel grid).  Scenes are normalized internally so the centers
lie on the z-axis; the azimuthal index m is then conserved and the problem
splits into 2L+1 small blocks.
"""

from dataclasses import dataclass

import numpy as np

from . import geometry, special
from .errors import ConfigurationError, DomainError, SceneError
from .layer2d import XiSample, _log1p_complex


@dataclass(frozen=True)
class SphereBasis:
    """Spherical-harmonic truncation data for a two-sphere scene: the
    per-sphere diagonal single-layer entries s_l and the quadrature grid
    size used for the cross-block surface integrals."""

    l_max: int
    eigs: tuple          # (s_l array sphere 1, s_l array sphere 2)
    n_polar: int
    n_azimuth: int


def sphere_basis(scene, kappa, lmax, n_polar=None):
    _axis_distance(scene)
    if n_polar is None:
        n_polar = max(32, 2 * lmax + 8)
    eigs = tuple(single_sphere_eigs(o.radius, kappa, lmax)
                 for o in scene.obstacles)
    return SphereBasis(l_max=lmax, eigs=eigs, n_polar=n_polar,
                       n_azimuth=2 * n_polar)


def single_sphere_eigs(radius, kappa, lmax):
    """Single-layer eigenvalues s_l = kappa R^2 i_l(kappa R) k_l(kappa R),
    l = 0..lmax, in the convention i_0 = sinh(x)/x, k_0 = exp(-x)/x."""
    if kappa <= 0:
        raise DomainError("kappa must be positive")
    if lmax < 0 or lmax > 60:
        raise DomainError("lmax must lie in [0, 60]")
    x = kappa * radius
    if x > 600.0:
        raise DomainError(f"kappa R = {x} > 600 overflows the recurrences")
    isc, ksc = special.sph_ik_scaled(lmax, x)
    return kappa * radius ** 2 * isc * ksc


def normalized_legendre(lmax, u):
    """Orthonormal associated Legendre functions Pbar_l^m(u) on [-1, 1].

    Returns an array of shape (lmax+1, lmax+1, len(u)) indexed [l, m];
    entries with m > l are zero.  Normalization: integral of Pbar^2 du = 1.
    """
    u = np.asarray(u, dtype=float)
    s = np.sqrt(np.maximum(0.0, 1.0 - u * u))
    p = np.zeros((lmax + 1, lmax + 1, u.size))
    p[0, 0] = np.sqrt(0.5)
    for m in range(1, lmax + 1):
        p[m, m] = np.sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * p[m - 1, m - 1]
    for m in range(lmax):
        p[m + 1, m] = np.sqrt(2.0 * m + 3.0) * u * p[m, m]
    for m in range(lmax + 1):
        for l in range(m + 2, lmax + 1):
            a = np.sqrt((4.0 * l * l - 1.0) / (l * l - m * m))
            b = np.sqrt(((l - 1.0) ** 2 - m * m) / (4.0 * (l - 1.0) ** 2 - 1.0))
            p[l, m] = a * (u * p[l - 1, m] - b * p[l - 2, m])
    return p


def _axis_distance(scene):
    if scene.dimension != 3 or len(scene.obstacles) != 2 or \
            not all(isinstance(o, geometry.Sphere) for o in scene.obstacles):
        raise SceneError("the 3D path handles exactly two spheres")
    c1 = np.asarray(scene.obstacles[0].center)
    c2 = np.asarray(scene.obstacles[1].center)
    return float(np.linalg.norm(c2 - c1))


def cross_blocks(sphere_1, sphere_2, kappa, lmax, n_polar=None):
    """Galerkin cross blocks <Y_lm on sphere 1 | G_kappa | Y_l'm on sphere 2>.

    Works in the axis-aligned frame (any input placement is rotated there,
    which only the center distance survives).  Returns an array of shape
    (lmax+1, lmax+1, lmax+1) indexed [m, l, l']; entries with l < m or
    l' < m are zero.  The block for -m equals the block for m.
    """
    if kappa <= 0:
        raise DomainError("kappa must be positive")
    r1, r2 = sphere_1.radius, sphere_2.radius
    dc = float(np.linalg.norm(np.asarray(sphere_2.center)
                              - np.asarray(sphere_1.center)))
    if dc <= r1 + r2:
        raise SceneError("spheres touch or overlap")
    if n_polar is None:
        n_polar = max(32, 2 * lmax + 8)
    npsi = 2 * n_polar

    u1, w1 = np.polynomial.legendre.leggauss(n_polar)
    u2, w2 = np.polynomial.legendre.leggauss(n_polar)
    psi = np.arange(npsi) * 2.0 * np.pi / npsi

    s1 = np.sqrt(1.0 - u1 * u1)
    s2 = np.sqrt(1.0 - u2 * u2)
    # |x1 - x2|^2 on the product grid; depends on the azimuth difference only
    d2 = (r1 ** 2 + r2 ** 2 + dc ** 2
          + 2.0 * r2 * dc * u2[None, :, None]
          - 2.0 * r1 * dc * u1[:, None, None]
          - 2.0 * r1 * r2 * (u1[:, None, None] * u2[None, :, None]
                             + np.einsum("i,j,k->ijk", s1, s2, np.cos(psi))))
    d = np.sqrt(np.maximum(d2, 0.0))
    g = np.exp(-kappa * d) / (4.0 * np.pi * d)
    # g_m(i, j) = integral over psi of e^{i m psi} G; real and even in m
    gm = np.fft.rfft(g, axis=2).real * (2.0 * np.pi / npsi)

    p1 = normalized_legendre(lmax, u1)
    p2 = normalized_legendre(lmax, u2)
    blocks = np.zeros((lmax + 1, lmax + 1, lmax + 1))
    scale = r1 ** 2 * r2 ** 2
    for m in range(lmax + 1):
        q1 = p1[m:, m] * w1[None, :]           # (lmax+1-m, n_polar)
        q2 = p2[m:, m] * w2[None, :]
        blocks[m, m:, m:] = scale * (q1 @ gm[:, :, m] @ q2.T)
    return blocks


def cross_block(sphere_1, sphere_2, kappa, lmax, m):
    """One azimuthal cross block, size (lmax+1-|m|) squared.

    Entries couple Y_{l m} on sphere 1 to Y_{l' m} on sphere 2; the block
    for -m is identical by reflection symmetry.
    """
    m = abs(int(m))
    if m > lmax:
        raise ConfigurationError("need |m| <= lmax")
    blocks = cross_blocks(sphere_1, sphere_2, kappa, lmax)
    return blocks[m, m:, m:]


def xi_eval_3d(scene, kappa, lmax=None, n_polar=None):
    """Xi(i kappa) for a two-sphere scene by the azimuthal block sum.

    Xi = sum over m of log det(I - D1^{-1} C12^(m) D2^{-1} C21^(m)) with
    diagonal D_j = s_l(kappa, R_j).  The returned sample carries the
    truncation-tail estimate |Xi_L - Xi_{L+2}| as its error estimate; a
    tail above 1e-6 |Xi| is reported through ``XiSample.error_estimate``
    rather than raised.
    """
    dc = _axis_distance(scene)
    s_a, s_b = scene.obstacles
    if kappa <= 0:
        raise DomainError("kappa must be positive")
    if lmax is None:
        lmax = max(8, int(np.ceil(kappa * max(s_a.radius, s_b.radius))) + 8)
    if lmax + 2 > 60:
        raise ConfigurationError("lmax + 2 must stay within the l <= 60 range")

    lbig = lmax + 2
    blocks = cross_blocks(s_a, s_b, kappa, lbig, n_polar)
    d1 = single_sphere_eigs(s_a.radius, kappa, lbig)
    d2 = single_sphere_eigs(s_b.radius, kappa, lbig)

    def logdet_sum(ltop):
        total = 0.0
        for m in range(ltop + 1):
            c12 = blocks[m, m:ltop + 1, m:ltop + 1]
            k_m = (c12 / d1[m:ltop + 1, None]) @ (c12.T / d2[m:ltop + 1, None])
            mu = np.linalg.eigvals(k_m)
            contrib = np.sum(_log1p_complex(-mu)).real
            total += contrib if m == 0 else 2.0 * contrib
        return total

    xi_l = logdet_sum(lmax)
    xi_l2 = logdet_sum(lbig)
    tail = abs(xi_l2 - xi_l)
    return XiSample(lam=1j * kappa, xi=complex(xi_l), n=lmax,
                    error_estimate=tail)


def monopole_xi(scene, kappa):
    """L = 0 truncation of Xi; dominates at long wavelength."""
    sample = xi_eval_3d(scene, kappa, lmax=0)
    return sample.xi.real


def galerkin_eig_oracle(radius, kappa, l, n_polar=48):
    """<Y_l0, S Y_l0> on one sphere by direct double surface quadrature.

    The inner integral over y uses a Gauss-Legendre x uniform grid whose
    pole sits at the outer point x, which cancels the 1/|x-y| singularity
    through the area element.  Independent of the Bessel-product formula;
    used to validate single_sphere_eigs.
    """
    nphi = 2 * n_polar
    u, wu = np.polynomial.legendre.leggauss(n_polar)
    phi = np.arange(nphi) * 2.0 * np.pi / nphi
    wphi = 2.0 * np.pi / nphi

    # inner grid in the pole frame of the outer point: Gauss-Legendre in the
    # polar ANGLE, where the area element sin(theta) cancels the 1/|x-y|
    # kernel singularity and the integrand is smooth
    x_gl, w_gl = np.polynomial.legendre.leggauss(n_polar)
    theta_in = 0.5 * np.pi * (x_gl + 1.0)
    w_in = 0.5 * np.pi * w_gl * np.sin(theta_in)
    st, ct = np.sin(theta_in), np.cos(theta_in)
    dist = 2.0 * radius * np.sin(0.5 * theta_in)
    kernel = np.exp(-kappa * dist) / (4.0 * np.pi * dist)
    norm_l = np.sqrt((2.0 * l + 1.0) / (4.0 * np.pi))

    outer_vals = np.empty(n_polar)
    for i, ua in enumerate(u):
        sa = np.sqrt(1.0 - ua * ua)
        # global z of inner points: rotate the pole frame onto (sa, 0, ua)
        yz = (st[:, None] * np.cos(phi)[None, :] * sa + ct[:, None] * ua)
        y_l0 = norm_l * np.polynomial.legendre.Legendre.basis(l)(yz)
        inner = radius ** 2 * np.sum(
            (kernel * w_in)[:, None] * wphi * y_l0)
        outer_vals[i] = inner * norm_l * \
            np.polynomial.legendre.Legendre.basis(l)(ua)
    return float(radius ** 2 * np.sum(outer_vals * wu) * 2.0 * np.pi)
