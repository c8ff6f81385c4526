"""Bessel-family kernels for Helmholtz/Yukawa layer potentials in 2D and 3D.

Everything here is self-contained: real modified Bessel functions K0, K1, I0,
the complex Hankel function H0^(1) on the closed upper half-plane, the complex
J0, and the modified spherical Bessel functions i_l, k_l.  No special-function
library is used at runtime; the frozen tables in ``_tables.py`` carry
Chebyshev fits for the real K branches and Taylor-continuation anchors for
the complex kernels.

Branch layout for the real K0/K1: power series on (0, 2], Chebyshev fit of
sqrt(x) e^x K(x) on (2, 8], Chebyshev fit in 16/x - 1 on (8, inf).  The two
table branches meet at x = 8 and are required (and tested) to agree there.

The complex kernels cannot reach 1e-12 relative accuracy with a bare
series/asymptotic pair in double precision: the power series loses
exp(|z| + ...) digits to cancellation while the optimally truncated
asymptotic series bottoms out near exp(-2|z|).  The gap is bridged by Taylor
continuation from a grid of anchor points with frozen high-precision values,
which keeps every runtime operation in plain double arithmetic.

All array functions are vectorized over numpy arrays and allocate only a few
temporaries per call; they are pure functions and safe to call concurrently.
"""

import numpy as np

from . import _tables
from .errors import DomainError

EULER_GAMMA = float(np.euler_gamma)

_SERIES_TERMS_REAL_K = 18
_SERIES_TERMS_I0 = 44
_SERIES_TERMS_K0C = 26
_SERIES_TERMS_J0C = 28
_TAYLOR_TERMS = 26
_ASYM_TERMS = 28

# Harmonic numbers H_0..H_n and the asymptotic coefficient sequences.
_HARMONIC = np.concatenate([[0.0], np.cumsum(1.0 / np.arange(1.0, 64.0))])


def _k_asym_coeffs(n):
    # K0(w) ~ sqrt(pi/2w) e^-w sum c_k / w^k,  c_{k+1} = -c_k (2k+1)^2 / (8(k+1))
    c = np.empty(n)
    c[0] = 1.0
    for k in range(n - 1):
        c[k + 1] = -c[k] * (2 * k + 1) ** 2 / (8.0 * (k + 1))
    return c


def _i_asym_coeffs(n):
    # I0(x) ~ e^x / sqrt(2 pi x) sum b_k / x^k, b_{k+1} = b_k (2k+1)^2 / (8(k+1))
    b = np.empty(n)
    b[0] = 1.0
    for k in range(n - 1):
        b[k + 1] = b[k] * (2 * k + 1) ** 2 / (8.0 * (k + 1))
    return b


_K_ASYM = _k_asym_coeffs(_ASYM_TERMS)
_I_ASYM = _i_asym_coeffs(22)


def _clenshaw(coeffs, u):
    b0 = np.zeros_like(u)
    b1 = np.zeros_like(u)
    for c in coeffs[:0:-1]:
        b0, b1 = 2.0 * u * b0 - b1 + c, b0
    return u * b0 - b1 + 0.5 * coeffs[0]


# ----------------------------------------------------------------------------
# Real-argument modified Bessel functions
# ----------------------------------------------------------------------------

def _k01_series(x, order):
    """K0 or K1 power series, x in (0, 2]."""
    t = 0.25 * x * x
    lg = np.log(0.5 * x)
    if order == 0:
        term = np.ones_like(x)
        i0 = np.ones_like(x)
        acc = np.zeros_like(x)
        for k in range(1, _SERIES_TERMS_REAL_K):
            term = term * t / (k * k)
            i0 = i0 + term
            acc = acc + _HARMONIC[k] * term
        return -(lg + EULER_GAMMA) * i0 + acc
    term = np.ones_like(x)
    i1 = np.ones_like(x)
    acc = (_HARMONIC[0] + _HARMONIC[1] - 2.0 * EULER_GAMMA) * term
    for k in range(1, _SERIES_TERMS_REAL_K):
        term = term * t / (k * (k + 1))
        i1 = i1 + term
        acc = acc + (_HARMONIC[k] + _HARMONIC[k + 1] - 2.0 * EULER_GAMMA) * term
    return 1.0 / x + lg * (0.5 * x) * i1 - 0.25 * x * acc


def _k01_real(x, order):
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0) or not np.all(np.isfinite(x)):
        raise DomainError("modified Bessel K requires x > 0")
    out = np.empty_like(x)
    mid_c = _tables.CHEB_K1_MID if order else _tables.CHEB_K0_MID
    far_c = _tables.CHEB_K1_FAR if order else _tables.CHEB_K0_FAR

    near = x <= 2.0
    mid = (x > 2.0) & (x <= 8.0)
    far = x > 8.0
    if np.any(near):
        out[near] = _k01_series(x[near], order)
    if np.any(mid):
        xm = x[mid]
        out[mid] = _clenshaw(mid_c, (xm - 5.0) / 3.0) * np.exp(-xm) / np.sqrt(xm)
    if np.any(far):
        xf = x[far]
        out[far] = _clenshaw(far_c, 16.0 / xf - 1.0) * np.exp(-xf) / np.sqrt(xf)
    return out


def k0(x):
    """K0(x) for real x > 0, relative accuracy ~1e-15; underflows gracefully."""
    return _k01_real(x, 0)


def k1(x):
    """K1(x) for real x > 0."""
    return _k01_real(x, 1)


def i0(x):
    """I0(x) for real x >= 0; overflows to inf beyond x ~ 713."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    near = x <= 18.0
    if np.any(near):
        t = 0.25 * x[near] ** 2
        term = np.ones_like(t)
        acc = np.ones_like(t)
        for k in range(1, _SERIES_TERMS_I0):
            term = term * t / (k * k)
            acc = acc + term
        out[near] = acc
    if np.any(~near):
        xf = x[~near]
        s = np.zeros_like(xf)
        for c in _I_ASYM[::-1]:
            s = s / xf + c
        out[~near] = np.exp(xf) / np.sqrt(2.0 * np.pi * xf) * s
    return out


# ----------------------------------------------------------------------------
# Complex K0 on the closed right half-plane
# ----------------------------------------------------------------------------

def _k0c_series(w):
    t = 0.25 * w * w
    term = np.ones_like(w)
    si = np.ones_like(w)
    sh = np.zeros_like(w)
    for k in range(1, _SERIES_TERMS_K0C):
        term = term * t / (k * k)
        si = si + term
        sh = sh + _HARMONIC[k] * term
    return -(np.log(0.5 * w) + EULER_GAMMA) * si + sh


def _k0c_asym(w):
    s = np.zeros_like(w)
    for c in _K_ASYM[::-1]:
        s = s / w + c
    return np.sqrt(0.5 * np.pi / w) * np.exp(-w) * s


def _taylor_groups(w, anchors, ring0, nring):
    """Evaluate Taylor continuations of K0 or J0 from the frozen anchor grid.

    ``anchors`` rows hold the anchor point and the (f, f') seeds hi/lo split.
    The sign column of the ODE recurrence differs between the K and J family
    and is passed by the caller through ``anchors.sign``.
    """
    r = np.abs(w)
    theta = np.arctan2(w.imag, w.real)
    ring = np.clip(np.rint((r - ring0) / 1.0).astype(int), 0, nring - 1)
    ang = np.clip(np.rint(theta / (0.5 * np.pi) * (_tables.N_ANGLE - 1)).astype(int),
                  0, _tables.N_ANGLE - 1)
    idx = ring * _tables.N_ANGLE + ang
    out = np.empty_like(w)
    for ai in np.unique(idx):
        row = anchors.table[ai]
        a = complex(row[0] + row[1], row[2] + row[3])
        c0 = complex(row[4] + row[5], row[6] + row[7])
        c1 = complex(row[8] + row[9], row[10] + row[11])
        coeffs = np.empty(_TAYLOR_TERMS, dtype=complex)
        coeffs[0], coeffs[1] = c0, c1
        prev = 0.0 + 0.0j  # c_{k-1}
        for k in range(_TAYLOR_TERMS - 2):
            num = anchors.sign * (a * coeffs[k] + prev) - (k + 1) ** 2 * coeffs[k + 1]
            coeffs[k + 2] = num / (a * (k + 2) * (k + 1))
            prev = coeffs[k]
        sel = idx == ai
        h = w[sel] - a
        val = np.zeros_like(h)
        for c in coeffs[::-1]:
            val = val * h + c
        out[sel] = val
    return out


class _AnchorSet:
    def __init__(self, table, sign):
        self.table = table
        self.sign = sign


_K0_ANCHORS = _AnchorSet(_tables.K0_ANCHORS, +1.0)
_J0_ANCHORS = _AnchorSet(_tables.J0_ANCHORS, -1.0)


def _k0_right_half(w):
    """K0(w) for complex w with Re w >= 0, w != 0; ~1e-13 relative."""
    w = np.asarray(w, dtype=complex)
    flip = w.imag < 0.0
    wk = np.where(flip, np.conj(w), w)
    r = np.abs(wk)
    out = np.empty_like(wk)
    plain = (r + wk.real) <= 6.0
    tay = ~plain & (r <= 19.0)
    asym = ~plain & ~tay
    if np.any(plain):
        out[plain] = _k0c_series(wk[plain])
    if np.any(tay):
        out[tay] = _taylor_groups(wk[tay], _K0_ANCHORS,
                                  _tables.K0_RING0, _tables.K0_NRING)
    if np.any(asym):
        out[asym] = _k0c_asym(wk[asym])
    return np.where(flip, np.conj(out), out)


# ----------------------------------------------------------------------------
# Complex J0 and H0^(1) on the closed upper half-plane
# ----------------------------------------------------------------------------

def _j0c_series(z):
    t = -0.25 * z * z
    term = np.ones_like(z)
    acc = np.ones_like(z)
    for k in range(1, _SERIES_TERMS_J0C):
        term = term * t / (k * k)
        acc = acc + term
    return acc


def _j0c_asym(z):
    sp = np.zeros_like(z)
    sm = np.zeros_like(z)
    for c in _K_ASYM[::-1]:
        sp = 1j * sp / z + c
        sm = -1j * sm / z + c
    ep = np.exp(1j * (z - 0.25 * np.pi))
    em = np.exp(-1j * (z - 0.25 * np.pi))
    return np.sqrt(0.5 / (np.pi * z)) * (ep * sp + em * sm)


def j0_complex(z):
    """J0(z) for complex z with Im z >= 0 (upper half-plane), vectorized."""
    z = np.asarray(z, dtype=complex)
    # evenness and conjugation reduce to the closed first quadrant
    neg = z.real < 0.0
    zq = np.where(neg, -z, z)
    flip = zq.imag < 0.0
    zq = np.where(flip, np.conj(zq), zq)
    r = np.abs(zq)
    out = np.empty_like(zq)
    imag_axis = zq.real == 0.0
    ser = ~imag_axis & (r <= 9.0)
    tay = ~imag_axis & ~ser & (r <= 19.0)
    asym = ~imag_axis & ~ser & ~tay
    if np.any(imag_axis):
        out[imag_axis] = i0(np.abs(zq[imag_axis].imag))
    if np.any(ser):
        out[ser] = _j0c_series(zq[ser])
    if np.any(tay):
        out[tay] = _taylor_groups(zq[tay], _J0_ANCHORS,
                                  _tables.J0_RING0, _tables.J0_NRING)
    if np.any(asym):
        out[asym] = _j0c_asym(zq[asym])
    return np.where(flip, np.conj(out), out)


def hankel1_0_array(z):
    """H0^(1)(z) for complex z with Im z >= 0, z != 0, vectorized.

    Pure imaginary arguments route through the real K0 branch; everything
    else goes through K0 on the rotated argument w = -i z.
    """
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    imag_axis = (z.real == 0.0) & (z.imag > 0.0)
    if np.any(imag_axis):
        out[imag_axis] = (-2j / np.pi) * k0(z[imag_axis].imag)
    rest = ~imag_axis
    if np.any(rest):
        out[rest] = (-2j / np.pi) * _k0_right_half(-1j * z[rest])
    return out


# ----------------------------------------------------------------------------
# Modified spherical Bessel functions
# ----------------------------------------------------------------------------

def sph_ik_scaled(lmax, x):
    """Scaled modified spherical Bessel values for l = 0..lmax at real x > 0.

    Returns ``(i_scaled, k_scaled)`` with ``i_scaled = exp(-x) i_l(x)`` and
    ``k_scaled = exp(x) k_l(x)`` in the convention ``i_0 = sinh(x)/x``,
    ``k_0 = exp(-x)/x``.  i is generated by downward (Miller) recurrence,
    k by upward recurrence; both are stable in these directions.
    """
    if x <= 0.0 or not np.isfinite(x):
        raise DomainError("spherical Bessel functions require x > 0")
    if lmax < 0:
        raise DomainError("lmax must be >= 0")
    ks = np.empty(lmax + 1)
    ks[0] = 1.0 / x
    if lmax >= 1:
        ks[1] = (x + 1.0) / (x * x)
    with np.errstate(over="ignore"):    # k_l -> inf past double range
        for l in range(1, lmax):
            ks[l + 1] = ks[l - 1] + (2 * l + 1) / x * ks[l]

    # Miller start high enough that seed contamination decays below 1e-18
    nstart = max(lmax + 20, int(np.ceil(np.sqrt(lmax ** 2 + 83.0 * x))) + 2)
    i_sc = np.zeros(lmax + 1)
    p_up = 0.0          # running i_{l+1}
    p = 1e-280          # arbitrary seed for i_{nstart}
    for l in range(nstart, 0, -1):
        p_down = p_up + (2 * l + 1) / x * p
        p_up, p = p, p_down
        if abs(p) > 1e150:
            # values grow toward l = 0; rescale the pair and everything
            # stored so far (indices >= l) to keep one consistent scale
            p_up *= 1e-150
            p *= 1e-150
            i_sc[l:] *= 1e-150
        if l - 1 <= lmax:
            i_sc[l - 1] = p
    i0_scaled = -np.expm1(-2.0 * x) / (2.0 * x)
    i_sc *= i0_scaled / i_sc[0]
    return i_sc, ks


def sph_i_scaled_derivative(lmax, x):
    """exp(-x) i_l'(x) for l = 0..lmax, from i_l' = -(i_l)/(2x) + (i_{l-1}+i_{l+1})/2."""
    isc, _ = sph_ik_scaled(lmax + 1, x)
    im1 = np.empty(lmax + 1)
    im1[0] = 0.5 * (1.0 + np.exp(-2.0 * x)) / x  # exp(-x) cosh(x) / x
    im1[1:] = isc[:lmax]
    return -isc[:lmax + 1] / (2.0 * x) + 0.5 * (im1 + isc[1:lmax + 2])


def sph_k_scaled_derivative(lmax, x):
    """exp(x) k_l'(x) for l = 0..lmax, from k_l' = -(k_l)/(2x) - (k_{l-1}+k_{l+1})/2."""
    _, ksc = sph_ik_scaled(lmax + 1, x)
    km1 = np.empty(lmax + 1)
    km1[0] = 1.0 / x  # k_{-1} = e^{-x}/x in this convention
    km1[1:] = ksc[:lmax]
    return -ksc[:lmax + 1] / (2.0 * x) - 0.5 * (km1 + ksc[1:lmax + 2])


# ----------------------------------------------------------------------------
# Scalar operations
# ----------------------------------------------------------------------------

def bessel_k(order, x):
    """K_order(x) for order in {0, 1} and real x > 0."""
    if order not in (0, 1):
        raise DomainError("bessel_k supports orders 0 and 1 only")
    if not np.isfinite(x) or x <= 0.0:
        raise DomainError(f"bessel_k requires x > 0, got {x}")
    return float(_k01_real(np.array([x]), order)[0])


def hankel1_0(z):
    """H0^(1)(z) for complex z with Im z >= 0 and z != 0."""
    z = complex(z)
    if z == 0:
        raise DomainError("hankel1_0 is singular at z = 0")
    if z.imag < 0:
        raise DomainError("hankel1_0 is only evaluated for Im z >= 0")
    return complex(hankel1_0_array(np.array([z]))[0])


def mod_sph_bessel(kind, l, x):
    """Modified spherical Bessel i_l(x) or k_l(x), convention k_0 = exp(-x)/x.

    ``kind`` is "i" or "k"; 0 <= l <= 60; x > 0.  The unscaled i_l overflows
    for x beyond ~700 and is rejected there.
    """
    if kind not in ("i", "k"):
        raise DomainError("kind must be 'i' or 'k'")
    if not isinstance(l, (int, np.integer)) or l < 0 or l > 60:
        raise DomainError("order l must be an integer in [0, 60]")
    if not np.isfinite(x) or x <= 0.0:
        raise DomainError(f"mod_sph_bessel requires x > 0, got {x}")
    if x > 700.0:
        raise DomainError("x > 700 overflows the unscaled values; "
                          "use sph_ik_scaled")
    isc, ksc = sph_ik_scaled(l, x)
    if kind == "i":
        return float(isc[l] * np.exp(x))
    return float(ksc[l] * np.exp(-x))
