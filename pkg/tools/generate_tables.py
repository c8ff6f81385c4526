"""Regenerate the frozen coefficient tables in src/relscat/_tables.py.

Maintenance tool, not part of the installed package.  Requires mpmath.
All coefficients (Chebyshev fits for the real modified Bessel kernels,
Taylor-continuation anchors for the complex kernels) and the frozen test
oracle values in tests/oracle_data.py come out of this script.

Run from the repository root:

    python tools/generate_tables.py
"""

import os

import mpmath as mp

mp.mp.dps = 60

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(HERE)
TABLES_PATH = os.path.join(ROOT, "src", "relscat", "_tables.py")
ORACLE_PATH = os.path.join(ROOT, "tests", "oracle_data.py")


# ----------------------------------------------------------------------------
# Chebyshev fitting helpers
# ----------------------------------------------------------------------------

def cheb_fit(f, n):
    """Chebyshev coefficients of f on [-1, 1] at n nodes (c[0] halved in eval)."""
    xs = [mp.cos(mp.pi * (j + mp.mpf(1) / 2) / n) for j in range(n)]
    fs = [f(x) for x in xs]
    coeffs = []
    for k in range(n):
        acc = mp.mpf(0)
        for j in range(n):
            acc += fs[j] * mp.cos(mp.pi * k * (j + mp.mpf(1) / 2) / n)
        coeffs.append(2 * acc / n)
    return coeffs


def cheb_eval(coeffs, x):
    b0 = mp.mpf(0)
    b1 = mp.mpf(0)
    for c in reversed(coeffs[1:]):
        b0, b1 = 2 * x * b0 - b1 + c, b0
    return x * b0 - b1 + coeffs[0] / 2


def trim(coeffs, tol):
    keep = len(coeffs)
    while keep > 1 and abs(coeffs[keep - 1]) < tol:
        keep -= 1
    return coeffs[:keep]


def fit_scaled_k(order, lo, hi, n=48):
    """Chebyshev coefficients of sqrt(x) exp(x) K_order(x), x in [lo, hi]."""
    def f(t):
        x = (lo + hi) / 2 + (hi - lo) / 2 * t
        return mp.sqrt(x) * mp.exp(x) * mp.besselk(order, x)

    return trim(cheb_fit(f, n), mp.mpf("1e-19"))


def fit_scaled_k_far(order, n=52):
    """Chebyshev coefficients of sqrt(x) exp(x) K_order(x) in u = 16/x - 1, x >= 8."""
    def f(u):
        x = 16 / (1 + u)
        return mp.sqrt(x) * mp.exp(x) * mp.besselk(order, x)

    return trim(cheb_fit(f, n), mp.mpf("1e-19"))


def check_cheb(coeffs, order, xs, mapper, label):
    worst = mp.mpf(0)
    for x in xs:
        approx = cheb_eval(coeffs, mapper(x))
        exact = mp.sqrt(x) * mp.exp(x) * mp.besselk(order, x)
        rel = abs(approx - exact) / abs(exact)
        worst = max(worst, rel)
    print(f"{label}: {len(coeffs)} coeffs, worst rel err {mp.nstr(worst, 3)}")
    assert worst < mp.mpf("1e-16"), label


# ----------------------------------------------------------------------------
# Anchor grids for Taylor continuation of complex K0 / J0
# ----------------------------------------------------------------------------

K0_RING0, K0_DRING, K0_NRING = 3.0, 1.0, 17   # radii 3..19
J0_RING0, J0_DRING, J0_NRING = 8.0, 1.0, 12   # radii 8..19
N_ANGLE = 15                                  # uniform on [0, pi/2]


def anchor_values(kind):
    """(value, derivative-seed) pairs on the ring/angle grid, hi/lo split."""
    if kind == "k0":
        ring0, nring = K0_RING0, K0_NRING
        f0 = lambda z: mp.besselk(0, z)
        f1 = lambda z: -mp.besselk(1, z)   # K0' = -K1
    else:
        ring0, nring = J0_RING0, J0_NRING
        f0 = lambda z: mp.besselj(0, z)
        f1 = lambda z: -mp.besselj(1, z)   # J0' = -J1
    rows = []
    for i in range(nring):
        radius = mp.mpf(ring0) + i
        for j in range(N_ANGLE):
            theta = mp.pi / 2 * j / (N_ANGLE - 1)
            a = radius * (mp.cos(theta) + 1j * mp.sin(theta))
            v0, v1 = f0(a), f1(a)
            row = []
            for comp in (a.real, a.imag, v0.real, v0.imag, v1.real, v1.imag):
                hi = float(comp)
                lo = float(comp - mp.mpf(hi))
                row.extend([hi, lo])
            rows.append(row)
    return rows


# ----------------------------------------------------------------------------
# Formatting
# ----------------------------------------------------------------------------

def fmt_floats(values, per_line=4, indent="    "):
    out = []
    line = []
    for v in values:
        line.append(repr(float(v)))
        if len(line) == per_line:
            out.append(indent + ", ".join(line) + ",")
            line = []
    if line:
        out.append(indent + ", ".join(line) + ",")
    return "\n".join(out)


def fmt_rows(rows, indent="    "):
    out = []
    for row in rows:
        out.append(indent + "[" + ", ".join(repr(v) for v in row) + "],")
    return "\n".join(out)


def main():
    # --- real-axis Chebyshev branches ------------------------------------
    k0_mid = fit_scaled_k(0, mp.mpf(2), mp.mpf(8))
    k1_mid = fit_scaled_k(1, mp.mpf(2), mp.mpf(8))
    k0_far = fit_scaled_k_far(0)
    k1_far = fit_scaled_k_far(1)

    mid_xs = [mp.mpf(2) + mp.mpf(6) * i / 200 for i in range(201)]
    far_xs = [mp.mpf(8) / (1 - mp.mpf(i) / 220) for i in range(200)] + [mp.mpf(700)]
    check_cheb(k0_mid, 0, mid_xs, lambda x: (x - 5) / 3, "K0 mid")
    check_cheb(k1_mid, 1, mid_xs, lambda x: (x - 5) / 3, "K1 mid")
    check_cheb(k0_far, 0, far_xs, lambda x: 16 / x - 1, "K0 far")
    check_cheb(k1_far, 1, far_xs, lambda x: 16 / x - 1, "K1 far")

    # --- complex anchors ---------------------------------------------------
    k0_anchors = anchor_values("k0")
    j0_anchors = anchor_values("j0")
    print(f"anchors: K0 {len(k0_anchors)}, J0 {len(j0_anchors)}")

    with open(TABLES_PATH, "w") as fh:
        fh.write('"""Frozen coefficient tables (generated by tools/generate_tables.py)."""\n\n')
        fh.write("import numpy as np\n\n")
        for name, coeffs in [("CHEB_K0_MID", k0_mid), ("CHEB_K1_MID", k1_mid),
                             ("CHEB_K0_FAR", k0_far), ("CHEB_K1_FAR", k1_far)]:
            fh.write(f"{name} = np.array([\n{fmt_floats(coeffs)}\n])\n\n")
        fh.write(f"K0_RING0, K0_DRING, K0_NRING = {K0_RING0!r}, {K0_DRING!r}, {K0_NRING}\n")
        fh.write(f"J0_RING0, J0_DRING, J0_NRING = {J0_RING0!r}, {J0_DRING!r}, {J0_NRING}\n")
        fh.write(f"N_ANGLE = {N_ANGLE}\n\n")
        fh.write("# columns: a_re_hi, a_re_lo, a_im_hi, a_im_lo, f_re_hi, f_re_lo,\n")
        fh.write("#          f_im_hi, f_im_lo, fp_re_hi, fp_re_lo, fp_im_hi, fp_im_lo\n")
        fh.write(f"K0_ANCHORS = np.array([\n{fmt_rows(k0_anchors)}\n])\n\n")
        fh.write(f"J0_ANCHORS = np.array([\n{fmt_rows(j0_anchors)}\n])\n")
    print(f"wrote {TABLES_PATH}")

    # --- frozen oracle values for the test suite ---------------------------
    lines = ['"""Frozen reference values (generated by tools/generate_tables.py)."""\n']

    def emit(name, body):
        lines.append(f"{name} = {body}\n")

    xs = ["1e-8", "1e-6", "1e-4", "1e-2", "0.1", "0.5", "1.0", "1.999", "2.0",
          "2.001", "3.0", "5.0", "7.999", "8.0", "8.001", "10.0", "20.0",
          "50.0", "100.0", "200.0", "400.0", "700.0"]
    for order, name in [(0, "K0_REAL"), (1, "K1_REAL")]:
        rows = []
        for xstr in xs:
            x = mp.mpf(xstr)
            rows.append(f"    ({xstr}, {mp.nstr(mp.besselk(order, x), 17)}),")
        emit(name, "[\n" + "\n".join(rows) + "\n]")

    rows = []
    for xstr in ["1e-8", "0.1", "1.0", "5.0", "10.0", "17.9", "18.1", "50.0",
                 "200.0", "600.0", "700.0"]:
        x = mp.mpf(xstr)
        rows.append(f"    ({xstr}, {mp.nstr(mp.besseli(0, x), 17)}),")
    emit("I0_REAL", "[\n" + "\n".join(rows) + "\n]")

    # complex Hankel H0^(1) and J0 over the upper half plane.  hankel1 =
    # besselj + i bessely cancels ~2 Im(z) / ln(10) digits at these points,
    # so the working precision is raised far beyond the cancellation depth.
    moduli = ["0.3", "1.0", "2.0", "5.0", "8.0", "9.5", "12.0", "15.0",
              "18.0", "18.9", "19.1", "25.0", "40.0", "80.0", "150.0", "300.0"]
    args = ["0.0", "0.2", "0.7", "1.1", "1.4", "1.5707963267948966"]
    h0_rows, j0_rows = [], []
    mp.mp.dps = 380
    for ms in moduli:
        for astr in args:
            r, th = mp.mpf(ms), mp.mpf(astr)
            z = r * (mp.cos(th) + 1j * mp.sin(th))
            h = mp.hankel1(0, z)
            j = mp.besselj(0, z)
            zs = f"complex({mp.nstr(z.real, 17)}, {mp.nstr(z.imag, 17)})"
            h0_rows.append(f"    ({zs}, complex({mp.nstr(h.real, 17)}, {mp.nstr(h.imag, 17)})),")
            j0_rows.append(f"    ({zs}, complex({mp.nstr(j.real, 17)}, {mp.nstr(j.imag, 17)})),")
    mp.mp.dps = 60
    emit("H0_COMPLEX", "[\n" + "\n".join(h0_rows) + "\n]")
    emit("J0_COMPLEX", "[\n" + "\n".join(j0_rows) + "\n]")

    # modified spherical Bessel functions, scaled and unscaled
    sph_rows = []
    for l in [0, 1, 2, 3, 5, 10, 20, 40, 60]:
        for xstr in ["1e-4", "0.1", "0.5", "1.0", "5.0", "10.0", "50.0",
                     "200.0", "600.0"]:
            x = mp.mpf(xstr)
            i_l = mp.sqrt(mp.pi / (2 * x)) * mp.besseli(l + mp.mpf(1) / 2, x)
            k_l = mp.sqrt(2 / (mp.pi * x)) * mp.besselk(l + mp.mpf(1) / 2, x)
            sph_rows.append(
                f"    ({l}, {xstr}, {mp.nstr(i_l * mp.exp(-x), 17)}, "
                f"{mp.nstr(k_l * mp.exp(x), 17)}),")
    lines.append("# (l, x, exp(-x)*i_l(x), exp(x)*k_l(x))")
    emit("SPH_SCALED", "[\n" + "\n".join(sph_rows) + "\n]")

    # circle single-layer eigenvalues I_m(kappa R) K_m(kappa R) R at kappa=R=1
    eig_rows = []
    for m in range(7):
        v = mp.besseli(m, 1) * mp.besselk(m, 1)
        eig_rows.append(f"    {mp.nstr(v, 17)},")
    emit("CIRCLE_EIGS_K1_R1", "[\n" + "\n".join(eig_rows) + "\n]")

    # ellipse (a, b) = (2, 1) perimeter
    per = mp.quad(lambda t: mp.sqrt(4 * mp.sin(t) ** 2 + mp.cos(t) ** 2),
                  [0, 2 * mp.pi])
    emit("ELLIPSE_2_1_PERIMETER", mp.nstr(per, 17))

    with open(ORACLE_PATH, "w") as fh:
        fh.write("\n".join(lines))
    print(f"wrote {ORACLE_PATH}")


if __name__ == "__main__":
    main()
