"""Bouncing-ball orbits: endpoints, curvature data, singularity coefficients
and linearized Poincare-map determinants.

Every 2-link orbit is produced twice over: the closed-form route evaluates
the coefficient c from the endpoint curvature data and converts it to
|det(I - P)| through |det(I - P)|^(1/2) = 2 delta / c, while the numeric
route ray-traces the two-bounce return map in boundary coordinates
(position, tangential momentum) and differentiates it by central finite
differences with one Richardson level.  The two routes cross-validate each
other in ``xi_prefactor``; det(I - P) is invariant under smooth changes of
the transversal chart, so the raw parameter coordinates used here give the
same determinant as canonical Birkhoff coordinates.
"""

from dataclasses import dataclass

import numpy as np

from . import geometry
from .errors import DegenerateSceneError, NumericalError, SceneError

_NORMALITY_TOL = 1e-8


@dataclass(frozen=True)
class BouncingBallOrbit:
    """A 2-link periodic trajectory between two distinct obstacles."""

    endpoints: tuple               # (BoundaryPoint, BoundaryPoint)
    chord: float                   # distance between the reflection points
    length: float                  # period = 2 * chord
    curvature_data: dict           # {r, rho} in 2D, {r1, r2, rho1, rho2, theta} in 3D
    c: float                       # closed-form singularity coefficient
    det_factor: float              # |det(I - P)| from the closed form
    is_minimal: bool               # chord equals the scene minimal distance

    @property
    def prefactor(self):
        """1 / |det(I - P)|^(1/2), the orbit's Xi amplitude."""
        return self.c / (2.0 * self.chord)


def singularity_coefficient(orbit):
    """Closed-form wave-trace coefficient c of a 2-link orbit."""
    dimension = 2 if "r" in orbit.curvature_data else 3
    return coefficient_from_curvature(dimension, orbit.chord,
                                      orbit.curvature_data)


def coefficient_from_curvature(dimension, chord, curvature_data):
    """Wave-trace coefficient c from raw curvature data.

    2D: c = sqrt(delta r rho / (r + rho + delta)).  3D: c =
    sqrt(rho1 rho2 r1 r2 / (2 D)) with the quartic curvature invariant D.
    ``chord`` plays the role of delta for the orbit at hand.
    """
    d = chord
    if dimension == 2:
        r, rho = curvature_data["r"], curvature_data["rho"]
        radicand = d * r * rho / (r + rho + d)
    else:
        r1, r2 = curvature_data["r1"], curvature_data["r2"]
        rho1, rho2 = curvature_data["rho1"], curvature_data["rho2"]
        theta = curvature_data["theta"]
        big_d = (2 * d ** 2 + 2 * d * rho1 + 2 * d * rho2 + 2 * rho1 * rho2
                 + r1 * (2 * d + rho1 + rho2 + 2 * r2) + 2 * d * r2
                 - (rho1 - rho2) * (r1 - r2) * np.cos(2 * theta)
                 + rho1 * r2 + rho2 * r2)
        radicand = rho1 * rho2 * r1 * r2 / (2.0 * big_d)
    if radicand <= 0:
        raise NumericalError(
            f"non-positive radicand {radicand} in the singularity "
            f"coefficient; curvature data {curvature_data} is invalid")
    return float(np.sqrt(radicand))


def curvature_invariant_3d(chord, curvature_data):
    """The quantity D entering the 3D coefficient (exposed for tests)."""
    d = chord
    r1, r2 = curvature_data["r1"], curvature_data["r2"]
    rho1, rho2 = curvature_data["rho1"], curvature_data["rho2"]
    theta = curvature_data["theta"]
    return (2 * d ** 2 + 2 * d * rho1 + 2 * d * rho2 + 2 * rho1 * rho2
            + r1 * (2 * d + rho1 + rho2 + 2 * r2) + 2 * d * r2
            - (rho1 - rho2) * (r1 - r2) * np.cos(2 * theta)
            + rho1 * r2 + rho2 * r2)


def _orbit_from_pair(scene, pa, pb, minimal):
    q1, q2 = pa.position, pb.position
    chord = float(np.linalg.norm(q1 - q2))
    u = (q1 - q2) / chord
    for bp in (pa, pb):
        residual = min(np.linalg.norm(u - bp.unit_normal),
                       np.linalg.norm(u + bp.unit_normal))
        if residual > _NORMALITY_TOL:
            raise NumericalError(
                f"bouncing-ball normality violated at obstacle "
                f"{bp.obstacle_index}: residual {residual:.2e}")
    if scene.dimension == 2:
        k1, k2 = pa.curvature, pb.curvature
        if k1 <= 0 or k2 <= 0:
            raise DegenerateSceneError(
                "an orbit endpoint lies on a non-convex boundary arc "
                f"(curvatures {k1:.3g}, {k2:.3g}); the strict convexity "
                "hypothesis near the closest points fails")
        data = {"r": 1.0 / k1, "rho": 1.0 / k2}
    else:
        ka, kb = pa.principal_curvatures, pb.principal_curvatures
        data = {"r1": 1.0 / ka[0], "r2": 1.0 / ka[1],
                "rho1": 1.0 / kb[0], "rho2": 1.0 / kb[1], "theta": 0.0}
        # normals are collinear with the chord, so the two tangent planes
        # coincide and parallel transport along the chord is the identity;
        # for spheres the points are umbilic and theta is immaterial.
        if abs(ka[0] - ka[1]) > 1e-12 or abs(kb[0] - kb[1]) > 1e-12:
            ea = pa.principal_directions[0]
            eb = pb.principal_directions[0]
            data["theta"] = float(np.arccos(np.clip(abs(ea @ eb), 0.0, 1.0)))
    c = coefficient_from_curvature(scene.dimension, chord, data)
    det = (2.0 * chord / c) ** 2
    return BouncingBallOrbit(endpoints=(pa, pb), chord=chord,
                             length=2.0 * chord, curvature_data=data, c=c,
                             det_factor=det, is_minimal=minimal)


def find_bouncing_orbits(scene, tol=1e-9, include_nonminimal=False):
    """All shortest bouncing-ball orbits of a scene.

    Minimizes the boundary distance over every obstacle pair, keeps the
    minimizers whose chord lies within ``tol`` (relative) of the global
    minimum, verifies the normality condition and populates curvature
    data.  With ``include_nonminimal`` the 2-link orbits of the remaining
    pairs are appended, each carrying its own chord length.
    """
    if len(scene.obstacles) < 2:
        raise SceneError("bouncing-ball orbits need at least two obstacles")
    delta = scene.delta   # validates pairwise disjointness
    orbits = []
    for i in range(len(scene.obstacles)):
        for j in range(i + 1, len(scene.obstacles)):
            dist, sub = geometry.pair_min_distance(scene.obstacles[i],
                                                   scene.obstacles[j])
            minimal = dist <= delta + tol * (1.0 + delta)
            if not (minimal or include_nonminimal):
                continue
            for qa, qb in sub:
                orbits.append(_orbit_from_pair(
                    scene, geometry.boundary_point(scene, i, qa),
                    geometry.boundary_point(scene, j, qb), minimal))
    if not any(o.is_minimal for o in orbits):
        raise NumericalError("no shortest orbit found; scene is inconsistent")
    return orbits


# ----------------------------------------------------------------------------
# Numeric Poincare map by exact ray tracing
# ----------------------------------------------------------------------------

def _ray_hit_2d(shape, p, d, seed):
    """Boundary parameter where the ray p + tau d meets the boundary,
    by Newton on the signed perpendicular distance, seeded near the hit."""
    s = seed
    for _ in range(60):
        pos = shape.position(s)
        g = (pos[0] - p[0]) * d[1] - (pos[1] - p[1]) * d[0]
        v = shape.velocity(s)
        gp = v[0] * d[1] - v[1] * d[0]
        step = g / gp
        s = s - step
        if abs(step) < 1e-15 * (1.0 + abs(s)):
            break
    else:
        raise NumericalError("ray-boundary Newton did not converge")
    if (shape.position(s) - p) @ d <= 0:
        raise NumericalError("ray-boundary intersection lies backwards")
    return s


def _two_bounce_map_2d(sa, sb, t, u, seed_b, seed_a):
    if abs(u) >= 1.0:
        raise NumericalError("tangential momentum |u| >= 1 (grazing ray)")
    p = sa.position(t)
    va = sa.velocity(t)
    tan = va / np.linalg.norm(va)
    nrm = np.array([tan[1], -tan[0]])
    d = u * tan + np.sqrt(1.0 - u * u) * nrm

    s = _ray_hit_2d(sb, p, d, seed_b)
    q = sb.position(s)
    nb = geometry.unit_normal(sb, s)
    d = d - 2.0 * (d @ nb) * nb

    t2 = _ray_hit_2d(sa, q, d, seed_a)
    p2 = sa.position(t2)
    na = geometry.unit_normal(sa, t2)
    d = d - 2.0 * (d @ na) * na
    va2 = sa.velocity(t2)
    u2 = (va2 / np.linalg.norm(va2)) @ d
    return t2, u2


def _sphere_near_hit(center, radius, p, d):
    w = p - np.asarray(center)
    b = w @ d
    disc = b * b - (w @ w - radius * radius)
    if disc <= 0:
        raise NumericalError("ray misses the sphere")
    tau = -b - np.sqrt(disc)
    if tau <= 0:
        raise NumericalError("sphere intersection lies backwards")
    return p + tau * d


def _two_bounce_map_3d(sa, sb, axis, e1, e2, v0, state):
    a, b, p1, p2 = state
    ca, cb = np.asarray(sa.center), np.asarray(sb.center)
    v = v0 + a * e1 + b * e2
    q = ca + sa.radius * v / np.linalg.norm(v)
    pt2 = p1 * p1 + p2 * p2
    if pt2 >= 1.0:
        raise NumericalError("tangential momentum |p| >= 1 (grazing ray)")
    d = p1 * e1 + p2 * e2 + np.sqrt(1.0 - pt2) * axis

    q2 = _sphere_near_hit(cb, sb.radius, q, d)
    n2 = (q2 - cb) / sb.radius
    d = d - 2.0 * (d @ n2) * n2

    q3 = _sphere_near_hit(ca, sa.radius, q2, d)
    n3 = (q3 - ca) / sa.radius
    d = d - 2.0 * (d @ n3) * n3

    u = (q3 - ca) / sa.radius
    denom = u @ axis
    a2 = sa.radius * (u @ e1) / denom
    b2 = sa.radius * (u @ e2) / denom
    return np.array([a2, b2, d @ e1, d @ e2])


def _poincare_jacobian_2d(scene, orbit, h):
    pa, pb = orbit.endpoints
    sa = scene.obstacles[pa.obstacle_index]
    sb = scene.obstacles[pb.obstacle_index]
    t0, s0 = pa.parameter[0], pb.parameter[0]
    ht = h / float(np.linalg.norm(sa.velocity(t0)))
    hu = h / orbit.chord
    jac = np.empty((2, 2))
    for col, (dt, du) in enumerate([(ht, 0.0), (0.0, hu)]):
        fp = _two_bounce_map_2d(sa, sb, t0 + dt, du, s0, t0)
        fm = _two_bounce_map_2d(sa, sb, t0 - dt, -du, s0, t0)
        step = 2.0 * (dt if col == 0 else du)
        jac[0, col] = (fp[0] - fm[0]) / step
        jac[1, col] = (fp[1] - fm[1]) / step
    return jac


def _poincare_jacobian_3d(scene, orbit, h):
    pa, pb = orbit.endpoints
    sa = scene.obstacles[pa.obstacle_index]
    sb = scene.obstacles[pb.obstacle_index]
    ca, cb = np.asarray(sa.center), np.asarray(sb.center)
    axis = (cb - ca) / np.linalg.norm(cb - ca)
    e1, e2 = _axis_frame(axis)
    v0 = sa.radius * axis
    steps = np.array([h, h, h / orbit.chord, h / orbit.chord])
    jac = np.empty((4, 4))
    for col in range(4):
        dv = np.zeros(4)
        dv[col] = steps[col]
        fp = _two_bounce_map_3d(sa, sb, axis, e1, e2, v0, dv)
        fm = _two_bounce_map_3d(sa, sb, axis, e1, e2, v0, -dv)
        jac[:, col] = (fp - fm) / (2.0 * steps[col])
    return jac


@dataclass(frozen=True)
class BilliardState:
    """Boundary position plus tangential momentum, per reflection.

    ``parameter`` addresses the boundary point on the departure obstacle
    (the boundary parameter in 2D, tangent-chart offsets from the orbit
    endpoint in 3D); ``momentum`` holds the tangential components of the
    outgoing unit velocity (one component in 2D, two in 3D), so
    |momentum| < 1 strictly for transversal reflections.
    """

    parameter: tuple
    momentum: tuple


def birkhoff_return_map(scene, orbit, state):
    """One application of the two-bounce return map near an orbit.

    The state lives on the departure obstacle of ``orbit``; the map traces
    the ray to the partner obstacle, reflects, traces back and reflects
    again.  The orbit itself is a fixed point.
    """
    pa, pb = orbit.endpoints
    sa = scene.obstacles[pa.obstacle_index]
    sb = scene.obstacles[pb.obstacle_index]
    if scene.dimension == 2:
        if abs(state.momentum[0]) >= 1.0:
            raise NumericalError("tangential momentum |u| >= 1")
        t2, u2 = _two_bounce_map_2d(sa, sb, state.parameter[0],
                                    state.momentum[0],
                                    pb.parameter[0], pa.parameter[0])
        return BilliardState(parameter=(t2,), momentum=(u2,))
    ca, cb = np.asarray(sa.center), np.asarray(sb.center)
    axis = (cb - ca) / np.linalg.norm(cb - ca)
    e1, e2 = _axis_frame(axis)
    out = _two_bounce_map_3d(sa, sb, axis, e1, e2, sa.radius * axis,
                             np.array([*state.parameter, *state.momentum]))
    return BilliardState(parameter=(out[0], out[1]),
                         momentum=(out[2], out[3]))


def _axis_frame(axis):
    e1 = np.array([-axis[1], axis[0], 0.0])
    if np.linalg.norm(e1) < 1e-8:
        e1 = np.array([1.0, 0.0, 0.0])
    e1 = e1 - (e1 @ axis) * axis
    e1 /= np.linalg.norm(e1)
    return e1, np.cross(axis, e1)


def poincare_det_numeric(scene, orbit, h=None):
    """|det(I - P)| from the finite-difference Jacobian of the two-bounce
    return map, with one level of Richardson extrapolation over h, h/2."""
    if h is None:
        h = 1e-5 * orbit.chord
    build = _poincare_jacobian_2d if scene.dimension == 2 \
        else _poincare_jacobian_3d
    j_h = build(scene, orbit, h)
    j_h2 = build(scene, orbit, 0.5 * h)
    j = (4.0 * j_h2 - j_h) / 3.0
    eye = np.eye(j.shape[0])
    return float(abs(np.linalg.det(eye - j)))


def xi_prefactor(scene, orbit, tol=1e-6):
    """1 / |det(I - P)|^(1/2), validated through both available routes.

    Route (a) differentiates the ray-traced return map; route (b) evaluates
    c / (2 delta), which equates the wave-trace amplitude
    delta / (pi |det(I - P)|^(1/2)) with the closed-form c / (2 pi).
    Disagreement beyond ``tol`` (relative) raises NumericalError.
    """
    closed = orbit.prefactor
    numeric = 1.0 / np.sqrt(poincare_det_numeric(scene, orbit))
    rel = abs(closed - numeric) / closed
    if rel > tol:
        raise NumericalError(
            f"Poincare prefactor cross-check failed: closed form {closed!r} "
            f"vs finite-difference route {numeric!r} (rel {rel:.2e})")
    return closed


def wave_trace_coefficient(orbits):
    """Sum of delta / (pi |det(I - P_gamma)|^(1/2)) over the shortest orbits."""
    return float(sum(o.chord / (np.pi * np.sqrt(o.det_factor))
                     for o in orbits if o.is_minimal))
