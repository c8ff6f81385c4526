"""Scenes of disjoint smooth obstacles with analytic parameterizations.

The shape catalog is fixed (circle, ellipse, star in 2D; sphere in 3D) so
that boundary positions, normals and curvatures are available in closed form.
Scenes are immutable after construction; every operation here is read-only.
"""

import hashlib
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, DegenerateSceneError, NumericalError, SceneError

TWO_PI = 2.0 * np.pi

_NEWTON_STARTS = 4          # 4 x 4 grid = 16 starts per boundary pair
_NEWTON_MAX_ITER = 80
_HESS_COND_LIMIT = 1e8
_PAIR_DEDUP_TOL = 1e-9


# ----------------------------------------------------------------------------
# Shapes
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Circle:
    center: tuple
    radius: float
    dim = 2

    def __post_init__(self):
        if self.radius <= 0:
            raise SceneError("circle radius must be positive")

    def position(self, t):
        t = np.asarray(t, dtype=float)
        return np.stack([self.center[0] + self.radius * np.cos(t),
                         self.center[1] + self.radius * np.sin(t)], axis=-1)

    def velocity(self, t):
        t = np.asarray(t, dtype=float)
        return self.radius * np.stack([-np.sin(t), np.cos(t)], axis=-1)

    def acceleration(self, t):
        t = np.asarray(t, dtype=float)
        return self.radius * np.stack([-np.cos(t), -np.sin(t)], axis=-1)

    def curvature(self, t):
        return np.full(np.shape(np.asarray(t)), 1.0 / self.radius)


@dataclass(frozen=True)
class Ellipse:
    center: tuple
    semi_axes: tuple
    rotation: float = 0.0
    dim = 2

    def __post_init__(self):
        if min(self.semi_axes) <= 0:
            raise SceneError("ellipse semi-axes must be positive")

    def _frame(self):
        c, s = np.cos(self.rotation), np.sin(self.rotation)
        return np.array([[c, -s], [s, c]])

    def position(self, t):
        t = np.asarray(t, dtype=float)
        a, b = self.semi_axes
        local = np.stack([a * np.cos(t), b * np.sin(t)], axis=-1)
        return np.asarray(self.center) + local @ self._frame().T

    def velocity(self, t):
        t = np.asarray(t, dtype=float)
        a, b = self.semi_axes
        local = np.stack([-a * np.sin(t), b * np.cos(t)], axis=-1)
        return local @ self._frame().T

    def acceleration(self, t):
        t = np.asarray(t, dtype=float)
        a, b = self.semi_axes
        local = np.stack([-a * np.cos(t), -b * np.sin(t)], axis=-1)
        return local @ self._frame().T

    def curvature(self, t):
        t = np.asarray(t, dtype=float)
        a, b = self.semi_axes
        speed2 = (a * np.sin(t)) ** 2 + (b * np.cos(t)) ** 2
        return a * b / speed2 ** 1.5


@dataclass(frozen=True)
class Star:
    """Closed curve radius(t) = a0 + sum_k a_k cos(k t) around a center."""

    center: tuple
    cosine_coefficients: tuple
    dim = 2

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.cosine_coefficients)
        object.__setattr__(self, "cosine_coefficients", coeffs)
        if len(coeffs) - 1 > 16:
            raise SceneError("star coefficients are truncated at k <= 16")
        t = np.linspace(0.0, TWO_PI, 4096, endpoint=False)
        if np.min(self._radius(t)) <= 0:
            raise SceneError("star radius(t) must stay positive")

    def _radius(self, t):
        rho = np.full(np.shape(t), self.cosine_coefficients[0])
        for k, a in enumerate(self.cosine_coefficients[1:], start=1):
            rho = rho + a * np.cos(k * t)
        return rho

    def _radius_d1(self, t):
        d = np.zeros(np.shape(t))
        for k, a in enumerate(self.cosine_coefficients[1:], start=1):
            d = d - a * k * np.sin(k * t)
        return d

    def _radius_d2(self, t):
        d = np.zeros(np.shape(t))
        for k, a in enumerate(self.cosine_coefficients[1:], start=1):
            d = d - a * k * k * np.cos(k * t)
        return d

    def position(self, t):
        t = np.asarray(t, dtype=float)
        rho = self._radius(t)
        return np.asarray(self.center) + np.stack(
            [rho * np.cos(t), rho * np.sin(t)], axis=-1)

    def velocity(self, t):
        t = np.asarray(t, dtype=float)
        rho, d1 = self._radius(t), self._radius_d1(t)
        u = np.stack([np.cos(t), np.sin(t)], axis=-1)
        uperp = np.stack([-np.sin(t), np.cos(t)], axis=-1)
        return d1[..., None] * u + rho[..., None] * uperp

    def acceleration(self, t):
        t = np.asarray(t, dtype=float)
        rho, d1, d2 = self._radius(t), self._radius_d1(t), self._radius_d2(t)
        u = np.stack([np.cos(t), np.sin(t)], axis=-1)
        uperp = np.stack([-np.sin(t), np.cos(t)], axis=-1)
        return (d2 - rho)[..., None] * u + (2.0 * d1)[..., None] * uperp

    def curvature(self, t):
        t = np.asarray(t, dtype=float)
        rho, d1, d2 = self._radius(t), self._radius_d1(t), self._radius_d2(t)
        return (rho * rho + 2.0 * d1 * d1 - rho * d2) / (rho * rho + d1 * d1) ** 1.5


@dataclass(frozen=True)
class Sphere:
    center: tuple
    radius: float
    dim = 3

    def __post_init__(self):
        if self.radius <= 0:
            raise SceneError("sphere radius must be positive")

    def position(self, theta, phi):
        theta, phi = np.asarray(theta, dtype=float), np.asarray(phi, dtype=float)
        st = np.sin(theta)
        return np.asarray(self.center) + self.radius * np.stack(
            [st * np.cos(phi), st * np.sin(phi), np.cos(theta)], axis=-1)


def speed(shape, t):
    return np.linalg.norm(shape.velocity(t), axis=-1)


def unit_normal(shape, t):
    """Outward unit normal of a counterclockwise 2D parameterization."""
    v = shape.velocity(t)
    s = np.linalg.norm(v, axis=-1)
    return np.stack([v[..., 1], -v[..., 0]], axis=-1) / s[..., None]


def perimeter(shape, n=4096):
    t = np.linspace(0.0, TWO_PI, n, endpoint=False)
    return float(np.sum(speed(shape, t))) * TWO_PI / n


def contains_point(shape, p):
    p = np.asarray(p, dtype=float)
    if isinstance(shape, Circle):
        return np.linalg.norm(p - np.asarray(shape.center)) < shape.radius
    if isinstance(shape, Sphere):
        return np.linalg.norm(p - np.asarray(shape.center)) < shape.radius
    if isinstance(shape, Ellipse):
        local = shape._frame().T @ (p - np.asarray(shape.center))
        a, b = shape.semi_axes
        return (local[0] / a) ** 2 + (local[1] / b) ** 2 < 1.0
    if isinstance(shape, Star):
        d = p - np.asarray(shape.center)
        r = np.linalg.norm(d)
        if r == 0.0:
            return True
        return r < float(shape._radius(np.arctan2(d[1], d[0])))
    raise SceneError(f"unknown shape {type(shape).__name__}")


# ----------------------------------------------------------------------------
# Boundary points and sampling
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryPoint:
    obstacle_index: int
    parameter: tuple
    position: np.ndarray
    unit_normal: np.ndarray
    curvature: float = None                 # 2D
    principal_curvatures: tuple = None      # 3D
    principal_directions: tuple = None      # 3D


@dataclass(frozen=True)
class BoundaryGrid:
    """Quadrature sample of one boundary: nodes, outward normals, weights."""

    params: np.ndarray
    points: np.ndarray
    normals: np.ndarray
    weights: np.ndarray
    curvatures: np.ndarray = None
    speeds: np.ndarray = None


def boundary_sample(shape, n):
    """Quadrature nodes and weights on one obstacle boundary.

    2D shapes get the uniform (trapezoid) rule in the parameter, which is
    spectrally accurate for smooth closed curves; weights carry the
    arc-length Jacobian.  Spheres get a Gauss-Legendre (polar) x uniform
    (azimuth) product grid with n polar and 2n azimuthal points; weights
    carry the area element.
    """
    if shape.dim == 2:
        if n < 16 or n % 2:
            raise ConfigurationError("2D boundary samples need even n >= 16")
        t = np.arange(n) * TWO_PI / n
        sp = speed(shape, t)
        return BoundaryGrid(params=t, points=shape.position(t),
                            normals=unit_normal(shape, t),
                            weights=sp * TWO_PI / n,
                            curvatures=shape.curvature(t), speeds=sp)
    if n < 4:
        raise ConfigurationError("sphere sampling needs at least 4 polar points")
    u, wu = np.polynomial.legendre.leggauss(n)
    theta = np.arccos(u)
    phi = np.arange(2 * n) * TWO_PI / (2 * n)
    th_g, ph_g = np.meshgrid(theta, phi, indexing="ij")
    pts = shape.position(th_g.ravel(), ph_g.ravel())
    normals = (pts - np.asarray(shape.center)) / shape.radius
    w = (shape.radius ** 2 * wu[:, None] * (np.pi / n)
         * np.ones((1, 2 * n))).ravel()
    params = np.stack([th_g.ravel(), ph_g.ravel()], axis=-1)
    kappa = np.full(pts.shape[0], 1.0 / shape.radius)
    return BoundaryGrid(params=params, points=pts, normals=normals,
                        weights=w, curvatures=kappa)


def curvature_at(shape, parameter):
    """Curvature data at one boundary parameter.

    Returns a float in 2D (positive where the obstacle is convex).  For
    spheres returns ``(kappa1, kappa2, e1, e2)`` with both principal
    curvatures 1/R and an orthonormal tangent frame.
    """
    if shape.dim == 2:
        if isinstance(parameter, (tuple, list, np.ndarray)):
            parameter = parameter[0]
        return float(shape.curvature(np.asarray(parameter)))
    theta, phi = parameter
    p = shape.position(theta, phi)
    nrm = (p - np.asarray(shape.center)) / shape.radius
    e1 = np.array([-np.sin(phi), np.cos(phi), 0.0])
    if abs(np.sin(theta)) < 1e-12:
        e1 = np.array([1.0, 0.0, 0.0])
    e2 = np.cross(nrm, e1)
    e2 /= np.linalg.norm(e2)
    return (1.0 / shape.radius, 1.0 / shape.radius, e1, e2)


def boundary_point(scene, index, parameter):
    shape = scene.obstacles[index]
    if shape.dim == 2:
        if isinstance(parameter, (tuple, list, np.ndarray)):
            parameter = parameter[0]
        t = float(parameter) % TWO_PI
        return BoundaryPoint(
            obstacle_index=index, parameter=(t,),
            position=shape.position(t), unit_normal=unit_normal(shape, t),
            curvature=float(shape.curvature(t)))
    theta, phi = parameter
    k1, k2, e1, e2 = curvature_at(shape, parameter)
    p = shape.position(theta, phi)
    return BoundaryPoint(
        obstacle_index=index, parameter=(float(theta), float(phi)),
        position=p, unit_normal=(p - np.asarray(shape.center)) / shape.radius,
        principal_curvatures=(k1, k2), principal_directions=(e1, e2))


# ----------------------------------------------------------------------------
# Pairwise boundary distance
# ----------------------------------------------------------------------------

def _pair_objective(sa, sb, t, s):
    d = sa.position(t) - sb.position(s)
    return float(d @ d)


def _newton_pair(sa, sb, t, s):
    """Damped Newton on f(t, s) = |Pa(t) - Pb(s)|^2; returns (t, s, f, H) or None."""
    f = _pair_objective(sa, sb, t, s)
    hess = None
    for _ in range(_NEWTON_MAX_ITER):
        pa, pb = sa.position(t), sb.position(s)
        va, vb = sa.velocity(t), sb.velocity(s)
        aa, ab = sa.acceleration(t), sb.acceleration(s)
        d = pa - pb
        grad = 2.0 * np.array([d @ va, -(d @ vb)])
        hess = 2.0 * np.array([[va @ va + d @ aa, -(va @ vb)],
                               [-(va @ vb), vb @ vb - d @ ab]])
        gnorm = np.linalg.norm(grad)
        if gnorm <= 1e-12 * (1.0 + f):
            return t, s, f, hess
        try:
            step = np.linalg.solve(hess, -grad)
        except np.linalg.LinAlgError:
            step = -grad
        if not np.all(np.isfinite(step)) or step @ grad >= 0.0:
            step = -grad
        lam = 1.0
        for _ in range(40):
            f_new = _pair_objective(sa, sb, t + lam * step[0], s + lam * step[1])
            if f_new < f:
                break
            lam *= 0.5
        else:
            return t, s, f, hess
        t, s = (t + lam * step[0]) % TWO_PI, (s + lam * step[1]) % TWO_PI
        f = f_new
    return None


def _pair_min_2d(sa, sb):
    """Minimal boundary distance between two 2D shapes and its minimizers."""
    # coarse scan seeds the multistart and guards against missed basins
    tg = np.arange(96) * TWO_PI / 96
    pa, pb = sa.position(tg), sb.position(tg)
    d2 = np.sum((pa[:, None, :] - pb[None, :, :]) ** 2, axis=-1)
    i0, j0 = np.unravel_index(np.argmin(d2), d2.shape)

    starts = [(tg[i0], tg[j0])]
    grid = np.arange(_NEWTON_STARTS) * TWO_PI / _NEWTON_STARTS
    starts += [(ti, sj) for ti in grid for sj in grid]

    sols = []
    for t0, s0 in starts:
        res = _newton_pair(sa, sb, t0, s0)
        if res is not None:
            sols.append(res)
    if not sols:
        raise NumericalError("boundary distance Newton failed from all starts")
    fmin = min(r[2] for r in sols)
    out = []
    for t, s, f, hess in sols:
        if f > fmin + _PAIR_DEDUP_TOL * (1.0 + fmin):
            continue
        if any(_param_close(t, u[0]) and _param_close(s, u[1]) for u in out):
            continue
        cond = np.linalg.cond(hess)
        if not np.isfinite(cond) or cond > _HESS_COND_LIMIT:
            raise DegenerateSceneError(
                "non-isolated boundary distance minimizer detected "
                f"(Hessian condition {cond:.2e}); the scene violates the "
                "strict local convexity hypothesis near the closest points")
        out.append((t, s))
    return np.sqrt(fmin), out


def _param_close(a, b, tol=1e-6):
    d = abs((a - b + np.pi) % TWO_PI - np.pi)
    return d < tol


def pair_min_distance(sa, sb):
    """(distance, [(param_a, param_b), ...]) for one obstacle pair."""
    if isinstance(sa, Sphere) and isinstance(sb, Sphere):
        ca, cb = np.asarray(sa.center), np.asarray(sb.center)
        gap = np.linalg.norm(cb - ca) - sa.radius - sb.radius
        axis = (cb - ca) / np.linalg.norm(cb - ca)
        th_a, ph_a = _sphere_params(axis)
        th_b, ph_b = _sphere_params(-axis)
        return gap, [((th_a, ph_a), (th_b, ph_b))]
    dist, pairs = _pair_min_2d(sa, sb)
    pairs = [((t,), (s,)) for t, s in pairs]
    if isinstance(sa, Circle) and isinstance(sb, Circle):
        closed = np.linalg.norm(np.asarray(sb.center) - np.asarray(sa.center)) \
            - sa.radius - sb.radius
        if closed > 0 and abs(closed - dist) > 1e-9 * (1.0 + closed):
            raise NumericalError(
                f"circle pair distance {dist!r} disagrees with the closed "
                f"form {closed!r}")
        dist = closed
    return dist, pairs


def _sphere_params(direction):
    theta = float(np.arccos(np.clip(direction[2], -1.0, 1.0)))
    phi = float(np.arctan2(direction[1], direction[0])) % TWO_PI
    return theta, phi


def min_distance(scene):
    """Minimal distance between distinct obstacles and the achieving pairs.

    Returns ``(delta, pairs)`` where pairs is a list of
    ``(BoundaryPoint, BoundaryPoint)`` tuples, one per distance minimizer.
    Raises SceneError for touching/overlapping obstacles and
    DegenerateSceneError when a continuum of minimizers is detected.
    """
    if len(scene.obstacles) < 2:
        raise SceneError("minimal distance needs at least two obstacles")
    best = np.inf
    found = []
    for i in range(len(scene.obstacles)):
        for j in range(i + 1, len(scene.obstacles)):
            dist, pairs = pair_min_distance(scene.obstacles[i],
                                            scene.obstacles[j])
            found.append((dist, i, j, pairs))
            best = min(best, dist)
    scale = max(_nominal_size(o) for o in scene.obstacles)
    if best <= 1e-9 * scale:
        raise SceneError("obstacles touch or overlap (delta <= 0)")
    out = []
    for dist, i, j, pairs in found:
        if dist > best + _PAIR_DEDUP_TOL * (1.0 + best):
            continue
        for pa, pb in pairs:
            out.append((boundary_point(scene, i, pa), boundary_point(scene, j, pb)))
    return float(best), out


# ----------------------------------------------------------------------------
# Scene
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Scene:
    dimension: int
    obstacles: tuple
    _delta_cache: list = field(default_factory=list, compare=False, repr=False)

    def __post_init__(self):
        if self.dimension not in (2, 3):
            raise SceneError("dimension must be 2 or 3")
        if len(self.obstacles) < 1:
            raise SceneError("a scene needs at least one obstacle")
        for ob in self.obstacles:
            if ob.dim != self.dimension:
                raise SceneError(
                    f"{type(ob).__name__} is {ob.dim}D in a "
                    f"{self.dimension}D scene")
        for i, a in enumerate(self.obstacles):
            for b in self.obstacles[i + 1:]:
                if contains_point(a, _reference_point(b)) or \
                        contains_point(b, _reference_point(a)):
                    raise SceneError("obstacles are nested or overlapping")

    @property
    def delta(self):
        """Minimal distance between distinct obstacles (N >= 2 only)."""
        if not self._delta_cache:
            self._delta_cache.append(min_distance(self))
        return self._delta_cache[0][0]

    @property
    def closest_pairs(self):
        if not self._delta_cache:
            self._delta_cache.append(min_distance(self))
        return self._delta_cache[0][1]


def _reference_point(shape):
    return np.asarray(shape.center, dtype=float)


def _nominal_size(shape):
    if isinstance(shape, (Circle, Sphere)):
        return shape.radius
    if isinstance(shape, Ellipse):
        return max(shape.semi_axes)
    return abs(shape.cosine_coefficients[0])


_SHAPE_KINDS = {"circle": Circle, "ellipse": Ellipse, "star": Star,
                "sphere": Sphere}


def shape_from_dict(d):
    d = dict(d)
    kind = d.pop("kind", None)
    if kind not in _SHAPE_KINDS:
        raise SceneError(f"unknown obstacle kind {kind!r}")
    try:
        if kind == "circle":
            return Circle(center=tuple(d["center"]), radius=float(d["radius"]))
        if kind == "ellipse":
            return Ellipse(center=tuple(d["center"]),
                           semi_axes=tuple(d["semi_axes"]),
                           rotation=float(d.get("rotation", 0.0)))
        if kind == "star":
            return Star(center=tuple(d["center"]),
                        cosine_coefficients=tuple(d["cosine_coefficients"]))
        return Sphere(center=tuple(d["center"]), radius=float(d["radius"]))
    except (KeyError, TypeError) as exc:
        raise SceneError(f"malformed {kind} obstacle: {exc}") from exc


def shape_to_dict(shape):
    if isinstance(shape, Circle):
        return {"kind": "circle", "center": list(shape.center),
                "radius": shape.radius}
    if isinstance(shape, Ellipse):
        return {"kind": "ellipse", "center": list(shape.center),
                "semi_axes": list(shape.semi_axes), "rotation": shape.rotation}
    if isinstance(shape, Star):
        return {"kind": "star", "center": list(shape.center),
                "cosine_coefficients": list(shape.cosine_coefficients)}
    return {"kind": "sphere", "center": list(shape.center),
            "radius": shape.radius}


def scene_from_dict(d):
    try:
        dimension = int(d["dimension"])
        obstacles = tuple(shape_from_dict(o) for o in d["obstacles"])
    except (KeyError, TypeError) as exc:
        raise SceneError(f"malformed scene document: {exc}") from exc
    return Scene(dimension=dimension, obstacles=obstacles)


def scene_to_dict(scene):
    return {"dimension": scene.dimension,
            "obstacles": [shape_to_dict(o) for o in scene.obstacles]}


def load_scene(path):
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SceneError(f"scene file is not valid JSON: {exc}") from exc
    return scene_from_dict(doc)


def scene_hash(scene):
    """Content hash of the canonicalized scene document."""
    canon = json.dumps(scene_to_dict(scene), sort_keys=True,
                       separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()


def translate(scene, offset):
    offset = tuple(float(v) for v in offset)

    def shift(shape):
        center = tuple(c + o for c, o in zip(shape.center, offset))
        if isinstance(shape, Circle):
            return Circle(center, shape.radius)
        if isinstance(shape, Ellipse):
            return Ellipse(center, shape.semi_axes, shape.rotation)
        if isinstance(shape, Star):
            return Star(center, shape.cosine_coefficients)
        return Sphere(center, shape.radius)

    return Scene(scene.dimension, tuple(shift(o) for o in scene.obstacles))


def rotate_2d(scene, angle):
    """Rigid rotation of a 2D scene about the origin (circle/ellipse only)."""
    c, s = np.cos(angle), np.sin(angle)
    rot = np.array([[c, -s], [s, c]])

    def turn(shape):
        center = tuple(rot @ np.asarray(shape.center))
        if isinstance(shape, Circle):
            return Circle(center, shape.radius)
        if isinstance(shape, Ellipse):
            return Ellipse(center, shape.semi_axes, shape.rotation + angle)
        raise SceneError("star shapes carry no rotation parameter; "
                         "rotate_2d supports circles and ellipses only")

    return Scene(scene.dimension, tuple(turn(o) for o in scene.obstacles))
