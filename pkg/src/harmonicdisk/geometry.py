"""Length, area, Hardy-mean, and boundary-distance functionals.

Everything here is a plain function over a harmonic map or an explicit
polygonal curve.  Curve integrals reduce to 1-d quadrature of
|d/dt f(c(t))| = |f_z(c) c'(t) + f_zb(c) conj(c'(t))|; area integrals
integrate the Jacobian in polar coordinates.  Boundary objects are
always evaluated at a proxy radius r_b < 1 (the config's
boundary_radius clamped to the map's max_radius) and the radius used is
reported back through the optional ``info`` dict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_CONFIG, effective_boundary_radius
from .errors import (EmptyCrosscut, PointOutsideDisk,
                     QuadratureNonconvergence, ValidationError)
from .maps import (SeriesHarmonicMap, derivs_banded, derivs_polar_grid,
                   eval_circle_grid)
from .quadrature import adaptive_simpson, fixed_simpson, refine_grid_max

TWO_PI = 2.0 * math.pi
# 2*pi beyond double precision.  The double value drifts the extraction
# grid phase by ~2.4e-16 per turn, and the rho^{1-n} amplification in
# coefficient recovery turns that drift into ~5e-9 noise on mode 32.
TWO_PI_LD = np.longdouble("6.28318530717958647692528676655900576839")


# ---------------------------------------------------------------------------
# explicit curves


@dataclass(frozen=True)
class PolygonalCurve:
    """Polyline through complex vertices, optionally closed."""

    vertices: np.ndarray
    closed: bool = True

    def __post_init__(self):
        v = np.ascontiguousarray(self.vertices, dtype=complex).reshape(-1)
        object.__setattr__(self, "vertices", v)
        if self.closed and v.size < 3:
            raise ValidationError("closed curve needs at least 3 vertices")
        if not self.closed and v.size < 2:
            raise ValidationError("open polyline needs at least 2 vertices")
        if not np.all(np.isfinite(v.view(float))):
            raise ValidationError("vertices must be finite")
        nxt = np.roll(v, -1) if self.closed else v[1:]
        cur = v if self.closed else v[:-1]
        if np.any(np.abs(nxt - cur) == 0.0):
            raise ValidationError("consecutive vertices must be distinct")

    def segments(self):
        """(start, end) arrays of every segment."""
        v = self.vertices
        if self.closed:
            return v, np.roll(v, -1)
        return v[:-1], v[1:]

    def segment_lengths(self):
        p, q = self.segments()
        return np.abs(q - p)

    def arc_prefix(self):
        """Cumulative length before each vertex (prefix[0] = 0)."""
        return np.concatenate([[0.0], np.cumsum(self.segment_lengths())])

    def refine(self):
        """Insert every segment midpoint (dyadic refinement)."""
        p, q = self.segments()
        mids = 0.5 * (p + q)
        out = np.empty(p.size * 2, dtype=complex)
        out[0::2] = p
        out[1::2] = mids
        if not self.closed:
            out = np.concatenate([out, [self.vertices[-1]]])
        return PolygonalCurve(out, self.closed)

    @classmethod
    def from_file(cls, path, closed=True):
        """One 'x y' vertex per line; blank lines and # comments skipped."""
        pts = []
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise ValidationError(
                        f"{path}:{lineno}: expected 'x y', got {line!r}")
                try:
                    pts.append(complex(float(parts[0]), float(parts[1])))
                except ValueError:
                    raise ValidationError(
                        f"{path}:{lineno}: non-numeric vertex {line!r}")
        return cls(np.array(pts), closed=closed)


def polygonal_length(curve):
    return float(math.fsum(curve.segment_lengths()))


def curve_diameter(curve):
    """Max pairwise vertex distance (chunked O(n^2) scan)."""
    v = curve.vertices
    best = 0.0
    step = max(1, (1 << 21) // max(1, v.size))
    for i in range(0, v.size, step):
        d = np.abs(v[i:i + step, None] - v[None, :])
        best = max(best, float(d.max()))
    return best


def shoelace_area(curve):
    """Signed-area magnitude of a closed polygon."""
    if not curve.closed:
        raise ValidationError("area needs a closed curve")
    p, q = curve.segments()
    cross = p.real * q.imag - p.imag * q.real
    return abs(float(math.fsum(cross))) * 0.5


def is_self_intersecting(curve):
    """True when any two non-adjacent segments properly cross."""
    p, q = curve.segments()
    n = p.size

    def orient(a, b, c):
        return ((b.real - a.real) * (c.imag - a.imag)
                - (b.imag - a.imag) * (c.real - a.real))

    step = max(1, (1 << 20) // max(1, n))
    idx = np.arange(n)
    for i0 in range(0, n, step):
        sl = slice(i0, min(i0 + step, n))
        a = p[sl, None]
        b = q[sl, None]
        c = p[None, :]
        d = q[None, :]
        d1 = orient(a, b, c)
        d2 = orient(a, b, d)
        d3 = orient(c, d, a)
        d4 = orient(c, d, b)
        proper = ((d1 > 0) != (d2 > 0)) & ((d3 > 0) != (d4 > 0))
        # adjacency (shared endpoints) never counts as a crossing
        ii = idx[sl, None]
        jj = idx[None, :]
        gap = np.minimum((ii - jj) % n, (jj - ii) % n) if curve.closed \
            else np.abs(ii - jj)
        proper &= gap > 1
        if np.any(proper):
            return True
    return False


def points_in_polygon(points, curve):
    """Even-odd crossing test, vectorized over query points."""
    if not curve.closed:
        raise ValidationError("containment needs a closed curve")
    pts = np.asarray(points, dtype=complex).reshape(-1)
    p, q = curve.segments()
    x, y = pts.real[:, None], pts.imag[:, None]
    x1, y1 = p.real[None, :], p.imag[None, :]
    x2, y2 = q.real[None, :], q.imag[None, :]
    straddles = (y1 <= y) != (y2 <= y)
    with np.errstate(divide="ignore", invalid="ignore"):
        xs = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
    hits = straddles & (xs > x)
    return (hits.sum(axis=1) % 2).astype(bool)


def point_polygon_distance(points, curve):
    """Distance from each query point to the polyline (segments, not
    just vertices)."""
    pts = np.asarray(points, dtype=complex).reshape(-1)
    p, q = curve.segments()
    u = q - p
    uu = (u * np.conj(u)).real
    out = np.empty(pts.size)
    step = max(1, (1 << 21) // max(1, p.size))
    for i0 in range(0, pts.size, step):
        sl = slice(i0, min(i0 + step, pts.size))
        w = pts[sl, None] - p[None, :]
        s = (w * np.conj(u[None, :])).real / uu[None, :]
        np.clip(s, 0.0, 1.0, out=s)
        d = np.abs(w - s * u[None, :])
        out[sl] = d.min(axis=1)
    return out


# curve factories used by tests, demos, and the domain-constants module

def circle_polygon(n, radius=1.0, center=0.0):
    t = TWO_PI * np.arange(n) / n
    return PolygonalCurve(center + radius * np.exp(1j * t))


def square_polygon():
    """The square with vertices (±1 ± i), side 2, perimeter 8."""
    return PolygonalCurve(np.array([1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j]))


def rectangle_polygon(width, height, per_side=1):
    """Axis-aligned rectangle centered at 0, optionally with subdivided
    sides."""
    w, h = width / 2.0, height / 2.0
    corners = [w + 1j * h, -w + 1j * h, -w - 1j * h, w - 1j * h]
    pts = []
    for k in range(4):
        a, b = corners[k], corners[(k + 1) % 4]
        for j in range(per_side):
            pts.append(a + (b - a) * j / per_side)
    return PolygonalCurve(np.array(pts))


def ellipse_polygon(a, b, n):
    t = TWO_PI * np.arange(n) / n
    return PolygonalCurve(a * np.cos(t) + 1j * b * np.sin(t))


def u_polygon(per_side=8):
    """U-shaped (non-convex) polygon: a 3x3 square with a 1x2 notch cut
    downward from the middle of the top side."""
    corners = np.array([0, 3, 3 + 3j, 2 + 3j, 2 + 1j, 1 + 1j, 1 + 3j, 3j],
                       dtype=complex)
    pts = []
    for k in range(corners.size):
        a = corners[k]
        b = corners[(k + 1) % corners.size]
        for j in range(per_side):
            pts.append(a + (b - a) * j / per_side)
    return PolygonalCurve(np.array(pts))


# ---------------------------------------------------------------------------
# arc sets on the unit circle


@dataclass(frozen=True)
class ArcSet:
    """Finite union of disjoint closed arcs [alpha_i, beta_i] of the
    circle, angles normalized into [0, 2 pi)."""

    arcs: tuple = field(default_factory=tuple)

    def __post_init__(self):
        norm = []
        for a, b in self.arcs:
            a, b = float(a), float(b)
            width = b - a
            if not 0.0 < width <= TWO_PI:
                raise ValidationError(
                    f"arc [{a}, {b}] must have width in (0, 2 pi]")
            a = a % TWO_PI
            norm.append((a, a + width))
        if not norm:
            raise ValidationError("arc set must be nonempty")
        norm.sort()
        for (_, b1), (a2, _) in zip(norm, norm[1:]):
            if a2 < b1 - 1e-12:
                raise ValidationError("arcs must be pairwise disjoint")
        # last arc may spill past 2 pi into the first one
        if len(norm) > 1 and norm[-1][1] - TWO_PI > norm[0][0] + 1e-12:
            raise ValidationError("arcs must be pairwise disjoint")
        total = math.fsum(b - a for a, b in norm)
        if total > TWO_PI + 1e-12:
            raise ValidationError("total arc measure exceeds 2 pi")
        object.__setattr__(self, "arcs", tuple(norm))

    @property
    def total_measure(self):
        return math.fsum(b - a for a, b in self.arcs)

    @classmethod
    def full(cls):
        return cls(((0.0, TWO_PI),))

    @classmethod
    def single(cls, alpha, beta):
        return cls(((alpha, beta),))


# ---------------------------------------------------------------------------
# curve-length functionals of a map


def _tangent_speed(m, z, unit_tangent_analytic):
    """|f_z t + f_zb conj(t)| for tangent direction t (array-aligned).

    Radius-banded so batches mixing interior and near-boundary points
    (crosscut arcs) pay the fine kernel rule only where needed.
    """
    fz, fzb = derivs_banded(m, z)
    return np.abs(fz * unit_tangent_analytic
                  + fzb * np.conj(unit_tangent_analytic))


def level_curve_length(m, r, cfg=DEFAULT_CONFIG, info=None):
    """Length of the image of the circle |z| = r."""
    r = float(r)
    if not 0.0 < r < 1.0:
        raise ValidationError(f"level-curve radius must be in (0,1), got {r}")
    if r > m.max_radius:
        raise QuadratureNonconvergence(
            f"radius {r} exceeds the map's derivative radius {m.max_radius}")

    def speed(t):
        z = r * np.exp(1j * t)
        return _tangent_speed(m, z, 1j * z)

    val, nodes = adaptive_simpson(speed, 0.0, TWO_PI, abs_tol=cfg.abs_tol,
                                  rel_tol=cfg.rel_tol,
                                  max_subdivisions=cfg.max_subdivisions)
    if info is not None:
        info["nodes"] = nodes
        info["r"] = r
    return val


def boundary_image_length(m, E, cfg=DEFAULT_CONFIG, info=None):
    """Length (with multiplicity) of f over the arc set E, evaluated at
    the boundary proxy radius."""
    rb = effective_boundary_radius(cfg, m.max_radius)

    def speed(t):
        z = rb * np.exp(1j * t)
        return _tangent_speed(m, z, 1j * z)

    total = 0.0
    nodes = 0
    for a, b in E.arcs:
        val, n = adaptive_simpson(speed, a, b, abs_tol=cfg.abs_tol,
                                  rel_tol=cfg.rel_tol,
                                  max_subdivisions=cfg.max_subdivisions)
        total += val
        nodes += n
    if info is not None:
        info["r_b"] = rb
        info["nodes"] = nodes
    return total


def radial_length(m, theta, r, cfg=DEFAULT_CONFIG, info=None):
    """Length of the image of the segment [0, r e^{i theta}] with
    multiplicity.  r may reach 1 for maps whose derivatives extend to
    the closed disk (series, affine)."""
    r = float(r)
    theta = float(theta)
    if not 0.0 < r <= 1.0:
        raise ValidationError(f"radial extent must be in (0,1], got {r}")
    if r > m.max_radius:
        raise QuadratureNonconvergence(
            f"radius {r} exceeds the map's derivative radius {m.max_radius}")
    e = np.exp(1j * theta)

    def speed(rho):
        return _tangent_speed(m, rho * e, np.full(rho.shape, e))

    val, nodes = adaptive_simpson(speed, 0.0, r, abs_tol=cfg.abs_tol,
                                  rel_tol=cfg.rel_tol,
                                  max_subdivisions=cfg.max_subdivisions)
    if info is not None:
        info["nodes"] = nodes
    return val


def sup_radial_length(m, r, cfg=DEFAULT_CONFIG):
    """(theta*, sup value) of the radial length over directions.

    A theta grid with per-ray composite Simpson locates the maximizer;
    golden-section refinement with the adaptive integral sharpens it.
    """
    r = float(r)
    if not 0.0 < r <= 1.0:
        raise ValidationError(f"radial extent must be in (0,1], got {r}")
    if r > m.max_radius:
        raise QuadratureNonconvergence(
            f"radius {r} exceeds the map's derivative radius {m.max_radius}")
    thetas = np.linspace(0.0, TWO_PI, cfg.theta_grid, endpoint=False)
    panels = 128
    rho = np.linspace(0.0, r, panels + 1)
    e = np.exp(1j * thetas)
    fz, fzb = derivs_polar_grid(m, rho, cfg.theta_grid)
    g = np.abs(fz * e[:, None] + np.conj(e)[:, None] * fzb)
    h = r / panels
    w = np.ones(panels + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    grid_vals = (h / 3.0) * (g * w[None, :]).sum(axis=1)

    def ray(th):
        return radial_length(m, th, r, cfg)

    theta_star, _ = refine_grid_max(ray, thetas, grid_vals, wrap=TWO_PI)
    # re-evaluate adaptively so grid and refined values share one rule
    return float(theta_star), radial_length(m, theta_star, r, cfg)


def _crosscut_window(zeta0, rho, r_clip):
    """Angular half-width and center of {zeta0 + rho e^{it}} inside
    |z| <= r_clip.  Raises EmptyCrosscut when the window is empty."""
    c = (r_clip * r_clip - 1.0 - rho * rho) / (2.0 * rho)
    if c < -1.0:
        raise EmptyCrosscut(
            f"circle of radius {rho} about {zeta0} misses |z| <= {r_clip}")
    c = min(c, 1.0)
    half = math.pi - math.acos(c)
    beta = math.atan2(zeta0.imag, zeta0.real)
    return beta + math.pi, half


def crosscut_length(m, zeta0, rho, cfg=DEFAULT_CONFIG, info=None):
    """Length of the image of the crosscut arc of radius rho about the
    boundary point zeta0."""
    zeta0 = complex(zeta0)
    if abs(abs(zeta0) - 1.0) > 1e-9:
        raise ValidationError(f"crosscut center must be unimodular: {zeta0}")
    rho = float(rho)
    if not 0.0 < rho <= 2.0:
        raise ValidationError(f"crosscut radius must be in (0,2], got {rho}")
    r_clip = effective_boundary_radius(cfg, m.max_radius)
    center, half = _crosscut_window(zeta0, rho, r_clip)
    if half == 0.0:
        raise EmptyCrosscut(
            f"crosscut of radius {rho} about {zeta0} degenerates to a point")

    def speed(t):
        et = np.exp(1j * t)
        return rho * _tangent_speed(m, zeta0 + rho * et, 1j * et)

    val, nodes = adaptive_simpson(speed, center - half, center + half,
                                  abs_tol=cfg.abs_tol, rel_tol=cfg.rel_tol,
                                  max_subdivisions=cfg.max_subdivisions)
    if info is not None:
        info["nodes"] = nodes
        info["half_width"] = half
        info["r_clip"] = r_clip
    return val


def crosscut_integral(m, zeta0, r, cfg=DEFAULT_CONFIG, info=None,
                      panels=None):
    """Integral over rho in (0, r] of the crosscut image length.

    Crosscuts with rho < 1 - r_clip lie outside the clipped disk and
    contribute zero; those with rho > 1 + r_clip miss it entirely, so
    the integration range is [rho_lo, rho_hi] with rho_lo = 1 - r_clip
    and rho_hi = min(r, 1 + r_clip).  The crosscut length vanishes like
    a square root at both geometric edges; the substitution
    rho = rho_lo + (rho_hi - rho_lo) sin^2(v) makes the integrand
    smooth in v at both ends.

    ``panels``: integrate with a fixed composite Simpson rule of that
    many panels instead of adaptively (for doubled-node cross-checks).
    """
    zeta0 = complex(zeta0)
    r = float(r)
    if not 0.0 < r <= 2.0:
        raise ValidationError(f"upper radius must be in (0,2], got {r}")
    r_clip = effective_boundary_radius(cfg, m.max_radius)
    lo = 1.0 - r_clip
    hi = min(r, 1.0 + r_clip)
    if hi <= lo:
        return 0.0
    width = hi - lo
    total_nodes = 0

    def integrand_v(v_arr):
        nonlocal total_nodes
        v_flat = np.asarray(v_arr, dtype=float).ravel()
        out = np.empty(v_flat.size)
        for i, v in enumerate(v_flat):
            s = math.sin(v)
            rho = lo + width * s * s
            if rho <= lo or rho >= hi and r >= 1.0 + r_clip:
                out[i] = 0.0
                continue
            sub = {}
            try:
                raw = crosscut_length(m, zeta0, float(rho), cfg, info=sub)
            except EmptyCrosscut:
                # rounding at a window edge: zero-length crosscut
                out[i] = 0.0
                continue
            out[i] = raw * width * math.sin(2.0 * v)
            total_nodes += sub["nodes"]
        return out.reshape(np.shape(v_arr))

    half_pi = 0.5 * math.pi
    if panels is not None:
        val = fixed_simpson(integrand_v, 0.0, half_pi, panels)
        nodes = panels + 1
    else:
        val, nodes = adaptive_simpson(integrand_v, 0.0, half_pi,
                                      abs_tol=cfg.abs_tol,
                                      rel_tol=cfg.rel_tol,
                                      max_subdivisions=cfg.max_subdivisions)
    if info is not None:
        info["outer_nodes"] = nodes
        info["inner_nodes"] = total_nodes
        info["rho_lo"] = lo
        info["rho_hi"] = hi
    return val


def _simpson_weights(panels):
    w = np.ones(panels + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w


def _disk_area(m, r_eff, cfg, info):
    """Jacobian integral over the full disk |z| < r_eff on the polar
    product grid (circle-grid fast paths apply); doubled-resolution
    agreement check."""

    def value(n_t, n_rho):
        rho = r_eff * np.linspace(0.0, 1.0, n_rho + 1)
        fz, fzb = derivs_polar_grid(m, rho, n_t)
        jac = np.abs(fz) ** 2 - np.abs(fzb) ** 2
        h = r_eff / n_rho
        wts = _simpson_weights(n_rho)
        radial = (h / 3.0) * (jac * rho[None, :] * wts[None, :]).sum(axis=1)
        return (TWO_PI / n_t) * float(math.fsum(radial))

    a1 = value(512, 256)
    a2 = value(1024, 512)
    if abs(a2 - a1) > max(cfg.abs_tol * 10.0, cfg.rel_tol * abs(a2)):
        raise QuadratureNonconvergence(
            f"area rule did not stabilize: {a1} vs {a2}")
    if info is not None:
        info["r_eff"] = r_eff
        info["agreement"] = abs(a2 - a1)
    return a2


def _lens_radial_profile(m, w, r, R, t, n_rho):
    """Per-angle radial Simpson integral of J_f rho over the segment of
    the ray at angle t inside {|z - w| <= r} and |z| <= R."""
    proj = (w * np.exp(-1j * t)).real
    disc = proj * proj - (abs(w) ** 2 - r * r)
    root = np.sqrt(np.maximum(disc, 0.0))
    rho_lo = np.clip(proj - root, 0.0, R)
    rho_hi = np.clip(proj + root, 0.0, R)
    rho_hi = np.where(disc > 0.0, rho_hi, 0.0)
    rho_lo = np.where(disc > 0.0, rho_lo, 0.0)
    s = np.linspace(0.0, 1.0, n_rho + 1)
    rho = rho_lo[:, None] + (rho_hi - rho_lo)[:, None] * s[None, :]
    z = rho * np.exp(1j * t)[:, None]
    fz, fzb = derivs_banded(m, z.ravel())
    jac = (np.abs(fz) ** 2 - np.abs(fzb) ** 2).reshape(z.shape)
    h = (rho_hi - rho_lo) / n_rho
    wts = _simpson_weights(n_rho)
    return (h / 3.0) * (jac * rho * wts[None, :]).sum(axis=1)


def image_area(m, r, cfg=DEFAULT_CONFIG, center=None, info=None):
    """Jacobian area (with multiplicity) of f over a region of the disk.

    center None: the full disk |z| < r (r = 1 clips to the boundary
    proxy radius).  center given: the region {|z - center| <= r}
    intersected with the clipped disk |z| <= R.

    The lens-type region is integrated in polar coordinates about the
    origin.  The angular integrand is piecewise smooth: it vanishes like
    a square root where the angular window of the region closes (origin
    outside the region) and has corners at the two intersection angles
    of the circles |z| = R and |z - center| = r.  Both breakpoint
    families have closed forms, so the angular integral runs as fixed
    composite Simpson per smooth piece, with the sin^2 substitution at
    square-root edges; everything is evaluated twice at doubled angular
    and radial node counts and the two values must agree.
    """
    r = float(r)
    if center is None and not 0.0 < r <= 1.0:
        raise ValidationError(f"disk radius must be in (0,1], got {r}")
    if center is not None and not 0.0 < r <= 2.0:
        raise ValidationError(f"region radius must be in (0,2], got {r}")
    R = effective_boundary_radius(cfg, m.max_radius)
    if center is None:
        return _disk_area(m, min(r, R), cfg, info)
    w = complex(center)
    aw = abs(w)
    if aw < 1e-12:
        return _disk_area(m, min(r, R), cfg, info)
    if aw - r >= R:
        # the region misses the clipped disk entirely
        if info is not None:
            info["r_eff"] = R
            info["agreement"] = 0.0
        return 0.0
    if r - aw >= R:
        # the region contains the clipped disk
        return _disk_area(m, R, cfg, info)

    beta = math.atan2(w.imag, w.real)
    kap = (R * R + aw * aw - r * r) / (2.0 * R * aw)
    cross = math.acos(kap) if -1.0 < kap < 1.0 else None

    def total(ang_panels, n_rho):
        def plain(a, b):
            vals = _lens_radial_profile(
                m, w, r, R, np.linspace(a, b, ang_panels + 1), n_rho)
            h = (b - a) / ang_panels
            return (h / 3.0) * float(
                math.fsum((vals * _simpson_weights(ang_panels)).tolist()))

        if r > aw:
            # origin interior: full angular support, corner splits only
            if cross is None:
                return plain(0.0, TWO_PI)
            return plain(beta - cross, beta + cross) + plain(
                beta + cross, beta - cross + TWO_PI)
        q = math.sqrt(aw * aw - r * r)
        if q >= R:
            # support ends where the near radial limit leaves the disk;
            # the profile vanishes linearly there, no substitution needed
            return plain(beta - cross, beta + cross)
        # square-root window edges at beta +- T: t = (beta - T)
        # + 2 T sin^2(v) smooths both; corners map to closed-form v
        T = math.acos(min(q / aw, 1.0))
        splits = [0.0, 0.5 * math.pi]
        if cross is not None and cross < T:
            splits += [0.5 * math.acos(cross / T),
                       0.5 * math.acos(-cross / T)]
        splits = sorted(splits)

        def vpiece(v0, v1):
            v = np.linspace(v0, v1, ang_panels + 1)
            t = (beta - T) + 2.0 * T * np.sin(v) ** 2
            vals = _lens_radial_profile(m, w, r, R, t, n_rho)
            vals = vals * 2.0 * T * np.sin(2.0 * v)
            h = (v1 - v0) / ang_panels
            return (h / 3.0) * float(
                math.fsum((vals * _simpson_weights(ang_panels)).tolist()))

        return float(math.fsum(
            vpiece(a, b) for a, b in zip(splits, splits[1:])))

    a1 = total(192, 256)
    a2 = total(384, 512)
    if abs(a2 - a1) > max(cfg.abs_tol * 10.0, cfg.rel_tol * abs(a2)):
        raise QuadratureNonconvergence(
            f"area rule did not stabilize: {a1} vs {a2}")
    if info is not None:
        info["r_eff"] = R
        info["agreement"] = abs(a2 - a1)
    return a2


def op_norm_field(m):
    """The scalar field z -> |f_z| + |f_zb| for Hardy means."""

    def field(z):
        fz, fzb = m.derivs_many(z)
        return np.abs(fz) + np.abs(fzb)

    return field


def hardy_mean(field, p, r, cfg=DEFAULT_CONFIG):
    """Integral mean [(1/2pi) int |field(r e^{i t})|^p dt]^{1/p}."""
    p = float(p)
    r = float(r)
    if p <= 0.0:
        raise ValidationError(f"Hardy exponent must be positive, got {p}")
    if not 0.0 < r < 1.0:
        raise ValidationError(f"Hardy radius must be in (0,1), got {r}")

    def g(t):
        return np.abs(field(r * np.exp(1j * t))) ** p

    val, _ = adaptive_simpson(g, 0.0, TWO_PI, abs_tol=cfg.abs_tol,
                              rel_tol=cfg.rel_tol,
                              max_subdivisions=cfg.max_subdivisions)
    return (val / TWO_PI) ** (1.0 / p)


_EXTRACT_NODES = 1 << 13
_MODE_CACHE = {}


def _mode_matrix(n_max):
    """Rows e^{-i k t_j}, k < n_max, on the 2^13-node grid, extended
    precision, grown on demand and cached.

    Entries come from the table of N-th roots of unity indexed by
    k*j mod N, so no trig argument exceeds one turn.  Rounding the
    products k*t_j directly leaves a smooth phase error whose high
    modes survive the rho^{1-n} amplification in the caller."""
    N = _EXTRACT_NODES
    have = _MODE_CACHE.get("rows", 0)
    if n_max > have:
        rows = max(n_max, 64)
        mm = (TWO_PI_LD * np.arange(N, dtype=np.longdouble)) / N
        root = np.cos(mm) - 1j * np.sin(mm)
        idx = (np.arange(rows)[:, None] * np.arange(N)[None, :]) % N
        _MODE_CACHE["W"] = root[idx]
        _MODE_CACHE["rows"] = rows
    return _MODE_CACHE["W"][:n_max]


def _polyval_ld(coeffs, z):
    """Horner evaluation in extended precision."""
    c = np.asarray(coeffs, dtype=np.clongdouble)
    out = np.full(z.shape, c[-1], dtype=np.clongdouble)
    for k in range(c.size - 2, -1, -1):
        out = out * z + c[k]
    return out


def extract_coefficients(m, n_max, rho, cfg=DEFAULT_CONFIG):
    """Series coefficients a_0..a_n_max and b_1..b_n_max from circle
    integrals of the Wirtinger derivatives.

    n a_n and n b_n are Fourier modes of f_z and conj(f_zb) on the
    circle |z| = rho, computed with the uniform trapezoid rule (the DFT)
    on 2^13 nodes.  The same sums over every other node (a 2^12-node
    rule) must agree within tolerance, else QuadratureNonconvergence.

    High modes are attenuated by rho^{n-1}; recovering mode n divides by
    that tiny factor, which would amplify double-precision summation
    noise past useful accuracy.  The mode sums therefore run in extended
    precision, and series maps also evaluate their derivative
    polynomials in extended precision.
    """
    n_max = int(n_max)
    if n_max < 1:
        raise ValidationError("n_max must be >= 1")
    rho = float(rho)
    if not 0.0 < rho < 1.0:
        raise ValidationError(f"extraction radius must be in (0,1), got {rho}")
    N = _EXTRACT_NODES
    W = _mode_matrix(n_max)
    if isinstance(m, SeriesHarmonicMap):
        tt = (TWO_PI_LD * np.arange(N, dtype=np.longdouble)) / N
        z = np.longdouble(rho) * (np.cos(tt) + 1j * np.sin(tt))
        fz = _polyval_ld(m.analytic_deriv_coeffs(), z)
        gp = _polyval_ld(m.coanalytic_deriv_coeffs(), z)
    else:
        t = TWO_PI * np.arange(N) / N
        fz, fzb = m.derivs_many(rho * np.exp(1j * t))
        fz = fz.astype(np.clongdouble)
        gp = np.conj(fzb).astype(np.clongdouble)

    n = np.arange(1, n_max + 1, dtype=np.longdouble)
    scale = np.longdouble(rho) ** (np.longdouble(1.0) - n) / n

    def coeffs(vals, step):
        modes = (W[:, ::step] @ vals[::step]) / np.clongdouble(N // step)
        return (modes * scale).astype(complex)

    a = coeffs(fz, 1)
    b = coeffs(gp, 1)
    disagreement = max(float(np.abs(a - coeffs(fz, 2)).max()),
                       float(np.abs(b - coeffs(gp, 2)).max()))
    if disagreement > max(cfg.abs_tol * 10.0, 1e-8):
        raise QuadratureNonconvergence(
            f"coefficient extraction node-halving check failed: "
            f"{disagreement:.3e}")
    a0 = m.eval_many(np.array([0.0 + 0.0j]))[0]
    return np.concatenate([[complex(a0)], a]), b


def boundary_polygon(m, samples, cfg=DEFAULT_CONFIG, info=None):
    """Polygonal approximation of the image of the proxy boundary
    circle."""
    samples = int(samples)
    if samples < 8:
        raise ValidationError("boundary polygon needs at least 8 samples")
    rb = effective_boundary_radius(cfg, m.max_radius)
    pts = eval_circle_grid(m, rb, samples)
    if info is not None:
        info["r_b"] = rb
    return PolygonalCurve(pts)


def distance_to_boundary(m, w, boundary_samples=2048, cfg=DEFAULT_CONFIG,
                         info=None):
    """Distance from w to the polygonal image of the proxy boundary."""
    poly = boundary_polygon(m, boundary_samples, cfg, info=info)
    return float(point_polygon_distance(np.array([complex(w)]), poly)[0])
