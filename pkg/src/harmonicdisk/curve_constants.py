"""Empirical geometric constants of closed curves.

Four classical constants, each estimated as a supremum over a finite,
deterministic probe set and therefore a LOWER bound of the true value:

    lavrentiev  sup (shorter-arc length) / chord   over vertex pairs
    quasicircle sup (shorter-arc diameter) / chord over the same pairs
    ahlfors     sup len(curve inside D(w, r)) / r  over centers and radii
    linear_conn sup (min connecting diameter) / distance over interior
                point pairs, rasterized

Pair probes are exhaustive for small polygons; larger ones consume a
fixed prefix sequence (antipodal lag first, then adjacent, then a
seeded shuffle of the remaining lags), so growing the sample count
never shrinks a constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .errors import PathNotFound, ValidationError
from .geometry import points_in_polygon

_EXHAUSTIVE_LIMIT = 1024
_CHORD_EPS = 1e-12
_DIAM_SUBSAMPLE = 33


@dataclass(frozen=True)
class CurveConstantsReport:
    lavrentiev_M: float
    quasicircle_M: float
    ahlfors_M: float
    linear_conn_M: float
    sample_counts: dict


def _pair_lags(n, seed):
    """Lag visit order: antipodal, adjacent, then a seeded shuffle."""
    head = [n // 2, 1]
    rest = [k for k in range(2, n // 2 + 1) if k not in head]
    rng = np.random.default_rng(seed)
    rng.shuffle(rest)
    return [k for k in head if 1 <= k <= n // 2] + rest


def sample_vertex_pairs(curve, pairs, seed=0):
    """Deterministic (i, j) vertex pairs, grouped by lag.

    Returns a list of (lag, start_indices) blocks whose total count is
    min(pairs, all distinct pairs).  Exhaustive when the polygon is
    small.
    """
    n = curve.vertices.size
    total = n * (n - 1) // 2
    want = total if n <= _EXHAUSTIVE_LIMIT else min(int(pairs), total)
    blocks = []
    got = 0
    for lag in _pair_lags(n, seed):
        # lag n/2 on an even polygon pairs each i with i+n/2 twice
        count = n // 2 if (2 * lag == n) else n
        starts = np.arange(min(count, want - got))
        blocks.append((lag, starts))
        got += starts.size
        if got >= want:
            break
    return blocks, got


def _arc_ratios(curve, blocks):
    """Per-pair (shorter arc length, chord, forward?) grouped by lag."""
    v = curve.vertices
    n = v.size
    pre = curve.arc_prefix()
    total = pre[-1]
    out = []
    for lag, starts in blocks:
        i = starts
        j = (starts + lag) % n
        # forward arc length i -> i+lag, wrapping through vertex 0
        arc_f = np.mod(pre[j] - pre[i], total)
        arc_b = total - arc_f
        chord = np.abs(v[j] - v[i])
        shorter_is_fwd = arc_f <= arc_b
        shorter = np.where(shorter_is_fwd, arc_f, arc_b)
        out.append((lag, i, j, shorter, chord, shorter_is_fwd))
    return out


def lavrentiev_constant(curve, pairs=20000, seed=0, counters=None):
    """Shorter-arc length over chord, maximized over sampled pairs."""
    blocks, got = sample_vertex_pairs(curve, pairs, seed)
    best = 1.0
    skipped = 0
    for _, _, _, shorter, chord, _ in _arc_ratios(curve, blocks):
        ok = chord >= _CHORD_EPS
        skipped += int((~ok).sum())
        if np.any(ok):
            best = max(best, float((shorter[ok] / chord[ok]).max()))
    if counters is not None:
        counters["pairs"] = got
        counters["degenerate_pairs"] = skipped
    return best


def _window_diameter(v, starts, lag, forward):
    """Diameter of the polygonal arc between each start and start+lag.

    Exact for short windows; long windows are subsampled (endpoints
    always included), which keeps the result a valid lower bound.
    """
    n = v.size
    size = lag + 1 if forward else n - lag + 1
    if size <= 128:
        offs = np.arange(size)
    else:
        offs = np.unique(np.round(
            np.linspace(0.0, size - 1, _DIAM_SUBSAMPLE)).astype(int))
    base = starts if forward else (starts + lag)
    idx = (base[:, None] + offs[None, :]) % n
    pts = v[idx]
    d = np.abs(pts[:, :, None] - pts[:, None, :])
    return d.reshape(starts.size, -1).max(axis=1)


def quasicircle_constant(curve, pairs=20000, seed=0, counters=None):
    """Shorter-arc diameter over chord, same probe pairs as the
    Lavrentiev constant."""
    blocks, got = sample_vertex_pairs(curve, pairs, seed)
    v = curve.vertices
    best = 1.0
    skipped = 0
    for lag, i, j, shorter, chord, is_fwd in _arc_ratios(curve, blocks):
        ok = chord >= _CHORD_EPS
        skipped += int((~ok).sum())
        if not np.any(ok):
            continue
        diam = np.empty(i.size)
        for forward in (True, False):
            sel = is_fwd == forward
            if np.any(sel):
                diam[sel] = _window_diameter(v, i[sel], lag, forward)
        best = max(best, float((diam[ok] / chord[ok]).max()))
    if counters is not None:
        counters["pairs"] = got
        counters["degenerate_pairs"] = skipped
    return best


_RADIUS_FRACTIONS = (1.0, 0.75, 0.5, 0.25, 0.125, 0.0625, 0.85, 0.6, 0.4,
                     0.3, 0.2, 0.15, 0.1, 0.05)


def _ahlfors_centers(curve, count):
    v = curve.vertices
    centroid = complex(v.mean())
    p, q = curve.segments()
    mids = 0.5 * (p + q)
    seq = np.concatenate([[centroid], v, mids])
    return seq[:min(count, seq.size)]


def ahlfors_constant(curve, centers=129, radii=6, counters=None):
    """Clipped curve length inside D(w, r) over r, maximized over probe
    centers and radius fractions."""
    p, q = curve.segments()
    u = q - p
    seglen = np.abs(u)
    cs = _ahlfors_centers(curve, centers)
    fracs = _RADIUS_FRACTIONS[:min(int(radii), len(_RADIUS_FRACTIONS))]
    best = 0.0
    for w in cs:
        maxdist = float(np.abs(curve.vertices - w).max())
        if maxdist < _CHORD_EPS:
            continue
        # per-segment quadratic |p + s u - w|^2 = r^2 in s
        dp = p - w
        a = (u * np.conj(u)).real
        bq = 2.0 * (dp * np.conj(u)).real
        c0 = (dp * np.conj(dp)).real
        for frac in fracs:
            r = frac * maxdist
            disc = bq * bq - 4.0 * a * (c0 - r * r)
            root = np.sqrt(np.maximum(disc, 0.0))
            s0 = np.clip((-bq - root) / (2.0 * a), 0.0, 1.0)
            s1 = np.clip((-bq + root) / (2.0 * a), 0.0, 1.0)
            inside = np.where(disc > 0.0, (s1 - s0) * seglen, 0.0)
            best = max(best, float(inside.sum()) / r)
    if counters is not None:
        counters["centers"] = len(cs)
        counters["radii"] = len(fracs)
    return best


def _raster(curve, grid):
    v = curve.vertices
    pad = 2.0 / grid
    x0, x1 = v.real.min(), v.real.max()
    y0, y1 = v.imag.min(), v.imag.max()
    span = max(x1 - x0, y1 - y0)
    x0 -= pad * span
    y0 -= pad * span
    span *= 1.0 + 4.0 / grid
    xs = x0 + (np.arange(grid) + 0.5) * span / grid
    ys = y0 + (np.arange(grid) + 0.5) * span / grid
    X, Y = np.meshgrid(xs, ys)
    cells = X + 1j * Y
    inside = points_in_polygon(cells.ravel(), curve).reshape(grid, grid)
    return cells, inside, span / grid


def _cell_of(z, cells, grid):
    col = int(np.argmin(np.abs(cells[0].real - z.real)))
    row = int(np.argmin(np.abs(cells[:, 0].imag - z.imag)))
    return row, col


_EIGHT = np.ones((3, 3), dtype=int)


def linear_connectivity_constant(boundary, point_pairs=16, grid=512, seed=0,
                                 counters=None):
    """Empirical linear-connectivity constant of the enclosed region.

    For each sampled interior pair (a, b), bisects the smallest D such
    that a and b are raster-connected inside the region through cells
    within distance D of both endpoints.  A path of diameter D stays in
    that set, so the bisected D underestimates the true minimal path
    diameter and the returned constant is a lower bound.
    """
    if not boundary.closed:
        raise ValidationError("linear connectivity needs a closed boundary")
    cells, inside, cell = _raster(boundary, grid)
    if not np.any(inside):
        raise PathNotFound("raster grid found no interior cells")
    rng = np.random.default_rng(seed)
    v = boundary.vertices
    x0, x1 = v.real.min(), v.real.max()
    y0, y1 = v.imag.min(), v.imag.max()
    pts = []
    trials = 0
    while len(pts) < 2 * point_pairs and trials < 200 * point_pairs:
        trials += 1
        z = complex(rng.uniform(x0, x1), rng.uniform(y0, y1))
        if not points_in_polygon(np.array([z]), boundary)[0]:
            continue
        r, c = _cell_of(z, cells, grid)
        if inside[r, c]:
            pts.append((z, r, c))
    if len(pts) < 2 * point_pairs:
        raise PathNotFound(
            "could not sample enough interior points; grid too coarse "
            "or region too thin")

    def connected(mask, rc_a, rc_b):
        labels, _ = ndimage.label(mask, structure=_EIGHT)
        la = labels[rc_a]
        return la != 0 and la == labels[rc_b]

    diag = math.hypot(x1 - x0, y1 - y0)
    best = 1.0
    used = 0
    for k in range(point_pairs):
        (za, ra, ca), (zb, rb, cb) = pts[2 * k], pts[2 * k + 1]
        d = abs(za - zb)
        if d < 10.0 * cell:
            continue
        used += 1
        da = np.abs(cells - za)
        db = np.abs(cells - zb)

        def feasible(D):
            return connected(inside & (da <= D) & (db <= D), (ra, ca),
                             (rb, cb))

        if not feasible(diag * 2.0):
            raise PathNotFound(
                f"no raster path between {za:.4f} and {zb:.4f}")
        lo, hi = d, 2.0 * diag
        if feasible(lo):
            hi = lo
        else:
            while hi - lo > max(1e-3 * d, 0.25 * cell):
                midv = 0.5 * (lo + hi)
                if feasible(midv):
                    hi = midv
                else:
                    lo = midv
        best = max(best, hi / d)
    if counters is not None:
        counters["conn_pairs"] = used
        counters["grid"] = grid
    return best


def curve_constants(curve, pairs=20000, centers=129, radii=6, point_pairs=16,
                    grid=512, seed=0):
    """All four constants in one report."""
    counts = {}
    lav = lavrentiev_constant(curve, pairs, seed, counters=counts)
    qc = quasicircle_constant(curve, pairs, seed)
    ahl = ahlfors_constant(curve, centers, radii, counters=counts)
    conn = linear_connectivity_constant(curve, point_pairs, grid, seed,
                                        counters=counts)
    return CurveConstantsReport(lav, qc, ahl, conn, counts)


def lemma_c_consistent(curves, threshold=1e6, pairs=20000, seed=0):
    """Finite chord-arc constant iff finite Ahlfors and quasicircle
    constants, across a family of curves."""
    for curve in curves:
        lav = lavrentiev_constant(curve, pairs, seed)
        qc = quasicircle_constant(curve, pairs, seed)
        ahl = ahlfors_constant(curve)
        if (lav < threshold) != (ahl < threshold and qc < threshold):
            return False
    return True
