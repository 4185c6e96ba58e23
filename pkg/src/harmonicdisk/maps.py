"""Harmonic mappings of the unit disk and their Wirtinger calculus.

A planar harmonic map is written f = h + conj(g) with h, g analytic on
the open unit disk.  The pointwise derivative data is the Wirtinger pair

    f_z  = (f_x - i f_y) / 2 = h'(z)
    f_zb = (f_x + i f_y) / 2 = conj(g'(z))

from which the distortion quantities follow:

    op_norm  = |f_z| + |f_zb|      largest directional stretch
    lam      = ||f_z| - |f_zb||    smallest directional stretch
    jacobian = |f_z|^2 - |f_zb|^2

A sense-preserving map has jacobian > 0 everywhere; it is K-quasiconformal
when op_norm <= K * lam, equivalently when the second complex dilatation
omega = g'/h' satisfies |omega| <= (K - 1)/(K + 1).

Three concrete representations are provided: truncated power series,
Poisson integrals of unimodular boundary data, and affine maps.  All of
them evaluate on ndarrays; scalar wrappers validate the unit-disk
precondition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import (MapSpecError, NotSensePreserving, PointOutsideDisk,
                     QuadratureNonconvergence)
from .quadrature import golden_max, refine_grid_max

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class DerivativeFrame:
    """Wirtinger derivatives at a point together with the derived norms."""

    fz: complex
    fzb: complex
    op_norm: float
    lam: float
    jacobian: float

    @classmethod
    def from_pair(cls, fz, fzb):
        m1 = abs(fz)
        m2 = abs(fzb)
        return cls(complex(fz), complex(fzb), m1 + m2, abs(m1 - m2),
                   m1 * m1 - m2 * m2)


@dataclass(frozen=True)
class DilatationReport:
    """Empirical dilatation supremum from a finite probe grid.

    omega_sup is a lower bound for sup |g'/h'| (supremum over probes),
    hence K_lower = (1 + omega_sup)/(1 - omega_sup) is a lower bound for
    the true maximal dilatation.
    """

    omega_sup: float
    K_lower: float
    r_max: float
    grid_density: tuple[int, int]


class HarmonicMap:
    """Common interface: vectorized evaluation and Wirtinger derivatives.

    ``max_radius`` is the largest |z| at which derivatives are computable
    within tolerance; geometry routines clamp their boundary proxies to
    it and report the radius they actually used.
    """

    max_radius = 1.0

    def eval_many(self, z):
        raise NotImplementedError

    def derivs_many(self, z):
        raise NotImplementedError


class SeriesHarmonicMap(HarmonicMap):
    """f(z) = sum a_n z^n + sum conj(b_n) zbar^n, truncated at degree N.

    ``antianalytic_coeffs`` lists b_1..b_N (there is no b_0; a constant
    antianalytic term would be redundant with a_0).  Note the conjugation
    convention: the raw zbar^n coefficient of f is conj(b_n).
    """

    def __init__(self, analytic_coeffs, antianalytic_coeffs=(), *,
                 sense_preserving=False):
        a = np.atleast_1d(np.asarray(analytic_coeffs, dtype=complex))
        b = np.asarray(antianalytic_coeffs, dtype=complex).reshape(-1)
        if a.size == 0:
            a = np.zeros(1, dtype=complex)
        if not np.all(np.isfinite(a)) or not np.all(np.isfinite(b)):
            raise MapSpecError("series coefficients must be finite")
        self.analytic_coeffs = a
        self.antianalytic_coeffs = b
        self.truncation = max(a.size - 1, b.size)
        # g(z) = sum b_n z^n with g(0) = 0
        self._g = np.concatenate([[0.0 + 0.0j], b])
        self._dh = npoly.polyder(a) if a.size > 1 else np.zeros(1, complex)
        self._dg = npoly.polyder(self._g) if b.size else np.zeros(1, complex)
        self.declared_sense_preserving = bool(sense_preserving)
        self.sp_probe_grid = (12, 128)
        if sense_preserving:
            self._check_sense_preserving()

    def _check_sense_preserving(self):
        nr, nt = self.sp_probe_grid
        r = np.geomspace(0.05, 0.995, nr)
        t = np.linspace(0.0, TWO_PI, nt, endpoint=False)
        z = (r[:, None] * np.exp(1j * t)[None, :]).ravel()
        fz, fzb = self.derivs_many(z)
        jac = np.abs(fz) ** 2 - np.abs(fzb) ** 2
        if np.any(jac <= 0.0):
            k = int(np.argmin(jac))
            raise NotSensePreserving(
                f"jacobian {jac[k]:.3e} <= 0 at probe z = {z[k]:.6f}")

    def eval_many(self, z):
        z = np.asarray(z, dtype=complex)
        return npoly.polyval(z, self.analytic_coeffs) + np.conj(
            npoly.polyval(z, self._g))

    def derivs_many(self, z):
        z = np.asarray(z, dtype=complex)
        fz = npoly.polyval(z, self._dh)
        fzb = np.conj(npoly.polyval(z, self._dg))
        return fz, fzb

    def analytic_deriv_coeffs(self):
        """Coefficients of h' (low degree first)."""
        return self._dh.copy()

    def coanalytic_deriv_coeffs(self):
        """Coefficients of g' (low degree first); f_zb = conj(g'(z))."""
        return self._dg.copy()


class AffineHarmonicMap(HarmonicMap):
    """f(z) = c0 + a z + b zbar with |b| < |a| (sense-preserving)."""

    def __init__(self, c0, a, b):
        self.c0 = complex(c0)
        self.a = complex(a)
        self.b = complex(b)
        if not abs(self.b) < abs(self.a):
            raise NotSensePreserving(
                f"affine map needs |b| < |a|, got |a| = {abs(self.a)}, "
                f"|b| = {abs(self.b)}")

    def eval_many(self, z):
        z = np.asarray(z, dtype=complex)
        return self.c0 + self.a * z + self.b * np.conj(z)

    def derivs_many(self, z):
        z = np.asarray(z, dtype=complex)
        fz = np.full(z.shape, self.a)
        fzb = np.full(z.shape, self.b)
        return fz, fzb


class PoissonHarmonicMap(HarmonicMap):
    """Poisson integral of unimodular boundary data:

        f(z) = (scale / 2 pi) * int_0^{2 pi} P(z, t) exp(i phi(t)) dt,
        P(z, t) = (1 - |z|^2) / |e^{it} - z|^2.

    ``phi`` must be nondecreasing on [0, 2 pi] with phi(2 pi) - phi(0)
    = 2 pi (checked on a 2048-point spot grid).  Evaluation integrates
    the kernel with composite Simpson on a uniform periodic grid whose
    panel count doubles until two successive estimates agree to
    ``kernel_tol`` (absolute), up to ``max_panels`` panels.

    Derivatives differentiate the kernel analytically:

        dP/dz  = (1 - conj(z) e^{it}) / ((e^{it} - z) |e^{it} - z|^2)
        dP/dzb = conj(dP/dz)           (P is real-valued)

    The kernel peaks like 1/(1 - |z|) near the boundary, so evaluation
    is refused beyond |z| = 0.999 and derivatives beyond |z| = 0.998;
    past those radii the node budget cannot reach tolerance.
    """

    EVAL_RADIUS = 0.999
    DERIV_RADIUS = 0.998

    max_radius = DERIV_RADIUS

    def __init__(self, scale, phi, *, kernel_tol=1e-10, max_panels=1 << 18):
        self.scale = float(scale)
        if self.scale <= 0.0:
            raise MapSpecError("scale must be positive")
        self.phi = phi
        self.kernel_tol = float(kernel_tol)
        self.max_panels = int(max_panels)
        self._grids: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}
        self._ffts: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        self._spot_check_phase()

    def _spot_check_phase(self):
        t = np.linspace(0.0, TWO_PI, 2048)
        v = np.asarray(self.phi(t), dtype=float)
        if not np.all(np.isfinite(v)):
            raise MapSpecError("boundary phase returned non-finite values")
        if np.any(np.diff(v) < -1e-12):
            raise MapSpecError("boundary phase is not nondecreasing")
        if abs((v[-1] - v[0]) - TWO_PI) > 1e-8:
            raise MapSpecError(
                "boundary phase must increase by exactly 2 pi over a period")

    def _grid(self, n):
        got = self._grids.get(n)
        if got is None:
            t = TWO_PI * np.arange(n) / n
            F = np.exp(1j * np.asarray(self.phi(t), dtype=float))
            # periodic composite Simpson: endpoint node coincides with t=0
            w = np.where(np.arange(n) % 2 == 0, 2.0, 4.0) * (TWO_PI / n / 3.0)
            got = (t, F, w)
            self._grids[n] = got
        return got

    def _start_panels(self, rmax):
        # resolve the kernel peak (width ~ 1 - r) before convergence testing
        base = 256
        if rmax > 0.97:
            base = 1 << max(8, math.ceil(math.log2(16.0 / (1.0 - rmax))))
        return min(base, self.max_panels)

    def _integrate(self, z, want_derivs):
        z = np.asarray(z, dtype=complex)
        flat = z.ravel()
        r = np.abs(flat)
        rmax = float(r.max()) if flat.size else 0.0
        n = self._start_panels(rmax)
        prev = None
        theta = np.angle(flat)
        one_minus_r = 1.0 - r
        while True:
            t, F, w = self._grid(n)
            out = self._sum_grid(flat, r, theta, one_minus_r, t, F, w,
                                 want_derivs)
            if prev is not None:
                delta = max(float(np.abs(o - p).max()) if o.size else 0.0
                            for o, p in zip(out, prev))
                if delta <= self.kernel_tol:
                    return tuple(o.reshape(z.shape) for o in out)
            if n >= self.max_panels:
                raise QuadratureNonconvergence(
                    f"Poisson kernel quadrature did not reach |delta| <= "
                    f"{self.kernel_tol} within {self.max_panels} panels "
                    f"(max |z| = {rmax})")
            prev = out
            n = min(2 * n, self.max_panels)

    def _sum_grid(self, flat, r, theta, one_minus_r, t, F, w, want_derivs):
        # chunk so the (points x nodes) kernel matrix stays modest
        budget = 1 << 22
        step = max(1, budget // max(1, t.size))
        outs = ([np.empty(flat.size, complex)] if not want_derivs else
                [np.empty(flat.size, complex), np.empty(flat.size, complex)])
        for i in range(0, flat.size, step):
            sl = slice(i, min(i + step, flat.size))
            zc = flat[sl, None]
            th = theta[sl, None]
            rr = r[sl, None]
            # |e^{it} - z|^2 in cancellation-free form
            D = one_minus_r[sl, None] ** 2 + 4.0 * rr * np.sin(
                0.5 * (t[None, :] - th)) ** 2
            if not want_derivs:
                P = (one_minus_r[sl, None] * (1.0 + rr)) / D
                outs[0][sl] = (P * F[None, :] * w[None, :]).sum(axis=1)
            else:
                E = np.exp(1j * t)[None, :]
                Kz = (1.0 - np.conj(zc) * E) / ((E - zc) * D)
                FW = F[None, :] * w[None, :]
                outs[0][sl] = (Kz * FW).sum(axis=1)
                outs[1][sl] = (np.conj(Kz) * FW).sum(axis=1)
        scale = self.scale / TWO_PI
        return tuple(scale * o for o in outs)

    # refusal slack: |r e^{it}| can exceed r by a rounding error
    _RADIUS_SLACK = 1e-12

    def eval_many(self, z):
        z = np.asarray(z, dtype=complex)
        if z.size and float(np.abs(z).max()) > self.EVAL_RADIUS \
                + self._RADIUS_SLACK:
            raise QuadratureNonconvergence(
                f"Poisson evaluation refused beyond |z| = {self.EVAL_RADIUS}: "
                "kernel peak exceeds the node budget")
        return self._integrate(z, want_derivs=False)[0]

    def derivs_many(self, z):
        z = np.asarray(z, dtype=complex)
        if z.size and float(np.abs(z).max()) > self.DERIV_RADIUS \
                + self._RADIUS_SLACK:
            raise QuadratureNonconvergence(
                f"Poisson derivatives refused beyond |z| = "
                f"{self.DERIV_RADIUS}: kernel peak exceeds the node budget")
        return self._integrate(z, want_derivs=True)

    # -- uniform-circle fast path -------------------------------------
    # On the grid theta_k = 2 pi k / n the kernel integrals are circular
    # convolutions of the boundary data with a fixed radial kernel, so a
    # whole circle costs O(N log N) instead of O(n N).  The node-doubling
    # convergence test is the same as in _integrate.

    def _boundary_fft(self, n):
        got = self._ffts.get(n)
        if got is None:
            t = TWO_PI * np.arange(n) / n
            F = np.exp(1j * np.asarray(self.phi(t), dtype=float))
            got = (t, np.fft.fft(F))
            self._ffts[n] = got
        return got

    def _circle_conv(self, r, n, want_derivs):
        t, Fhat = self._boundary_fft(n)
        one_minus_r = 1.0 - r
        D = one_minus_r ** 2 + 4.0 * r * np.sin(0.5 * t) ** 2
        scale = self.scale / n
        if not want_derivs:
            P = (one_minus_r * (1.0 + r)) / D
            return (scale * np.fft.ifft(np.fft.fft(P) * Fhat),)
        # kernel sampled at -t_m: reversal built into the sample points
        c = np.exp(-1j * t)
        km = (1.0 - r * c) / ((c - r) * D)
        gz = scale * np.fft.ifft(np.fft.fft(km) * Fhat)
        gzb = scale * np.fft.ifft(np.fft.fft(np.conj(km)) * Fhat)
        return gz, gzb

    def _circle_doubling(self, r, n_out, want_derivs):
        r = float(r)
        N = int(n_out)
        start = self._start_panels(r)
        while N < start:
            N *= 2
        prev = None
        while True:
            full = self._circle_conv(r, N, want_derivs)
            out = tuple(np.ascontiguousarray(o[::N // n_out]) for o in full)
            if prev is not None:
                delta = max(float(np.abs(o - p).max())
                            for o, p in zip(out, prev))
                if delta <= self.kernel_tol:
                    return out
            if N >= self.max_panels:
                raise QuadratureNonconvergence(
                    f"Poisson kernel quadrature did not reach |delta| <= "
                    f"{self.kernel_tol} within {self.max_panels} panels "
                    f"(circle r = {r})")
            prev = out
            N *= 2

    def eval_circle(self, r, n):
        """f on the uniform grid r exp(2 pi i k / n), k = 0..n-1."""
        if not 0.0 <= r <= self.EVAL_RADIUS + self._RADIUS_SLACK:
            raise QuadratureNonconvergence(
                f"Poisson evaluation refused beyond |z| = "
                f"{self.EVAL_RADIUS}: kernel peak exceeds the node budget")
        return self._circle_doubling(r, n, want_derivs=False)[0]

    def derivs_circle(self, r, n):
        """(f_z, f_zb) on the uniform grid r exp(2 pi i k / n)."""
        if not 0.0 <= r <= self.DERIV_RADIUS + self._RADIUS_SLACK:
            raise QuadratureNonconvergence(
                f"Poisson derivatives refused beyond |z| = "
                f"{self.DERIV_RADIUS}: kernel peak exceeds the node budget")
        gz, gzb = self._circle_doubling(r, n, want_derivs=True)
        rot = np.exp(-2j * np.pi * np.arange(n) / n)
        return gz * rot, gzb * np.conj(rot)


class RescaledHarmonicMap(HarmonicMap):
    """F(zeta) = f(r0 zeta) for representations without a closed form."""

    def __init__(self, inner, r0):
        if not 0.0 < r0 < 1.0:
            raise MapSpecError("rescale radius must lie in (0, 1)")
        self.inner = inner
        self.r0 = float(r0)
        self.max_radius = min(1.0, inner.max_radius / self.r0)

    def eval_many(self, z):
        return self.inner.eval_many(self.r0 * np.asarray(z, dtype=complex))

    def derivs_many(self, z):
        fz, fzb = self.inner.derivs_many(self.r0 * np.asarray(z, dtype=complex))
        return self.r0 * fz, self.r0 * fzb


def derivs_banded(m, z, bands=(0.9, 0.97, 0.995)):
    """Wirtinger derivatives over a mixed-radius batch, split into
    radius bands.

    Quadrature-backed maps size their kernel rule by the largest radius
    in a batch; splitting keeps a few near-boundary points from forcing
    the finest rule onto everything.
    """
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    r = np.abs(flat)
    fz = np.empty(flat.shape, dtype=complex)
    fzb = np.empty(flat.shape, dtype=complex)
    edges = (-1.0,) + tuple(bands) + (float("inf"),)
    for lo, hi in zip(edges, edges[1:]):
        sel = (r > lo) & (r <= hi)
        if np.any(sel):
            a, b = m.derivs_many(flat[sel])
            fz[sel] = a
            fzb[sel] = b
    return fz.reshape(z.shape), fzb.reshape(z.shape)


def _circle_points(r, n):
    return r * np.exp(2j * np.pi * np.arange(n) / n)


def eval_circle_grid(m, r, n):
    """f on the uniform circle grid r exp(2 pi i k / n)."""
    if isinstance(m, PoissonHarmonicMap):
        return m.eval_circle(float(r), int(n))
    if isinstance(m, RescaledHarmonicMap):
        return eval_circle_grid(m.inner, m.r0 * float(r), n)
    return m.eval_many(_circle_points(float(r), int(n)))


def derivs_circle_grid(m, r, n):
    """(f_z, f_zb) on the uniform circle grid r exp(2 pi i k / n)."""
    if isinstance(m, PoissonHarmonicMap):
        return m.derivs_circle(float(r), int(n))
    if isinstance(m, RescaledHarmonicMap):
        fz, fzb = derivs_circle_grid(m.inner, m.r0 * float(r), n)
        return m.r0 * fz, m.r0 * fzb
    return m.derivs_many(_circle_points(float(r), int(n)))


def derivs_polar_grid(m, radii, n_theta):
    """(f_z, f_zb) arrays of shape (n_theta, len(radii)) on the polar
    grid angles 2 pi k / n_theta (rows) x radii (columns)."""
    radii = np.asarray(radii, dtype=float)
    n_theta = int(n_theta)
    if isinstance(m, (PoissonHarmonicMap, RescaledHarmonicMap)):
        fz = np.empty((n_theta, radii.size), dtype=complex)
        fzb = np.empty_like(fz)
        for j, r in enumerate(radii):
            fz[:, j], fzb[:, j] = derivs_circle_grid(m, r, n_theta)
        return fz, fzb
    e = np.exp(2j * np.pi * np.arange(n_theta) / n_theta)
    z = radii[None, :] * e[:, None]
    return m.derivs_many(z)


def evaluate(m, z):
    """f(z) for a single point of the open unit disk."""
    z = complex(z)
    if abs(z) >= 1.0:
        raise PointOutsideDisk(f"|z| = {abs(z)} >= 1")
    return complex(m.eval_many(np.array([z]))[0])


def wirtinger(m, z):
    """DerivativeFrame of the map at a single point of the open disk."""
    z = complex(z)
    if abs(z) >= 1.0:
        raise PointOutsideDisk(f"|z| = {abs(z)} >= 1")
    fz, fzb = m.derivs_many(np.array([z]))
    return DerivativeFrame.from_pair(fz[0], fzb[0])


def estimate_K(m, r_max=0.999, grid=720):
    """Lower bound for the maximal dilatation from a polar probe grid.

    32 geometrically spaced radii in (0.1, r_max] times ``grid`` angles,
    followed by coordinate-wise golden-section refinement around the
    best probe.  Raises NotSensePreserving if the jacobian is not
    positive at every probe.
    """
    r_max = min(float(r_max), m.max_radius)
    if not 0.0 < r_max:
        raise ValueError("r_max must be positive")
    n_r = 32
    lo = min(0.1, 0.5 * r_max)
    radii = np.geomspace(lo, r_max, n_r)
    angles = np.linspace(0.0, TWO_PI, grid, endpoint=False)
    fz, fzb = derivs_polar_grid(m, radii, grid)  # (grid, n_r)
    jac = (np.abs(fz) ** 2 - np.abs(fzb) ** 2).T
    if np.any(jac <= 0.0):
        k = int(np.argmin(jac))
        i_bad, j_bad = np.unravel_index(k, jac.shape)
        z_bad = radii[i_bad] * np.exp(1j * angles[j_bad])
        raise NotSensePreserving(
            f"jacobian {jac[i_bad, j_bad]:.3e} <= 0 at probe z = {z_bad:.6f}")
    om = (np.abs(fzb) / np.abs(fz)).T

    def omega_at(r, th):
        a, b = m.derivs_many(np.array([r * np.exp(1j * th)]))
        return float(np.abs(b[0]) / np.abs(a[0]))

    i, j = np.unravel_index(int(np.argmax(om)), om.shape)
    # refine the angle on the wrap-around grid, then the radius
    th_star, _ = refine_grid_max(lambda th: omega_at(radii[i], th), angles,
                                 om[i], wrap=TWO_PI)
    r_lo = radii[max(i - 1, 0)]
    r_hi = radii[min(i + 1, n_r - 1)]
    if r_hi > r_lo:
        r_star, val = golden_max(lambda r: omega_at(r, th_star), r_lo, r_hi)
    else:
        r_star, val = radii[i], omega_at(radii[i], th_star)
    omega_sup = max(float(np.max(om)), val)
    if omega_sup >= 1.0:
        raise NotSensePreserving(f"dilatation modulus {omega_sup} >= 1")
    K_lower = (1.0 + omega_sup) / (1.0 - omega_sup)
    return DilatationReport(omega_sup, K_lower, r_max, (n_r, grid))


def rescale(m, r0):
    """Map zeta -> f(r0 zeta); closed-form coefficient scaling when possible."""
    if not 0.0 < r0 < 1.0:
        raise MapSpecError("rescale radius must lie in (0, 1)")
    if isinstance(m, SeriesHarmonicMap):
        n_a = np.arange(m.analytic_coeffs.size)
        n_b = np.arange(1, m.antianalytic_coeffs.size + 1)
        return SeriesHarmonicMap(m.analytic_coeffs * r0 ** n_a,
                                 m.antianalytic_coeffs * r0 ** n_b)
    if isinstance(m, AffineHarmonicMap):
        return AffineHarmonicMap(m.c0, m.a * r0, m.b * r0)
    return RescaledHarmonicMap(m, r0)


def sup_modulus(m, r_max):
    """sup |f| over the circle |z| = r_max (grid plus golden refinement).

    |f| is subharmonic, so this also bounds |f| on the closed disk of
    radius r_max.
    """
    r_max = float(r_max)
    if not 0.0 < r_max <= m.max_radius:
        raise PointOutsideDisk(
            f"r_max must lie in (0, {m.max_radius}] for this map")
    angles = np.linspace(0.0, TWO_PI, 720, endpoint=False)
    vals = np.abs(eval_circle_grid(m, r_max, 720))

    def f1(th):
        return float(np.abs(m.eval_many(np.array([r_max * np.exp(1j * th)])))[0])

    _, v = refine_grid_max(f1, angles, vals, wrap=TWO_PI)
    return max(float(vals.max()), v)


def scale_range(m, c):
    """The map z -> c * f(z) for a nonzero complex factor c."""
    c = complex(c)
    if c == 0:
        raise MapSpecError("range scale factor must be nonzero")
    if isinstance(m, SeriesHarmonicMap):
        return SeriesHarmonicMap(c * m.analytic_coeffs,
                                 np.conj(c) * m.antianalytic_coeffs)
    if isinstance(m, AffineHarmonicMap):
        return AffineHarmonicMap(c * m.c0, c * m.a, c * m.b)
    if isinstance(m, PoissonHarmonicMap) and c.imag == 0.0 and c.real > 0.0:
        return PoissonHarmonicMap(c.real * m.scale, m.phi,
                                  kernel_tol=m.kernel_tol,
                                  max_panels=m.max_panels)
    raise MapSpecError(f"cannot scale range of {type(m).__name__} by {c}")


def rotate_domain(m, alpha):
    """The map z -> f(e^{i alpha} z)."""
    alpha = float(alpha)
    w = np.exp(1j * alpha)
    if isinstance(m, SeriesHarmonicMap):
        n_a = np.arange(m.analytic_coeffs.size)
        n_b = np.arange(1, m.antianalytic_coeffs.size + 1)
        return SeriesHarmonicMap(m.analytic_coeffs * w ** n_a,
                                 m.antianalytic_coeffs * w ** n_b)
    if isinstance(m, AffineHarmonicMap):
        return AffineHarmonicMap(m.c0, m.a * w, m.b * np.conj(w))
    if isinstance(m, PoissonHarmonicMap):
        # P(e^{i alpha} z, t) = P(z, t - alpha); substitute s = t - alpha
        phi = m.phi
        return PoissonHarmonicMap(m.scale, lambda t: phi(t + alpha),
                                  kernel_tol=m.kernel_tol,
                                  max_panels=m.max_panels)
    raise MapSpecError(f"cannot rotate domain of {type(m).__name__}")
