"""Quadrature primitives against scipy and closed forms."""

import math

import numpy as np
import pytest
from scipy import integrate

from harmonicdisk import QuadratureNonconvergence
from harmonicdisk.quadrature import (adaptive_simpson, cumulative_simpson,
                                     fixed_simpson, golden_max,
                                     refine_grid_max)


def test_adaptive_simpson_polynomial_exact():
    # Simpson integrates cubics exactly; the extrapolated rule does quintics
    val, nodes = adaptive_simpson(lambda x: x ** 3 - 2.0 * x, 0.0, 2.0)
    assert abs(val - 0.0) < 1e-13
    assert nodes >= 17


def test_adaptive_simpson_matches_quad():
    # (integrand, a, b, tol); the cusped case needs a looser target
    cases = [
        (lambda x: np.exp(-x) * np.sin(5.0 * x), 0.0, 3.0, 1e-10),
        (lambda x: 1.0 / (1.0 + 25.0 * x * x), -1.0, 1.0, 1e-10),
        (lambda x: np.sqrt(np.abs(np.cos(x))), 0.0, 2.0 * np.pi, 1e-8),
    ]
    for f, a, b, tol in cases:
        want, err = integrate.quad(lambda x: float(f(np.array([x]))[0]),
                                   a, b, limit=200)
        got, _ = adaptive_simpson(f, a, b, abs_tol=tol, rel_tol=tol)
        assert abs(got - want) < 50.0 * tol + 10.0 * err


def test_adaptive_simpson_refuses_cusp_at_overtight_tolerance():
    # sqrt cusps exhaust the width floor before reaching 1e-12; the
    # kernel must raise rather than return an unconverged value
    with pytest.raises(QuadratureNonconvergence):
        adaptive_simpson(lambda x: np.sqrt(np.abs(np.cos(x))),
                         0.0, 2.0 * np.pi, abs_tol=1e-13, rel_tol=1e-13)


def test_adaptive_simpson_periodic_symmetry_not_fooled():
    # int sin is 0; a naive single-panel estimate would accept immediately
    val, _ = adaptive_simpson(np.sin, 0.0, 2.0 * np.pi)
    assert abs(val) < 1e-12
    val, _ = adaptive_simpson(lambda x: np.sin(x) ** 2, 0.0, 2.0 * np.pi)
    assert abs(val - np.pi) < 1e-10


def test_adaptive_simpson_rejects_reversed_interval():
    with pytest.raises(ValueError):
        adaptive_simpson(np.sin, 1.0, 0.0)


def test_adaptive_simpson_budget_exhaustion():
    rng = np.random.default_rng(7)
    jitter = rng.standard_normal(4096)

    def noisy(x):
        # white noise cannot satisfy the acceptance test at any depth
        idx = (np.abs(x) * 1e9).astype(int) % jitter.size
        return jitter[idx]

    with pytest.raises(QuadratureNonconvergence):
        adaptive_simpson(noisy, 0.0, 1.0, abs_tol=1e-12, rel_tol=1e-12,
                         max_subdivisions=256)


def test_adaptive_simpson_deterministic():
    f = lambda x: np.exp(np.sin(3.0 * x))  # noqa: E731
    a = adaptive_simpson(f, 0.0, 4.0)
    b = adaptive_simpson(f, 0.0, 4.0)
    assert a == b


def test_fixed_simpson_matches_adaptive():
    f = lambda x: np.cos(x) ** 4  # noqa: E731
    got = fixed_simpson(f, 0.0, np.pi, 512)
    want, _ = adaptive_simpson(f, 0.0, np.pi)
    assert abs(got - want) < 1e-10
    with pytest.raises(ValueError):
        fixed_simpson(f, 0.0, 1.0, 7)


def test_cumulative_simpson_against_scipy():
    h = 0.01
    x = h * np.arange(257)
    y = np.exp(np.cos(x))
    ours = cumulative_simpson(y, h)
    ref = integrate.cumulative_simpson(y, dx=h, initial=0.0)
    # our output reports every second node (panel-pair boundaries)
    assert ours.shape == (129,)
    np.testing.assert_allclose(ours, ref[::2], rtol=0.0, atol=1e-13)


def test_cumulative_simpson_axis_and_node_convention():
    h = 0.5
    xs = h * np.arange(9)
    vals = np.vstack([xs ** 2, 3.0 * xs ** 2])
    out = cumulative_simpson(vals, h)
    assert out.shape == (2, 5)
    assert out[0, 0] == 0.0
    # column k integrates up to node 2k: Simpson is exact on quadratics
    exact = xs ** 3 / 3.0
    np.testing.assert_allclose(out[0], exact[::2], atol=1e-12)
    np.testing.assert_allclose(out[1], 3.0 * exact[::2], atol=1e-12)
    with pytest.raises(ValueError):
        cumulative_simpson(np.zeros(8), h)


def test_golden_max_parabola():
    # argmax of a smooth peak is only locatable to sqrt(eps); the value
    # itself is flat there and lands much closer
    x, v = golden_max(lambda x: -(x - 0.3) ** 2 + 2.0, -1.0, 1.0)
    assert abs(x - 0.3) < 1e-6
    assert abs(v - 2.0) < 1e-14


def test_refine_grid_max_wraps():
    # maximizer of cos(t - 0.2) sits near t = 0.2, against the grid seam
    f = lambda t: math.cos(t - 0.2)  # noqa: E731
    xs = np.linspace(0.0, 2.0 * np.pi, 16, endpoint=False)
    x, v = refine_grid_max(f, xs, wrap=2.0 * np.pi)
    assert abs(math.cos(x - 0.2) - 1.0) < 1e-12
    assert abs(v - 1.0) < 1e-12


def test_refine_grid_max_interior_no_wrap():
    f = lambda x: -(x - 2.5) ** 2  # noqa: E731
    xs = np.linspace(0.0, 5.0, 11)
    x, v = refine_grid_max(f, xs)
    assert abs(x - 2.5) < 1e-8
