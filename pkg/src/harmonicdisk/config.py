"""Shared quadrature and sampling configuration."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and grid densities used across the geometry operations.

    boundary_radius is the proxy radius that replaces evaluation on the
    unit circle itself; operations clamp it further for maps that cannot
    be evaluated that close to the boundary, and report the radius they
    actually used.
    """

    abs_tol: float = 1e-9
    rel_tol: float = 1e-8
    max_subdivisions: int = 1 << 16
    theta_grid: int = 720
    boundary_radius: float = 1.0 - 1e-6

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 8:
            raise ValueError("max_subdivisions too small")
        if self.theta_grid < 8:
            raise ValueError("theta_grid too small")
        if not 0.0 < self.boundary_radius < 1.0:
            raise ValueError("boundary_radius must lie in (0, 1)")


DEFAULT_CONFIG = QuadratureConfig()


def effective_boundary_radius(cfg: QuadratureConfig, map_radius: float) -> float:
    """Boundary proxy radius actually usable for a given map."""
    return min(cfg.boundary_radius, map_radius)
