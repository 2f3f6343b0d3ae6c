"""Thomas-Fermi limit profile for the unit-mass quadratic trap.

The limiting density is the inverted parabola

    rho(x) = max(lambda^2 - |x|^2, 0),   lambda = (2/pi)^(1/4),

normalized so that the integral of rho over the plane is 1.  The
chemical-potential radius lambda is also the support radius.  Several
closed-form geometric quantities of rho are collected here because the
sharp-interface limit weighs interface length by rho^(3/2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import TF_RADIUS, Curve, Field, GridSpec, mesh


def tf_lambda() -> float:
    """Support radius lambda = (2/pi)^(1/4) of the unit-mass profile."""
    return TF_RADIUS


def rho_values(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """rho = max(lambda^2 - r^2, 0) at the given coordinates."""
    return np.maximum(TF_RADIUS**2 - (X * X + Y * Y), 0.0)


def tf_field(grid: GridSpec) -> Field:
    """The profile sampled on a grid."""
    X, Y = mesh(grid)
    return Field(grid, rho_values(X, Y))


@dataclass(frozen=True)
class TFDensity:
    """Bundled constants of the limiting density."""

    lam: float = TF_RADIUS

    def __call__(self, X, Y):
        return rho_values(np.asarray(X), np.asarray(Y))

    def field(self, grid: GridSpec) -> Field:
        return tf_field(grid)


def mass_disk(radius: float) -> float:
    """Mass of rho inside the centered disk of the given radius.

    Closed form pi * (lambda^2 R^2 - R^4 / 2) for R <= lambda, clamped
    to the total mass 1 beyond the support.
    """
    if radius < 0.0:
        raise ValueError("radius must be nonnegative")
    R = min(radius, TF_RADIUS)
    return float(np.pi * (TF_RADIUS**2 * R**2 - 0.5 * R**4))


def mass_radius(alpha: float) -> float:
    """Radius of the centered disk holding mass alpha of rho.

    Inverts mass_disk: with s = R^2 / lambda^2 the disk mass is
    2 s - s^2, so s = 1 - sqrt(1 - alpha) and
    R = lambda * sqrt(1 - sqrt(1 - alpha)).
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    return float(TF_RADIUS * np.sqrt(1.0 - np.sqrt(1.0 - alpha)))


def weighted_length(curve: Curve, nsub: int = 8) -> float:
    """Line integral of rho^(3/2) along the curve.

    Each polyline segment is split into nsub pieces and the midpoint
    rule is applied per piece; rho^(3/2) is smooth along segments except
    where the curve leaves the support, and the kink there is handled
    fine by the subdivision.
    """
    a, b = curve.segments()
    t = (np.arange(nsub) + 0.5) / nsub
    # midpoints of every sub-segment, shape (m_seg, nsub, 2)
    mid = a[:, None, :] + t[None, :, None] * (b - a)[:, None, :]
    seglen = np.hypot(*(b - a).T) / nsub
    dens = rho_values(mid[..., 0], mid[..., 1])
    return float(np.sum(seglen[:, None] * dens**1.5))
