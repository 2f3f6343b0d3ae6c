"""Symmetry breaking of the limiting interface energy.

All interface energies here are expressed in units of 8 sigma, where
sigma is the cell-problem constant.  In these units a circle enclosing
mass a costs f(a) = (1 - a)^(3/4) (1 - sqrt(1 - a))^(1/2), and the
two-sector (straight cut) configuration costs 3/16 regardless of how
the masses split.  Any radial arrangement of n annuli costs g_n, the
sum of f over the cumulative masses at its interfaces.  Comparing the
best radial value with the sector value decides whether the optimal
interface can be radially symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SECTOR_VALUE = 3.0 / 16.0


def f_alpha(alpha):
    """Cost, in 8 sigma units, of the circle enclosing mass alpha."""
    a = np.asarray(alpha, dtype=float)
    if np.any(a < 0.0) or np.any(a > 1.0):
        raise ValueError("mass fraction must lie in [0, 1]")
    out = (1.0 - a) ** 0.75 * (1.0 - np.sqrt(1.0 - a)) ** 0.5
    return float(out) if np.isscalar(alpha) else out


def sector_energy(alpha1: float) -> float:
    """Cost of splitting the disk into two sectors of masses alpha1, 1-alpha1.

    The interface consists of two full radii whatever the angle, so the
    value does not depend on the split.
    """
    if not 0.0 < alpha1 < 1.0:
        raise ValueError("alpha1 must lie in (0, 1)")
    return SECTOR_VALUE


@dataclass(frozen=True)
class RadialConfig:
    """Annular masses, innermost first, components alternating (odd
    entries are component 2, even entries component 1, 1-based)."""

    alpha1: float
    betas: tuple[float, ...]

    def __post_init__(self) -> None:
        b = tuple(float(x) for x in self.betas)
        if len(b) < 3 or len(b) % 2 == 0:
            raise ValueError("betas needs odd length >= 3")
        if any(x < 0.0 for x in b):
            raise ValueError("annular masses must be nonnegative")
        if abs(sum(b) - 1.0) > 1e-10:
            raise ValueError("annular masses must sum to 1")
        if abs(sum(b[1::2]) - self.alpha1) > 1e-10:
            raise ValueError("even-indexed masses must sum to alpha1")
        object.__setattr__(self, "betas", b)

    @property
    def n(self) -> int:
        return (len(self.betas) - 1) // 2


def g_n(config: RadialConfig) -> float:
    """Radial interface cost: f summed over the cumulative masses at the
    2n concentric interfaces."""
    partial = np.cumsum(config.betas[:-1])
    return float(np.sum(f_alpha(partial)))


def merge_zero(config: RadialConfig, index: int) -> RadialConfig:
    """Remove a vanished annulus (betas[index] == 0, 0-based interior
    index), joining its two like-component neighbours."""
    b = config.betas
    if not 1 <= index <= len(b) - 2:
        raise ValueError("only interior annuli can be merged away")
    if b[index] != 0.0:
        raise ValueError("merged annulus must have zero mass")
    merged = b[: index - 1] + (b[index - 1] + b[index + 1],) + b[index + 2 :]
    return RadialConfig(config.alpha1, merged)


@dataclass(frozen=True)
class SymmetryVerdict:
    alpha1: float
    sector: float
    radial_best: float
    radial_config: RadialConfig
    non_radial: bool


def best_radial(alpha1: float, n_max: int = 3, grid_steps: int = 200) -> SymmetryVerdict:
    """Minimum of g_n over all radial configurations with up to n_max
    annuli per component, masses on a uniform grid of grid_steps steps.

    Exhaustive minimization over the discretized constrained simplex,
    organized as a shortest-path scan over cumulative masses: state
    (j, s, a) = (interfaces placed, cumulative mass, cumulative
    component-1 mass), so doubling grid_steps refines the search space
    monotonically.  alpha1 must be representable on the grid.
    """
    if not 0.0 < alpha1 < 1.0:
        raise ValueError("alpha1 must lie in (0, 1)")
    if not 1 <= n_max <= 4:
        raise ValueError("n_max must lie in 1..4")
    if grid_steps < 50:
        raise ValueError("grid_steps must be at least 50")
    ka = alpha1 * grid_steps
    if abs(ka - round(ka)) > 1e-9:
        raise ValueError("alpha1 must be a multiple of 1/grid_steps")
    ka = int(round(ka))

    G = grid_steps
    fgrid = f_alpha(np.arange(G + 1) / G)
    inf = np.inf

    # V[s, a] = best partial cost with cumulative mass s/G of which a/G
    # is component 1; odd interfaces add unconstrained mass, even ones
    # add component-1 mass.
    V = np.full((G + 1, ka + 1), inf)
    V[0, 0] = 0.0
    layers = [V]
    best_val, best_n, best_state = inf, 0, None
    for j in range(1, 2 * n_max + 1):
        P = np.empty_like(V)
        if j % 2 == 1:
            np.minimum.accumulate(V, axis=0, out=P)
        else:
            P[0] = V[0]
            for s in range(1, G + 1):
                P[s, 0] = V[s, 0]
                P[s, 1:] = np.minimum(V[s, 1:], P[s - 1, :-1])
        V = P + fgrid[:, None]
        layers.append(V)
        if j % 2 == 0:
            n = j // 2
            col = V[:, ka]
            s_star = int(np.argmin(col))
            if col[s_star] < best_val - 1e-15:
                best_val, best_n, best_state = float(col[s_star]), n, s_star

    # recover the minimizing cumulative masses by backtracking
    s, a = best_state, ka
    cum = []
    for j in range(2 * best_n, 0, -1):
        cum.append(s)
        target = layers[j][s, a] - fgrid[s]
        prev = layers[j - 1]
        if j % 2 == 1:
            cand = prev[: s + 1, a]
            s = int(np.argmin(np.where(cand <= target + 1e-12, cand, inf)))
        else:
            t = np.arange(min(s, a) + 1)
            cand = prev[s - t, a - t]
            k = int(np.argmin(np.where(cand <= target + 1e-12, cand, inf)))
            s, a = s - t[k], a - t[k]
    cum = cum[::-1]
    edges = [0] + cum + [G]
    betas = tuple((b - a) / G for a, b in zip(edges, edges[1:]))
    sector = sector_energy(alpha1)
    return SymmetryVerdict(
        alpha1=alpha1,
        sector=sector,
        radial_best=best_val,
        radial_config=RadialConfig(alpha1, betas),
        non_radial=best_val > sector,
    )


def delta0(tol: float = 1e-12) -> float:
    """Imbalance threshold: for alpha1 within delta0 of 1/2 the sector
    value 3/16 beats the single circle, f(alpha) > 3/16.

    Found by bisecting f - 3/16 on [1/2, 1), where f is strictly
    decreasing (checked before bisecting); the threshold is 1 minus the
    root.  The value is independent of sigma since both sides carry the
    same 8 sigma unit.
    """
    samples = f_alpha(np.linspace(0.5, 1.0 - 1e-9, 4001))
    if not np.all(np.diff(samples) < 0.0):
        raise ArithmeticError("f is not strictly decreasing on [1/2, 1)")
    lo, hi = 0.5, 1.0 - 1e-15
    flo = f_alpha(lo) - SECTOR_VALUE
    if flo <= 0.0:
        raise ArithmeticError("f(1/2) should exceed 3/16")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f_alpha(mid) - SECTOR_VALUE > 0.0:
            lo = mid
        else:
            hi = mid
    return 1.0 - 0.5 * (lo + hi)
