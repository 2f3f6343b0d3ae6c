"""Two-component condensate energy and its constrained minimization.

The energy of a pair of real nonnegative wave functions is

    E2(u1, u2) = E_eps(u1) + E_eps(u2) + (g/2) * int u1^2 u2^2,

minimized under the separate mass constraints int u_i^2 = alpha_i.
For g * eps^2 > 1 the coupling dominates the self-interaction and
minimizers segregate: the components occupy complementary regions
separated by an interface whose cost is the subject of the
sharp-interface module.

The flow reuses the semi-implicit scheme of the single-component
solver, with one Rayleigh shift and one mass projection per component.
Because the gradient flow is local, the converged pair depends on the
initial basin; callers choose it through InitKind.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.ndimage import gaussian_filter

from .grid import Field, GridSpec, integrate_values, load_field, mesh, quad_weights
from .ground_state import (
    ConvergenceError,
    DirichletSolver,
    GroundState,
    Params,
    _interior_laplacian,
    _trap_values,
    dirichlet_grad_energy,
)
from .thomas_fermi import TF_RADIUS, rho_values


@dataclass(frozen=True)
class HalfDisk:
    """Plant the components on the two halves of the support (split at x=0)."""


@dataclass(frozen=True)
class DiskAnnulus:
    """Plant component 1 on the disk of the given radius, component 2 outside."""

    radius: float

    def __post_init__(self) -> None:
        if not 0.0 < self.radius < TF_RADIUS:
            raise ValueError("disk radius must lie in (0, lambda)")


@dataclass(frozen=True)
class Random:
    """Smooth positive random profiles; seed falls back to Params.seed."""

    seed: int | None = None


@dataclass(frozen=True)
class FromFiles:
    """Load both components from field dumps on the same grid."""

    paths: tuple[str, str]


InitKind = Union[HalfDisk, DiskAnnulus, Random, FromFiles]


@dataclass(frozen=True, eq=False)
class CondensatePair:
    """Converged constrained pair and its diagnostics."""

    u1: Field
    u2: Field
    masses: tuple[float, float]
    energy: float
    residual: float
    iterations: int
    params: Params


def _pair_energy_values(
    grid: GridSpec, v1: np.ndarray, v2: np.ndarray, eps: float, g: float, V: np.ndarray
) -> float:
    ieps2 = 1.0 / eps**2
    a, b = v1 * v1, v2 * v2
    dens = (0.5 * ieps2) * V * (a + b) + (0.25 * ieps2) * (a * a + b * b) + (0.5 * g) * a * b
    return (
        dirichlet_grad_energy(grid, v1)
        + dirichlet_grad_energy(grid, v2)
        + integrate_values(grid, dens)
    )


def energy_two(u1: Field, u2: Field, p: Params) -> float:
    """E_eps(u1) + E_eps(u2) + (g/2) int u1^2 u2^2 on p.grid."""
    if u1.grid != p.grid or u2.grid != p.grid:
        raise ValueError("fields must live on p.grid")
    return _pair_energy_values(p.grid, u1.values, u2.values, p.eps, p.g, _trap_values(p.grid))


def overlap(pair: CondensatePair) -> float:
    """Segregation diagnostic int u1^2 u2^2."""
    return integrate_values(pair.u1.grid, pair.u1.values**2 * pair.u2.values**2)


def _smoothstep(t: np.ndarray) -> np.ndarray:
    return 0.5 * (1.0 + np.tanh(t))


def _project(grid: GridSpec, v: np.ndarray, mass: float) -> np.ndarray:
    q = integrate_values(grid, v * v)
    if q <= 0.0:
        raise ZeroDivisionError("component lost all mass during initialization or flow")
    return v * np.sqrt(mass / q)


def build_init(p: Params, init: InitKind) -> tuple[np.ndarray, np.ndarray]:
    """Initial pair for the flow: positive, mass-projected, zero on the edge."""
    grid = p.grid
    X, Y = mesh(grid)
    root = np.sqrt(rho_values(X, Y))
    w = 4.0 * grid.h

    if isinstance(init, HalfDisk):
        v1 = root * _smoothstep(X / w)
        v2 = root * _smoothstep(-X / w)
    elif isinstance(init, DiskAnnulus):
        r = np.hypot(X, Y)
        v1 = root * _smoothstep((init.radius - r) / w)
        v2 = root * _smoothstep((r - init.radius) / w)
    elif isinstance(init, Random):
        seed = p.seed if init.seed is None else init.seed
        rng = np.random.default_rng(seed)
        sigma = grid.n / 16.0
        v1 = root * (np.abs(1.0 + 0.5 * gaussian_filter(rng.standard_normal(root.shape), sigma)) + 0.05)
        v2 = root * (np.abs(1.0 + 0.5 * gaussian_filter(rng.standard_normal(root.shape), sigma)) + 0.05)
    elif isinstance(init, FromFiles):
        f1, f2 = (load_field(path) for path in init.paths)
        if f1.grid != grid or f2.grid != grid:
            raise ValueError("loaded fields do not match p.grid")
        v1, v2 = np.abs(f1.values), np.abs(f2.values)
    else:
        raise TypeError(f"unknown init kind: {init!r}")

    v1 = v1.copy()
    v2 = v2.copy()
    v1[0, :] = v1[-1, :] = v1[:, 0] = v1[:, -1] = 0.0
    v2[0, :] = v2[-1, :] = v2[:, 0] = v2[:, -1] = 0.0
    return _project(grid, v1, p.alpha1), _project(grid, v2, p.alpha2)


def minimize_two(
    p: Params, init: InitKind, energy_trace: list | None = None
) -> CondensatePair:
    """Constrained minimizer of the pair energy by projected gradient flow.

    Diffusion implicit per component, reaction and coupling explicit with
    per-component Rayleigh shifts; absolute value and the two mass
    projections after every step keep the iterates feasible.  Stops when
    the projected gradient sup-norm over both components drops to p.tol.
    """
    grid = p.grid
    h = grid.h
    ieps2 = 1.0 / p.eps**2
    V = _trap_values(grid)
    W = quad_weights(grid)
    Wi = W[1:-1, 1:-1]
    solver = DirichletSolver(grid)

    v1, v2 = build_init(p, init)
    energy = _pair_energy_values(grid, v1, v2, p.eps, p.g, V)
    if energy_trace is not None:
        energy_trace.append(energy)

    rate = float(
        max(
            np.max(ieps2 * (V + 3.0 * v1 * v1) + p.g * v2 * v2),
            np.max(ieps2 * (V + 3.0 * v2 * v2) + p.g * v1 * v1),
        )
    )
    dt = 1.0 / rate
    dt_cap = 64.0 / rate

    residual = np.inf
    since_grow = 0
    for it in range(1, p.max_iters + 1):
        a, b = v1 * v1, v2 * v2
        N1 = (ieps2 * (V + a) + p.g * b) * v1
        N2 = (ieps2 * (V + b) + p.g * a) * v2
        G1 = -_interior_laplacian(v1, h) + N1[1:-1, 1:-1]
        G2 = -_interior_laplacian(v2, h) + N2[1:-1, 1:-1]
        mu1 = float(np.sum(Wi * G1 * v1[1:-1, 1:-1]) / np.sum(W * a))
        mu2 = float(np.sum(Wi * G2 * v2[1:-1, 1:-1]) / np.sum(W * b))
        r1 = float(np.max(np.abs(G1 - mu1 * v1[1:-1, 1:-1])))
        r2 = float(np.max(np.abs(G2 - mu2 * v2[1:-1, 1:-1])))
        residual = max(r1, r2)
        if residual <= p.tol:
            return _finish(p, v1, v2, residual, it - 1)

        rhs1 = v1[1:-1, 1:-1] - dt * (N1[1:-1, 1:-1] - mu1 * v1[1:-1, 1:-1])
        rhs2 = v2[1:-1, 1:-1] - dt * (N2[1:-1, 1:-1] - mu2 * v2[1:-1, 1:-1])
        n1 = np.zeros_like(v1)
        n2 = np.zeros_like(v2)
        n1[1:-1, 1:-1] = solver.solve(rhs1, dt)
        n2[1:-1, 1:-1] = solver.solve(rhs2, dt)
        np.abs(n1, out=n1)
        np.abs(n2, out=n2)
        n1 = _project(grid, n1, p.alpha1)
        n2 = _project(grid, n2, p.alpha2)
        new_energy = _pair_energy_values(grid, n1, n2, p.eps, p.g, V)

        if new_energy > energy + 1e-13 * (1.0 + abs(energy)):
            if dt < 1e-12 / rate:
                raise ConvergenceError(
                    "pair flow stalled: energy rises at vanishing step", residual
                )
            dt *= 0.5
            since_grow = 0
            continue

        v1, v2 = n1, n2
        energy = new_energy
        if energy_trace is not None:
            energy_trace.append(energy)
        since_grow += 1
        if since_grow >= 50 and dt < dt_cap:
            dt = min(1.5 * dt, dt_cap)
            since_grow = 0

    raise ConvergenceError(
        f"pair flow did not reach tol {p.tol:g} in {p.max_iters} iterations", residual
    )


def _finish(
    p: Params, v1: np.ndarray, v2: np.ndarray, residual: float, iters: int
) -> CondensatePair:
    m1 = integrate_values(p.grid, v1 * v1)
    m2 = integrate_values(p.grid, v2 * v2)
    f1, f2 = Field(p.grid, v1), Field(p.grid, v2)
    return CondensatePair(
        u1=f1,
        u2=f2,
        masses=(m1, m2),
        energy=energy_two(f1, f2, p),
        residual=residual,
        iterations=iters,
        params=p,
    )


def scaled_excess(pair: CondensatePair, gs: GroundState, p: Params) -> float:
    """eps * (pair energy - reference ground-state energy).

    This is the quantity whose eps -> 0 limit is the weighted interface
    perimeter; it is nonnegative up to discretization slack because the
    reference profile minimizes the decoupled part over unit total mass.
    """
    return p.eps * (pair.energy - gs.energy)
