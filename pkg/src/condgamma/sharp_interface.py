"""Sharp-interface limit: cell problem, limiting energy, recovery pairs.

As eps -> 0 (with g eps^2 -> infinity) the scaled excess energy of a
segregated pair concentrates on the interface between the components
and converges to a weighted perimeter

    F = 2 * sigma * int_interface rho^(3/2) dH^1.

This module provides the pieces of that statement that have runtime
content: the 1D cell problem fixing the constant sigma, the limiting
functional on parametric interfaces, an explicit recovery construction
(tanh transition with a density floor and a phase ramp, plus an exact
numerical mass repair), marching-squares interface extraction, and the
epsilon-sweep experiment comparing minimizer excess against the
prediction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.linalg import solve_banded
from skimage import measure

from .grid import (
    Curve,
    Field,
    GridSpec,
    _inside_parity,
    _segment_distance,
    integrate_values,
    mesh,
)
from .ground_state import ConvergenceError, GroundState, Params, solve_eta
from .spin import SpinPair, ETA_FLOOR, decompose, from_spin, interface_min_v, to_spin
from .thomas_fermi import TF_RADIUS, mass_disk, rho_values, weighted_length
from .two_component import InitKind, minimize_two

PAPER_SIGMA = math.sqrt(2.0) / 3.0


# ---------------------------------------------------------------------------
# 1D cell problem


@dataclass(frozen=True, eq=False)
class CellProblemResult:
    """Minimum of the 1D transition functional and its minimizer."""

    sigma_eff: float
    profile: np.ndarray
    paper_sigma: float = PAPER_SIGMA

    def __post_init__(self) -> None:
        prof = np.asarray(self.profile, dtype=float)
        object.__setattr__(self, "profile", prof)
        if not self.sigma_eff > 0.0:
            raise ValueError("cell minimum must be positive")


def _cell_energy(w: np.ndarray, h: float, rho: float) -> float:
    grad = np.diff(w) / h
    pot = 0.5 * rho * rho * (1.0 - w * w) ** 2
    return 0.5 * rho * h * float(np.sum(grad * grad)) + h * float(
        np.sum(pot) - 0.5 * (pot[0] + pot[-1])
    )


def cell_oracle(
    n: int,
    length: float,
    rho: float = 1.0,
    tol: float = 1e-10,
    max_iters: int = 400_000,
) -> CellProblemResult:
    """Minimum of (1/2) int rho (w')^2 + (1/2) int rho^2 (1 - w^2)^2.

    Computed on [0, length] with w(0) = 0, w(length) = 1 by a
    semi-implicit gradient flow on n+1 nodes (diffusion implicit via a
    tridiagonal solve, double-well force explicit).  The minimum for
    weight rho is the weight-1 value scaled by rho^(3/2); callers use
    rho = 1 to fix the constant.
    """
    if n < 1000:
        raise ValueError("cell grid needs n >= 1000")
    if length < 10.0:
        raise ValueError("cell domain needs length >= 10")
    if not rho > 0.0:
        raise ValueError("weight rho must be positive")

    h = length / n
    t = np.linspace(0.0, length, n + 1)
    w = np.minimum(t * math.sqrt(rho) / 3.0, 1.0)

    rate = 6.0 * rho * rho
    dt = 1.0 / rate
    dt_cap = 256.0 / rate

    # (I - dt rho D2) on interior nodes, Dirichlet ends.
    def banded(dt_: float) -> np.ndarray:
        ab = np.zeros((3, n - 1))
        ab[0, 1:] = -dt_ * rho / h**2
        ab[1, :] = 1.0 + 2.0 * dt_ * rho / h**2
        ab[2, :-1] = -dt_ * rho / h**2
        return ab

    ab = banded(dt)
    energy = _cell_energy(w, h, rho)
    since_grow = 0
    for it in range(1, max_iters + 1):
        interior = w[1:-1]
        force = -2.0 * rho * rho * interior * (1.0 - interior * interior)
        lap = (w[2:] + w[:-2] - 2.0 * interior) / h**2
        grad = -rho * lap + force
        residual = float(np.max(np.abs(grad)))
        if residual <= tol:
            return CellProblemResult(sigma_eff=_cell_energy(w, h, rho), profile=w)

        rhs = interior - dt * force
        rhs[-1] += dt * rho / h**2  # w(length) = 1 boundary term
        new = w.copy()
        new[1:-1] = solve_banded((1, 1), ab, rhs)
        np.clip(new, 0.0, 1.0, out=new)
        new_energy = _cell_energy(new, h, rho)
        if new_energy > energy + 1e-14 * (1.0 + abs(energy)):
            dt *= 0.5
            ab = banded(dt)
            since_grow = 0
            continue
        w = new
        energy = new_energy
        since_grow += 1
        if since_grow >= 100 and dt < dt_cap:
            dt = min(2.0 * dt, dt_cap)
            ab = banded(dt)
            since_grow = 0

    raise ConvergenceError(
        f"cell flow did not reach tol {tol:g} in {max_iters} iterations", residual
    )


# ---------------------------------------------------------------------------
# Parametric interfaces and the limiting functional

_CIRCLE_POINTS = 4096


def _circle_curve(radius: float) -> Curve:
    th = np.linspace(0.0, 2.0 * np.pi, _CIRCLE_POINTS, endpoint=False)
    return Curve(radius * np.column_stack([np.cos(th), np.sin(th)]), closed=True)


def _clustered(n: int) -> np.ndarray:
    """Nodes on [0, 1] quadratically clustered at 1, where the weight
    rho^(3/2) has a square-root derivative blowup."""
    return np.sin(np.linspace(0.0, 0.5 * np.pi, n))


@dataclass(frozen=True)
class Diameter:
    """Straight interface through the center; A is the left side of the ray."""

    angle: float = 0.5 * math.pi


@dataclass(frozen=True)
class DiskSector:
    """Angular sectors with the given mass fractions, alternating components."""

    fractions: tuple[float, ...]

    def __post_init__(self) -> None:
        f = tuple(float(x) for x in self.fractions)
        if len(f) < 2 or any(x <= 0.0 for x in f) or abs(sum(f) - 1.0) > 1e-12:
            raise ValueError("fractions must be positive and sum to 1")
        object.__setattr__(self, "fractions", f)


@dataclass(frozen=True)
class Circle:
    """Circular interface; component 1 fills the inside disk."""

    radius: float

    def __post_init__(self) -> None:
        if not 0.0 < self.radius <= TF_RADIUS:
            raise ValueError("circle radius must lie in (0, lambda]")


@dataclass(frozen=True)
class Annuli:
    """Concentric circles; regions alternate components, innermost is 1."""

    radii: tuple[float, ...]

    def __post_init__(self) -> None:
        r = tuple(float(x) for x in self.radii)
        if not r or any(b <= a for a, b in zip(r, r[1:])) or not (
            0.0 < r[0] and r[-1] <= TF_RADIUS
        ):
            raise ValueError("radii must be strictly increasing in (0, lambda]")
        object.__setattr__(self, "radii", r)


@dataclass(frozen=True)
class Polyline:
    """Arbitrary closed interface; A is the inside (even-odd rule)."""

    curve: Curve

    def __post_init__(self) -> None:
        if not self.curve.closed:
            raise ValueError("polyline interface must be a closed curve")


InterfaceSpec = Union[Diameter, DiskSector, Circle, Annuli, Polyline]


def interface_curves(spec: InterfaceSpec) -> list[Curve]:
    """The interface of the spec as polylines (clipped to the support)."""
    lam = TF_RADIUS
    if isinstance(spec, Diameter):
        u = np.array([math.cos(spec.angle), math.sin(spec.angle)])
        t = lam * np.concatenate([-_clustered(1025)[::-1], _clustered(1025)[1:]])
        return [Curve(np.outer(t, u), closed=False)]
    if isinstance(spec, DiskSector):
        cuts = 2.0 * np.pi * np.cumsum((0.0,) + spec.fractions[:-1])
        r = lam * _clustered(1025)
        return [
            Curve(np.outer(r, [math.cos(a), math.sin(a)]), closed=False)
            for a in cuts
        ]
    if isinstance(spec, Circle):
        return [_circle_curve(spec.radius)]
    if isinstance(spec, Annuli):
        return [_circle_curve(r) for r in spec.radii]
    if isinstance(spec, Polyline):
        return [spec.curve]
    raise TypeError(f"unknown interface spec: {spec!r}")


def spec_weighted_length(spec: InterfaceSpec) -> float:
    return sum(weighted_length(c) for c in interface_curves(spec))


def mass_in_region(spec: InterfaceSpec, grid: GridSpec | None = None) -> float:
    """Mass of the reference parabola inside A = {phi = pi}."""
    if isinstance(spec, Diameter):
        return 0.5
    if isinstance(spec, DiskSector):
        return float(sum(spec.fractions[1::2]))
    if isinstance(spec, Circle):
        return 1.0 - mass_disk(spec.radius)
    if isinstance(spec, Annuli):
        edges = (0.0,) + spec.radii + (TF_RADIUS,)
        shells = [mass_disk(b) - mass_disk(a) for a, b in zip(edges, edges[1:])]
        return float(sum(shells[1::2]))
    if isinstance(spec, Polyline):
        if grid is None:
            raise ValueError("polyline mass needs a grid for quadrature")
        d, _ = signed_geometry(spec, grid)
        X, Y = mesh(grid)
        return integrate_values(grid, rho_values(X, Y) * (d > 0.0))
    raise TypeError(f"unknown interface spec: {spec!r}")


def limit_energy(spec: InterfaceSpec, sigma: float) -> float:
    """Limiting interface energy 2 sigma int rho^(3/2) dH^1."""
    if not sigma > 0.0:
        raise ValueError("sigma must be positive")
    return 2.0 * sigma * spec_weighted_length(spec)


def signed_geometry(
    spec: InterfaceSpec, grid: GridSpec
) -> tuple[np.ndarray, np.ndarray]:
    """Signed distance to the interface (positive in A) and rho at the
    nearest interface point, on the grid nodes."""
    X, Y = mesh(grid)
    lam2 = TF_RADIUS**2
    if isinstance(spec, Diameter):
        u = np.array([math.cos(spec.angle), math.sin(spec.angle)])
        nu = np.array([-u[1], u[0]])
        d = X * nu[0] + Y * nu[1]
        # nearest point on the diameter segment: projection clamped to it
        tproj = np.clip(X * u[0] + Y * u[1], -TF_RADIUS, TF_RADIUS)
        rho_hat = np.maximum(lam2 - tproj * tproj, 0.0)
        return d, rho_hat
    if isinstance(spec, Circle):
        r = np.hypot(X, Y)
        return r - spec.radius, np.full_like(X, lam2 - spec.radius**2)
    if isinstance(spec, Annuli):
        r = np.hypot(X, Y)
        radii = np.asarray(spec.radii)
        dists = np.abs(r[..., None] - radii)
        nearest = np.argmin(dists, axis=-1)
        d = np.min(dists, axis=-1)
        region = np.searchsorted(radii, r, side="right")
        inside = region % 2 == 1
        rho_hat = lam2 - radii[nearest] ** 2
        return np.where(inside, d, -d), rho_hat
    if isinstance(spec, DiskSector):
        cuts = 2.0 * np.pi * np.cumsum((0.0,) + spec.fractions[:-1])
        curves = interface_curves(spec)
        d = np.full(X.shape, np.inf)
        fx = np.zeros_like(X)
        fy = np.zeros_like(Y)
        for c in curves:
            dc, cx, cy = _segment_distance(X, Y, c, want_feet=True)
            closer = dc < d
            fx = np.where(closer, cx, fx)
            fy = np.where(closer, cy, fy)
            d = np.where(closer, dc, d)
        theta = np.mod(np.arctan2(Y, X), 2.0 * np.pi)
        sector = np.searchsorted(cuts, theta, side="right") - 1
        inside = sector % 2 == 1
        rho_hat = np.maximum(lam2 - (fx * fx + fy * fy), 0.0)
        return np.where(inside, d, -d), rho_hat
    if isinstance(spec, Polyline):
        d, fx, fy = _segment_distance(X, Y, spec.curve, want_feet=True)
        inside = _inside_parity(X, Y, spec.curve)
        rho_hat = np.maximum(lam2 - (fx * fx + fy * fy), 0.0)
        return np.where(inside, d, -d), rho_hat
    raise TypeError(f"unknown interface spec: {spec!r}")


# ---------------------------------------------------------------------------
# Recovery construction


@dataclass(frozen=True)
class ProfileSpec:
    """Parameters of the glued transition profile."""

    T: float
    m_eps: float
    t_eps: float
    rho_local: float

    def __post_init__(self) -> None:
        if not self.T > 1.0:
            raise ValueError("matching point T must exceed 1")
        if not 0.0 < self.m_eps < 1.0:
            raise ValueError("floor m_eps must lie in (0, 1)")
        if abs(self.t_eps - math.atanh(self.m_eps)) > 1e-12:
            raise ValueError("t_eps must equal arctanh(m_eps)")
        if not self.rho_local >= 0.0:
            raise ValueError("rho_local must be nonnegative")


def default_T(eps: float) -> float:
    """Outer matching point tied to eps: T = max(2, |ln eps|)."""
    return max(2.0, abs(math.log(eps)))


def profile_values(s: np.ndarray, m_eps: float, T: float) -> np.ndarray:
    """The glued transition profile at stretched distances s >= 0.

    Flat floor m_eps up to t_eps = arctanh(m_eps), then tanh, then the
    C^1 cubic bridge on [T, T + 1/T] reaching 1 with zero slope.
    """
    t_eps = math.atanh(m_eps)
    s = np.asarray(s, dtype=float)
    out = np.ones_like(s)
    out[s < t_eps] = m_eps
    mid = (s >= t_eps) & (s < T)
    out[mid] = np.tanh(s[mid])

    # cubic Hermite data at T and T + 1/T
    a, b = T, T + 1.0 / T
    fa, dfa = math.tanh(T), 1.0 / math.cosh(T) ** 2
    bridge = (s >= a) & (s < b)
    if np.any(bridge):
        x = (s[bridge] - a) / (b - a)
        h00 = (1.0 + 2.0 * x) * (1.0 - x) ** 2
        h10 = x * (1.0 - x) ** 2
        h01 = x * x * (3.0 - 2.0 * x)
        out[bridge] = fa * h00 + dfa * (b - a) * h10 + h01
    return out


def _kappa_bump(grid: GridSpec, center: tuple[float, float], radius: float) -> np.ndarray:
    """C^1 bump: 1 inside half the radius, cubic taper to 0 at the radius."""
    X, Y = mesh(grid)
    t = np.hypot(X - center[0], Y - center[1]) / radius
    out = np.zeros_like(t)
    out[t <= 0.5] = 1.0
    ramp = (t > 0.5) & (t < 1.0)
    u = 2.0 * t[ramp] - 1.0
    out[ramp] = 1.0 - u * u * (3.0 - 2.0 * u)
    return out


def build_recovery(
    spec: InterfaceSpec,
    p: Params,
    T: float | None = None,
    gs: GroundState | None = None,
) -> SpinPair:
    """Near-optimal spin pair concentrating its cost on the spec interface.

    v rides the glued profile of the stretched distance
    sqrt(rho(xhat)/2) |d| / eps; phi ramps linearly from 0 to pi across a
    band of width 2 eps t_tilde.  The pair is then repaired to satisfy
    the two mass identities exactly: v is scaled by c and a C^1 bump of
    amplitude ell is added in the bulk of A, with (c, ell) solved in
    closed form (both constraints are quadratics in ell).
    """
    if T is None:
        T = default_T(p.eps)
    if gs is None:
        gs = solve_eta(p)
    grid = p.grid

    target = p.alpha1 - p.alpha2
    mass_a = mass_in_region(spec, grid)
    # analytic masses must match exactly; quadrature (Polyline) only to O(h)
    slack = 10.0 * grid.h if isinstance(spec, Polyline) else 1e-8
    if abs(mass_a - p.alpha2) > slack:
        raise ValueError(
            f"spec is not mass-feasible: region A holds {mass_a:.6f}, needs {p.alpha2:.6f}"
        )

    m_eps = (p.g * p.eps**2) ** -0.25
    t_eps = math.atanh(m_eps)
    t_tilde = math.sqrt(2.0 / TF_RADIUS) * t_eps

    d, rho_hat = signed_geometry(spec, grid)
    s = np.sqrt(0.5 * rho_hat) * np.abs(d) / p.eps
    v0 = profile_values(s, m_eps, T)
    phi = np.clip(0.5 * np.pi * (1.0 + d / (p.eps * t_tilde)), 0.0, np.pi)

    # mass repair: v = c (v0 + ell kappa), kappa supported deep inside A.
    # Depth alone can peak outside the condensate (A may be unbounded),
    # so weight it by eta^2 to land the bump where it can move mass.
    eta2 = gs.eta.values ** 2
    idx = np.unravel_index(np.argmax(np.maximum(d, 0.0) * eta2), d.shape)
    X, Y = mesh(grid)
    center = (float(X[idx]), float(Y[idx]))
    radius = 0.5 * float(d[idx])
    if radius <= grid.h:
        raise ValueError("region A is too thin for the repair bump")
    kappa = _kappa_bump(grid, center, radius)

    cphi = np.cos(phi)
    q0 = integrate_values(grid, eta2 * v0 * v0)
    q1 = integrate_values(grid, eta2 * v0 * kappa)
    q2 = integrate_values(grid, eta2 * kappa * kappa)
    b0 = integrate_values(grid, eta2 * v0 * v0 * cphi)
    b1 = integrate_values(grid, eta2 * v0 * kappa * cphi)
    b2 = integrate_values(grid, eta2 * kappa * kappa * cphi)

    # int eta^2 v^2 cos(phi) / int eta^2 v^2 = target, quadratic in ell
    ca = b2 - target * q2
    cb = 2.0 * (b1 - target * q1)
    cc = b0 - target * q0
    if ca == 0.0:
        if cb == 0.0:
            raise ValueError(
                f"mass repair is degenerate: achieved imbalance {b0 / q0:.6f}, "
                f"target {target:.6f}"
            )
        roots = [-cc / cb]
    else:
        disc = cb * cb - 4.0 * ca * cc
        if disc < 0.0:
            raise ValueError(
                f"mass repair has no real solution: achieved imbalance "
                f"{b0 / q0:.6f}, target {target:.6f}"
            )
        sq = math.sqrt(disc)
        roots = [(-cb - sq) / (2.0 * ca), (-cb + sq) / (2.0 * ca)]
    ell = min(roots, key=abs)
    amp2 = q0 + 2.0 * ell * q1 + ell * ell * q2
    if amp2 <= 0.0:
        raise ValueError("mass repair collapsed the total density")
    c = amp2**-0.5

    v = c * (v0 + ell * kappa)
    mask = gs.eta.values > ETA_FLOOR
    return SpinPair(v=Field(grid, v), phi=Field(grid, phi), mask=mask)


def transect_f_energy(eps: float, m_eps: float, T: float, rho0: float,
                      n: int = 40_001) -> float:
    """eps times the 1D transition energy of the recovery profile.

    Integrates (1/2) rho0 (v')^2 + 1/(4 eps^2) rho0^2 (1 - v^2)^2 along
    the interface normal with v(t) = profile(sqrt(rho0/2) |t| / eps),
    over a window wide enough to contain the glued profile support.
    """
    half = 1.2 * (T + 1.0 / T) * eps * math.sqrt(2.0 / rho0)
    t = np.linspace(-half, half, n)
    v = profile_values(np.sqrt(0.5 * rho0) * np.abs(t) / eps, m_eps, T)
    dv = np.gradient(v, t)
    dens = 0.5 * rho0 * dv * dv + 0.25 / eps**2 * rho0 * rho0 * (1.0 - v * v) ** 2
    return eps * float(np.trapezoid(dens, t))


# ---------------------------------------------------------------------------
# Interface extraction and the trend experiment


def extract_interface(phi: Field, level: float = 0.5 * math.pi) -> Curve:
    """Longest marching-squares contour of {phi = level} as a polyline.

    Contour coordinates are fractional grid indices, converted to
    physical coordinates; a contour whose endpoints coincide is closed.
    """
    vals = phi.values
    if not (np.min(vals) < level < np.max(vals)):
        raise ValueError(f"phi does not cross the level {level}")
    contours = measure.find_contours(vals, level)
    if not contours:
        raise ValueError(f"no contour found at level {level}")

    grid = phi.grid

    def to_xy(c: np.ndarray) -> np.ndarray:
        return -grid.half_width + c * grid.h

    def arclen(c: np.ndarray) -> float:
        return float(np.sum(np.hypot(*np.diff(c, axis=0).T)))

    best = max(contours, key=arclen)
    pts = to_xy(best)
    closed = bool(np.all(pts[0] == pts[-1]))
    if closed:
        pts = pts[:-1]
    keep = np.ones(len(pts), dtype=bool)
    keep[1:] = np.any(pts[1:] != pts[:-1], axis=1)
    return Curve(pts[keep], closed=closed)


def clip_to_disk(curve: Curve, radius: float) -> Curve:
    """Longest run of consecutive curve points inside the given radius."""
    pts = curve.points
    inside = np.hypot(pts[:, 0], pts[:, 1]) <= radius
    if np.all(inside):
        return curve
    if not np.any(inside):
        raise ValueError("curve lies entirely outside the clipping disk")
    # find the longest contiguous inside run, treating closed curves cyclically
    idx = np.arange(len(pts))
    if curve.closed:
        inside2 = np.concatenate([inside, inside])
        idx2 = np.concatenate([idx, idx])
    else:
        inside2, idx2 = inside, idx
    best_start = best_len = cur_start = cur_len = 0
    for k, flag in enumerate(inside2):
        if flag:
            if cur_len == 0:
                cur_start = k
            cur_len += 1
            if cur_len > best_len and cur_len <= len(pts):
                best_start, best_len = cur_start, cur_len
        else:
            cur_len = 0
    take = idx2[best_start : best_start + best_len]
    if len(take) < 2:
        raise ValueError("clipped interface has fewer than 2 points")
    return Curve(pts[take], closed=False)


def grid_for_eps(eps: float, half_width: float, n_cap: int) -> GridSpec:
    """Smallest multiple-of-32 grid resolving the healing length (h <= eps/2)."""
    need = int(math.ceil(2.0 * half_width / (0.5 * eps) + 1.0))
    n = max(64, 32 * int(math.ceil(need / 32.0)))
    return GridSpec(min(n, n_cap), half_width)


@dataclass(frozen=True)
class TrendRow:
    eps: float
    g: float
    excess: float
    prediction: float
    ratio: float
    interface_length: float
    min_v: float


@dataclass(frozen=True, eq=False)
class TrendReport:
    rows: tuple[TrendRow, ...]
    sigma_eff: float
    mode: str


def gamma_trend(
    spec_init: InitKind,
    eps_list: list[float],
    p0: Params,
    mode: str = "minimize",
    recovery_spec: InterfaceSpec | None = None,
    sigma_eff: float | None = None,
) -> TrendReport:
    """Scaled excess against the weighted-perimeter prediction over an
    eps sweep with g eps^2 held fixed.

    In minimize mode each row comes from a gradient-flow minimizer with
    the given init; in recovery mode from the explicit recovery pair on
    recovery_spec.  The prediction uses the extracted interface of the
    produced pair, weighted by rho^(3/2) and scaled by 2 sigma_eff.
    """
    if len(eps_list) < 3 or any(b >= a for a, b in zip(eps_list, eps_list[1:])):
        raise ValueError("eps_list must be decreasing with at least 3 entries")
    if mode not in ("minimize", "recovery"):
        raise ValueError("mode must be 'minimize' or 'recovery'")
    if mode == "recovery" and recovery_spec is None:
        raise ValueError("recovery mode needs an interface spec")
    if sigma_eff is None:
        sigma_eff = cell_oracle(4000, 20.0).sigma_eff

    g_eps2 = p0.g * p0.eps**2
    rows = []
    for eps in eps_list:
        grid = grid_for_eps(eps, p0.grid.half_width, p0.grid.n)
        p = Params(
            eps=eps,
            g=g_eps2 / eps**2,
            alpha1=p0.alpha1,
            grid=grid,
            tol=p0.tol,
            max_iters=p0.max_iters,
            seed=p0.seed,
        )
        gs = solve_eta(p)
        if mode == "minimize":
            pair = minimize_two(p, spec_init)
            u1, u2 = pair.u1, pair.u2
        else:
            sp = build_recovery(recovery_spec, p, gs=gs)
            u1, u2 = from_spin(sp, gs)
        bd = decompose(u1, u2, gs, p)
        sp = to_spin(u1, u2, gs)
        curve = extract_interface(sp.phi)
        wl = weighted_length(curve)
        prediction = 2.0 * sigma_eff * wl
        window = clip_to_disk(curve, 0.9 * TF_RADIUS)
        min_v = interface_min_v(sp, window, 2.0 * grid.h)
        rows.append(
            TrendRow(
                eps=eps,
                g=p.g,
                excess=bd.scaled_excess,
                prediction=prediction,
                ratio=bd.scaled_excess / prediction,
                interface_length=wl,
                min_v=min_v,
            )
        )
    return TrendReport(rows=tuple(rows), sigma_eff=sigma_eff, mode=mode)
