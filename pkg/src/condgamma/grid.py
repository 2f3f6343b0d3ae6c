"""Uniform tensor grid on a square box, scalar fields, and planar curves.

Everything downstream (energies, gradient flows, interface extraction)
works on the same node set: n equispaced points per axis on
[-L, L] x [-L, L], indexed so that values[i, j] sits at (x_i, y_j).
Quadrature is the tensor trapezoid rule on that node set.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

# Thomas-Fermi radius for the unit-mass quadratic trap, (2/pi)^(1/4).
TF_RADIUS = float((2.0 / np.pi) ** 0.25)


@dataclass(frozen=True)
class GridSpec:
    """Square grid: n nodes per axis on [-half_width, half_width]."""

    n: int
    half_width: float

    def __post_init__(self) -> None:
        if self.n < 16:
            raise ValueError(f"grid needs at least 16 nodes per axis, got n={self.n}")
        if not self.half_width > TF_RADIUS:
            raise ValueError(
                f"box half-width {self.half_width} must exceed the support "
                f"radius {TF_RADIUS:.6f}"
            )

    @property
    def h(self) -> float:
        return 2.0 * self.half_width / (self.n - 1)


@functools.lru_cache(maxsize=None)
def axis(grid: GridSpec) -> np.ndarray:
    """1D coordinate array shared by both axes (read-only)."""
    x = np.linspace(-grid.half_width, grid.half_width, grid.n)
    x.setflags(write=False)
    return x


@functools.lru_cache(maxsize=None)
def mesh(grid: GridSpec) -> tuple[np.ndarray, np.ndarray]:
    """Node coordinates X[i, j] = x_i, Y[i, j] = y_j (read-only)."""
    X, Y = np.meshgrid(axis(grid), axis(grid), indexing="ij")
    X.setflags(write=False)
    Y.setflags(write=False)
    return X, Y


@functools.lru_cache(maxsize=None)
def quad_weights(grid: GridSpec) -> np.ndarray:
    """Tensor trapezoid weights, shape (n, n) (read-only)."""
    w1 = np.full(grid.n, grid.h)
    w1[0] = w1[-1] = 0.5 * grid.h
    w = np.outer(w1, w1)
    w.setflags(write=False)
    return w


@dataclass(frozen=True, eq=False)
class Field:
    """Nodal samples of a scalar function on a grid.

    The value array is frozen on construction; operations return new
    fields rather than mutating.
    """

    grid: GridSpec
    values: np.ndarray

    def __post_init__(self) -> None:
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.grid.n, self.grid.n):
            raise ValueError(
                f"field shape {v.shape} does not match grid ({self.grid.n}, {self.grid.n})"
            )
        if not np.all(np.isfinite(v)):
            raise ValueError("field contains non-finite values")
        if v is self.values and v.flags.writeable:
            v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)


@dataclass(frozen=True, eq=False)
class Curve:
    """Polyline in the plane; points has shape (m, 2).

    Closed curves do not repeat the first point at the end; the closing
    segment is implied by the flag.
    """

    points: np.ndarray
    closed: bool

    def __post_init__(self) -> None:
        p = np.asarray(self.points, dtype=float)
        if p.ndim != 2 or p.shape[1] != 2 or p.shape[0] < 2:
            raise ValueError("curve needs an (m, 2) array with m >= 2")
        seg = np.diff(p, axis=0)
        if np.any(np.all(seg == 0.0, axis=1)):
            raise ValueError("curve has repeated consecutive points")
        if self.closed and np.all(p[0] == p[-1]):
            raise ValueError("closed curve must not store the first point twice")
        if p is self.points and p.flags.writeable:
            p = p.copy()
        p.setflags(write=False)
        object.__setattr__(self, "points", p)

    def segments(self) -> tuple[np.ndarray, np.ndarray]:
        """Segment endpoints (a, b) as (m_seg, 2) arrays, closing if needed."""
        p = self.points
        if self.closed:
            return p, np.roll(p, -1, axis=0)
        return p[:-1], p[1:]


def field_from_function(grid: GridSpec, f) -> Field:
    """Sample f(X, Y) on the nodes."""
    X, Y = mesh(grid)
    return Field(grid, np.asarray(f(X, Y), dtype=float))


def integrate(f: Field) -> float:
    """Trapezoid quadrature of f over the box."""
    return float(np.sum(quad_weights(f.grid) * f.values))


def integrate_values(grid: GridSpec, values: np.ndarray) -> float:
    """Trapezoid quadrature of a raw value array (internal fast path)."""
    return float(np.sum(quad_weights(grid) * values))


def grad_sq(f: Field) -> Field:
    """Pointwise |grad f|^2, central differences inside, one-sided on the ring."""
    gx, gy = np.gradient(f.values, f.grid.h, edge_order=1)
    return Field(f.grid, gx * gx + gy * gy)


def _laplacian_values(grid: GridSpec, v: np.ndarray) -> np.ndarray:
    h2 = grid.h * grid.h
    out = np.empty_like(v)
    out[1:-1, 1:-1] = (
        v[2:, 1:-1] + v[:-2, 1:-1] + v[1:-1, 2:] + v[1:-1, :-2] - 4.0 * v[1:-1, 1:-1]
    ) / h2
    # Boundary ring: no stencil exists there, so reuse the adjacent
    # interior node's value.  Corners pick up the diagonal neighbour.
    out[0, 1:-1] = out[1, 1:-1]
    out[-1, 1:-1] = out[-2, 1:-1]
    out[:, 0] = out[:, 1]
    out[:, -1] = out[:, -2]
    return out


def laplacian(f: Field) -> Field:
    """Five-point Laplacian; boundary ring copies the adjacent interior result."""
    return Field(f.grid, _laplacian_values(f.grid, f.values))


def _segment_distance(px: np.ndarray, py: np.ndarray, curve: Curve,
                      want_feet: bool = False):
    """Distance from points to the polyline, and optionally the foot points."""
    a, b = curve.segments()
    dist = np.full(px.shape, np.inf)
    if want_feet:
        fx = np.zeros_like(px)
        fy = np.zeros_like(py)
    for k in range(a.shape[0]):
        ax, ay = a[k]
        dx, dy = b[k, 0] - ax, b[k, 1] - ay
        ss = dx * dx + dy * dy
        t = np.clip(((px - ax) * dx + (py - ay) * dy) / ss, 0.0, 1.0)
        cx = ax + t * dx
        cy = ay + t * dy
        d = np.hypot(px - cx, py - cy)
        if want_feet:
            closer = d < dist
            fx = np.where(closer, cx, fx)
            fy = np.where(closer, cy, fy)
            dist = np.where(closer, d, dist)
        else:
            np.minimum(dist, d, out=dist)
    if want_feet:
        return dist, fx, fy
    return dist


def _inside_parity(px: np.ndarray, py: np.ndarray, curve: Curve) -> np.ndarray:
    """Even-odd point-in-polygon test for each point (vectorized over points)."""
    a, b = curve.segments()
    inside = np.zeros(px.shape, dtype=bool)
    for k in range(a.shape[0]):
        ax, ay = a[k]
        bx, by = b[k]
        crosses = (ay > py) != (by > py)
        if not np.any(crosses):
            continue
        # x-coordinate where the segment crosses the horizontal through py
        xint = ax + (py - ay) * (bx - ax) / (by - ay)
        inside ^= crosses & (px < xint)
    return inside


def signed_distance(grid: GridSpec, curve: Curve) -> Field:
    """Signed distance to a closed curve, positive inside (even-odd rule)."""
    if not curve.closed:
        raise ValueError("signed distance needs a closed curve")
    X, Y = mesh(grid)
    d = _segment_distance(X, Y, curve)
    sign = np.where(_inside_parity(X, Y, curve), 1.0, -1.0)
    return Field(grid, sign * d)


def dump_field(f: Field, path) -> None:
    """Plain-text dump: header 'nx ny L', then one row of nodes per line."""
    with open(path, "w") as fh:
        fh.write(f"{f.grid.n} {f.grid.n} {f.grid.half_width:.17g}\n")
        np.savetxt(fh, f.values, fmt="%.17g")


def load_field(path) -> Field:
    """Inverse of dump_field."""
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 3:
            raise ValueError(f"bad field header in {path!r}")
        nx, ny, half_width = int(header[0]), int(header[1]), float(header[2])
        if nx != ny:
            raise ValueError("only square grids are supported")
        values = np.loadtxt(fh)
    values = np.atleast_2d(values)
    if values.shape != (nx, ny):
        raise ValueError(f"field body {values.shape} does not match header ({nx}, {ny})")
    return Field(GridSpec(n=nx, half_width=half_width), values)
