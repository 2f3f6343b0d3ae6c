"""Spin representation: round trips, energy splitting, interface probes."""

import math

import numpy as np
import pytest

from condgamma import (
    Curve,
    Field,
    HalfDisk,
    decompose,
    f_energy,
    from_spin,
    g_energy,
    g_tilde,
    interface_min_v,
    minimize_two,
    split_residual,
    to_spin,
)
from condgamma.grid import field_from_function, integrate_values
from condgamma.spin import SpinPair


@pytest.fixture(scope="module")
def pair01(p01):
    return minimize_two(p01, HalfDisk())


def _random_feasible_pair(p, seed):
    """Smooth positive pair with exact masses, supported where eta is."""
    from scipy.ndimage import gaussian_filter

    rng = np.random.default_rng(seed)
    n = p.grid.n
    smooth = lambda: gaussian_filter(rng.standard_normal((n, n)), n / 8, mode="nearest")
    v = 1.0 + 0.25 * smooth()
    v = np.abs(v) / np.max(np.abs(v))
    phi = np.clip(0.5 * math.pi + 1.0 * smooth(), 0.1, math.pi - 0.1)
    return v, phi


def _pair_from(v, phi, gs, p):
    eta = gs.eta.values
    a = eta * v * np.cos(0.5 * phi)
    b = eta * v * np.sin(0.5 * phi)
    # project each component to its mass
    for arr, mass in ((a, p.alpha1), (b, p.alpha2)):
        arr *= math.sqrt(mass / integrate_values(p.grid, arr**2))
    return Field(p.grid, a), Field(p.grid, b)


def test_g_tilde(p01):
    ge2 = p01.g * p01.eps**2
    assert g_tilde(p01) == pytest.approx(p01.g * (1.0 - 1.0 / ge2), rel=1e-14)


def test_round_trip(p01, eta01, pair01):
    sp = to_spin(pair01.u1, pair01.u2, eta01)
    b1, b2 = from_spin(sp, eta01)
    m = sp.mask
    assert np.max(np.abs(b1.values[m] - pair01.u1.values[m])) <= 1e-12
    assert np.max(np.abs(b2.values[m] - pair01.u2.values[m])) <= 1e-12


def test_to_spin_rejects_negative(p01, eta01):
    bad = Field(p01.grid, -np.abs(eta01.eta.values))
    with pytest.raises(ValueError):
        to_spin(bad, eta01.eta, eta01)


def test_phi_range(p01, eta01, pair01):
    sp = to_spin(pair01.u1, pair01.u2, eta01)
    assert np.all(sp.phi.values >= 0.0) and np.all(sp.phi.values <= math.pi)


def test_relabeling_symmetry(p01, eta01, pair01):
    sp12 = to_spin(pair01.u1, pair01.u2, eta01)
    sp21 = to_spin(pair01.u2, pair01.u1, eta01)
    f12 = f_energy(sp12.v, eta01, p01.eps)
    f21 = f_energy(sp21.v, eta01, p01.eps)
    g12 = g_energy(sp12, eta01, p01)
    g21 = g_energy(sp21, eta01, p01)
    assert f12 == f21  # v is symmetric in the components
    assert g12 == pytest.approx(g21, rel=1e-12)


def test_split_identity_on_minimizer(p01, eta01, pair01):
    bd = decompose(pair01.u1, pair01.u2, eta01, p01)
    assert bd.total == pytest.approx(pair01.energy, rel=1e-12)
    assert bd.base == pytest.approx(eta01.energy, rel=1e-12)
    # n=64 carries a visible h^2 discretization defect at the interface
    assert bd.split_residual / abs(bd.total) < 2e-2
    assert bd.scaled_excess == pytest.approx(
        p01.eps * (bd.total - bd.base), rel=1e-12
    )


def test_split_identity_smooth_pair(p01, eta01):
    v, phi = _random_feasible_pair(p01, 5)
    u1, u2 = _pair_from(v, phi, eta01, p01)
    res = split_residual(u1, u2, eta01, p01)
    bd = decompose(u1, u2, eta01, p01)
    assert res == bd.split_residual
    assert res / abs(bd.total) < 1e-4


def test_unit_v_gives_zero_f(p01, eta01):
    one = Field(p01.grid, np.ones((p01.grid.n,) * 2))
    assert f_energy(one, eta01, p01.eps) == 0.0


def test_g_energy_closed_form(p01, eta01):
    # on a full-domain linear phase both terms reduce to exact
    # quadratures, pinning the 1/8 prefactor and the g-tilde weight
    grid = p01.grid
    L = grid.half_width
    one = np.ones((grid.n,) * 2)
    eta2 = eta01.eta.values ** 2

    def spin_with(phi):
        return SpinPair(v=Field(grid, one), phi=phi, mask=one > 0)

    lin = field_from_function(grid, lambda x, y: 0.5 * math.pi * (1 + x / L))
    slope = 0.5 * math.pi / L
    mass = integrate_values(grid, eta2)
    sine = integrate_values(
        grid,
        eta2**2 * np.sin(lin.values) ** 2,
    )
    expected = 0.125 * (slope**2 * mass + g_tilde(p01) * sine)
    assert g_energy(spin_with(lin), eta01, p01) == pytest.approx(expected, rel=1e-12)

    # degenerate phases: aligned spins cost nothing, orthogonal ones
    # pay only the sine penalty
    zero = Field(grid, np.zeros_like(one))
    assert g_energy(spin_with(zero), eta01, p01) == 0.0
    flat = Field(grid, np.full_like(one, 0.5 * math.pi))
    only_sine = 0.125 * g_tilde(p01) * integrate_values(grid, eta2**2)
    assert g_energy(spin_with(flat), eta01, p01) == pytest.approx(
        only_sine, rel=1e-12
    )


def test_interface_min_v(p01, eta01, pair01):
    sp = to_spin(pair01.u1, pair01.u2, eta01)
    cut = Curve(np.array([[0.0, -0.8], [0.0, 0.8]]), closed=False)
    mv = interface_min_v(sp, cut, 2 * p01.grid.h)
    assert 0.0 < mv < 1.0
    m_eps = (p01.g * p01.eps**2) ** -0.25
    assert mv == pytest.approx(m_eps, abs=0.1)


def test_interface_min_v_empty_window(p01, eta01, pair01):
    sp = to_spin(pair01.u1, pair01.u2, eta01)
    far = Curve(np.array([[5.0, 5.0], [6.0, 6.0]]), closed=False)
    with pytest.raises(ValueError):
        interface_min_v(sp, far, 0.01)
