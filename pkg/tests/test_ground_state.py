"""Single-condensate ground state: flow convergence and known properties."""

import numpy as np
import pytest

from condgamma import (
    ConvergenceError,
    GridSpec,
    Params,
    check_eta_properties,
    energy_single,
    radial_average,
    rayleigh_lambda,
    solve_eta,
)
from condgamma.grid import Field, field_from_function, integrate_values
from condgamma.thomas_fermi import tf_lambda

# chemical potential from a radial two-point collocation solve, used as
# an independent check on the 2D flow
LAMBDA_RADIAL = {0.1: 0.82872826, 0.05: 0.80688842}


def test_params_validation():
    g = GridSpec(64, 1.4)
    with pytest.raises(ValueError):
        Params(eps=0.6, g=4000.0, alpha1=0.5, grid=g)
    with pytest.raises(ValueError):
        Params(eps=0.1, g=50.0, alpha1=0.5, grid=g)  # g eps^2 <= 1
    with pytest.raises(ValueError):
        Params(eps=0.1, g=4000.0, alpha1=1.0, grid=g)
    p = Params(eps=0.1, g=4000.0, alpha1=0.3, grid=g)
    assert p.alpha2 == pytest.approx(0.7)


def test_solve_converges(p01, eta01):
    assert eta01.residual <= p01.tol
    assert integrate_values(p01.grid, eta01.eta.values**2) == pytest.approx(
        1.0, abs=1e-10
    )
    assert eta01.iterations < 2000


def test_energy_frozen_value(eta01):
    # regression pin for the canonical eps=0.1, n=64 run
    assert eta01.energy == pytest.approx(28.958330582867891, rel=1e-7)


def test_lambda_against_radial_solver(p01, eta01):
    assert eta01.lambda_eps == pytest.approx(LAMBDA_RADIAL[0.1], abs=5e-4)


def test_lambda_identity_matches_rayleigh(eta01):
    # the energy identity and the Rayleigh quotient must agree at the
    # level of the discrete residual
    assert rayleigh_lambda(eta01) == pytest.approx(eta01.lambda_eps, rel=1e-8)


def test_energy_trace_monotone(p01):
    trace = []
    solve_eta(p01, energy_trace=trace)
    diffs = np.diff(trace)
    assert np.all(diffs <= 1e-13 * (1.0 + np.abs(trace[:-1])))


def test_eta_properties(eta01):
    rep = check_eta_properties(eta01)
    assert rep.mass == pytest.approx(1.0, abs=1e-10)
    assert rep.monotonicity_violations == 0
    assert rep.dev_tf_core <= 0.05
    assert rep.dist_lambda_sq < rep.dist_lambda  # lambda_eps approaches lambda^2


def test_positive_and_boundary_zero(eta01):
    vals = eta01.eta.values
    assert vals.min() >= 0.0
    assert np.all(vals[0, :] == 0.0) and np.all(vals[:, -1] == 0.0)


def test_warns_when_grid_too_coarse():
    p = Params(eps=0.05, g=40.0 / 0.05**2, alpha1=0.5, grid=GridSpec(32, 1.4))
    with pytest.warns(UserWarning):
        solve_eta(p)


def test_convergence_error_on_tiny_budget():
    p = Params(
        eps=0.1, g=4000.0, alpha1=0.5, grid=GridSpec(64, 1.4), tol=1e-14, max_iters=3
    )
    with pytest.raises(ConvergenceError):
        solve_eta(p)


def test_energy_single_quadratic_consistency(p01):
    # doubling a trial state multiplies the kinetic and potential parts
    # by 4 and the quartic by 16; check with the pieces separated by eps
    grid = p01.grid
    f = field_from_function(
        grid, lambda x, y: np.maximum(0.0, (1 - x**2 - y**2)) * 0.3
    )
    e1 = energy_single(f, 0.1)
    f2 = Field(grid, 2.0 * f.values)
    e2 = energy_single(f2, 0.1)
    # quartic term = (e2 - 4 e1) / 12 must be positive
    assert e2 > 4 * e1
    quart = (e2 - 4 * e1) / 12
    manual = 0.25 / 0.1**2 * integrate_values(grid, f.values**4)
    assert quart == pytest.approx(manual, rel=1e-10)


def test_radial_average_radial_function(p01):
    f = field_from_function(p01.grid, lambda x, y: x**2 + y**2)
    r, avg = radial_average(f)
    keep = r < 1.2
    # bin means over square-grid nodes wobble at O(h) near the axes
    assert np.allclose(avg[keep], r[keep] ** 2, atol=0.5 * p01.grid.h)


def test_eta_squared_tracks_tf_density(eta01):
    lam = tf_lambda()
    rep = check_eta_properties(eta01)
    assert rep.dev_sqrt_rho_window < 0.05
    assert rep.tail_max < lam  # sanity; the sharp tail bound is checked at eps=0.05
