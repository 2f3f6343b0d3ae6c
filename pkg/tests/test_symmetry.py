"""Radial-vs-sector comparison at the limit level."""


import numpy as np
import pytest

from condgamma import (
    Circle,
    Diameter,
    RadialConfig,
    SECTOR_VALUE,
    best_radial,
    delta0,
    f_alpha,
    g_n,
    limit_energy,
    mass_radius,
    merge_zero,
    sector_energy,
    spec_weighted_length,
)


def test_f_endpoints_and_positivity():
    assert f_alpha(0.0) == 0.0
    assert f_alpha(1.0) == 0.0
    a = np.linspace(0.0, 1.0, 1001)
    vals = f_alpha(a)
    assert np.all(vals >= 0.0)
    assert isinstance(f_alpha(0.5), float)
    with pytest.raises(ValueError):
        f_alpha(-0.1)
    with pytest.raises(ValueError):
        f_alpha(1.2)


def test_f_concave():
    a = np.linspace(0.0, 1.0, 10001)
    vals = f_alpha(a)
    assert np.all(np.diff(vals, 2) <= 1e-10)


def test_f_matches_circle_length():
    # f(alpha) is a quarter of the weighted length of the circle that
    # encloses mass alpha
    for a in (0.1, 0.37, 0.5, 0.8):
        wl = spec_weighted_length(Circle(mass_radius(a)))
        assert f_alpha(a) == pytest.approx(wl / 4.0, abs=1e-6)


def test_sector_energy_constant():
    assert SECTOR_VALUE == 3.0 / 16.0
    for a in (0.1, 0.5, 0.9):
        assert sector_energy(a) == SECTOR_VALUE
    with pytest.raises(ValueError):
        sector_energy(0.0)
    with pytest.raises(ValueError):
        sector_energy(1.0)


def test_sector_energy_matches_diameter():
    # the normalized diameter cost reproduces the sector constant for
    # any tension
    for sigma in (0.5, 2.0 / 3.0):
        ratio = limit_energy(Diameter(), sigma) / (8.0 * sigma)
        assert ratio == pytest.approx(SECTOR_VALUE, abs=1e-6)


def test_radial_config_validation():
    RadialConfig(alpha1=0.3, betas=(0.7, 0.3, 0.0))
    with pytest.raises(ValueError):
        RadialConfig(alpha1=0.3, betas=(0.7, 0.3))  # even count
    with pytest.raises(ValueError):
        RadialConfig(alpha1=0.3, betas=(0.8, -0.1, 0.3))
    with pytest.raises(ValueError):
        RadialConfig(alpha1=0.3, betas=(0.5, 0.3, 0.1))  # sums to 0.9
    with pytest.raises(ValueError):
        RadialConfig(alpha1=0.4, betas=(0.7, 0.3, 0.0))  # wrong split


def test_g_n_boundary_collapse():
    # zero innermost or outermost shells contribute interfaces of zero
    # radius or full mass, both free
    a = 0.37
    assert g_n(RadialConfig(alpha1=a, betas=(0.0, a, 1.0 - a))) == f_alpha(a)
    assert g_n(RadialConfig(alpha1=a, betas=(1.0 - a, a, 0.0))) == f_alpha(1.0 - a)


def test_merge_zero_identity():
    cfg = RadialConfig(alpha1=0.3, betas=(0.2, 0.1, 0.0, 0.2, 0.5))
    merged = merge_zero(cfg, 2)
    assert merged.n == cfg.n - 1
    s = 0.2 + 0.1  # cumulative mass at the doubled interface
    assert g_n(cfg) == pytest.approx(g_n(merged) + 2.0 * f_alpha(s), rel=1e-14)
    assert g_n(cfg) >= g_n(merged)
    with pytest.raises(ValueError):
        merge_zero(cfg, 0)  # boundary shell
    with pytest.raises(ValueError):
        merge_zero(cfg, 1)  # nonzero mass


def test_best_radial_half():
    v = best_radial(0.5)
    assert v.radial_best == pytest.approx(f_alpha(0.5), rel=1e-12)
    assert v.radial_best == pytest.approx(0.32179712645279124, rel=1e-12)
    assert v.sector == SECTOR_VALUE
    assert v.non_radial  # disk beats every radial layout at equal split
    betas = np.asarray(v.radial_config.betas)
    assert np.sum(betas[1::2]) == pytest.approx(0.5, abs=1e-10)


def test_best_radial_small_mass_prefers_rim():
    v = best_radial(0.02)
    assert v.radial_best == pytest.approx(f_alpha(0.98), rel=1e-12)
    assert v.radial_config.betas == (0.98, 0.02, 0.0)
    assert not v.non_radial


def test_best_radial_refinement_monotone():
    coarse = best_radial(0.5, grid_steps=200).radial_best
    fine = best_radial(0.5, grid_steps=400).radial_best
    assert fine <= coarse + 1e-15


def test_best_radial_beats_single_interface():
    # the optimized layered value can only improve on one annulus
    for a in (0.2, 0.35, 0.5):
        v = best_radial(a, n_max=3)
        assert v.radial_best <= min(f_alpha(a), f_alpha(1.0 - a)) + 1e-12
        assert g_n(v.radial_config) == pytest.approx(v.radial_best, rel=1e-12)


def test_best_radial_representability():
    with pytest.raises(ValueError):
        best_radial(1.0 / 3.0, grid_steps=200)


def test_delta0_value():
    d0 = delta0()
    assert d0 == pytest.approx(0.1484394701315075, rel=1e-10)
    assert abs(d0 - 0.1486) < 1e-3
    assert f_alpha(1.0 - d0) == pytest.approx(SECTOR_VALUE, abs=1e-6)
    # below the threshold the rim layout undercuts the sector value
    assert f_alpha(1.0 - 0.5 * d0) < SECTOR_VALUE
    assert f_alpha(d0) == pytest.approx(0.2463, abs=1e-3)
