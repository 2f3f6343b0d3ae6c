"""Two-component minimization: inits, flow, masses, segregation."""

import numpy as np
import pytest

from condgamma import (
    DiskAnnulus,
    FromFiles,
    GridSpec,
    HalfDisk,
    Random,
    energy_two,
    mass_radius,
    minimize_two,
    overlap,
    scaled_excess,
)
from condgamma.grid import Field, dump_field, integrate_values
from condgamma.two_component import build_init


@pytest.fixture(scope="module")
def pair01(p01):
    return minimize_two(p01, HalfDisk())


def test_init_masses_and_boundary(p01):
    inits = [HalfDisk(), DiskAnnulus(mass_radius(0.5)), Random(7)]
    for init in inits:
        a, b = build_init(p01, init)
        assert integrate_values(p01.grid, a**2) == pytest.approx(0.5, abs=1e-12)
        assert integrate_values(p01.grid, b**2) == pytest.approx(0.5, abs=1e-12)
        assert np.all(a[0, :] == 0.0) and np.all(b[:, -1] == 0.0)
        assert a.min() >= 0.0 and b.min() >= 0.0


def test_random_init_seeded(p01):
    a1, b1 = build_init(p01, Random(3))
    a2, b2 = build_init(p01, Random(3))
    a3, _ = build_init(p01, Random(4))
    assert np.array_equal(a1, a2) and np.array_equal(b1, b2)
    assert not np.array_equal(a1, a3)


def test_diskannulus_validation():
    with pytest.raises(ValueError):
        DiskAnnulus(0.0)
    with pytest.raises(ValueError):
        DiskAnnulus(2.0)


def test_minimize_converges(p01, pair01):
    assert pair01.residual <= p01.tol
    assert pair01.masses[0] == pytest.approx(0.5, abs=1e-10)
    assert pair01.masses[1] == pytest.approx(0.5, abs=1e-10)


def test_minimize_energy_frozen(pair01):
    # regression pin for the canonical eps=0.1, n=64 half-disk run
    assert pair01.energy == pytest.approx(34.982205140946348, rel=1e-7)


def test_components_segregate(p01, pair01):
    assert overlap(pair01) <= 0.02
    # the two bulk regions barely intersect
    both = (pair01.u1.values > 0.3) & (pair01.u2.values > 0.3)
    assert both.mean() < 0.02


def test_energy_two_matches_pair(p01, pair01):
    assert energy_two(pair01.u1, pair01.u2, p01) == pytest.approx(
        pair01.energy, rel=1e-12
    )


def test_scaled_excess_definition(p01, pair01, eta01):
    ex = scaled_excess(pair01, eta01, p01)
    assert ex == pytest.approx(p01.eps * (pair01.energy - eta01.energy), rel=1e-12)
    assert ex == pytest.approx(0.60238745580784581, rel=1e-6)


def test_energy_two_grid_mismatch(p01):
    other = GridSpec(32, 1.4)
    f = Field(other, np.zeros((32, 32)))
    with pytest.raises(ValueError):
        energy_two(f, f, p01)


def test_from_files_restart(tmp_path, p01, pair01):
    f1, f2 = tmp_path / "u1.txt", tmp_path / "u2.txt"
    dump_field(pair01.u1, f1)
    dump_field(pair01.u2, f2)
    restarted = minimize_two(p01, FromFiles((str(f1), str(f2))))
    # restarting from a minimizer returns to it almost immediately
    assert restarted.iterations <= pair01.iterations
    assert restarted.energy == pytest.approx(pair01.energy, rel=1e-9)


def test_halfdisk_symmetry(p01, pair01):
    # the half-disk minimizer at alpha 1/2 is the mirror of its partner
    u1 = pair01.u1.values
    u2 = pair01.u2.values
    assert np.allclose(u1, u2[::-1, :], atol=5e-4)
