import pytest

from condgamma import GridSpec, Params, solve_eta


@pytest.fixture(scope="session")
def p01():
    """Cheap canonical parameters: eps=0.1, g eps^2 = 40, n=64."""
    return Params(eps=0.1, g=40.0 / 0.1**2, alpha1=0.5, grid=GridSpec(64, 1.4))


@pytest.fixture(scope="session")
def eta01(p01):
    return solve_eta(p01)
