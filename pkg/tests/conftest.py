import numpy as np
import pytest
from scipy.linalg import expm

from steerbh.symplectic import symplectic_form


def random_symplectic(n, rng, scale=0.6):
    """exp(Omega H) with H symmetric is symplectic."""
    h = rng.normal(scale=scale, size=(2 * n, 2 * n))
    return expm(symplectic_form(n) @ (h + h.T) / 2)


def random_physical_cm(n, rng):
    """Random symplectic applied to a thermal state."""
    nu = 1.0 + rng.exponential(1.0, size=n)
    S = random_symplectic(n, rng)
    sigma = S @ np.diag(np.repeat(nu, 2)) @ S.T
    return 0.5 * (sigma + sigma.T)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
