import numpy as np
import pytest

from darkfloquet import quasi_energy_sweep

FULL_GRID = np.linspace(0.0, 5.0, 201)


@pytest.fixture(scope="session")
def sweep_n3_full():
    """Branch-tracked Floquet sweep for the three-level chain, 201 points."""
    return quasi_energy_sweep(3, 1.0, 10.0, FULL_GRID)


@pytest.fixture(scope="session")
def sweep_n4_full():
    """Branch-tracked Floquet sweep for the four-level chain, 201 points."""
    return quasi_energy_sweep(4, 1.0, 10.0, FULL_GRID)
