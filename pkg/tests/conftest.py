import numpy as np
import pytest

from qmorse import builtin
from qmorse.potential import MassModel, PotentialParams


@pytest.fixture
def h2():
    return builtin("H2")


@pytest.fixture
def h2_ref():
    return builtin("H2-ref")


@pytest.fixture
def co():
    return builtin("CO")


@pytest.fixture
def h2_params(h2):
    return PotentialParams.from_molecule(h2, 1.0)


@pytest.fixture
def h2_pdm(h2):
    return PotentialParams.from_molecule(h2, 1.0), MassModel.from_molecule(h2, 0.3)


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)
