import numpy as np
import pytest

from hyperalg.zeta_zeros import load_zeros


@pytest.fixture(scope="session")
def zeros():
    return load_zeros()


@pytest.fixture(scope="session")
def zeros10k(zeros):
    if len(zeros) < 10000:
        pytest.skip("bundled zeros table too short")
    return np.asarray(zeros[:10000])
