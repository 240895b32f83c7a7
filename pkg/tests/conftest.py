import logging

import pytest

from theta_orbits.config import ENV_PREFIX, load_settings
from theta_orbits.dualpairs.params import DualPairParams


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Every test starts from built-in defaults, whatever the shell or .env says."""
    for suffix in ("SEED", "LOG_LEVEL", "DMAX", "WINDOW", "MAX_TERMS"):
        monkeypatch.setenv(ENV_PREFIX + suffix, "")
    load_settings.cache_clear()
    yield
    load_settings.cache_clear()
    logging.getLogger("theta_orbits").handlers.clear()


@pytest.fixture
def pair_6402():
    return DualPairParams.osp(6, 4, 0, 2)


@pytest.fixture
def pair_8423():
    return DualPairParams.osp(8, 4, 2, 3)


@pytest.fixture
def pair_case2():
    return DualPairParams.osp(10, 2, 6, 4)
