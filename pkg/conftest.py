import numpy as np
import pytest

from rodwheel import settings
from rodwheel.control.parser import eval_value, parse_call
from rodwheel.kinematics import Params
from rodwheel.scenario import document_cache, find_scenario


@pytest.fixture(autouse=True)
def reset_settings():
    """
    Takes the `RODWHEEL` overrides away after every test, so that `configure()` calls and the
    `--debug` flag do not leak between tests. The lookup caches are cleared too.
    """

    settings.reset()

    yield

    settings.reset()
    document_cache.clear()
    find_scenario.cache_clear()
    parse_call.cache_clear()
    eval_value.cache_clear()


@pytest.fixture
def params():
    return Params()


@pytest.fixture
def legacy_params():
    return Params(legacy_potential=True)


@pytest.fixture
def free_state():
    return np.array([4.0, 0.0, 0.0, 0.3, 0.0, -0.5, 6.0, -3.0, 0.0, 0.0])


@pytest.fixture
def case1_state():
    return np.array([4.0, 0.0, 0.0, 0.0, 0.0, np.pi, 0.0, 0.0, 0.0, 0.0])
