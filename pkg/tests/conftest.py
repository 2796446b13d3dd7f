import pytest

from comaxlat.enumeration import enumerated_universe
from comaxlat.presets import PRESET_NAMES, preset


def pytest_addoption(parser):
    parser.addoption(
        "--size6",
        action="store_true",
        default=False,
        help="run the deep checks at size 6 instead of size 5 (slower)",
    )


@pytest.fixture(scope="session")
def deep_size(request) -> int:
    return 6 if request.config.getoption("--size6") else 5


@pytest.fixture(scope="session")
def universe5():
    return enumerated_universe(5)


@pytest.fixture(scope="session")
def universe6():
    return enumerated_universe(6)


@pytest.fixture(scope="session")
def universe_deep(deep_size):
    return enumerated_universe(deep_size)


@pytest.fixture(scope="session")
def all_presets():
    return [preset(name) for name in PRESET_NAMES]
