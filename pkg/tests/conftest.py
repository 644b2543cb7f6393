import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--sample", action="store_true", default=False,
        help="run the exhaustive small-graph audit on a 500-instance random "
             "subset instead of every 3-connected graph on 6 vertices")


@pytest.fixture(scope="session")
def sample_mode(request):
    return request.config.getoption("--sample")
