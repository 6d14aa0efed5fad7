import os

import numpy as np
import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--jetplane",
        action="store",
        default=os.environ.get("QUATCORR_JETPLANE"),
        help="path to the 512x512 grayscale jetplane image (PGM) for the column experiment",
    )


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def jetplane_path(request):
    path = request.config.getoption("--jetplane")
    if not path:
        pytest.skip("jetplane image not supplied (use --jetplane PATH or QUATCORR_JETPLANE)")
    return path
