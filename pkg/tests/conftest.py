import pytest

from rfgrowth.catalog import catalog_build
from rfgrowth.detect import Detector


@pytest.fixture(scope="session")
def catalog16():
    return catalog_build(16)


@pytest.fixture(scope="session")
def detector(catalog16):
    return Detector(catalog16)
