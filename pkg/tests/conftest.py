import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coxkit.pipeline import load_bundle


@pytest.fixture(scope="session")
def e6():
    return load_bundle("e6")


@pytest.fixture(scope="session")
def d4():
    return load_bundle("d4")
