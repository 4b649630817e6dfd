import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fourfold.catalog import get_pair  # noqa: E402
from fourfold.pairs import derive_qform  # noqa: E402

CATALOG = ("sextic", "fano", "dv", "cicy41", "cicy130", "cicy133")


@pytest.fixture(scope="session")
def qforms():
    return {name: derive_qform(get_pair(name)) for name in CATALOG}


@pytest.fixture(scope="session")
def pairs():
    return {name: get_pair(name) for name in CATALOG}
