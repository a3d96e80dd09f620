import sys
from pathlib import Path

import pytest

from deltamat import make_set_system

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def f_ex():
    return make_set_system(4, [(), (1, 2), (2, 3), (2, 4), (3, 4), (1, 2, 3, 4)])
