import os
import sys
from pathlib import Path

import pytest

# Add parent directory to Python path to allow imports from ritt_groebner
ROOT = Path(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
sys.path.insert(0, str(ROOT))

from ritt_groebner.constants import FIXTURES_DIR
from ritt_groebner.polyring import VariableOrder
from ritt_groebner.system_file_utils import load_system, parse_polynomial

FIXTURES = ROOT / FIXTURES_DIR


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def load_fixture():
    def load(name, field_override=None):
        return load_system(FIXTURES / f"{name}.sys", field_override)
    return load


@pytest.fixture
def order3():
    return VariableOrder(("x1", "x2", "x3"))


@pytest.fixture
def order4():
    return VariableOrder(("x1", "x2", "x3", "x4"))


@pytest.fixture
def order5():
    return VariableOrder(("x1", "x2", "x3", "x4", "x5"))


@pytest.fixture
def poly():
    """poly(order, "x1*x2 - 1") parses one expression under ``order``."""
    def parse(order, text):
        return parse_polynomial(text, order)
    return parse
