"""
Wspólne fixtury testów modinv
"""

import os
import sys

import pytest

# Dodaj katalog główny projektu do ścieżki Pythona
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_root)

from src.core.gfq import make_field  # noqa: E402
from src.core.invariants import InvariantCatalog  # noqa: E402


@pytest.fixture(scope="session")
def f2():
    return make_field(2)


@pytest.fixture(scope="session")
def f3():
    return make_field(3)


@pytest.fixture(scope="session")
def f4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def cat22(f2):
    return InvariantCatalog(f2, 2)


@pytest.fixture(scope="session")
def cat23(f3):
    return InvariantCatalog(f3, 2)


@pytest.fixture(scope="session")
def cat24(f4):
    return InvariantCatalog(f4, 2)


@pytest.fixture(scope="session")
def cat32(f2):
    return InvariantCatalog(f2, 3)
