"""
Shared fixtures
"""
import pytest

from fc_dyck.canonical import CanonicalForm
from fc_dyck.coxeter import Word
from fc_dyck.dyck import DyckPath

EX1_WORDS = {(3, 2, 1, 4, 3), (3, 2, 4, 1, 3), (3, 4, 2, 1, 3), (3, 4, 2, 3, 1), (3, 2, 4, 3, 1)}


@pytest.fixture(autouse=True)
def default_height_guard(monkeypatch):
    monkeypatch.delenv("FC_DYCK_MAX_HEIGHT", raising=False)


@pytest.fixture
def ex1_word() -> Word:
    return Word((3, 2, 1, 4, 3), 4)


@pytest.fixture
def ex1_form() -> CanonicalForm:
    return CanonicalForm.from_pairs([(1, 3), (3, 4)], 4)


@pytest.fixture
def ex2_word() -> Word:
    return Word((2, 4, 3), 4)


@pytest.fixture
def hook_path() -> DyckPath:
    return DyckPath("UUUUDDUDDUDD")
