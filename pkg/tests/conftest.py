"""Shared alphabet fixtures."""

from __future__ import annotations

import pytest

from wordbinom import Alphabet


@pytest.fixture(scope="session")
def ab() -> Alphabet:
    return Alphabet.from_string("ab")


@pytest.fixture(scope="session")
def abn() -> Alphabet:
    return Alphabet.from_string("abn")


@pytest.fixture(scope="session")
def abc() -> Alphabet:
    return Alphabet.from_string("abc")
