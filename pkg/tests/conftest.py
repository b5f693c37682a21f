from __future__ import annotations

from pathlib import Path

import pytest

from leibniz_kit import fixtures as corpus

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def positive_algebras():
    """All shipped algebras that satisfy the Leibniz identity, by name."""
    return {name: corpus.algebra(name) for name in corpus.positive_algebra_names()}


@pytest.fixture(scope="session")
def negative_algebras():
    return {name: corpus.algebra(name) for name in corpus.negative_algebra_names()}


@pytest.fixture(scope="session")
def small_algebras(positive_algebras):
    """The positive fixtures of dimension at most 3 (cheap enough for
    exhaustive higher-degree complexes)."""
    return {name: g for name, g in positive_algebras.items() if g.dim <= 3}
