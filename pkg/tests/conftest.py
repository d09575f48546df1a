"""Shared fixtures: a session-wide census cache and matrix file writer."""

import functools

import pytest

from copocert.census import run_census
from copocert.linalg import SymMatrix


@functools.lru_cache(maxsize=None)
def cached_census(n: int):
    return tuple(run_census(n))


@pytest.fixture(scope="session")
def census():
    """Callable returning the (cached) census record tuple for an order."""
    return cached_census


@pytest.fixture
def write_matrix(tmp_path):
    """Write a SymMatrix (or raw text) to a matrix file and return the path."""

    def _write(matrix, name="matrix.txt"):
        path = tmp_path / name
        if isinstance(matrix, SymMatrix):
            rows = "\n".join(
                " ".join(str(matrix.get(i, j)) for j in range(matrix.n))
                for i in range(matrix.n))
            text = f"{matrix.n}\n{rows}\n"
        else:
            text = matrix
        path.write_text(text)
        return str(path)

    return _write
