"""Shared fixtures: the worked matrices every suite exercises."""

from __future__ import annotations

from fractions import Fraction

import pytest

from helpers import matrix_of


@pytest.fixture
def circulant4():
    """4x4 circulant with one sub-unit cycle and four extreme rays."""
    h = Fraction(1, 2)
    return matrix_of([[1, 2, 1, h], [h, 1, 2, 1], [1, h, 1, 2], [2, 1, h, 1]])


@pytest.fixture
def perturbed5():
    """5x5 column-perturbed consistent matrix, already in canonical shape."""
    return matrix_of(
        [
            [1, Fraction(1, 5), Fraction(1, 4), 2, 3],
            [5, 1, 1, 1, 1],
            [4, 1, 1, 1, 1],
            [Fraction(1, 2), 1, 1, 1, 1],
            [Fraction(1, 3), 1, 1, 1, 1],
        ]
    )


@pytest.fixture
def double4():
    """4x4 with two disturbed comparisons in one column; non-convex E(A)."""
    return matrix_of(
        [[1, Fraction(1, 3), Fraction(1, 2), 1], [3, 1, 1, 1], [2, 1, 1, 1], [1, 1, 1, 1]]
    )


@pytest.fixture
def consistent3():
    return matrix_of([[1, 2, 3], [Fraction(1, 2), 1, Fraction(3, 2)], [Fraction(1, 3), Fraction(2, 3), 1]])
