"""Shared test utilities: exact linear algebra and fixture builders."""

from __future__ import annotations

from fractions import Fraction

from effvec import HamiltonianCycle, ReciprocalMatrix, Vec


def solve_linear(columns: list[Vec], target: Vec) -> list[Fraction] | None:
    """Exact coefficients x with sum_k x_k * columns[k] = target, else None.

    Gauss-Jordan over Fractions; None when the system is singular or
    inconsistent.  Used to certify conic-hull membership independently of
    the library's own cone logic.
    """
    n = len(target)
    m = len(columns)
    rows = [[columns[k][i] for k in range(m)] + [target[i]] for i in range(n)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(m):
        pivot = next((k for k in range(r, n) if rows[k][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [value * inv for value in rows[r]]
        for k in range(n):
            if k != r and rows[k][c] != 0:
                factor = rows[k][c]
                rows[k] = [vk - factor * vr for vk, vr in zip(rows[k], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == n:
            break
    for k in range(r, n):
        if rows[k][m] != 0:
            return None
    solution = [Fraction(0)] * m
    for row_index, c in enumerate(pivot_cols):
        solution[c] = rows[row_index][m]
    # Free columns stay zero; verify the candidate actually reproduces target.
    for i in range(n):
        if sum(solution[k] * columns[k][i] for k in range(m)) != target[i]:
            return None
    return solution


def in_conic_hull(extremes: tuple[Vec, ...], vec: Vec) -> bool:
    """Whether vec is a nonnegative combination of the extreme vectors."""
    coeffs = solve_linear(list(extremes), vec)
    return coeffs is not None and all(c >= 0 for c in coeffs)


def matrix_of(rows: list[list]) -> ReciprocalMatrix:
    return ReciprocalMatrix.from_rows(
        [[Fraction(x) for x in row] for row in rows]
    )


def unit_cycle_fixture(n: int, diagonals: dict[int, tuple]) -> ReciprocalMatrix:
    """Matrix whose identity-rotation cycle is all ones.

    diagonals maps an offset k to the entries a[i][i+k] for i = 0..n-k-1;
    offsets not listed stay at 1.
    """
    rows = [[Fraction(1)] * n for _ in range(n)]
    for k, values in diagonals.items():
        for i, value in enumerate(values):
            rows[i][i + k] = Fraction(value)
            rows[i + k][i] = 1 / Fraction(value)
    return ReciprocalMatrix.from_rows(rows)


def identity_cycle(n: int) -> HamiltonianCycle:
    return HamiltonianCycle.from_vertices(tuple(range(n)))


def fractions(*values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)
