"""Efficiency cones carved out by Hamiltonian cycles.

Requiring a fixed Hamiltonian cycle to appear in the dominance digraph of
(a, w) pins w into a convex polyhedral cone: one linear inequality per cycle
edge, ``w[i] >= a[i][j] * w[j]``.  These cones are the building blocks of the
efficient set.  The product of the matrix entries along the cycle controls
the shape: product < 1 gives a full set of extreme rays, product = 1
collapses the cone to a single ray, and product > 1 empties it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .digraph import HamiltonianCycle
from .matrices import ReciprocalMatrix, Vec, as_weight_vector, is_consistent, normalize

__all__ = [
    "EfficiencyCone",
    "cycle_product",
    "cycle_entries",
    "cone_membership",
    "cone_extremes",
    "is_singleton_cone",
    "efficiency_cone",
    "resolve_unit_cycle",
]


def cycle_entries(a: ReciprocalMatrix, cycle: HamiltonianCycle) -> tuple[Fraction, ...]:
    """Matrix entries read along the cycle edges."""
    if cycle.n != a.n:
        raise ValueError("cycle length does not match matrix dimension")
    return tuple(a.entries[i][j] for i, j in cycle.edges())


def cycle_product(a: ReciprocalMatrix, cycle: HamiltonianCycle) -> Fraction:
    """Product of the matrix entries along the cycle."""
    product = Fraction(1)
    for value in cycle_entries(a, cycle):
        product *= value
    return product


def cone_membership(a: ReciprocalMatrix, cycle: HamiltonianCycle, w: Sequence[Fraction]) -> bool:
    """True when every cycle edge inequality w[i] >= a[i][j] * w[j] holds."""
    vec = as_weight_vector(w)
    if len(vec) != a.n:
        raise ValueError("vector length does not match matrix dimension")
    return all(vec[i] >= a.entries[i][j] * vec[j] for i, j in cycle.edges())


def chain_solution(a: ReciprocalMatrix, cycle: HamiltonianCycle, omit: int) -> Vec:
    """Solve all cycle-edge inequalities as equalities except the omitted one.

    Dropping one edge leaves a chain that determines the vector up to scale;
    back-substitution fills it in.  Result is normalized canonically.
    """
    order = cycle.order
    n = cycle.n
    w = [Fraction(0)] * n
    w[order[(omit + 1) % n]] = Fraction(1)
    for t in range(omit + 1, omit + n):
        src = order[t % n]
        dst = order[(t + 1) % n]
        w[dst] = w[src] / a.entries[src][dst]
    return normalize(w)


def cone_extremes(a: ReciprocalMatrix, cycle: HamiltonianCycle) -> tuple[Vec, ...]:
    """Extreme rays of the cone, as canonical vectors with duplicates removed.

    Turning all but one edge inequality into equalities yields one ray per
    omitted edge; when the cycle product is at most 1 the omitted inequality
    holds automatically and the rays span the cone.
    """
    product = cycle_product(a, cycle)
    if product > 1:
        raise ValueError("cycle product exceeds 1; the cone is empty")
    rays: list[Vec] = []
    for omit in range(cycle.n):
        ray = chain_solution(a, cycle, omit)
        if not cone_membership(a, cycle, ray):  # pragma: no cover - guarded by product <= 1
            raise ValueError("omitted inequality violated; inconsistent cone data")
        if ray not in rays:
            rays.append(ray)
    return tuple(rays)


def is_singleton_cone(a: ReciprocalMatrix, cycle: HamiltonianCycle) -> bool:
    """True when the cone is a single ray, i.e. the cycle product equals 1."""
    product = cycle_product(a, cycle)
    if product > 1:
        raise ValueError("cycle product exceeds 1; the cone is empty")
    return product == 1


@dataclass(frozen=True)
class EfficiencyCone:
    """Convex cone of weight vectors whose dominance digraph contains a cycle.

    ``inequalities`` lists (i, j, a_ij) triples meaning w[i] >= a_ij * w[j].
    """

    cycle: HamiltonianCycle
    product: Fraction
    inequalities: tuple[tuple[int, int, Fraction], ...]
    extremes: tuple[Vec, ...]
    singleton: bool

    def contains(self, w: Sequence[Fraction]) -> bool:
        vec = as_weight_vector(w)
        return all(vec[i] >= c * vec[j] for i, j, c in self.inequalities)


def efficiency_cone(a: ReciprocalMatrix, cycle: HamiltonianCycle) -> EfficiencyCone:
    """Assemble the cone record for a cycle with product at most 1."""
    product = cycle_product(a, cycle)
    if product > 1:
        raise ValueError("cycle product exceeds 1; the cone is empty")
    inequalities = tuple((i, j, a.entries[i][j]) for i, j in cycle.edges())
    return EfficiencyCone(
        cycle=cycle,
        product=product,
        inequalities=inequalities,
        extremes=cone_extremes(a, cycle),
        singleton=product == 1,
    )


def _consecutive_case_positions(n: int, k: int, diag: list[Fraction]) -> list[int] | None:
    """Cycle through an entry < 1 followed by <= 1 on the k-th upper diagonal."""
    m = n - k
    for i in range(1, m):  # 1-based diagonal positions with a successor
        if diag[i - 1] < 1 and diag[i] <= 1:
            return [i, i + k] + list(range(i + 1, i + k)) + list(range(i + k + 1, n + 1)) + list(range(1, i))
    return None


def _wrap_case_positions(n: int, k: int) -> list[int]:
    """Cycle through the final diagonal entry, valid once the consecutive
    case fails in both orientations and that entry is < 1."""
    if k > 2:
        return [n - k, n] + list(range(1, n - k)) + list(range(n - k + 1, n))
    if n % 2 == 0:
        return [1] + list(range(2, n + 1, 2)) + list(range(n - 1, 2, -2))
    return list(range(1, n - 1, 2)) + [n] + list(range(n - 1, 1, -2))


def resolve_unit_cycle(a: ReciprocalMatrix, cycle: HamiltonianCycle) -> HamiltonianCycle:
    """Replace an all-ones cycle of an inconsistent matrix by a sub-unit one.

    Requires every matrix entry along ``cycle`` to equal 1.  Returns a
    Hamiltonian cycle whose entries are all at most 1 with at least one
    strictly below 1, so its cone strictly absorbs the input ray.
    """
    if any(value != 1 for value in cycle_entries(a, cycle)):
        raise ValueError("resolve_unit_cycle needs a cycle whose entries all equal 1")
    if is_consistent(a):
        raise ValueError("matrix is consistent; every cycle stays at product 1")

    order = cycle.order
    n = a.n
    # Work in positions along the cycle, so the cycle becomes 1 -> 2 -> ... -> n -> 1.
    b = [[a.entries[order[t]][order[s]] for s in range(n)] for t in range(n)]

    for k in range(2, n - 1):
        diag = [b[i][i + k] for i in range(n - k)]
        if any(value != 1 for value in diag):
            break
    else:  # pragma: no cover - an inconsistent matrix has an off-unit diagonal
        raise ValueError("no off-unit diagonal found despite inconsistency")

    # Try the consecutive case in both orientations before any wrap case:
    # the wrap constructions are only valid once the consecutive case fails
    # on the diagonal and on its reciprocal.
    mirrored = [1 / value for value in diag]
    m = n - k
    transposed = False
    positions = _consecutive_case_positions(n, k, diag)
    if positions is None:
        positions = _consecutive_case_positions(n, k, mirrored)
        transposed = positions is not None
    if positions is None:
        if diag[m - 1] < 1:
            positions = _wrap_case_positions(n, k)
        elif mirrored[m - 1] < 1:
            positions = _wrap_case_positions(n, k)
            transposed = True
        else:  # pragma: no cover - the diagonal ends off-unit when both searches fail
            raise ValueError("no replacement construction applies")

    pos0 = [p - 1 for p in positions]
    if transposed:
        # A cycle built against the transpose reads its entries backwards here.
        pos0 = [pos0[0]] + pos0[:0:-1]
    replacement = HamiltonianCycle.from_vertices([order[p] for p in pos0])

    values = cycle_entries(a, replacement)
    if any(v > 1 for v in values) or all(v == 1 for v in values):
        raise ValueError("constructed cycle fails its guarantee; please report this input")
    return replacement
