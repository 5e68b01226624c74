"""Order reversals between a weight vector and its comparison matrix.

A pair (i, j) reverses order when the vector disagrees with the matrix about
who ranks higher: the matrix prefers j but the vector weakly prefers i (or
conversely), or exactly one of the two expresses a tie.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cones import cycle_entries, cycle_product, chain_solution
from .digraph import HamiltonianCycle
from .matrices import ReciprocalMatrix, Vec, as_weight_vector

__all__ = ["ReversalReport", "count_reversals", "min_reversal_vector"]

# Reversal kinds: the vector strictly contradicts a strict comparison, the
# vector breaks a tie the matrix expresses, or the vector ties a strict one.
STRICT_FLIP = "strict-flip"
TIE_BROKEN = "tie-broken"
TIE_FORCED = "tie-forced"


@dataclass(frozen=True)
class ReversalReport:
    """Reversing pairs of (matrix, vector), with an optional cycle-local count."""

    pairs: tuple[tuple[int, int, str], ...]
    along_cycle: int | None = None

    @property
    def count(self) -> int:
        return len(self.pairs)


def _classify(a_ij: Fraction, wi: Fraction, wj: Fraction) -> str | None:
    if a_ij == 1:
        return TIE_BROKEN if wi != wj else None
    if wi == wj:
        return TIE_FORCED
    if a_ij < 1 and wi > wj:
        return STRICT_FLIP
    if a_ij > 1 and wi < wj:
        return STRICT_FLIP
    return None


def count_reversals(
    a: ReciprocalMatrix, w: Sequence[Fraction], cycle: HamiltonianCycle | None = None
) -> ReversalReport:
    """Scan all index pairs i < j for order reversals.

    With ``cycle`` given, also counts how many of the cycle's edge pairs
    reverse (each unordered pair counted once).
    """
    vec = as_weight_vector(w)
    n = a.n
    if len(vec) != n:
        raise ValueError("vector length does not match matrix dimension")
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            kind = _classify(a.entries[i][j], vec[i], vec[j])
            if kind is not None:
                pairs.append((i, j, kind))
    along = None
    if cycle is not None:
        if cycle.n != n:
            raise ValueError("cycle length does not match matrix dimension")
        reversing = {(min(i, j), max(i, j)) for i, j, _ in pairs}
        along = sum(1 for i, j in cycle.edges() if (min(i, j), max(i, j)) in reversing)
    return ReversalReport(pairs=tuple(pairs), along_cycle=along)


def min_reversal_vector(a: ReciprocalMatrix, cycle: HamiltonianCycle) -> tuple[Vec, int]:
    """Efficient vector from ``cycle``'s cone minimizing reversals along it.

    Rotates the cycle so its largest entry becomes the one inequality left
    slack, then solves the remaining edges as equalities.  The cycle-local
    reversal count is 0 exactly when some entry along the cycle exceeds 1 or
    the cycle product equals 1; otherwise it is 1, and no vector of the cone
    does better.
    """
    product = cycle_product(a, cycle)
    if product > 1:
        raise ValueError("cycle product exceeds 1; the cone is empty")
    entries = cycle_entries(a, cycle)
    top = max(entries)
    wrap = min(t for t, value in enumerate(entries) if value == top)
    vec = chain_solution(a, cycle, omit=wrap)
    report = count_reversals(a, vec, cycle)
    assert report.along_cycle is not None
    return vec, report.along_cycle
