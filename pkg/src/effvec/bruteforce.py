"""Brute-force cross-checks, independent of the graph criterion.

These routines exist to validate the fast paths: a factorial Hamiltonian
search over raw adjacency, and a dominance search that refutes efficiency
straight from the definition.  A found dominator is always a sound
refutation (it is re-validated entrywise); finding none proves nothing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .decomposition import DEFAULT_CYCLE_CAP, Decomposition, decompose
from .digraph import DominanceDigraph, HamiltonianCycle
from .matrices import ReciprocalMatrix, Vec, as_weight_vector, proportional

__all__ = ["DominanceProbe", "exhaustive_hamiltonian", "dominance_search", "probe"]

EXHAUSTIVE_LIMIT = 8


def exhaustive_hamiltonian(g: DominanceDigraph) -> HamiltonianCycle | None:
    """Try all (n-1)! anchored vertex orders; first cycle fully present wins."""
    n = g.n
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive search limited to n <= {EXHAUSTIVE_LIMIT}")
    for rest in itertools.permutations(range(1, n)):
        order = (0,) + rest
        if all(g.has_edge(order[t], order[(t + 1) % n]) for t in range(n)):
            return HamiltonianCycle(order)
    return None


@dataclass(frozen=True)
class DominanceProbe:
    """Entrywise comparison of two candidate vectors against a matrix.

    ``candidate`` dominates ``base`` when every absolute deviation
    |a[i][j] - v[i]/v[j]| is at most the base's, at least one is strictly
    smaller, and the vectors are not proportional.
    """

    base: Vec
    candidate: Vec
    weak: bool
    strict_positions: tuple[tuple[int, int], ...]
    proportional: bool

    @property
    def dominates(self) -> bool:
        return self.weak and bool(self.strict_positions) and not self.proportional


def probe(a: ReciprocalMatrix, base: Sequence[Fraction], candidate: Sequence[Fraction]) -> DominanceProbe:
    """Exact entrywise dominance comparison."""
    w = as_weight_vector(base)
    v = as_weight_vector(candidate)
    n = a.n
    if len(w) != n or len(v) != n:
        raise ValueError("vector length does not match matrix dimension")
    weak = True
    strict: list[tuple[int, int]] = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            dev_w = abs(a.entries[i][j] - w[i] / w[j])
            dev_v = abs(a.entries[i][j] - v[i] / v[j])
            if dev_v > dev_w:
                weak = False
            elif dev_v < dev_w:
                strict.append((i, j))
    return DominanceProbe(
        base=tuple(w),
        candidate=tuple(v),
        weak=weak,
        strict_positions=tuple(strict),
        proportional=proportional(w, v),
    )


def _coordinate_candidates(a: ReciprocalMatrix, w: Vec) -> list[Vec]:
    """Single-coordinate replacements onto the breakpoint grid a[i][j]*w[j]."""
    n = a.n
    out = []
    for i in range(n):
        values = sorted({a.entries[i][j] * w[j] for j in range(n) if j != i})
        for value in values:
            if value != w[i]:
                out.append(tuple(value if t == i else w[t] for t in range(n)))
    return out


def _subset_scaling_candidates(a: ReciprocalMatrix, w: Vec) -> list[Vec]:
    """Scale each proper vertex subset by its tightest cross-pair factor.

    For a subset T the factor max over i in T, j outside of a[i][j]*w[j]/w[i]
    brings the closest cross inequality to equality; if T's cross pairs are
    all slack in w, the scaled copy beats w entrywise.
    """
    n = a.n
    out = []
    indices = range(n)
    for size in range(1, n):
        for subset in itertools.combinations(indices, size):
            inside = set(subset)
            factor = max(
                a.entries[i][j] * w[j] / w[i] for i in subset for j in indices if j not in inside
            )
            if factor == 1:
                continue
            out.append(tuple(w[t] * factor if t in inside else w[t] for t in range(n)))
    return out


def dominance_search(
    a: ReciprocalMatrix,
    w: Sequence[Fraction],
    budget: int | None = None,
    cap: int = DEFAULT_CYCLE_CAP,
    decomposition: "Decomposition | None" = None,
) -> Vec | None:
    """Search for a vector dominating w; validated exactly before returning.

    Candidates, in order: single-coordinate moves onto the breakpoint grid,
    scaled copies of vertex subsets, then extreme rays of every sub-unit
    cycle cone (computed only if reached; pass ``decomposition`` to reuse
    one).  ``budget`` optionally limits how many candidates are probed.
    Returns the first validated dominator, or None (which proves nothing).
    """
    base = as_weight_vector(w)
    if len(base) != a.n:
        raise ValueError("vector length does not match matrix dimension")

    def candidates():
        yield from _coordinate_candidates(a, base)
        yield from _subset_scaling_candidates(a, base)
        d = decomposition if decomposition is not None else decompose(a, cap)
        for cone in d.cones:
            yield from cone.extremes

    tested = 0
    for candidate in candidates():
        if budget is not None and tested >= budget:
            break
        tested += 1
        if probe(a, base, candidate).dominates:
            return candidate
    return None
