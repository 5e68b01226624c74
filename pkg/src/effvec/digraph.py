"""Dominance digraphs and the graph test for efficiency.

For a comparison matrix A and weight vector w, the dominance digraph has an
edge i -> j exactly when ``w[i] >= a[i][j] * w[j]``: the vector concedes at
least as much to i over j as the matrix asks.  At least one of the two edges
exists for every pair (the digraph is semi-complete); ties contribute both.

w is efficient (no other vector weakly improves every entrywise deviation
from A, strictly somewhere) precisely when this digraph is strongly
connected, equivalently when it carries a Hamiltonian cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from fractions import Fraction

from .matrices import ReciprocalMatrix, Vec, as_weight_vector

__all__ = [
    "DominanceDigraph",
    "EfficiencyCertificate",
    "HamiltonianCycle",
    "build_digraph",
    "strongly_connected",
    "find_hamiltonian_cycle",
    "is_efficient",
]


@dataclass(frozen=True)
class HamiltonianCycle:
    """A directed cycle visiting every vertex once; stored starting at vertex 0."""

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.order)
        if n < 2:
            raise ValueError("cycles need at least two vertices")
        if sorted(self.order) != list(range(n)):
            raise ValueError("cycle must visit each vertex exactly once")
        if self.order[0] != 0:
            raise ValueError("canonical cycles start at vertex 0; use from_vertices")

    @classmethod
    def from_vertices(cls, vertices: Sequence[int]) -> "HamiltonianCycle":
        """Build from any rotation of the vertex sequence."""
        vertices = list(vertices)
        if 0 not in vertices:
            raise ValueError("cycle must contain vertex 0")
        at = vertices.index(0)
        return cls(tuple(vertices[at:] + vertices[:at]))

    @property
    def n(self) -> int:
        return len(self.order)

    def edges(self) -> tuple[tuple[int, int], ...]:
        n = self.n
        return tuple((self.order[t], self.order[(t + 1) % n]) for t in range(n))

    def reverse(self) -> "HamiltonianCycle":
        return HamiltonianCycle((0,) + tuple(reversed(self.order[1:])))


@dataclass(frozen=True)
class DominanceDigraph:
    """Adjacency of the dominance relation; adjacency[i][j] is the edge i -> j."""

    adjacency: tuple[tuple[bool, ...], ...]

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def has_edge(self, i: int, j: int) -> bool:
        return self.adjacency[i][j]


@dataclass(frozen=True)
class EfficiencyCertificate:
    """Outcome of the efficiency test, with a checkable witness either way.

    Efficient vectors carry a Hamiltonian cycle of the dominance digraph;
    inefficient ones carry a cut: a vertex set receiving no edge from outside,
    so the digraph cannot be strongly connected.
    """

    efficient: bool
    cycle: HamiltonianCycle | None = None
    cut: tuple[int, ...] | None = None


def build_digraph(a: ReciprocalMatrix, w: Sequence[Fraction]) -> DominanceDigraph:
    """Exact dominance digraph of (a, w); ties yield edges in both directions."""
    vec: Vec = as_weight_vector(w)
    n = a.n
    if len(vec) != n:
        raise ValueError(f"vector length {len(vec)} does not match matrix dimension {n}")
    rows = []
    for i in range(n):
        ai = a.entries[i]
        wi = vec[i]
        rows.append(tuple(wi >= ai[j] * vec[j] for j in range(n)))
    return DominanceDigraph(tuple(rows))


def strongly_connected(g: DominanceDigraph) -> tuple[bool, tuple[tuple[int, ...], ...]]:
    """Kosaraju SCC test; components come back in topological order."""
    n = g.n
    adj = g.adjacency

    finish: list[int] = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        stack: list[tuple[int, int]] = [(start, 0)]
        seen[start] = True
        while stack:
            v, nxt = stack[-1]
            advanced = False
            for j in range(nxt, n):
                if adj[v][j] and not seen[j] and j != v:
                    stack[-1] = (v, j + 1)
                    stack.append((j, 0))
                    seen[j] = True
                    advanced = True
                    break
            if not advanced:
                finish.append(v)
                stack.pop()

    components: list[tuple[int, ...]] = []
    assigned = [False] * n
    for v in reversed(finish):
        if assigned[v]:
            continue
        member = [v]
        assigned[v] = True
        queue = [v]
        while queue:
            u = queue.pop()
            for j in range(n):
                # reverse edge u <- j
                if adj[j][u] and not assigned[j] and j != u:
                    assigned[j] = True
                    member.append(j)
                    queue.append(j)
        components.append(tuple(sorted(member)))
    return len(components) == 1, tuple(components)


def _hamiltonian_path(g: DominanceDigraph) -> list[int]:
    """Insertion construction of a Hamiltonian path; valid in any semi-complete digraph."""
    path = [0]
    for u in range(1, g.n):
        if g.has_edge(path[-1], u):
            path.append(u)
            continue
        if g.has_edge(u, path[0]):
            path.insert(0, u)
            continue
        # First position whose occupant u beats; its predecessor beats u.
        for t in range(1, len(path)):
            if g.has_edge(u, path[t]):
                path.insert(t, u)
                break
        else:  # pragma: no cover - impossible when g is semi-complete
            raise ValueError("digraph is not semi-complete")
    return path


def find_hamiltonian_cycle(g: DominanceDigraph) -> HamiltonianCycle:
    """Hamiltonian cycle of a strongly connected semi-complete digraph.

    Builds a Hamiltonian path by insertion, closes its longest closable
    prefix into a cycle, then grows the cycle one splice at a time.  Runs in
    polynomial time; never enumerates permutations.
    """
    strong, _ = strongly_connected(g)
    if not strong:
        raise ValueError("digraph is not strongly connected; no Hamiltonian cycle exists")
    path = _hamiltonian_path(g)
    n = g.n

    close_at = max(t for t in range(1, n) if g.has_edge(path[t], path[0]))
    cycle = path[: close_at + 1]
    remaining = path[close_at + 1 :]

    while remaining:
        inserted = False
        for u in sorted(remaining):
            k = len(cycle)
            for t in range(k):
                if g.has_edge(cycle[t], u) and g.has_edge(u, cycle[(t + 1) % k]):
                    cycle.insert(t + 1, u)
                    remaining.remove(u)
                    inserted = True
                    break
            if inserted:
                break
        if inserted:
            continue
        # No vertex slots in, so each remaining vertex either beats the whole
        # cycle or loses to it; strong connectivity forces a bridge pair.
        beats = [u for u in remaining if g.has_edge(u, cycle[0])]
        loses = [u for u in remaining if u not in beats]
        bridge = None
        for b in sorted(loses):
            for a in sorted(beats):
                if g.has_edge(b, a):
                    bridge = (b, a)
                    break
            if bridge:
                break
        if bridge is None:  # pragma: no cover - contradiction with strong connectivity
            raise ValueError("digraph is not strongly connected")
        cycle.extend(bridge)
        remaining.remove(bridge[0])
        remaining.remove(bridge[1])

    return HamiltonianCycle.from_vertices(cycle)


def is_efficient(a: ReciprocalMatrix, w: Sequence[Fraction]) -> EfficiencyCertificate:
    """Decide efficiency of w for a, with a cycle or cut witness."""
    g = build_digraph(a, w)
    strong, components = strongly_connected(g)
    if strong:
        return EfficiencyCertificate(efficient=True, cycle=find_hamiltonian_cycle(g))
    return EfficiencyCertificate(efficient=False, cut=components[0])
