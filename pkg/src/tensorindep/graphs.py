"""Finite graphs carrying an exact probability measure on their vertices.

Vertices are dense 0-based indices. Vertex subsets are plain ``int``
bitmasks (bit ``v`` set means vertex ``v`` is in the set), which keeps
neighborhood and independence checks down to a few word operations.
All measures are :class:`fractions.Fraction`, so strict comparisons such
as "this set outweighs its neighborhood" are decided exactly; no float
ever enters the arithmetic.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .errors import SizeCapExceeded

# Exact rational scalar used for every measure, flow value and bound.
Rational = Fraction

#: Largest vertex count for which the automorphism-transitivity check runs.
TRANSITIVITY_CAP = 16


def mask_from(indices: Iterable[int]) -> int:
    """Bitmask with the given vertex indices set."""
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class WeightedGraph:
    """Immutable finite graph with a probability measure on its vertices.

    Construction validates the measure (nonnegative entries summing to
    exactly 1) and the edge list (no self-loops; symmetry and simplicity
    are automatic because adjacency is stored as one bitmask per vertex).
    Labels are cosmetic and never affect any computation.
    """

    __slots__ = ("labels", "measures", "adj")

    def __init__(
        self,
        measures: Sequence[Fraction | int | str],
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ):
        measures = tuple(Fraction(m) for m in measures)
        n = len(measures)
        if n == 0:
            raise ValueError("a graph needs at least one vertex to carry a probability measure")
        for i, m in enumerate(measures):
            if m < 0:
                raise ValueError(f"vertex {i} has negative measure {m}")
        total = sum(measures)
        if total != 1:
            raise ValueError(f"measures sum to {total}, expected 1")
        if labels is None:
            labels = tuple(f"v{i}" for i in range(n))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError(f"{len(labels)} labels for {n} vertices")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} rejected")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "measures", measures)
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def _from_parts(
        cls,
        labels: tuple[str, ...],
        measures: tuple[Fraction, ...],
        adj: tuple[int, ...],
    ) -> "WeightedGraph":
        # Internal fast path for already-validated parts (tensor products).
        g = object.__new__(cls)
        object.__setattr__(g, "labels", labels)
        object.__setattr__(g, "measures", measures)
        object.__setattr__(g, "adj", adj)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("WeightedGraph is immutable")

    @property
    def n(self) -> int:
        return len(self.measures)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each undirected edge once, as (u, v) with u < v, sorted."""
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def relabeled(self, labels: Sequence[str]) -> "WeightedGraph":
        labels = tuple(str(x) for x in labels)
        if len(labels) != self.n:
            raise ValueError(f"{len(labels)} labels for {self.n} vertices")
        return WeightedGraph._from_parts(labels, self.measures, self.adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.measures == other.measures
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.labels, self.measures, self.adj))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, edges={self.edge_count()})"


def _check_subset(g: WeightedGraph, s: int) -> None:
    if s < 0 or s & ~g.full_mask:
        raise ValueError(f"vertex set {bin(s)} not within the {g.n}-vertex range")


def neighborhood(g: WeightedGraph, s: int) -> int:
    """N(s): every vertex adjacent to at least one vertex of ``s``.

    The result may intersect ``s`` itself.
    """
    _check_subset(g, s)
    out = 0
    for v in iter_bits(s):
        out |= g.adj[v]
    return out


def measure_of(g: WeightedGraph, s: int) -> Fraction:
    """Exact total measure of the vertex set ``s``."""
    _check_subset(g, s)
    return sum((g.measures[v] for v in iter_bits(s)), Fraction(0))


def is_independent(g: WeightedGraph, s: int) -> bool:
    """True iff no edge of ``g`` has both endpoints in ``s``."""
    _check_subset(g, s)
    for v in iter_bits(s):
        if g.adj[v] & s:
            return False
    return True


def bipartition(g: WeightedGraph) -> Optional[tuple[int, int]]:
    """Two-color ``g`` by breadth-first search, or None on an odd cycle.

    The lowest-indexed vertex of each connected component lands on side X.
    Returns the pair of side masks (X, Y).
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in iter_bits(g.adj[u]):
                if color[v] < 0:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    side_x = mask_from(v for v in range(g.n) if color[v] == 0)
    return side_x, g.full_mask ^ side_x


def _uniform(g: WeightedGraph) -> bool:
    return all(m == g.measures[0] for m in g.measures)


def _assignment_order(g: WeightedGraph) -> list[int]:
    # BFS order from vertex 0, restarting at the least unvisited vertex,
    # so each new assignment is constrained by as many prior ones as possible.
    seen = [False] * g.n
    order: list[int] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in iter_bits(g.adj[u]):
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    return order


def _automorphism_onto(g: WeightedGraph, order: list[int], target: int) -> bool:
    """Is there a graph automorphism sending ``order[0]`` to ``target``?"""
    n = g.n
    degree = [g.adj[v].bit_count() for v in range(n)]
    image = [-1] * n
    full = g.full_mask

    def extend(k: int, used: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        cand = full & ~used
        for u in order[:k]:
            if g.adj[v] >> u & 1:
                cand &= g.adj[image[u]]
            else:
                cand &= ~g.adj[image[u]]
        for w in iter_bits(cand):
            if degree[w] != degree[v]:
                continue
            image[v] = w
            if extend(k + 1, used | (1 << w)):
                return True
        image[v] = -1
        return False

    v0 = order[0]
    if degree[target] != degree[v0]:
        return False
    image[v0] = target
    return extend(1, 1 << target)


def is_vertex_transitive_uniform(
    g: WeightedGraph, cap: int = TRANSITIVITY_CAP
) -> Optional[bool]:
    """Decide vertex transitivity for a uniform-measure graph.

    For a finite graph under the uniform measure, the measured notion of
    vertex transitivity coincides with the automorphism group acting
    transitively on vertices, which is what this checks. Non-uniform
    measures admit no finite verification procedure, so the answer there
    is None rather than a guess.
    """
    if not _uniform(g):
        return None
    if g.n > cap:
        raise SizeCapExceeded(
            f"transitivity check too large: {g.n} vertices exceeds cap {cap}"
        )
    if g.n == 1:
        return True
    order = _assignment_order(g)
    return all(_automorphism_onto(g, order, w) for w in range(1, g.n))


# Named families used throughout the tests and demos.

def uniform_measures(n: int) -> list[Fraction]:
    return [Fraction(1, n)] * n


def path_graph(n: int) -> WeightedGraph:
    return WeightedGraph(uniform_measures(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> WeightedGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return WeightedGraph(uniform_measures(n), [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> WeightedGraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return WeightedGraph(uniform_measures(n), edges)


def star_graph(leaves: int) -> WeightedGraph:
    """Star with the center at index 0 and ``leaves`` leaves."""
    n = leaves + 1
    return WeightedGraph(uniform_measures(n), [(0, i) for i in range(1, n)])
