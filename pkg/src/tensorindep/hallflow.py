"""Flow test for independent sets that outweigh their neighborhood.

Whether some independent set I satisfies mu(I) > mu(N(I)) is decided in
polynomial time on the bipartite double cover G' = G x K2. Side X holds
the copies (z, A), side Y the copies (z, B); a source feeds X with arc
capacities equal to the cover measures, Y drains into a sink likewise,
and every cover edge gets capacity 2. Since the cut around the source
already costs exactly 1/2, no minimum cut ever uses a capacity-2 arc,
which makes 2 an effective infinity while keeping all arithmetic
rational. The maximum flow is therefore at most 1/2, with equality
exactly when every vertex set Q satisfies mu(Q) <= mu(N(Q)); any deficit
turns the minimum cut into a violating set Q and, from it, a certified
independent witness.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graphs import (
    WeightedGraph,
    is_independent,
    iter_bits,
    mask_from,
    measure_of,
    neighborhood,
)

#: Stand-in for infinite capacity on cover edges; any value above 1 works.
BIG = Fraction(2)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class DoubleCover:
    """The cover G x K2 with its side masks and the map back to G.

    Vertex (z, A) of the cover sits at index z, vertex (z, B) at index
    n + z, so side X comes first and both sides follow the base order.
    Cover measures are half the base measures.
    """

    base: WeightedGraph
    g_prime: WeightedGraph
    side_x: int
    side_y: int
    back_map: tuple[tuple[int, str], ...]


@dataclass(frozen=True)
class FlowNetwork:
    """Source/sink network over the cover vertices, arcs in build order."""

    graph_nodes: int
    source: int
    sink: int
    arcs: tuple[tuple[int, int, Fraction], ...]


@dataclass(frozen=True)
class FlowResult:
    """Exact maximum flow with its canonical minimum cut.

    ``flows`` maps every arc to its flow; ``cut_source_side`` is the set
    of cover vertices reachable from the source in the final residual
    network, which is the inclusion-minimal minimum cut.
    """

    value: Fraction
    flows: dict[tuple[int, int], Fraction]
    cut_source_side: frozenset[int]


def build_double_cover(g: WeightedGraph) -> DoubleCover:
    n = g.n
    labels = [f"({g.labels[z]},A)" for z in range(n)] + [
        f"({g.labels[z]},B)" for z in range(n)
    ]
    measures = [m / 2 for m in g.measures] * 2
    edges = []
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    g_prime = WeightedGraph(measures, edges, labels)
    back_map = tuple((z, "A") for z in range(n)) + tuple((z, "B") for z in range(n))
    side_x = (1 << n) - 1
    return DoubleCover(g, g_prime, side_x, side_x << n, back_map)


def condition_network(cover: DoubleCover) -> FlowNetwork:
    n = cover.base.n
    gp = cover.g_prime
    source = 2 * n
    sink = 2 * n + 1
    arcs: list[tuple[int, int, Fraction]] = []
    for x in range(n):
        arcs.append((source, x, gp.measures[x]))
    for x in range(n):
        for y in iter_bits(gp.adj[x]):
            arcs.append((x, y, BIG))
    for y in range(n, 2 * n):
        arcs.append((y, sink, gp.measures[y]))
    return FlowNetwork(2 * n, source, sink, tuple(arcs))


def max_flow(net: FlowNetwork) -> FlowResult:
    """Exact maximum flow via blocking flows on shortest layered networks.

    Capacities are scaled by the least common multiple of their
    denominators, the search runs on integers, and the result is scaled
    back, so termination and exactness are both guaranteed. Arc order is
    the construction order, which makes the final flow and the residual
    reachability cut deterministic.
    """
    scale = math.lcm(*(c.denominator for _, _, c in net.arcs)) if net.arcs else 1
    unbounded = max((int(c * scale) for _, _, c in net.arcs), default=0) + 1
    node_count = net.graph_nodes + 2
    # Forward arc i and its reverse live at graph[u][..] entries [v, cap, rev].
    graph: list[list[list[int]]] = [[] for _ in range(node_count)]
    positions = []
    for u, v, cap in net.arcs:
        positions.append((u, len(graph[u])))
        graph[u].append([v, int(cap * scale), len(graph[v])])
        graph[v].append([u, 0, len(graph[u]) - 1])

    source, sink = net.source, net.sink
    level = [0] * node_count
    pointer = [0] * node_count

    def bfs() -> bool:
        for i in range(node_count):
            level[i] = -1
        level[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v, cap, _ in graph[u]:
                if cap > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level[sink] >= 0

    def dfs(u: int, pushed: int) -> int:
        if u == sink:
            return pushed
        while pointer[u] < len(graph[u]):
            edge = graph[u][pointer[u]]
            v, cap, rev = edge
            if cap > 0 and level[v] == level[u] + 1:
                got = dfs(v, min(pushed, cap))
                if got > 0:
                    edge[1] -= got
                    graph[v][rev][1] += got
                    return got
            pointer[u] += 1
        return 0

    total = 0
    while bfs():
        for i in range(node_count):
            pointer[i] = 0
        while True:
            pushed = dfs(source, unbounded)
            if pushed == 0:
                break
            total += pushed

    flows: dict[tuple[int, int], Fraction] = {}
    for (u, v, cap), (node, slot) in zip(net.arcs, positions):
        residual = graph[node][slot][1]
        flows[(u, v)] = Fraction(int(cap * scale) - residual, scale)

    reachable = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v, cap, _ in graph[u]:
            if cap > 0 and v not in reachable:
                reachable.add(v)
                queue.append(v)
    cut = frozenset(v for v in reachable if v < net.graph_nodes)
    return FlowResult(Fraction(total, scale), flows, cut)


def violating_set(g: WeightedGraph) -> Optional[int]:
    """A set Q with mu(Q) > mu(N(Q)), or None when no such set exists.

    None is returned exactly when the cover network's maximum flow is
    1/2. Otherwise Q is read off the minimum cut: the X-side vertices on
    the source side have all their cover neighbors inside the cut, so
    their base projection outweighs its neighborhood.
    """
    cover = build_double_cover(g)
    result = max_flow(condition_network(cover))
    if result.value == HALF:
        return None
    if result.value > HALF:
        raise AssertionError(f"maximum flow {result.value} exceeds 1/2")
    q = mask_from(v for v in result.cut_source_side if v < g.n)
    if measure_of(g, q) <= measure_of(g, neighborhood(g, q)):
        raise AssertionError("cut projection failed to outweigh its neighborhood")
    return q


def independent_witness_from_set(g: WeightedGraph, q: int) -> int:
    """Shrink a violating set to a certified independent one.

    Keeps the vertices of ``q`` with no neighbor inside ``q``. Given
    mu(q) > mu(N(q)), the result is nonempty, independent, and still
    outweighs its own neighborhood; all three facts are re-checked here
    in exact arithmetic rather than assumed.
    """
    if measure_of(g, q) <= measure_of(g, neighborhood(g, q)):
        raise ValueError("set does not outweigh its neighborhood")
    witness = mask_from(v for v in iter_bits(q) if not g.adj[v] & q)
    if witness == 0:
        raise AssertionError("extraction produced an empty witness")
    if not is_independent(g, witness):
        raise AssertionError("extraction produced a dependent witness")
    if measure_of(g, witness) <= measure_of(g, neighborhood(g, witness)):
        raise AssertionError("witness lost the strict measure inequality")
    return witness


def violating_independent_set(g: WeightedGraph) -> Optional[int]:
    """Certified independent I with mu(I) > mu(N(I)), or None if none exists."""
    q = violating_set(g)
    if q is None:
        return None
    return independent_witness_from_set(g, q)
