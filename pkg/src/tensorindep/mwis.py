"""Exact maximum-measure independent sets.

The optimizer is a branch-and-bound search on bitset graphs: absorb
isolated vertices, split connected components (tensor powers of sparse
graphs shatter into many), branch on a maximum-degree vertex, and prune
with a greedy clique-cover bound. The measures are rescaled once to a
common denominator, so the whole search runs on arbitrary-precision
integers and the optimum is exact.

The optimum value is independent of search order. The reported witness
is canonical as well: a final pass re-derives it greedily, keeping a
vertex exactly when the optimum is still attainable with every earlier
decision fixed, which yields the same set as preferring inclusion of
lower-indexed vertices.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import SizeCapExceeded
from .graphs import WeightedGraph, iter_bits
from .tensor import tensor_product

#: Largest vertex count the independent-set search accepts by default.
MWIS_CAP = 4096

# The exclude branch can recurse once per vertex; leave room at the cap.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 3 * MWIS_CAP))


@dataclass(frozen=True)
class AlphaResult:
    """Maximum independent measure together with a witness attaining it."""

    value: Fraction
    witness: int


@dataclass(frozen=True)
class AlphaSequence:
    """Values for the powers g^1 .. g^n, possibly cut short by the size cap."""

    terms: tuple[Fraction, ...]
    truncated: bool


def _int_weights(g: WeightedGraph) -> tuple[list[int], int]:
    scale = math.lcm(*(m.denominator for m in g.measures))
    return [int(m * scale) for m in g.measures], scale


def _greedy(adj: tuple[int, ...], weights: list[int], mask: int) -> int:
    order = sorted(iter_bits(mask), key=lambda v: (-weights[v], v))
    blocked = 0
    total = 0
    for v in order:
        if not blocked >> v & 1:
            total += weights[v]
            blocked |= adj[v] | (1 << v)
    return total


def _component_of(adj: tuple[int, ...], mask: int, start_bit: int) -> int:
    comp = start_bit
    frontier = start_bit
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= adj[v]
        frontier = grown & mask & ~comp
        comp |= frontier
    return comp


def _max_weight(adj: tuple[int, ...], weights: list[int], mask: int) -> int:
    """Maximum total weight of an independent subset of ``mask``.

    Isolated vertices are absorbed outright and connected components are
    solved separately; tensor powers of sparse graphs fall apart this
    way, which is where most of the speed comes from.
    """
    total = 0
    live = 0
    for v in iter_bits(mask):
        if adj[v] & mask:
            live |= 1 << v
        else:
            total += weights[v]
    while live:
        comp = _component_of(adj, live, live & -live)
        live &= ~comp
        total += _branch_and_bound(adj, weights, comp)
    return total


def _cover_bound(adj: tuple[int, ...], weights: list[int], cand: int) -> int:
    # Greedy clique cover: an independent set meets each clique at most
    # once, so the heaviest member per clique is a valid upper bound.
    bound = 0
    remaining = cand
    while remaining:
        low = remaining & -remaining
        v = low.bit_length() - 1
        heaviest = weights[v]
        grow = adj[v] & remaining
        clique = low
        while grow:
            low = grow & -grow
            u = low.bit_length() - 1
            clique |= low
            if weights[u] > heaviest:
                heaviest = weights[u]
            grow &= adj[u]
        bound += heaviest
        remaining &= ~clique
    return bound


def _branch_and_bound(adj: tuple[int, ...], weights: list[int], comp: int) -> int:
    best = _greedy(adj, weights, comp)

    def search(cand: int, current: int) -> None:
        nonlocal best
        if current > best:
            best = current
        if not cand:
            return
        # One scan: isolated vertices and the max-degree pivot.
        isolated_weight = 0
        live = cand
        pivot = -1
        pivot_degree = 0
        for v in iter_bits(cand):
            d = (adj[v] & cand).bit_count()
            if d == 0:
                isolated_weight += weights[v]
                live &= ~(1 << v)
            elif d > pivot_degree:
                pivot_degree = d
                pivot = v
        if pivot < 0:
            if current + isolated_weight > best:
                best = current + isolated_weight
            return
        if isolated_weight:
            current += isolated_weight
            cand = live
            if current > best:
                best = current
        if current + _cover_bound(adj, weights, cand) <= best:
            return
        # Detached parts are strictly smaller subproblems; solve them
        # exactly and keep branching on the pivot's component.
        piece = _component_of(adj, cand, 1 << pivot)
        if piece != cand:
            current += _max_weight(adj, weights, cand & ~piece)
            if current > best:
                best = current
            cand = piece
        search(cand & ~(adj[pivot] | (1 << pivot)), current + weights[pivot])
        search(cand & ~(1 << pivot), current)

    search(comp, 0)
    return best


def alpha_bar(g: WeightedGraph, *, cap: int = MWIS_CAP) -> AlphaResult:
    """Maximum measure of an independent set, with a canonical witness.

    Among all optimal sets the witness is the one found by greedy
    inclusion from vertex 0 upward, so identical inputs always produce
    identical output.
    """
    if g.n > cap:
        raise SizeCapExceeded(f"search too large: {g.n} vertices exceeds cap {cap}")
    weights, scale = _int_weights(g)
    best = _max_weight(g.adj, weights, g.full_mask)

    witness = 0
    blocked = 0
    taken_weight = 0
    rest = g.full_mask
    for v in range(g.n):
        rest &= ~(1 << v)
        if blocked >> v & 1:
            continue
        future = rest & ~(blocked | g.adj[v])
        if taken_weight + weights[v] + _max_weight(g.adj, weights, future) == best:
            witness |= 1 << v
            taken_weight += weights[v]
            blocked |= g.adj[v]
    if taken_weight != best:
        raise AssertionError("canonical witness failed to attain the optimum")
    return AlphaResult(Fraction(best, scale), witness)


def _alpha_value(g: WeightedGraph) -> Fraction:
    weights, scale = _int_weights(g)
    return Fraction(_max_weight(g.adj, weights, g.full_mask), scale)


def alpha_sequence(g: WeightedGraph, n_max: int, *, cap: int = MWIS_CAP) -> AlphaSequence:
    """Exact values for g^1 .. g^n_max, stopping early at the size cap.

    The sequence is checked to be nondecreasing on every run; a decrease
    would mean a bug in the search and raises immediately.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    terms: list[Fraction] = []
    power = None
    for k in range(1, n_max + 1):
        if g.n**k > cap:
            return AlphaSequence(tuple(terms), True)
        power = g if power is None else tensor_product(power, g)
        value = _alpha_value(power)
        if terms and value < terms[-1]:
            raise AssertionError(
                f"independence measure decreased from {terms[-1]} to {value} at power {k}"
            )
        terms.append(value)
    return AlphaSequence(tuple(terms), False)
