#!/usr/bin/env python3
"""Measured graphs and the primitive set operations.

Every graph in this library carries an exact probability measure on its
vertices, stored as fractions, and vertex sets are plain int bitmasks.
This walkthrough builds a few graphs, pokes at neighborhoods and
independence, and shows why exact arithmetic matters: the interesting
question everywhere downstream is the STRICT comparison
mu(I) > mu(N(I)), which floats would get wrong on ties.
"""

from fractions import Fraction

from tensorindep import (
    WeightedGraph,
    alpha_bar,
    bipartition,
    cycle_graph,
    is_independent,
    is_vertex_transitive_uniform,
    iter_bits,
    mask_from,
    measure_of,
    neighborhood,
    star_graph,
)


def show(name, g):
    print(f"\n{name}: {g.n} vertices, {g.edge_count()} edges")
    for v in range(g.n):
        print(f"  {g.labels[v]}: measure {g.measures[v]}")


def names(g, mask):
    return "{" + ", ".join(g.labels[v] for v in iter_bits(mask)) + "}"


print("=" * 64)
print("  1. building measured graphs")
print("=" * 64)

p3 = WeightedGraph([Fraction(1, 3)] * 3, [(0, 1), (1, 2)], ["u", "v", "w"])
show("path u-v-w, uniform", p3)

biased = WeightedGraph([Fraction(2, 3), Fraction(1, 3)], [(0, 1)], ["u", "v"])
show("single edge, biased 2/3 vs 1/3", biased)

print("\nvalidation is strict; measures must sum to exactly 1:")
try:
    WeightedGraph([Fraction(1, 2), Fraction(2, 5)], [(0, 1)])
except ValueError as exc:
    print(f"  rejected: {exc}")

print("\n" + "=" * 64)
print("  2. neighborhoods, independence, measures")
print("=" * 64)

ends = mask_from([0, 2])
print(f"\nS = {names(p3, ends)}")
print(f"  N(S)          = {names(p3, neighborhood(p3, ends))}")
print(f"  independent?    {is_independent(p3, ends)}")
print(f"  mu(S)         = {measure_of(p3, ends)}")
print(f"  mu(N(S))      = {measure_of(p3, neighborhood(p3, ends))}")
print("  the ends outweigh the middle: 2/3 > 1/3, decided exactly")

print("\n" + "=" * 64)
print("  3. maximum-measure independent sets")
print("=" * 64)

for name, g in [
    ("C5 uniform", cycle_graph(5)),
    ("star with 3 leaves", star_graph(3)),
    ("biased edge", biased),
]:
    result = alpha_bar(g)
    print(f"\n{name}: alpha = {result.value}, witness {names(g, result.witness)}")

print("\n" + "=" * 64)
print("  4. structure checks used by the classifier")
print("=" * 64)

c4 = cycle_graph(4)
sides = bipartition(c4)
print(f"\nC4 bipartition: {names(c4, sides[0])} / {names(c4, sides[1])}")
print(f"C5 bipartition: {bipartition(cycle_graph(5))}")
print(f"C5 vertex transitive (uniform): {is_vertex_transitive_uniform(cycle_graph(5))}")
print(f"P3 vertex transitive (uniform): {is_vertex_transitive_uniform(p3)}")
print(f"biased edge transitive: {is_vertex_transitive_uniform(biased)} (non-uniform: undecided)")
