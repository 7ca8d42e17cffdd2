"""Interval descriptors built from a saturating cover flow.

When the cover network's maximum flow reaches 1/2 the flow decomposes
the half-open interval [0,1) into a measure-preserving map h onto the
double cover: the flow-carrying cover edges, in edge order, tile
[0, 1/2) with one interval of length f_xy each; the tile at [a, a+f)
maps to the X endpoint and its shift by +1/2 to the Y endpoint. The
implicit interval graph pairs t with t + 1/2, a continuum perfect
matching that is vertex transitive under rotation, so its existence
caps the limiting independence measure of the tensor powers at 1/2.

The interval graph itself is never materialized; the piece list is the
whole artifact, and the verifier checks its defining properties (an
exact tiling of [0,1), fiber lengths equal to the cover measures, and
adjacent targets on every mirror pair) at the finitely many breakpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import SaturationRequired
from .graphs import WeightedGraph, iter_bits
from .hallflow import HALF, DoubleCover, build_double_cover, condition_network, max_flow


@dataclass(frozen=True)
class IntervalPiece:
    """Half-open interval [lo, hi) mapped to one cover vertex."""

    lo: Fraction
    hi: Fraction
    target: int


@dataclass(frozen=True)
class IntervalHom:
    """Piecewise-constant map from [0,1) onto the double cover."""

    pieces: tuple[IntervalPiece, ...]


@dataclass(frozen=True)
class DescriptorReport:
    """Descriptor map, the 1/2 bound it certifies, and piece provenance.

    ``notes`` lists, aligned with the pieces, the cover edge (x, y) whose
    flow produced each piece.
    """

    hom: IntervalHom
    upper_bound: Fraction
    notes: tuple[tuple[int, int], ...]


def build_descriptor(g: WeightedGraph) -> DescriptorReport:
    """Construct the interval map from the canonical maximum flow.

    Requires the flow to saturate at exactly 1/2 (no violating set);
    otherwise no such map exists and SaturationRequired is raised.
    Zero-flow edges contribute no piece. Pieces are listed by left
    endpoint, base tiles first, mirrors after.
    """
    cover = build_double_cover(g)
    result = max_flow(condition_network(cover))
    if result.value != HALF:
        raise SaturationRequired(
            f"descriptor requires saturating flow, got value {result.value}"
        )
    n = g.n
    base_pieces = []
    mirror_pieces = []
    notes = []
    position = Fraction(0)
    for x in range(n):
        for y in iter_bits(cover.g_prime.adj[x]):
            f = result.flows[(x, y)]
            if f == 0:
                continue
            base_pieces.append(IntervalPiece(position, position + f, x))
            mirror_pieces.append(IntervalPiece(position + HALF, position + f + HALF, y))
            notes.append((x, y))
            position += f
    if position != HALF:
        raise AssertionError(f"edge flows tile [0,{position}) instead of [0,1/2)")
    pieces = tuple(base_pieces + mirror_pieces)
    return DescriptorReport(IntervalHom(pieces), HALF, tuple(notes + notes))


def check_interval_hom(hom: IntervalHom, cover: DoubleCover) -> Optional[str]:
    """Diagnose the first failed descriptor property, or None if all hold.

    Checked, in exact arithmetic: the pieces tile [0,1) with no gap or
    overlap; the total length mapped to each cover vertex equals its
    measure; and every tile of [0,1/2) has its exact +1/2 mirror with an
    adjacent target. A piecewise-constant map makes these finitely many
    breakpoint checks decide the continuum conditions.
    """
    gp = cover.g_prime
    for p in hom.pieces:
        if not (0 <= p.lo < p.hi <= 1):
            return f"piece [{p.lo},{p.hi}) is not a half-open subinterval of [0,1)"
        if not 0 <= p.target < gp.n:
            return f"piece target {p.target} is not a cover vertex"

    ordered = sorted(hom.pieces, key=lambda p: p.lo)
    cursor = Fraction(0)
    for p in ordered:
        if p.lo < cursor:
            return f"pieces overlap at {p.lo}"
        if p.lo > cursor:
            return f"gap in coverage at {cursor}"
        cursor = p.hi
    if cursor != 1:
        return f"coverage stops at {cursor} instead of 1"

    fiber = [Fraction(0)] * gp.n
    for p in hom.pieces:
        fiber[p.target] += p.hi - p.lo
    for z in range(gp.n):
        if fiber[z] != gp.measures[z]:
            return (
                f"fiber of {gp.labels[z]} has length {fiber[z]}, "
                f"measure is {gp.measures[z]}"
            )

    upper = {}
    for p in ordered:
        if p.lo < HALF < p.hi:
            return f"piece [{p.lo},{p.hi}) straddles 1/2"
        if p.lo >= HALF:
            upper[(p.lo, p.hi)] = p.target
    for p in ordered:
        if p.hi > HALF:
            continue
        key = (p.lo + HALF, p.hi + HALF)
        if key not in upper:
            return f"piece [{p.lo},{p.hi}) has no mirror at +1/2"
        mate = upper[key]
        if not gp.adj[p.target] >> mate & 1:
            return (
                f"mirror pair [{p.lo},{p.hi}) targets {gp.labels[p.target]} and "
                f"{gp.labels[mate]}, which are not adjacent in the cover"
            )
    return None


def verify_interval_hom(hom: IntervalHom, cover: DoubleCover) -> bool:
    """True iff the interval map is a measure-preserving homomorphism."""
    return check_interval_hom(hom, cover) is None


def verify_finite_hom(
    mapping: Sequence[int], h: WeightedGraph, g: WeightedGraph
) -> bool:
    """Is ``mapping`` a measure-preserving homomorphism from h onto g?

    Edges must map to edges, and each fiber must carry exactly the
    measure of its image vertex; by additivity the fiber check extends
    to every vertex subset.
    """
    if len(mapping) != h.n:
        raise ValueError(f"mapping covers {len(mapping)} of {h.n} vertices")
    if any(not 0 <= t < g.n for t in mapping):
        raise ValueError("mapping image out of range")
    for u, v in h.edges():
        iu, iv = mapping[u], mapping[v]
        if iu == iv or not g.adj[iu] >> iv & 1:
            return False
    fiber = [Fraction(0)] * g.n
    for v in range(h.n):
        fiber[mapping[v]] += h.measures[v]
    return all(fiber[t] == g.measures[t] for t in range(g.n))


def interval_hom_to_json(hom: IntervalHom, cover: DoubleCover) -> list[dict]:
    """Serialize pieces as {lo, hi, target-label} dicts in piece order."""
    labels = cover.g_prime.labels
    return [
        {
            "lo": f"{p.lo.numerator}/{p.lo.denominator}",
            "hi": f"{p.hi.numerator}/{p.hi.denominator}",
            "target": labels[p.target],
        }
        for p in hom.pieces
    ]


def interval_hom_from_json(data: Sequence[dict], cover: DoubleCover) -> IntervalHom:
    labels = cover.g_prime.labels
    if len(set(labels)) != len(labels):
        raise ValueError("cover labels are not unique; cannot resolve targets")
    index = {label: z for z, label in enumerate(labels)}
    pieces = []
    for entry in data:
        try:
            target = index[entry["target"]]
            piece = IntervalPiece(Fraction(entry["lo"]), Fraction(entry["hi"]), target)
        except (KeyError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid interval piece {entry!r}") from exc
        pieces.append(piece)
    return IntervalHom(tuple(pieces))
