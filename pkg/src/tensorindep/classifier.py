"""Verdicts on the limit of the independence measures of tensor powers.

The decision cascade is ordered so that every rule after the first only
fires once the limit is already pinned below 1/2 by the interval
descriptor:

1. a violating independent set forces the limit to 1;
2. otherwise a descriptor exists, so the limit is at most 1/2, and
   a. any power whose independence measure reaches 1/2 settles it there,
   b. a bipartition settles it there as well (bipartite powers keep half
      the measure independent, and 1 is excluded),
   c. a vertex-transitive uniform graph has a constant sequence, so the
      limit equals the base value,
   d. failing all that, the limit is bracketed between the largest
      computed power value and 1/2.

Every verdict carries a machine-checkable certificate and the certified
upper bound 1 or 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import SizeCapExceeded
from .graphs import (
    WeightedGraph,
    bipartition,
    is_independent,
    is_vertex_transitive_uniform,
    measure_of,
    neighborhood,
)
from .hallflow import HALF, violating_independent_set
from .mwis import MWIS_CAP, AlphaSequence, alpha_sequence
from .tensor import MATERIALIZATION_CAP, TensorPowerView, tensor_power


class VerdictKind(Enum):
    EXACT_ONE = "ExactOne"
    EXACT_HALF = "ExactHalf"
    EXACT_VALUE = "ExactValue"
    INTERVAL = "Interval"


@dataclass(frozen=True)
class Certificate:
    """Evidence backing a verdict; fields are filled as the cascade runs."""

    witness: Optional[int] = None
    alpha_terms: tuple[Fraction, ...] = ()
    alpha_truncated: bool = False
    bipartition: Optional[tuple[int, int]] = None
    vertex_transitive: Optional[bool] = None
    bound_limit: Optional[Fraction] = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class LimitVerdict:
    kind: VerdictKind
    rule: str
    upper_bound: Fraction
    certificate: Certificate
    value: Optional[Fraction] = None
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None


@dataclass(frozen=True)
class BoundSequence:
    """Recursive lower bounds on the power values, with their limit."""

    terms: tuple[Fraction, ...]
    closed_form_limit: Fraction


def default_power_cap(vertex_count: int, cap: int = MWIS_CAP) -> int:
    """Largest exponent whose power stays within the search cap (at least 1)."""
    if vertex_count <= 1:
        return 1
    n = 1
    while vertex_count ** (n + 1) <= cap and n < 64:
        n += 1
    return n


def classify(
    g: WeightedGraph,
    n_max: Optional[int] = None,
    *,
    mwis_cap: int = MWIS_CAP,
    transitivity_cap: int = 16,
) -> LimitVerdict:
    """Run the decision cascade and return a certified verdict.

    Size-cap signals never abort the classification; whatever was
    computed stays in the certificate and the cascade falls through to
    the next applicable rule.
    """
    witness = violating_independent_set(g)
    if witness is not None:
        mu_i = measure_of(g, witness)
        mu_ni = measure_of(g, neighborhood(g, witness))
        cert = Certificate(witness=witness, bound_limit=mu_i / (mu_i + mu_ni))
        return LimitVerdict(
            kind=VerdictKind.EXACT_ONE,
            rule="violating-independent-set",
            upper_bound=Fraction(1),
            certificate=cert,
            value=Fraction(1),
        )

    # No violating set: a descriptor exists, so the limit is at most 1/2.
    if n_max is None:
        n_max = default_power_cap(g.n, mwis_cap)
    elif n_max < 1:
        raise ValueError("n_max must be positive")
    seq: AlphaSequence = alpha_sequence(g, n_max, cap=mwis_cap)
    notes: list[str] = []
    if seq.truncated:
        notes.append(f"alpha sequence truncated after {len(seq.terms)} of {n_max} powers")
    if any(t > HALF for t in seq.terms):
        raise AssertionError(
            "independence measure above 1/2 although no violating set exists"
        )

    if HALF in seq.terms:
        cert = Certificate(
            alpha_terms=seq.terms,
            alpha_truncated=seq.truncated,
            notes=tuple(notes),
        )
        return LimitVerdict(
            kind=VerdictKind.EXACT_HALF,
            rule="alpha-reaches-half+descriptor",
            upper_bound=HALF,
            certificate=cert,
            value=HALF,
        )

    sides = bipartition(g)
    if sides is not None:
        cert = Certificate(
            alpha_terms=seq.terms,
            alpha_truncated=seq.truncated,
            bipartition=sides,
            notes=tuple(notes),
        )
        return LimitVerdict(
            kind=VerdictKind.EXACT_HALF,
            rule="bipartite+descriptor",
            upper_bound=HALF,
            certificate=cert,
            value=HALF,
        )

    transitive: Optional[bool]
    try:
        transitive = is_vertex_transitive_uniform(g, cap=transitivity_cap)
    except SizeCapExceeded as exc:
        transitive = None
        notes.append(str(exc))
    if transitive and seq.terms:
        cert = Certificate(
            alpha_terms=seq.terms,
            alpha_truncated=seq.truncated,
            vertex_transitive=True,
            notes=tuple(notes),
        )
        return LimitVerdict(
            kind=VerdictKind.EXACT_VALUE,
            rule="vertex-transitive-uniform",
            upper_bound=HALF,
            certificate=cert,
            value=seq.terms[0],
        )

    lo = max(seq.terms, default=Fraction(0))
    cert = Certificate(
        alpha_terms=seq.terms,
        alpha_truncated=seq.truncated,
        vertex_transitive=transitive,
        notes=tuple(notes),
    )
    return LimitVerdict(
        kind=VerdictKind.INTERVAL,
        rule="alpha-bracket+descriptor",
        upper_bound=HALF,
        certificate=cert,
        lo=lo,
        hi=HALF,
    )


def lower_bound_sequence(
    g: WeightedGraph,
    independent: int,
    count: int,
    seed: Optional[Fraction] = None,
) -> BoundSequence:
    """Affine recursion of lower bounds seeded by an independent set.

    With I the given set, U the vertices outside I and N(I), and m_k the
    independence measure of the k-th power, m_k >= mu(I) + mu(U) m_{k-1}:
    prepend I on the first coordinate or continue an optimal set of the
    remaining power over U. terms[0] defaults to mu(I), and term k then
    lower-bounds m_{k+1}; the recursion converges to
    mu(I) / (mu(I) + mu(N(I))).
    """
    if count < 1:
        raise ValueError("count must be positive")
    if independent == 0:
        raise ValueError("independent set must be nonempty")
    if not is_independent(g, independent):
        raise ValueError("set is not independent")
    mu_i = measure_of(g, independent)
    mu_ni = measure_of(g, neighborhood(g, independent))
    if mu_i + mu_ni == 0:
        raise ValueError("set and neighborhood both have measure zero; limit undefined")
    mu_u = 1 - mu_i - mu_ni
    terms = [seed if seed is not None else mu_i]
    for _ in range(count - 1):
        terms.append(mu_i + mu_u * terms[-1])
    return BoundSequence(tuple(terms), mu_i / (mu_i + mu_ni))


def majority_set_measure(p: Fraction, n: int) -> Fraction:
    """Probability that strictly more than half of n independent trials hit.

    Exact binomial tail: sum over k > n/2 of C(n,k) p^k (1-p)^(n-k).
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"probability {p} outside [0,1]")
    if n < 1:
        raise ValueError("n must be positive")
    q = 1 - p
    return sum(
        (math.comb(n, k) * p**k * q ** (n - k) for k in range(n // 2 + 1, n + 1)),
        Fraction(0),
    )


def majority_witness(
    g: WeightedGraph, independent: int, n: int, *, cap: int = MATERIALIZATION_CAP
) -> int:
    """Vertices of the n-th power with more than half their coordinates inside.

    The result is checked to be independent and to have measure exactly
    equal to the binomial tail at p = mu(independent); both follow from
    independence of the base set and the product measure, but they are
    re-verified rather than trusted.
    """
    if not is_independent(g, independent):
        raise ValueError("set is not independent")
    power = tensor_power(g, n, cap=cap)
    view = TensorPowerView(g, n)
    witness = 0
    for index in range(power.n):
        inside = sum(1 for c in view.decode(index) if independent >> c & 1)
        if 2 * inside > n:
            witness |= 1 << index
    if not is_independent(power, witness):
        raise AssertionError("majority set is not independent")
    expected = majority_set_measure(measure_of(g, independent), n)
    if measure_of(power, witness) != expected:
        raise AssertionError("majority set measure disagrees with the binomial tail")
    return witness
