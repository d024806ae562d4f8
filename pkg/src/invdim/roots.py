"""A-series root data behind SU(N) torus integration.

All exponents live in the Dynkin basis: simple root i has component 2 at
position i and -1 at its neighbours.  The torus weight returned by
``haar_denominator`` multiplies directly against characters built in the
same convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .laurent import Exponent, LaurentPolynomial


@dataclass(frozen=True)
class RootSystemA:
    """Root data of A_{N-1}, the root system of SU(N)."""

    n_group: int
    rank: int
    positive_roots: tuple[Exponent, ...]
    weyl_vector: Exponent
    weyl_order: int


def build_root_system(n_group: int) -> RootSystemA:
    """Construct the A_{N-1} root system for SU(N), N >= 2.

    Positive roots are the consecutive sums alpha_i + ... + alpha_j of simple
    roots, listed in lexicographic (i, j) order so downstream expansions are
    reproducible.
    """
    if n_group < 2:
        raise ValueError(f"SU(N) requires N >= 2, got {n_group}")
    rank = n_group - 1
    simple = []
    for i in range(rank):
        row = [0] * rank
        row[i] = 2
        if i > 0:
            row[i - 1] = -1
        if i + 1 < rank:
            row[i + 1] = -1
        simple.append(row)
    positive = []
    for i in range(rank):
        acc = [0] * rank
        for j in range(i, rank):
            acc = [a + b for a, b in zip(acc, simple[j])]
            positive.append(tuple(acc))
    half_sum = tuple(sum(col) // 2 for col in zip(*positive))
    return RootSystemA(
        n_group=n_group,
        rank=rank,
        positive_roots=tuple(positive),
        weyl_vector=half_sum,
        weyl_order=math.factorial(n_group),
    )


def haar_denominator(rs: RootSystemA) -> LaurentPolynomial:
    """Expanded product of (1 - z^alpha) over the positive roots.

    This is the weight that reduces integration over SU(N) to constant-term
    extraction on the maximal torus.  The expansion always collapses to
    exactly N! monomials with coefficients +-1 and constant term +1.
    """
    result = LaurentPolynomial.one(rs.rank)
    for root in rs.positive_roots:
        factor = LaurentPolynomial(rs.rank, {(0,) * rs.rank: 1, root: -1})
        result = result * factor
    return result
