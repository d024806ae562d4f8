"""Singlet counting by constant-term extraction.

The dimension of the invariant subspace of V_1 x ... x V_n is the constant
term of (reduced Haar weight) * (product of characters).  The product with
the measure is never formed: the measure's monomials are contracted
directly against the mirrored coefficients of the character product, and
tensor powers are expanded with windows aimed at exactly those monomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Sequence

from .characters import adjoint_character
from .laurent import Exponent, LaurentPolynomial
from .roots import build_root_system, haar_denominator

# Exponents whose coefficients in the n-th power of the SU(3) adjoint
# character make up the four-component decomposition of the singlet count:
# the constant term plus the three monomial classes of the measure.
SU3_COMPONENT_TARGETS: tuple[Exponent, ...] = ((0, 0), (1, -2), (-3, 0), (-2, -2))


@dataclass(frozen=True)
class InvariantQuery:
    """A tensor product whose singlet count is wanted.

    Either an explicit list of character factors or a single base character
    raised to a power; exactly one of the two forms must be given.
    """

    group_n: int
    characters: tuple[LaurentPolynomial, ...] | None = None
    base: LaurentPolynomial | None = None
    power: int | None = None

    def __post_init__(self):
        if self.group_n < 2:
            raise ValueError(f"SU(N) requires N >= 2, got {self.group_n}")
        rank = self.group_n - 1
        power_form = self.base is not None or self.power is not None
        if power_form == (self.characters is not None):
            raise ValueError("give either a character list or a base and power")
        if power_form:
            if self.base is None or self.power is None:
                raise ValueError("the power form needs both a base and a power")
            if self.power < 0:
                raise ValueError(f"tensor power must be >= 0, got {self.power}")
            if self.base.rank != rank:
                raise ValueError(
                    f"base character has rank {self.base.rank}, expected {rank}")
        else:
            for chi in self.characters:
                if chi.rank != rank:
                    raise ValueError(
                        f"character has rank {chi.rank}, expected {rank}")

    @classmethod
    def product(cls, group_n: int,
                characters: Sequence[LaurentPolynomial]) -> "InvariantQuery":
        return cls(group_n=group_n, characters=tuple(characters))

    @classmethod
    def tensor_power(cls, group_n: int, base: LaurentPolynomial,
                     power: int) -> "InvariantQuery":
        return cls(group_n=group_n, base=base, power=power)


@dataclass(frozen=True)
class SU3Components:
    """The four coefficients whose signed sum a1 - 2*a2 + 2*a3 - a4 is the
    SU(3) adjoint singlet count at tensor power n."""

    n: int
    a1: int
    a2: int
    a3: int
    a4: int


def _measure_contraction(measure: LaurentPolynomial,
                         power: LaurentPolynomial) -> int:
    """Constant term of measure * power, without forming the product."""
    coeff = power.terms.get
    return sum(c * coeff(tuple(-x for x in e), 0)
               for e, c in measure.terms.items())


def _measure_targets(measure: LaurentPolynomial) -> list[Exponent]:
    return [tuple(-x for x in e) for e in measure.terms]


def invariant_dimension(query: InvariantQuery) -> int:
    """Dimension of the invariant subspace for the given tensor product."""
    measure = haar_denominator(build_root_system(query.group_n))
    if query.characters is not None:
        product = LaurentPolynomial.one(measure.rank)
        for chi in query.characters:
            product = product * chi
        return _measure_contraction(measure, product)
    acc = query.base.pow_with_target(query.power, _measure_targets(measure))
    return _measure_contraction(measure, acc)


def dimension_sequence(group_n: int, base: LaurentPolynomial,
                       n_max: int) -> list[int]:
    """Singlet counts of base**n for n = 0..n_max, from one windowed run.

    The window at step k is sized for the worst case n_max, so every
    intermediate power still carries exact coefficients on the measure's
    mirrored monomials and the whole sequence costs one power loop.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    measure = haar_denominator(build_root_system(group_n))
    targets = _measure_targets(measure)
    return [_measure_contraction(measure, acc)
            for acc in base.windowed_powers(n_max, targets)]


def adjoint_power_dimension(group_n: int, n: int) -> int:
    """Singlet count of the n-th tensor power of the SU(N) adjoint."""
    return invariant_dimension(
        InvariantQuery.tensor_power(group_n, adjoint_character(group_n), n))


def adjoint_dimension_sequence(group_n: int, n_max: int) -> list[int]:
    return dimension_sequence(group_n, adjoint_character(group_n), n_max)


def su2_dimension_by_binomials(n: int) -> int:
    """SU(2) adjoint singlet count as an alternating binomial sum: the
    constant term of the power minus its z^-2 coefficient, written out."""
    if n < 0:
        raise ValueError(f"tensor power must be >= 0, got {n}")
    even = sum(math.comb(n, r) * math.comb(r, r // 2)
               for r in range(0, n + 1, 2))
    odd = sum(math.comb(n, r) * math.comb(r, (r - 1) // 2)
              for r in range(1, n + 1, 2))
    return even - odd


def su2_cg_oracle(n: int) -> int:
    """Independent SU(2) count: iterate the spin ladder j x 1 ->
    (j-1) + j + (j+1) on a multiplicity table and read off spin 0."""
    if n < 0:
        raise ValueError(f"tensor power must be >= 0, got {n}")
    mult = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for j, m in mult.items():
            if j == 0:
                nxt[1] = nxt.get(1, 0) + m
                continue
            for j2 in (j - 1, j, j + 1):
                nxt[j2] = nxt.get(j2, 0) + m
        mult = nxt
    return mult.get(0, 0)


def su3_components(n: int) -> SU3Components:
    """The four target coefficients of the n-th SU(3) adjoint power, all
    read from a single windowed expansion."""
    if n < 0:
        raise ValueError(f"tensor power must be >= 0, got {n}")
    chi = adjoint_character(3)
    acc = chi.pow_with_target(n, SU3_COMPONENT_TARGETS)
    t1, t2, t3, t4 = SU3_COMPONENT_TARGETS
    return SU3Components(n=n, a1=acc.coefficient(t1), a2=acc.coefficient(t2),
                         a3=acc.coefficient(t3), a4=acc.coefficient(t4))


def su3_components_sequence(n_max: int) -> list[SU3Components]:
    """su3_components for every n = 0..n_max from one windowed power loop."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    chi = adjoint_character(3)
    t1, t2, t3, t4 = SU3_COMPONENT_TARGETS
    out = []
    for n, acc in enumerate(chi.windowed_powers(n_max, SU3_COMPONENT_TARGETS)):
        out.append(SU3Components(n=n, a1=acc.coefficient(t1),
                                 a2=acc.coefficient(t2),
                                 a3=acc.coefficient(t3),
                                 a4=acc.coefficient(t4)))
    return out


def su3_dimension_from_components(c: SU3Components) -> int:
    return c.a1 - 2 * c.a2 + 2 * c.a3 - c.a4


def derangement_sequence(max_n: int) -> list[int]:
    """Subfactorials D(0)..D(max_n) via D(n) = n*D(n-1) + (-1)^n."""
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    values = [1]
    for n in range(1, max_n + 1):
        values.append(n * values[-1] + (1 if n % 2 == 0 else -1))
    return values


def _adjoint_column(args: tuple[int, int]) -> list[int]:
    group_n, n_max = args
    return adjoint_dimension_sequence(group_n, n_max)


def dimension_table(n_groups: Sequence[int], n_powers: Sequence[int],
                    jobs: int = 1) -> list[list[int]]:
    """Matrix of adjoint-power singlet counts, rows indexed by the powers
    and columns by the groups.

    Each column comes from one incremental power run; with jobs > 1 the
    columns are computed in worker processes.  Assembly order is fixed, so
    the output is identical for any job count.
    """
    groups = list(n_groups)
    powers = list(n_powers)
    if any(n < 2 for n in groups):
        raise ValueError("all groups must have N >= 2")
    if any(n < 0 for n in powers):
        raise ValueError("all tensor powers must be >= 0")
    n_max = max(powers, default=0)
    work = [(group_n, n_max) for group_n in groups]
    if jobs > 1 and len(work) > 1:
        with get_context("fork").Pool(min(jobs, len(work))) as pool:
            columns = pool.map(_adjoint_column, work)
    else:
        columns = [_adjoint_column(item) for item in work]
    return [[column[n] for column in columns] for n in powers]
