"""Sparse Laurent-polynomial arithmetic over arbitrary-precision integers.

Monomials are exponent vectors (tuples of signed integers) and coefficients
are Python ints, so nothing here rounds or overflows.  This is the carrier
for torus characters, Haar-measure weights and their tensor powers; the
windowed product and ``pow_with_target`` keep large powers sparse when only
a few coefficients of the final expansion are actually wanted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class ExponentWindow:
    """Inclusive per-variable exponent bounds; products prune terms outside."""

    lower: Exponent
    upper: Exponent

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("window bounds have different lengths")
        if any(lo > up for lo, up in zip(self.lower, self.upper)):
            raise ValueError("window is empty in at least one variable")

    def contains(self, exponents: Iterable[int]) -> bool:
        return all(lo <= e <= up for lo, e, up in
                   zip(self.lower, exponents, self.upper))


class LaurentPolynomial:
    """Finite map from exponent vectors to nonzero integer coefficients.

    Instances are treated as immutable values: every operation returns a new
    polynomial and never mutates its operands.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Exponent, int] | None = None):
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        clean: dict[Exponent, int] = {}
        if terms:
            for exponents, coeff in terms.items():
                vec = tuple(exponents)
                if len(vec) != rank:
                    raise ValueError(
                        f"exponent vector {vec} has length {len(vec)}, expected {rank}")
                if coeff:
                    clean[vec] = coeff
        self.rank = rank
        self.terms = clean

    @classmethod
    def _make(cls, rank: int, terms: dict[Exponent, int]) -> "LaurentPolynomial":
        # Internal fast path: terms must already be clean (correct-length
        # tuples, no zero coefficients).
        poly = cls.__new__(cls)
        poly.rank = rank
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls, rank: int) -> "LaurentPolynomial":
        return cls._make(rank, {})

    @classmethod
    def one(cls, rank: int) -> "LaurentPolynomial":
        return cls._make(rank, {(0,) * rank: 1})

    @classmethod
    def monomial(cls, rank: int, exponents: Sequence[int],
                 coefficient: int = 1) -> "LaurentPolynomial":
        return cls(rank, {tuple(exponents): coefficient})

    # ------------------------------------------------------------------
    # ring structure
    # ------------------------------------------------------------------

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.rank != self.rank:
                raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
            return other
        if isinstance(other, int):
            return LaurentPolynomial(self.rank, {(0,) * self.rank: other})
        return NotImplemented

    def __add__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        total = dict(self.terms)
        for e, c in other.terms.items():
            s = total.get(e, 0) + c
            if s:
                total[e] = s
            elif e in total:
                del total[e]
        return LaurentPolynomial._make(self.rank, total)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._make(self.rank,
                                       {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "LaurentPolynomial",
            window: ExponentWindow | None = None) -> "LaurentPolynomial":
        """Product of two polynomials, optionally pruned to a window.

        With a window, product terms whose exponent vector falls outside the
        per-variable bounds do not appear in the result; within the window
        the coefficients equal those of the full product.
        """
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        raw: dict[Exponent, int] = {}
        get = raw.get
        # iterate the smaller operand outside: fewer passes over the big dict
        if len(self.terms) <= len(other.terms):
            outer, inner = self.terms, other.terms
        else:
            outer, inner = other.terms, self.terms
        for e1, c1 in outer.items():
            for e2, c2 in inner.items():
                e = tuple(map(sum, zip(e1, e2)))
                raw[e] = get(e, 0) + c1 * c2
        if window is None:
            clean = {e: c for e, c in raw.items() if c}
        else:
            lo, up = window.lower, window.upper
            clean = {}
            for e, c in raw.items():
                if c and all(l <= x <= u for l, x, u in zip(lo, e, up)):
                    clean[e] = c
        return LaurentPolynomial._make(self.rank, clean)

    def __pow__(self, n: int) -> "LaurentPolynomial":
        """Unpruned power by repeated squaring (the naive oracle)."""
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = LaurentPolynomial.one(self.rank)
        square = self
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    # ------------------------------------------------------------------
    # targeted powers
    # ------------------------------------------------------------------

    def windowed_powers(self, n: int,
                        targets: Sequence[Sequence[int]]
                        ) -> Iterator["LaurentPolynomial"]:
        """Yield self**k for k = 0..n, pruned towards the target exponents.

        After k of the n multiplications, a term can still contribute to a
        target coefficient only if the remaining n-k factors can shift it
        there; each factor moves an exponent by at most the base's
        per-variable span.  Terms out of reach are dropped.  Coefficients on
        every exponent inside the targets' bounding box are exact at every
        step (the windows only ever discard terms that cannot come back).
        """
        if n < 0:
            raise ValueError("negative powers are not defined")
        boxed = [tuple(t) for t in targets]
        if not boxed:
            raise ValueError("need at least one target exponent vector")
        for t in boxed:
            if len(t) != self.rank:
                raise ValueError(
                    f"target {t} has length {len(t)}, expected {self.rank}")
        yield LaurentPolynomial.one(self.rank)
        if n == 0:
            return
        if not self.terms:
            zero = LaurentPolynomial.zero(self.rank)
            for _ in range(n):
                yield zero
            return
        lo_step, hi_step = self.exponent_bounds()
        t_lo = tuple(min(t[i] for t in boxed) for i in range(self.rank))
        t_hi = tuple(max(t[i] for t in boxed) for i in range(self.rank))
        acc = LaurentPolynomial.one(self.rank)
        for k in range(1, n + 1):
            remaining = n - k
            window = ExponentWindow(
                tuple(t - remaining * h for t, h in zip(t_lo, hi_step)),
                tuple(t - remaining * l for t, l in zip(t_hi, lo_step)))
            acc = acc.mul(self, window=window)
            yield acc

    def pow_with_target(self, n: int,
                        targets: Sequence[Sequence[int]]) -> "LaurentPolynomial":
        """self**n restricted to terms that can reach a target; exact there."""
        result = None
        for result in self.windowed_powers(n, targets):
            pass
        assert result is not None
        return result

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    def coefficient(self, exponents: Sequence[int]) -> int:
        """Stored coefficient of z^exponents, or 0 if the monomial is absent."""
        vec = tuple(exponents)
        if len(vec) != self.rank:
            raise ValueError(
                f"exponent vector {vec} has length {len(vec)}, expected {self.rank}")
        return self.terms.get(vec, 0)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.rank, 0)

    def evaluate_at_ones(self) -> int:
        """Value at z_1 = ... = z_r = 1, i.e. the sum of all coefficients."""
        return sum(self.terms.values())

    def exponent_bounds(self) -> tuple[Exponent, Exponent]:
        """Per-variable (min, max) exponents over all stored terms."""
        if not self.terms:
            raise ValueError("the zero polynomial has no exponent bounds")
        columns = list(zip(*self.terms))
        return (tuple(min(col) for col in columns),
                tuple(max(col) for col in columns))

    def permute_variables(self, perm: Sequence[int]) -> "LaurentPolynomial":
        """Substitute z_i -> z_{perm[i]} (perm is a permutation of 0..rank-1)."""
        order = tuple(perm)
        if sorted(order) != list(range(self.rank)):
            raise ValueError(f"{order} is not a permutation of 0..{self.rank - 1}")
        moved: dict[Exponent, int] = {}
        for e, c in self.terms.items():
            new = [0] * self.rank
            for i, x in enumerate(e):
                new[order[i]] = x
            moved[tuple(new)] = c
        return LaurentPolynomial._make(self.rank, moved)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({} if other == 0 else {(0,) * self.rank: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    __hash__ = None  # mutable dict inside; equality is by value

    def __repr__(self) -> str:
        return f"LaurentPolynomial(rank={self.rank}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            factors = [f"z{i + 1}^{x}" if x != 1 else f"z{i + 1}"
                       for i, x in enumerate(e) if x]
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    # ------------------------------------------------------------------
    # serialization
    # ------------------------------------------------------------------

    def to_json_dict(self) -> dict:
        """JSON form with lexicographically sorted terms and decimal-string
        coefficients (64-bit JSON numbers cannot hold the values we produce)."""
        return {
            "rank": self.rank,
            "terms": [{"e": list(e), "c": str(self.terms[e])}
                      for e in sorted(self.terms)],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "LaurentPolynomial":
        rank = data["rank"]
        terms: dict[Exponent, int] = {}
        for item in data["terms"]:
            e = tuple(int(x) for x in item["e"])
            terms[e] = terms.get(e, 0) + int(item["c"])
        return cls(rank, terms)
