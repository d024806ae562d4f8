"""Exact machinery for P-recursive sequences and truncated power series.

Everything runs over ints and Fractions: a verification built on these
tools either holds exactly or fails at a definite index — there is no
epsilon anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

# Integer polynomials appear throughout as coefficient tuples in ascending
# powers: (c0, c1, c2, ...) stands for c0 + c1*n + c2*n^2 + ...
IntPoly = tuple[int, ...]


def poly_eval(coeffs: Sequence[int], n: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * n + c
    return value


def poly_mul(*factors: Sequence[int]) -> IntPoly:
    """Product of integer polynomials; handy for writing them factored."""
    result = [1]
    for factor in factors:
        out = [0] * (len(result) + len(factor) - 1)
        for i, a in enumerate(result):
            if a:
                for j, b in enumerate(factor):
                    out[i + j] += a * b
        result = out
    return tuple(result)


@dataclass(frozen=True)
class RecurrenceSpec:
    """Linear recurrence a(n+1) = sum_i num_i(n)/den_i(n) * a(n-i).

    The rule is applied for n >= n_min; ``seeds`` supplies a(0)..a(n_min).
    Keeping n_min explicit matters because several of the recurrences we
    check have coefficients with poles at small n.
    """

    terms: tuple[tuple[IntPoly, IntPoly], ...]
    n_min: int
    seeds: tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        if not self.terms:
            raise ValueError("recurrence needs at least one lag term")
        if len(self.seeds) != self.n_min + 1:
            raise ValueError(
                f"{self.label or 'recurrence'}: expected {self.n_min + 1} seeds "
                f"a(0)..a(n_min), got {len(self.seeds)}")
        if self.n_min < len(self.terms) - 1:
            raise ValueError(
                f"{self.label or 'recurrence'}: n_min={self.n_min} would index "
                f"below a(0) with {len(self.terms)} lags")
        for _, den in self.terms:
            if not any(den):
                raise ValueError("a lag denominator is identically zero")

    @property
    def order(self) -> int:
        return len(self.terms)

    def step(self, n: int, values: Sequence[int]) -> Fraction:
        """Exact value of a(n+1) predicted from values[n], values[n-1], ..."""
        total = Fraction(0)
        for lag, (num, den) in enumerate(self.terms):
            d = poly_eval(den, n)
            if d == 0:
                raise ValueError(
                    f"{self.label or 'recurrence'}: denominator vanishes at n={n}")
            total += Fraction(poly_eval(num, n), d) * values[n - lag]
        return total


def evaluate_recurrence(spec: RecurrenceSpec, count: int) -> list[int]:
    """First ``count`` terms a(0)..a(count-1) of the recurrence.

    Every produced term must come out an exact integer; a non-integral step
    means the spec does not describe an integer sequence from those seeds
    and is reported as an error rather than rounded.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    values = list(spec.seeds[:count])
    for n in range(spec.n_min, count - 1):
        nxt = spec.step(n, values)
        if nxt.denominator != 1:
            raise ValueError(
                f"{spec.label or 'recurrence'}: non-integral term {nxt} at n={n + 1}")
        values.append(int(nxt))
    return values


def verify_recurrence(sequence: Sequence[int], spec: RecurrenceSpec) -> dict:
    """Check an externally computed sequence against the recurrence.

    Every index n in n_min..len-2 is tested with exact rational arithmetic;
    the report carries the first violating index, if any.
    """
    last = len(sequence) - 1
    if last < spec.n_min + 1:
        raise ValueError("sequence too short to test the recurrence at all")
    report = {
        "check": spec.label or "recurrence",
        "range": f"n=0..{last}",
        "status": "pass",
    }
    for n in range(spec.n_min, last):
        if spec.step(n, sequence) != sequence[n + 1]:
            report["status"] = "fail"
            report["first_violation"] = n + 1
            break
    return report


class TruncatedSeries:
    """Power series with exact rational coefficients known through x**order.

    The truncation order of every result is the tightest one at which the
    computed coefficients are still exact.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if len(coeffs) == 0:
            raise ValueError("series needs at least the constant coefficient")
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient {i} beyond truncation order {self.order}")
        return self.coeffs[i]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncated(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(
                f"cannot extend truncation order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries([{shown}{tail}], order={self.order})"

    def __add__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            n = min(len(self.coeffs), len(other.coeffs))
            return TruncatedSeries([a + b for a, b
                                    in zip(self.coeffs[:n], other.coeffs[:n])])
        coeffs = list(self.coeffs)
        coeffs[0] += Fraction(other)
        return TruncatedSeries(coeffs)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-other if isinstance(other, TruncatedSeries)
                       else -Fraction(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            factor = Fraction(other)
            return TruncatedSeries([factor * c for c in self.coeffs])
        n = min(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a:
                for j in range(n - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self * (1 / Fraction(other))
        val = next((i for i, c in enumerate(other.coeffs) if c), None)
        if val is None:
            raise ZeroDivisionError("division by the zero series")
        if any(self.coeffs[:val]):
            raise ValueError(
                "denominator valuation exceeds numerator's; quotient is not "
                "a power series")
        order = min(self.order, other.order) - val
        if order < 0:
            raise ValueError("denominator valuation exceeds truncation order")
        num = self.coeffs[val:]
        den = other.coeffs[val:]
        out: list[Fraction] = []
        for i in range(order + 1):
            s = (num[i] if i < len(num) else Fraction(0))
            s -= sum(den[j] * out[i - j] for j in range(1, i + 1))
            out.append(s / den[0])
        return TruncatedSeries(out)

    def sqrt(self) -> "TruncatedSeries":
        """Series t with t*t == self through the truncation order.

        Only the branch with constant term 1 is supported, which is all the
        generating-function work needs.
        """
        if self.coeffs[0] != 1:
            raise ValueError("series sqrt requires constant term 1")
        out = [Fraction(1)]
        for i in range(1, len(self.coeffs)):
            acc = self.coeffs[i] - sum(out[j] * out[i - j]
                                       for j in range(1, i))
            out.append(acc / 2)
        return TruncatedSeries(out)

    def derivative(self) -> "TruncatedSeries":
        if self.order < 1:
            raise ValueError("cannot differentiate below truncation order 1")
        return TruncatedSeries([i * c for i, c in enumerate(self.coeffs)][1:])


@dataclass(frozen=True)
class ODESpec:
    """Linear differential operator sum_k p_k(x) d^k/dx^k together with an
    inhomogeneous right-hand side q(x); a solution f satisfies L[f] = q."""

    poly_coeffs: tuple[IntPoly, ...]
    inhomogeneous: IntPoly = (0,)

    def __post_init__(self):
        if len(self.poly_coeffs) < 2:
            raise ValueError("operator must involve at least one derivative")
        if not any(self.poly_coeffs[-1]):
            raise ValueError("leading derivative coefficient is identically zero")

    @property
    def order(self) -> int:
        return len(self.poly_coeffs) - 1


def _poly_times_series(poly: IntPoly, series: TruncatedSeries,
                       order: int) -> TruncatedSeries:
    out = [Fraction(0)] * (order + 1)
    for j, p in enumerate(poly):
        if p:
            for i in range(j, order + 1):
                out[i] += p * series.coeffs[i - j]
    return TruncatedSeries(out)


def apply_ode(spec: ODESpec, series: TruncatedSeries) -> TruncatedSeries:
    """Residual sum_k p_k(x) f^(k)(x) - q(x), exact through order
    f.order - spec.order; identically zero iff f solves the equation there."""
    m = spec.order
    if series.order < m + 2:
        raise ValueError(
            f"series order {series.order} too small for an order-{m} operator")
    out_order = series.order - m
    total = TruncatedSeries.zero(out_order)
    current = series
    for k, poly in enumerate(spec.poly_coeffs):
        if k:
            current = current.derivative()
        total = total + _poly_times_series(poly, current, out_order)
    inhom = list(spec.inhomogeneous[:out_order + 1])
    inhom += [0] * (out_order + 1 - len(inhom))
    return total - TruncatedSeries(inhom)


def ode_monomial_image(spec: ODESpec, exponent: int) -> dict[int, int]:
    """Homogeneous part of the operator applied to x**exponent.

    Each p_k(x) * d^k/dx^k sends a monomial to an exact integer Laurent
    polynomial, returned as {degree: coefficient} with zeros dropped; an
    empty dict means the monomial is annihilated.
    """
    image: dict[int, int] = {}
    for k, poly in enumerate(spec.poly_coeffs):
        falling = math.prod(exponent - i for i in range(k))
        if falling == 0:
            continue
        for j, c in enumerate(poly):
            if c:
                degree = exponent - k + j
                image[degree] = image.get(degree, 0) + c * falling
    return {d: c for d, c in image.items() if c}
