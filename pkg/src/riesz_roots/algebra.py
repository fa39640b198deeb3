"""Exact scalars and truncated formal power series.

Rationals are plain :class:`fractions.Fraction` values. ``PiValue`` holds a
finite sum ``sum c_e * pi**e`` over even exponents, and ``PowerSeries`` is a
truncated series with an explicit order that propagates as the minimum of
its operands.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Callable, Iterable, Mapping, Sequence

from .errors import NonzeroInnerConstant, OddPiExponent, PiResidue, ZeroConstantTerm

Rational = Fraction


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


class PiValue:
    """Exact value ``sum_e c_e * pi**e`` with even ``e >= 0``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean: dict[int, Fraction] = {}
        for e, c in (terms or {}).items():
            e = int(e)
            if e < 0 or e % 2:
                raise OddPiExponent(f"pi exponent must be even and >= 0, got {e}")
            c = as_rational(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self._terms = clean

    @classmethod
    def rational(cls, c) -> PiValue:
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e: int) -> PiValue:
        return cls({e: c})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, e: int) -> Fraction:
        return self._terms.get(e, Fraction(0))

    def is_rational(self) -> bool:
        return all(e == 0 for e in self._terms)

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise PiResidue(f"value still depends on pi: {self}")
        return self._terms.get(0, Fraction(0))

    def _coerce(self, other) -> PiValue:
        if isinstance(other, PiValue):
            return other
        return PiValue.rational(as_rational(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return PiValue(out)

    __radd__ = __add__

    def __neg__(self):
        return PiValue({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
        return PiValue(out)

    __rmul__ = __mul__

    def divide_by_pi_power(self, e: int) -> PiValue:
        """Divide by ``pi**e``; every resulting exponent must stay >= 0."""
        if e % 2:
            raise OddPiExponent(f"pi exponent must be even, got {e}")
        return PiValue({k - e: c for k, c in self._terms.items()})

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "PiValue(0)"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            parts.append(str(c) if e == 0 else f"({c})*pi^{e}")
        return "PiValue(" + " + ".join(parts) + ")"


class PowerSeries:
    """Truncated power series ``sum_{i<=order} c_i x**i`` over Fraction.

    Coefficients beyond ``order`` are unknown, never implicitly zero.
    """

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients: Iterable, order: int | None = None):
        coeffs = [as_rational(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)
        self.order = order

    # constructors

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls([1], order)

    @classmethod
    def variable(cls, order: int) -> PowerSeries:
        return cls([0, 1], order)

    @classmethod
    def from_function(cls, coeff: Callable[[int], object], order: int) -> PowerSeries:
        return cls([coeff(i) for i in range(order + 1)], order)

    @classmethod
    def exp(cls, order: int, scale=1) -> PowerSeries:
        """Series of ``exp(scale*x)``."""
        scale = as_rational(scale)
        out, term = [], Fraction(1)
        for i in range(order + 1):
            out.append(term)
            term = term * scale / (i + 1)
        return cls(out, order)

    # access

    def __getitem__(self, i: int) -> Fraction:
        if i < 0 or i > self.order:
            raise IndexError(f"coefficient {i} outside truncation order {self.order}")
        return self.coefficients[i]

    def __len__(self):
        return self.order + 1

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries(self.coefficients, order)

    def evaluate(self, x) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    # ring operations

    def _coerce(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries([as_rational(other)], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return PowerSeries(
            [self.coefficients[i] + other.coefficients[i] for i in range(order + 1)], order
        )

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coefficients], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = as_rational(other)
            return PowerSeries([c * a for a in self.coefficients], self.order)
        return series_mul(self, other)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        return series_int_pow(self, e)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.order, self.coefficients))

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coefficients]}, order={self.order})"


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    order = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    out = []
    for n in range(order + 1):
        s = Fraction(0)
        for i in range(n + 1):
            if ac[i] and bc[n - i]:
                s += ac[i] * bc[n - i]
        out.append(s)
    return PowerSeries(out, order)


def series_reciprocal(a: PowerSeries) -> PowerSeries:
    a0 = a.coefficients[0]
    if a0 == 0:
        raise ZeroConstantTerm("series has zero constant term, no reciprocal")
    inv0 = 1 / a0
    out = [inv0]
    for n in range(1, a.order + 1):
        s = sum((a.coefficients[i] * out[n - i] for i in range(1, n + 1)), Fraction(0))
        out.append(-s * inv0)
    return PowerSeries(out, a.order)


def series_int_pow(a: PowerSeries, e: int) -> PowerSeries:
    """``a**e`` for any integer ``e``; negative powers go through the reciprocal."""
    e = int(e)
    if e < 0:
        return series_int_pow(series_reciprocal(a), -e)
    result = PowerSeries.one(a.order)
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_compose(g: PowerSeries, f: PowerSeries) -> PowerSeries:
    """``g(f(x))`` truncated to the smaller order; needs ``f(0) == 0``."""
    if f.coefficients[0] != 0:
        raise NonzeroInnerConstant("inner series must have zero constant term")
    order = min(g.order, f.order)
    f = f.truncate(order)
    acc = PowerSeries([g.coefficients[order]], order)
    for i in range(order - 1, -1, -1):
        acc = series_mul(acc, f) + g.coefficients[i]
    return acc


def polynomial_mul(a: Sequence, b: Sequence) -> list:
    """Full (untruncated) product of coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out
