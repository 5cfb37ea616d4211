"""Exact truncated power series in one variable ``t`` over the rationals.

A :class:`Series` holds coefficients ``c_0 .. c_N`` for a fixed truncation
order ``N``. Binary operations insist on equal orders; aligning orders is the
caller's job (see :meth:`Series.truncate` and :meth:`Series.extend`).
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import comb
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class OrderMismatchError(ValueError):
    pass


class NotInvertibleError(ZeroDivisionError):
    """Raised when dividing by a series whose constant term vanishes."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise TypeError(f"refusing inexact or non-rational coefficient {x!r}")
    return Fraction(x)


def rational_to_str(x: Fraction) -> str:
    """``"p/q"`` in lowest terms, or ``"p"`` when the denominator is 1."""
    x = as_rational(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    if not isinstance(s, str):
        raise TypeError(f"expected a string, got {type(s).__name__}")
    return Fraction(s.strip())


class Series:
    """Immutable truncated series ``c_0 + c_1 t + ... + c_N t^N``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [as_rational(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("cannot infer the order of an empty coefficient list")
            order = len(cs) - 1
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        if len(cs) > order + 1:
            raise ValueError(f"{len(cs)} coefficients do not fit in order {order}")
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls([1], order)

    @classmethod
    def constant(cls, c: Scalar, order: int) -> Series:
        return cls([c], order)

    @classmethod
    def monomial(cls, k: int, order: int, c: Scalar = 1) -> Series:
        """``c t^k``, which is zero when ``k`` exceeds the order."""
        if k < 0:
            raise ValueError("negative powers are not representable")
        cs = [0] * (order + 1)
        if k <= order:
            cs[k] = c
        return cls(cs, order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, m: int) -> Fraction:
        # coefficients past the truncation are unknown, not zero
        if m < 0:
            return Fraction(0)
        if m > self.order:
            raise IndexError(f"t^{m} lies beyond truncation order {self.order}")
        return self._coeffs[m]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(rational_to_str(c) for c in self._coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"Series([{shown}{more}], order={self.order})"

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def nonzero_indices(self) -> list[int]:
        return [m for m, c in enumerate(self._coeffs) if c]

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise OrderMismatchError(f"cannot raise order {self.order} to {order} by truncation")
        return Series(self._coeffs[: order + 1], order)

    def _check(self, other: Series) -> None:
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatchError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._check(other)
        return Series([a + b for a, b in zip(self._coeffs, other._coeffs)], self.order)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._check(other)
        return Series([a - b for a, b in zip(self._coeffs, other._coeffs)], self.order)

    def __neg__(self) -> Series:
        return Series([-a for a in self._coeffs], self.order)

    def scale(self, c: Scalar) -> Series:
        c = as_rational(c)
        return Series([c * a for a in self._coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return div(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(1 / as_rational(other))
        return NotImplemented

    def __pow__(self, k: int) -> Series:
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result, base = Series.one(self.order), self
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    def to_json(self) -> str:
        return json.dumps([rational_to_str(c) for c in self._coeffs])

    @classmethod
    def from_json(cls, text: str) -> Series:
        data = json.loads(text)
        if not isinstance(data, list) or not data:
            raise ValueError("a serialized series is a non-empty JSON array of strings")
        return cls([rational_from_str(s) for s in data])


def add(a: Series, b: Series) -> Series:
    return a + b


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the shared order."""
    a._check(b)
    ac, bc = a.coeffs, b.coeffs
    # skip zero coefficients of the sparser factor; the result is unchanged
    support = [(k, x) for k, x in enumerate(ac) if x]
    out = [Fraction(0)] * (a.order + 1)
    n = a.order
    for k, x in support:
        for j in range(n - k + 1):
            y = bc[j]
            if y:
                out[k + j] += x * y
    return Series(out, n)


def div(a: Series, b: Series) -> Series:
    """The unique ``q`` with ``q * b == a``; needs ``b`` to have a unit constant term."""
    a._check(b)
    b0 = b.coeffs[0]
    if b0 == 0:
        raise NotInvertibleError("divisor has zero constant term; quotient is not a power series")
    bc = b.coeffs
    q: list[Fraction] = []
    for m in range(a.order + 1):
        acc = a.coeffs[m] - sum(q[k] * bc[m - k] for k in range(m) if bc[m - k])
        q.append(acc / b0)
    return Series(q, a.order)


def theta(a: Series) -> Series:
    """Euler derivative ``t d/dt``: coefficient ``m`` is multiplied by ``m``."""
    return Series([m * c for m, c in enumerate(a.coeffs)], a.order)


def substitute_power(a: Series, k: int) -> Series:
    """``a(t^k)`` truncated to the order of ``a``."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"substitution exponent must be a positive integer, got {k!r}")
    out = [Fraction(0)] * (a.order + 1)
    for j in range(a.order // k + 1):
        out[j * k] = a.coeffs[j]
    return Series(out, a.order)


def _binomial_general(e: int, j: int) -> int:
    """Generalized binomial coefficient C(e, j) for any integer ``e``."""
    if e >= 0:
        return comb(e, j)
    # C(-r, j) = (-1)^j C(r + j - 1, j)
    return (-1) ** j * comb(-e + j - 1, j)


def product_power(e: int, order: int) -> Series:
    """Expand ``prod_{d>=1} (1 - t^d)^e`` to the given order.

    Each factor is expanded with the generalized binomial series
    ``(1 - x)^e = sum_j C(e, j) (-x)^j`` and multiplied in; factors with
    ``d > order`` are 1 at this truncation.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    acc = [0] * (order + 1)
    acc[0] = 1
    for d in range(1, order + 1):
        factor = [(j * d, (-1) ** j * _binomial_general(e, j)) for j in range(order // d + 1)]
        factor = [(p, c) for p, c in factor if c]
        new = [0] * (order + 1)
        for m, x in enumerate(acc):
            if not x:
                continue
            for p, c in factor:
                if m + p > order:
                    break
                new[m + p] += x * c
        acc = new
    return Series(acc, order)


def even_part(a: Series) -> Series:
    return Series([c if m % 2 == 0 else 0 for m, c in enumerate(a.coeffs)], a.order)


def odd_part(a: Series) -> Series:
    return Series([c if m % 2 else 0 for m, c in enumerate(a.coeffs)], a.order)
