"""Divisor sums and the Eisenstein-type series built from them."""
from __future__ import annotations

from fractions import Fraction

from .qseries import Series, even_part, odd_part

#: constant term of the weight-2 Eisenstein series in this normalization
G2_CONSTANT = Fraction(-1, 24)


def divisor_table(N: int) -> list[int]:
    """``table[d] = sigma(d)`` for ``d = 1..N``; ``table[0]`` is 0."""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    table = [0] * (N + 1)
    for k in range(1, N + 1):
        for m in range(k, N + 1, k):
            table[m] += k
    return table


def sigma(d: int) -> int:
    """Sum of the positive divisors of ``d``."""
    if not isinstance(d, int) or d <= 0:
        raise ValueError(f"sigma is defined for positive integers, got {d!r}")
    total = 0
    k = 1
    while k * k <= d:
        if d % k == 0:
            total += k
            if k * k != d:
                total += d // k
        k += 1
    return total


def G_series(N: int) -> Series:
    """``sum_{d>=1} sigma(d) t^d`` from the divisor sieve."""
    return Series(divisor_table(N), N)


def G_lambert(N: int) -> Series:
    """Same series as :func:`G_series`, expanded as ``sum_k k t^k / (1 - t^k)``.

    Each Lambert term is accumulated as ``k (t^k + t^{2k} + ...)`` without
    any series division.
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    total = Series.zero(N)
    for k in range(1, N + 1):
        # k t^k / (1 - t^k) = k t^k + k t^{2k} + ...
        term = Series.zero(N)
        for j in range(1, N // k + 1):
            term = term + Series.monomial(j * k, N, k)
        total = total + term
    return total


def G2_series(N: int, constant: Fraction = G2_CONSTANT) -> Series:
    """``-1/24 + G(t)``.

    ``constant`` exists only so negative controls can perturb the
    normalization; every real computation uses the default.
    """
    g = G_series(N)
    return Series([Fraction(constant)] + list(g.coeffs[1:]), N)


def Ge_series(N: int, constant: Fraction = G2_CONSTANT) -> Series:
    return even_part(G2_series(N, constant))


def Go_series(N: int, constant: Fraction = G2_CONSTANT) -> Series:
    return odd_part(G2_series(N, constant))
