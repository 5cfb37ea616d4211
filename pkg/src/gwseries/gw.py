"""Generating functions for rational and elliptic curves in the classes S+dF on E(n).

``F(t) = sum_d GW_{S+dF,0} t^d`` and ``H(t) = sum_d GW_{S+dF,1}(tau(F)) t^d``.
H is produced two ways, by the genus-1 topological recursion and by the
symplectic sum with E(0); the two agree exactly when F solves
``t F' = 12 n G F``.
"""
from __future__ import annotations

from fractions import Fraction

from .arith import G_series, sigma
from .qseries import Series, product_power, theta
from .surface import SurfaceModel, pair, section_plus_fibers


class PivotSingularError(ArithmeticError):
    pass


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"E(n) generating functions need n >= 1, got {n!r}")


def F_product(n: int, N: int) -> Series:
    """``prod_{d>=1} (1 - t^d)^(-12n)`` to order ``N``."""
    _check_n(n)
    return product_power(-12 * n, N)


def solve_theta_ode(a: Series, y0) -> Series:
    """Solve ``t y' = a y`` with ``y(0) = y0`` by the coefficient recursion.

    ``(m - a_0) y_m = sum_{k=1..m} a_k y_{m-k}``.
    """
    y0 = Fraction(y0)
    a0 = a[0]
    if a0 and y0:
        raise ValueError("t y' = a y with a(0) != 0 forces y(0) = 0")
    ys = [y0]
    for m in range(1, a.order + 1):
        pivot = m - a0
        if pivot == 0:
            raise PivotSingularError(f"recursion pivot vanishes at m={m}")
        ys.append(sum(a[k] * ys[m - k] for k in range(1, m + 1) if a[k]) / pivot)
    return Series(ys, a.order)


def e0_descendent_series(N: int) -> Series:
    """``-1/12 + 2 G(t)``: the genus-1 tau(F) series of E(0) = S^2 x T^2."""
    return Series.constant(Fraction(-1, 12), N) + 2 * G_series(N)


def fiber_cover_coefficient(n: int, d: int) -> Fraction:
    """``d * GW_{dF,1}`` on E(n), i.e. ``(2 - n) sigma(d)``."""
    if not isinstance(d, int) or d <= 0:
        raise ValueError(f"fiber multiple must be positive, got {d!r}")
    return Fraction((2 - n) * sigma(d))


def fiber_cover_invariant(n: int, d: int) -> Fraction:
    """``GW_{dF,1}`` itself."""
    return fiber_cover_coefficient(n, d) / d


def H_from_sum(n: int, N: int) -> Series:
    _check_n(n)
    return e0_descendent_series(N) * F_product(n, N)


def H_from_trr(n: int, N: int) -> Series:
    _check_n(n)
    Fs = F_product(n, N)
    return (Fraction(1, 12) * theta(Fs) - Fraction(1, 12) * Fs
            + (2 - n) * (G_series(N) * Fs))


def trr_assembly(X: SurfaceModel, Fs: Series) -> Series:
    """H(t) on ``X`` assembled term by term from the genus-1 recursion.

    ``Fs`` is the genus-0 series ``sum GW_{S+dF,0} t^d`` of ``X``. The three
    pieces are the nodal-sphere term ``(1/24) (S+dF)^2 GW_{S+dF,0}``, the
    fiber-cover convolution ``F * sum d GW_{dF,1} t^d`` and the degenerate
    genus-1 maps, weighted by ``((S+dF).K) / 24``.
    """
    N = Fs.order
    nodal = Series([Fraction(pair(X, A, A), 24) * Fs[d]
                    for d, A in ((d, section_plus_fibers(d)) for d in range(N + 1))], N)
    covers = Series([0] + [fiber_cover_coefficient(X.n, d) for d in range(1, N + 1)], N)
    K = X.canonical_class
    degenerate = Series([Fraction(pair(X, section_plus_fibers(d), K), 24) * Fs[d]
                         for d in range(N + 1)], N)
    return nodal + covers * Fs + degenerate


def H_assembled(n: int, N: int) -> Series:
    _check_n(n)
    return trr_assembly(SurfaceModel(n), F_product(n, N))


def e0_assembled(N: int) -> Series:
    """The E(0) series rebuilt by :func:`trr_assembly`; only ``GW_{S,0} = 1`` is nonzero."""
    return trr_assembly(SurfaceModel(0), Series.one(N))


def divisor_axiom_series(n: int, Fs: Series) -> Series:
    """``sum_d (S+dF)^2 F_d t^d`` using the intersection form of E(n)."""
    X = SurfaceModel(n)
    return Series([pair(X, section_plus_fibers(d), section_plus_fibers(d)) * Fs[d]
                   for d in range(Fs.order + 1)], Fs.order)
