"""Named identity checks, each reduced to a residual series that must vanish."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import gw, yz
from .arith import G2_CONSTANT, G2_series, G_lambert, G_series, Ge_series, Go_series
from .qseries import Series, even_part, odd_part, theta
from .surface import E1Lattice, degenerate_map_sum

DEFAULT_SEED = 20240101
DEFAULT_N_MAX = 5
RANDOM_TRIALS = 10


@dataclass(frozen=True)
class VerificationReport:
    name: str
    order: int
    residual: Series

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def first_failure(self) -> tuple[int, Fraction] | None:
        idx = self.residual.nonzero_indices()
        return (idx[0], self.residual[idx[0]]) if idx else None


def random_series(rng: random.Random, order: int, parity: str | None = None,
                  bound: int = 9) -> Series:
    """Small random rationals; ``parity`` of 'even' or 'odd' restricts the support."""
    cs = []
    for m in range(order + 1):
        if parity == "even" and m % 2 or parity == "odd" and m % 2 == 0:
            cs.append(0)
        else:
            cs.append(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
    return Series(cs, order)


def _stack(residuals: list[Series]) -> Series:
    """Concatenate residuals so one zero-test covers all of them."""
    cs = [c for r in residuals for c in r.coeffs]
    return Series(cs)


def _splitdiag_residual() -> Series:
    # E(1): GW_{0,1}(H^a) = -(H^a . F)/24, so the dual-basis sum must be -(A.F)/24 = -1/24
    L = E1Lattice.standard()
    fib = L.fiber()
    neg_fib = tuple(-x for x in fib)
    out = []
    for d in range(4):
        A = tuple(s + d * f for s, f in zip(L.section(1), fib))
        out.append(degenerate_map_sum(L, A, neg_fib) - Fraction(-1, 24))
    return Series(out)


def checks(order: int, n_max: int = DEFAULT_N_MAX, seed: int = DEFAULT_SEED,
           g2_constant: Fraction = G2_CONSTANT) -> dict[str, Callable[[], Series]]:
    """Residual thunks keyed by check name."""
    N = order
    c = Fraction(g2_constant)
    table: dict[str, Callable[[], Series]] = {}

    for n in range(1, n_max + 1):
        def product_ode(n=n):
            g = G_series(N)
            f = gw.F_product(n, N)
            return _stack([f - gw.solve_theta_ode(12 * n * g, 1),
                           theta(f) - 12 * n * (g * f)])

        def trr_vs_sum(n=n):
            f = gw.F_product(n, N)
            diff = gw.H_from_trr(n, N) - gw.H_from_sum(n, N)
            algebraic = Fraction(1, 12) * theta(f) - n * (G_series(N) * f)
            return _stack([diff, algebraic, gw.H_assembled(n, N) - gw.H_from_trr(n, N)])

        def divisor_axiom(n=n):
            f = gw.F_product(n, N)
            return gw.divisor_axiom_series(n, f) - (2 * theta(f) - n * f)

        table[f"gw.product_ode[n={n}]"] = product_ode
        table[f"gw.trr_vs_sum[n={n}]"] = trr_vs_sum
        table[f"gw.divisor_axiom[n={n}]"] = divisor_axiom

    def lambert():
        return G_series(N) - G_lambert(N)

    def even_odd():
        g2 = G2_series(N, c)
        ge, go = Ge_series(N, c), Go_series(N, c)
        return _stack([ge + go - g2, odd_part(ge), even_part(go)])

    def e0_series():
        return gw.e0_assembled(N) - gw.e0_descendent_series(N)

    def relqmod():
        return yz.relqmod_residual(N, c)

    def theta_identity():
        return yz.theta_identity_residual(N, c)

    def doubling():
        rep = yz.main1_check(N, c)
        parity = odd_part(rep.solution)
        initial = Series([rep.solution[0] - yz.MULTIPLE_COVER])
        return _stack([rep.residual_relqmod, rep.residual_theta, rep.residual_ode4,
                       rep.difference, parity, initial])

    def elimination():
        rng = random.Random(seed)
        return _stack([yz.elimination_ode1_check(random_series(rng, N), c)
                       for _ in range(RANDOM_TRIALS)])

    def odd_projection():
        rng = random.Random(seed + 1)
        return _stack([yz.odd_projection_check(random_series(rng, N, "even"), c)
                       for _ in range(RANDOM_TRIALS)])

    table.update({
        "arith.lambert": lambert,
        "arith.even_odd_split": even_odd,
        "gw.e0_series": e0_series,
        "surface.splitdiag": _splitdiag_residual,
        "yz.relqmod": relqmod,
        "yz.theta_identity": theta_identity,
        "yz.doubling": doubling,
        "yz.elimination_ode1": elimination,
        "yz.odd_projection": odd_projection,
    })
    return table


def run_suite(order: int, n_max: int = DEFAULT_N_MAX, seed: int = DEFAULT_SEED,
              g2_constant: Fraction = G2_CONSTANT) -> list[VerificationReport]:
    if order < 0:
        raise ValueError("order must be >= 0")
    table = checks(order, n_max, seed, g2_constant)
    return [VerificationReport(name, order, table[name]()) for name in sorted(table)]
