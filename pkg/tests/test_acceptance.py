"""Exit criteria. Every comparison is exact; there are no tolerances."""
import csv
import io
import random
from fractions import Fraction

from gwseries import gw, yz
from gwseries.arith import G_series
from gwseries.cli import main
from gwseries.qseries import odd_part, substitute_power, theta
from gwseries.surface import (
    E1Lattice, SurfaceModel, family_dimension, gw_dimension, section_plus_fibers,
)
from gwseries.verify import DEFAULT_SEED, random_series

from oracles import K3_GENUS0, euler_product_power

ORDER = 64
PERTURBED = Fraction(-1, 24) + Fraction(1, 1000)


def test_c1_e1_product_solves_ode(criterion):
    f = gw.F_product(1, ORDER)
    y = gw.solve_theta_ode(12 * G_series(ORDER), 1)
    criterion("1  E(1): product == solution of tF' = 12GF, F(0)=1, order 64",
              f == y and y[0] == 1)


def test_c2_en_product_solves_ode(criterion):
    ok = all(gw.F_product(n, ORDER) == gw.solve_theta_ode(12 * n * G_series(ORDER), 1)
             for n in (2, 3, 4, 5))
    criterion("2  E(n), n=2..5: product == ODE solution with exponent 12n, order 64", ok)


def test_c3_trr_sum_reconciliation(criterion):
    ok = True
    for n in range(1, 6):
        f = gw.F_product(n, ORDER)
        ok &= gw.H_from_trr(n, ORDER) == gw.H_from_sum(n, ORDER)
        ok &= (Fraction(1, 12) * theta(f) - n * (G_series(ORDER) * f)).is_zero()
    criterion("3  H from TRR == H from symplectic sum, n=1..5, order 64", ok)


def test_c4_yau_zaslow_primitive(criterion):
    f = gw.F_product(2, 20)
    oracle = euler_product_power(-24, 20)
    ok = list(f) == oracle == K3_GENUS0
    ok &= f[0] == 1 and [f[d] for d in range(1, 6)] == [24, 324, 3200, 25650, 176256]
    criterion("4  K3 primitive counts N_0..N_20 match the brute-force product oracle", ok)


def test_c5_modular_identity(criterion):
    c = Fraction(-1, 24)
    hand_t0 = 32 * c * c - 40 * c * c + 8 * c * c
    hand_t1 = -40 * c + 16 * c - 1
    r = yz.relqmod_residual(200)
    ok = r.is_zero() and hand_t0 == 0 and hand_t1 == 0 and r[0] == hand_t0 and r[1] == hand_t1
    criterion("5  weight-4 level-2 relation among G2(t), G2(t^2) vanishes to order 200", ok)


def test_c6_doubling(criterion):
    y = yz.solve_ode4(128)
    target = Fraction(1, 8) * substitute_power(gw.F_product(2, 128), 2)
    ok = odd_part(y).is_zero() and y == target and yz.doubling_value(0) == Fraction(1, 8)
    criterion("6  odd-part ODE solution == (1/8) F(t^2) to order 128; GW(2S) = 1/8", ok)


def test_c7_elimination_identities(criterion):
    rng = random.Random(DEFAULT_SEED)
    ok = True
    for _ in range(10):
        ok &= yz.elimination_ode1_check(random_series(rng, 40)).is_zero()
        ok &= yz.odd_projection_check(random_series(rng, 40, "even")).is_zero()
    criterion("7  elimination and odd-projection identities on 10 seeded series, order 40", ok)


def test_c8_lattice_and_dimensions(criterion):
    L = E1Lattice.standard()
    ok = abs(L.det()) == 1
    rng = random.Random(DEFAULT_SEED)
    ok &= all(L.reconstruct(x) == x for x in (L.random_vector(rng) for _ in range(100)))
    for d in range(10):
        A = section_plus_fibers(d)
        ok &= gw_dimension(SurfaceModel(1), A, 0, 0) == 0
        for n in range(1, 8):
            X = SurfaceModel(n)
            ok &= gw_dimension(X, A, 0, 0) == 2 * (1 - n)
            for g in range(3):
                for k in range(3):
                    ok &= family_dimension(X, A, g, k) - gw_dimension(X, A, g, k) == 2 * X.p_g
    criterion("8  E(1) lattice unimodular, dual basis reconstructs, dimension formulas", ok)


def test_c9_negative_control(criterion, capsys):
    code = main(["verify", "--order", str(ORDER), "--format", "csv",
                 f"--g2-constant={PERTURBED}"])
    rows = {r["check"]: r["verdict"] for r in csv.DictReader(io.StringIO(capsys.readouterr().out))}
    c5_fails = not yz.relqmod_residual(200, PERTURBED).is_zero()
    y = yz.solve_ode4(128, PERTURBED)
    c6_fails = y != Fraction(1, 8) * substitute_power(gw.F_product(2, 128), 2)
    ok = (code == 1 and rows["yz.relqmod"] == "fail" and rows["yz.doubling"] == "fail"
          and c5_fails and c6_fails)
    criterion("9  perturbed G2 constant breaks criteria 5 and 6; verify exits 1", ok)
