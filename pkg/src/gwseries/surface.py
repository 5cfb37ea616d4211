"""Intersection data of the elliptic surfaces E(n).

Only the span of the section class ``S`` and fiber class ``F`` is modelled
for general ``n``; the full rank-10 lattice is available for E(1).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import sympy


@dataclass(frozen=True)
class SurfaceModel:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"E(n) needs a nonnegative integer n, got {self.n!r}")

    @property
    def canonical_fiber_multiple(self) -> int:
        return self.n - 2

    @property
    def canonical_class(self) -> HClass:
        return HClass(0, self.canonical_fiber_multiple)

    @property
    def p_g(self) -> int:
        # E(0) = S^2 x T^2 has no holomorphic 2-forms
        return max(self.n - 1, 0)

    @property
    def euler_char(self) -> int:
        return 12 * self.n

    def __str__(self) -> str:
        return f"E({self.n})"


@dataclass(frozen=True)
class HClass:
    """The homology class ``s*S + f*F``."""

    s: int
    f: int

    def __add__(self, other: HClass) -> HClass:
        return HClass(self.s + other.s, self.f + other.f)

    def __sub__(self, other: HClass) -> HClass:
        return HClass(self.s - other.s, self.f - other.f)

    def __neg__(self) -> HClass:
        return HClass(-self.s, -self.f)

    def __rmul__(self, k: int) -> HClass:
        return HClass(k * self.s, k * self.f)

    def __str__(self) -> str:
        parts = []
        for coeff, sym in ((self.s, "S"), (self.f, "F")):
            if coeff == 0:
                continue
            mag = "" if abs(coeff) == 1 else str(abs(coeff))
            sign = "-" if coeff < 0 else ("+" if parts else "")
            parts.append(f"{sign}{mag}{sym}")
        return "".join(parts) or "0"


S = HClass(1, 0)
F = HClass(0, 1)


def section_plus_fibers(d: int) -> HClass:
    return HClass(1, d)


def pair(X: SurfaceModel, A: HClass, B: HClass) -> int:
    """Intersection number with ``S.S = -n``, ``S.F = 1``, ``F.F = 0``."""
    return -X.n * A.s * B.s + A.s * B.f + A.f * B.s


def gw_dimension(X: SurfaceModel, A: HClass, g: int, k: int) -> int:
    """Real dimension of the space of genus-``g``, ``k``-pointed stable maps in class ``A``.

    This is the surface case (complex dimension 2) of the general
    ``2[(n - 3)(1 - g) - K.A] + 2k`` count.
    """
    return 2 * (-(1 - g) - pair(X, X.canonical_class, A)) + 2 * k


def family_dimension(X: SurfaceModel, A: HClass, g: int, k: int) -> int:
    """Dimension over the ``p_g``-dimensional family of almost complex structures."""
    if X.n < 1:
        raise ValueError("family invariants are only set up for E(n) with n >= 1")
    return 2 * ((g - 1) - pair(X, X.canonical_class, A) + k + X.p_g)


def divisor_axiom_factor(A: HClass, V: HClass, X: SurfaceModel | None = None) -> int:
    """``A.V``, the factor gained when a marked point is constrained to ``V``.

    The self-intersection of ``S`` is only needed when both classes involve
    ``S``; in that case the surface must be given.
    """
    if A.s and V.s:
        if X is None:
            raise ValueError(f"{A} . {V} depends on S.S; pass the surface")
        return pair(X, A, V)
    return A.s * V.f + A.f * V.s


def dimension_table(n: int, max_d: int, genera=(0, 1), k: int = 0) -> list[dict]:
    X = SurfaceModel(n)
    rows = []
    for d in range(max_d + 1):
        A = section_plus_fibers(d)
        for g in genera:
            rows.append({
                "surface": str(X),
                "class": str(A),
                "g": g,
                "k": k,
                "self_intersection": pair(X, A, A),
                "K.A": pair(X, X.canonical_class, A),
                "gw_dimension": gw_dimension(X, A, g, k),
                "family_dimension": family_dimension(X, A, g, k) if n >= 1 else None,
            })
    return rows


# -- the rank-10 lattice of E(1) ------------------------------------------

class NonUnimodularError(ValueError):
    pass


def _blowup_form(u, v) -> int:
    # H, E_1..E_9 with H.H = 1, E_i.E_i = -1
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def _blowup_vector(h=0, **es) -> tuple[int, ...]:
    v = [h] + [0] * 9
    for key, c in es.items():
        v[int(key[1:])] += c
    return tuple(v)


_BLOWUP_S = [_blowup_vector(**{f"e{i}": 1}) for i in range(1, 10)]
_BLOWUP_F = (3,) + (-1,) * 9
# E8 roots orthogonal to S = E_1 and F; the last one meets E_4 - E_5
_BLOWUP_ROOTS = [_blowup_vector(**{f"e{i}": 1, f"e{i + 1}": -1}) for i in range(2, 9)]
_BLOWUP_ROOTS.append(_blowup_vector(1, e2=-1, e3=-1, e4=-1))


class E1Lattice:
    """An integral lattice given by its Gram matrix in some basis.

    :meth:`standard` is ``H_2(E(1); Z)`` in the basis ``S, F, R_1..R_8``
    whose Gram matrix is the block sum of the ``(S, F)`` plane and minus the
    E8 Cartan matrix.
    """

    def __init__(self, gram, labels=None, ambient_basis=None):
        self.gram = sympy.ImmutableMatrix(gram)
        if not self.gram.is_square or self.gram != self.gram.T:
            raise ValueError("Gram matrix must be square and symmetric")
        self.rank = self.gram.rows
        self.labels = list(labels) if labels else [f"e{a}" for a in range(self.rank)]
        self._ambient_basis = ambient_basis

    @classmethod
    def standard(cls) -> E1Lattice:
        basis = [_BLOWUP_S[0], _BLOWUP_F] + _BLOWUP_ROOTS
        gram = [[_blowup_form(u, v) for v in basis] for u in basis]
        labels = ["S", "F"] + [f"R{i}" for i in range(1, 9)]
        return cls(gram, labels, ambient_basis=basis)

    @classmethod
    def section_fiber_span(cls) -> E1Lattice:
        """The sublattice spanned by the nine sections and the fiber."""
        basis = _BLOWUP_S + [_BLOWUP_F]
        gram = [[_blowup_form(u, v) for v in basis] for u in basis]
        labels = [f"S{i}" for i in range(1, 10)] + ["F"]
        return cls(gram, labels, ambient_basis=basis)

    def pair(self, x, y) -> int:
        return int((sympy.Matrix(x).T * self.gram * sympy.Matrix(y))[0, 0])

    def det(self) -> int:
        return int(self.gram.det())

    def signature(self) -> tuple[int, int]:
        """(positive, negative) inertia via Descartes' rule on the characteristic polynomial.

        The rule counts roots exactly because a symmetric matrix has only
        real eigenvalues.
        """
        lam = sympy.Symbol("lam")
        poly = self.gram.charpoly(lam)

        def sign_changes(coeffs):
            signs = [c > 0 for c in coeffs if c != 0]
            return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

        pos = sign_changes(poly.all_coeffs())
        neg = sign_changes(sympy.Poly(poly.as_expr().subs(lam, -lam), lam).all_coeffs())
        return pos, neg

    def basis_vector(self, a: int) -> tuple[int, ...]:
        return tuple(int(a == b) for b in range(self.rank))

    @cached_property
    def _inverse(self):
        d = self.det()
        if abs(d) != 1:
            raise NonUnimodularError(f"Gram determinant is {d}; no integral dual basis")
        return self.gram.inv()

    def dual_basis(self) -> list[tuple[int, ...]]:
        """Vectors ``H^a`` with ``pair(H^a, H_b) = delta_ab``."""
        inv = self._inverse
        return [tuple(int(inv[b, a]) for b in range(self.rank)) for a in range(self.rank)]

    def reconstruct(self, x) -> tuple[int, ...]:
        """``sum_a pair(x, H_a) H^a``; the identity map for a genuine dual basis."""
        out = [0] * self.rank
        for a, dual in enumerate(self.dual_basis()):
            w = self.pair(x, self.basis_vector(a))
            for b in range(self.rank):
                out[b] += w * dual[b]
        return tuple(out)

    def from_ambient(self, v) -> tuple[int, ...]:
        """Coordinates of a vector given in the blow-up basis ``H, E_1..E_9``."""
        if self._ambient_basis is None:
            raise ValueError("this lattice has no blow-up model")
        rhs = sympy.Matrix([_blowup_form(u, v) for u in self._ambient_basis])
        sol = self.gram.LUsolve(rhs)
        if any(not c.is_integer for c in sol):
            raise ValueError(f"{v} is not in the lattice")
        return tuple(int(c) for c in sol)

    def section(self, i: int) -> tuple[int, ...]:
        """Coordinates of the section ``S_i`` (``i = 1..9``)."""
        return self.from_ambient(_BLOWUP_S[i - 1])

    def fiber(self) -> tuple[int, ...]:
        return self.from_ambient(_BLOWUP_F)

    def random_vector(self, rng: random.Random, bound: int = 20) -> tuple[int, ...]:
        return tuple(rng.randint(-bound, bound) for _ in range(self.rank))


def dual_basis(L: E1Lattice) -> list[tuple[int, ...]]:
    return L.dual_basis()


def degenerate_map_sum(L: E1Lattice, A, K, weight: Fraction = Fraction(1, 24)) -> Fraction:
    """``sum_a (A.H_a) * weight * (H^a.K)`` over a basis and its dual.

    With the degenerate genus-1 count ``(1/24) (H^a . K)`` this is the
    diagonal-splitting contribution; it collapses to ``(A.K)/24``.
    """
    total = Fraction(0)
    for a, dual in enumerate(L.dual_basis()):
        total += L.pair(A, L.basis_vector(a)) * weight * L.pair(dual, K)
    return total
