"""Topological invariants of fiber joins.

Characteristic classes of the contact bundle live on the base and
are computed exactly in the monomial basis of primitive generators;
Euler class, first Pontryagin number, spin type, and the integral
cohomology table are available for the bases where a closed form
holds (products of two curves for most of them, and a second curve
factor of genus zero for the higher-fiber Pontryagin number).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional

from .model import (
    PROJECTIVE_SPACE,
    BaseFactor,
    FiberJoinSpec,
    SpecError,
    validate,
)

ClassVector = tuple[int, ...]


class UnsupportedBaseError(SpecError):
    """The requested invariant has no closed form for this base."""


class OutOfValidityRangeError(SpecError):
    """Chern degree outside the window where the pullback is injective."""


def c1_contact(spec: FiberJoinSpec) -> ClassVector:
    """First Chern class of the contact bundle, on the base generators.

    Componentwise: (anticanonical coefficient) minus (column sum of K).
    """
    validate(spec)
    sums = spec.matrix.column_sums()
    return tuple(c - s for c, s in zip(spec.base.c1_vector(), sums))


def _require_curve_factors(spec: FiberJoinSpec) -> None:
    for f in spec.base.factors:
        if f.dim_c != 1:
            raise UnsupportedBaseError(
                "cup products need every base factor of complex dimension one"
            )


def chern_k(spec: FiberJoinSpec, k: int) -> dict[tuple[int, ...], int]:
    """Degree-k Chern class of the contact bundle, expanded in the
    square-free monomials of the base generators.

    Valid only while 2k < 2d+1: above that window the pullback from
    the base is no longer faithful and no formula is returned.
    """
    validate(spec)
    if k < 1:
        raise ValueError("k must be positive")
    if 2 * k >= 2 * spec.d + 1:
        raise OutOfValidityRangeError(
            f"degree {k} outside the faithful range for fiber S^{2 * spec.d + 1}"
        )
    if k > 1:
        _require_curve_factors(spec)
    width = len(spec.base.factors)
    result: dict[tuple[int, ...], int] = {
        combo: 0 for combo in combinations(range(width), k)
    }
    # Elementary symmetric polynomial of the negated rows, expanded
    # multilinearly; squares of generators vanish on curve factors.
    for picked in combinations(range(spec.d + 1), k):
        for combo in combinations(range(width), k):
            total = 0
            for assignment in permutations(combo):
                term = 1
                for row_idx, col in zip(picked, assignment):
                    term *= -spec.matrix.rows[row_idx][col]
                total += term
            result[combo] += total
    # Chern class of the base: product over factors of (1 + c1_a x_a).
    c1s = spec.base.c1_vector()
    for combo in combinations(range(width), k):
        term = 1
        for a in combo:
            term *= c1s[a]
        result[combo] += term
    return result


def _two_curve_base(spec: FiberJoinSpec) -> tuple[BaseFactor, BaseFactor]:
    if len(spec.base.factors) != 2:
        raise UnsupportedBaseError("this invariant needs a product of two curves")
    f1, f2 = spec.base.factors
    if f1.effective_genus is None or f2.effective_genus is None:
        raise UnsupportedBaseError("this invariant needs a product of two curves")
    return f1, f2


def euler_class(spec: FiberJoinSpec) -> int:
    """Euler class of the join over a product of two curves, as a
    multiple of the orientation class; zero as soon as d > 1."""
    validate(spec)
    _two_curve_base(spec)
    if spec.d > 1:
        return 0
    r0, r1 = spec.matrix.rows
    return r0[0] * r1[1] + r0[1] * r1[0]


def p1(spec: FiberJoinSpec) -> int:
    """First Pontryagin number against the natural orientation class.

    Closed forms: any d=1 join over a product of two curves; for
    d > 1 a split join over a product of two genus-zero curves.
    """
    validate(spec)
    f1, f2 = _two_curve_base(spec)
    if spec.d == 1:
        r0, r1 = spec.matrix.rows
        return 2 * (r0[0] - r1[0]) * (r0[1] - r1[1])
    if spec.split is None:
        raise UnsupportedBaseError("d > 1 needs a split join")
    if f1.effective_genus != 0 or f2.effective_genus != 0:
        raise UnsupportedBaseError(
            "d > 1 closed form holds over two genus-zero curves"
        )
    d0, dinf = spec.split
    k0 = spec.omega_zero()
    kinf = spec.omega_infinity()
    return (
        -4 * (d0 + 1) * (k0[0] + k0[1])
        - 4 * (dinf + 1) * (kinf[0] + kinf[1])
        + 2 * (d0 + 1) * k0[0] * k0[1]
        + 2 * (dinf + 1) * kinf[0] * kinf[1]
    )


SPIN = "spin"
NON_SPIN = "non_spin"


def spin_status(spec: FiberJoinSpec) -> str:
    """Spin or not: the second Stiefel-Whitney class is the mod-2
    reduction of c1 of the contact bundle."""
    validate(spec)
    _two_curve_base(spec)
    c1 = c1_contact(spec)
    return SPIN if all(c % 2 == 0 for c in c1) else NON_SPIN


def p1_congruence_holds(spec: FiberJoinSpec) -> bool:
    """Whether p1 = 2e mod 4, the congruence entering finiteness
    arguments for homotopy types of these 7-manifolds (d=1)."""
    return (p1(spec) - 2 * euler_class(spec)) % 4 == 0


@dataclass(frozen=True)
class CohomologyTable:
    """Integral cohomology, degree -> (free rank, torsion cyclic orders)."""

    groups: tuple[tuple[int, int, tuple[int, ...]], ...]

    def free_rank(self, degree: int) -> int:
        for deg, rank, _ in self.groups:
            if deg == degree:
                return rank
        return 0

    def torsion(self, degree: int) -> tuple[int, ...]:
        for deg, _, tors in self.groups:
            if deg == degree:
                return tors
        return ()

    @property
    def top_degree(self) -> int:
        return max(deg for deg, _, _ in self.groups)

    def as_dict(self) -> dict[int, dict]:
        return {
            deg: {"free": rank, "torsion": list(tors)}
            for deg, rank, tors in self.groups
        }


def _curve_product_betti(g1: int, g2: int) -> list[int]:
    return [1, 2 * g1 + 2 * g2, 4 * g1 * g2 + 2, 2 * g1 + 2 * g2, 1]


def cohomology_table(spec: FiberJoinSpec) -> CohomologyTable:
    """Integral cohomology of the join over a product of two curves.

    For d=1 the only torsion is a cyclic group in degree 4 of order
    the Euler class (omitted when that order is 1); for d > 1 the
    join is a curve-product times an odd sphere and the table is
    torsion free.
    """
    validate(spec)
    f1, f2 = _two_curve_base(spec)
    g1, g2 = f1.effective_genus, f2.effective_genus
    betti = _curve_product_betti(g1, g2)
    if spec.d == 1:
        e = euler_class(spec)
        groups = [
            (0, 1, ()),
            (1, betti[1], ()),
            (2, betti[2], ()),
            (3, betti[1], ()),
            (4, betti[1], (e,) if e > 1 else ()),
            (5, betti[2], ()),
            (6, betti[1], ()),
            (7, 1, ()),
        ]
        return CohomologyTable(tuple(groups))
    shift = 2 * spec.d + 1
    top = shift + 4
    groups = []
    for deg in range(top + 1):
        rank = 0
        if 0 <= deg <= 4:
            rank += betti[deg]
        if 0 <= deg - shift <= 4:
            rank += betti[deg - shift]
        groups.append((deg, rank, ()))
    return CohomologyTable(tuple(groups))


@dataclass(frozen=True)
class HomeoKey:
    """(p1, euler) pair; distinct keys certify distinct homeomorphism
    types within the symmetric two-parameter family."""

    p1: int
    euler: int


def homeo_key(spec: FiberJoinSpec) -> HomeoKey:
    """Homeomorphism-separating key for d=1 joins over a product of two
    genus-zero curves with matrix [[k, l], [l, k]], k > l."""
    validate(spec)
    f1, f2 = _two_curve_base(spec)
    if f1.effective_genus != 0 or f2.effective_genus != 0:
        raise UnsupportedBaseError("key defined over two genus-zero curves")
    if spec.d != 1:
        raise UnsupportedBaseError("key defined for d=1 joins")
    r0, r1 = spec.matrix.rows
    k, l = r0
    if (r1[0], r1[1]) != (l, k) or not k > l:
        raise UnsupportedBaseError(
            "key defined for the symmetric family [[k, l], [l, k]] with k > l"
        )
    return HomeoKey(p1=p1(spec), euler=euler_class(spec))
