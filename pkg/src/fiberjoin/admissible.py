"""Admissible structures on split joins and their curvature profiles.

A split join whose two classes differ on at least one base factor
carries admissible data: per retained factor a normalized curvature
value s_a and a class parameter r_a in (-1, 1), plus one entry for
each nontrivial fiber block with r = +1 / -1.  From that data the
extremal profile polynomial is the unique solution of an exact
square linear system (interpolation at the nodes -1/r_a together
with four boundary conditions), and constant scalar curvature for
two retained factors reduces to a pair of affine equations plus
positivity of an explicit quadratic on (-1, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactalg import (
    Polynomial,
    Rational,
    SingularMatrixError,
    solve_linear,
    strictly_positive_on,
)
from .model import (
    FiberJoinSpec,
    SpecError,
    column_differences,
    is_colinear,
    regular_join_data,
    retained_factors,
    validate,
)


class NotAdmissibleError(SpecError):
    """The split join carries no admissible structure."""


class DegenerateFactorError(SpecError):
    """Two base factors have identical class columns."""


class RepeatedParameterError(SpecError):
    """Two retained factors share the same class parameter r."""


class EqualParameterError(SpecError):
    """The two-factor solver needs distinct class parameters."""


class AnsatzError(SpecError):
    """The balanced ansatz needs s1 + s2 = 0 and r1 + r2 = 0."""


class SingularSystemError(SingularMatrixError):
    """The profile linear system is degenerate."""


class RepeatedNodeError(SingularSystemError):
    """Two interpolation nodes coincide (repeated r values)."""


FIBER_ZERO = "fiber_zero"
FIBER_INFINITY = "fiber_infinity"


@dataclass(frozen=True)
class AdmissibleEntry:
    """One index of the admissible data: a retained base factor or a
    fiber block.  dim is the complex dimension carried by the index,
    s the normalized scalar curvature, r the class parameter."""

    label: str
    dim: int
    s: Fraction
    r: Fraction


@dataclass(frozen=True)
class AdmissibleData:
    entries: tuple[AdmissibleEntry, ...]

    @property
    def base_entries(self) -> tuple[AdmissibleEntry, ...]:
        return tuple(
            e for e in self.entries if e.label not in (FIBER_ZERO, FIBER_INFINITY)
        )

    @property
    def d0(self) -> int:
        for e in self.entries:
            if e.label == FIBER_ZERO:
                return e.dim
        return 0

    @property
    def dinf(self) -> int:
        for e in self.entries:
            if e.label == FIBER_INFINITY:
                return e.dim
        return 0


def admissible_data(spec: FiberJoinSpec) -> AdmissibleData:
    """Build admissible data from a split join.

    Retained factors are those whose split classes differ; each must
    be a curve (complex dimension one) with a well-defined genus, and
    the resulting r values must be pairwise distinct.
    """
    validate(spec)
    if spec.split is None:
        raise SpecError("admissible data needs a split join")
    retained = retained_factors(spec)
    if not retained:
        raise NotAdmissibleError("both split classes agree on every factor")
    w0 = spec.omega_zero()
    winf = spec.omega_infinity()
    columns = [(w0[a], winf[a]) for a in range(len(w0))]
    for i in range(len(columns)):
        for j in range(i + 1, len(columns)):
            if i in retained and j in retained and columns[i] == columns[j]:
                raise DegenerateFactorError(
                    f"factors {i} and {j} carry identical class columns"
                )
    diffs = column_differences(spec)
    entries = []
    for a in retained:
        factor = spec.base.factors[a]
        genus = factor.effective_genus
        if genus is None:
            raise NotAdmissibleError(
                "curvature normalization defined for curve factors only"
            )
        s = Fraction(2 * (1 - genus), diffs[a])
        r = Fraction(diffs[a], w0[a] + winf[a])
        entries.append(AdmissibleEntry(f"factor_{a}", factor.dim_c, s, r))
    seen = {}
    for e in entries:
        if e.r in seen:
            raise RepeatedParameterError(
                f"{seen[e.r]} and {e.label} share r = {e.r}"
            )
        seen[e.r] = e.label
    d0, dinf = spec.split
    if d0 > 0:
        entries.append(
            AdmissibleEntry(FIBER_ZERO, d0, Fraction(d0 + 1), Fraction(1))
        )
    if dinf > 0:
        entries.append(
            AdmissibleEntry(FIBER_INFINITY, dinf, Fraction(-(dinf + 1)), Fraction(-1))
        )
    return AdmissibleData(tuple(entries))


def characteristic_product(data: AdmissibleData) -> Polynomial:
    """The product of (1 + r_a z)^(dim_a) over all entries; it weights
    the boundary conditions and divides the profile's second derivative."""
    result = Polynomial.one()
    for e in data.entries:
        result = result * Polynomial.linear(1, e.r) ** e.dim
    return result


@dataclass(frozen=True)
class ExtremalProfile:
    """Solution of the extremal profile system.

    profile:       F, the momentum profile polynomial on [-1, 1]
    source:        P, with F'' = (reduced characteristic product) * P
    char_product:  the characteristic product of the data
    positive:      whether F > 0 strictly inside (-1, 1)
    """

    profile: Polynomial
    source: Polynomial
    char_product: Polynomial
    positive: bool


def extremal_profile(data: AdmissibleData) -> ExtremalProfile:
    """Solve for the extremal profile polynomial of the data.

    Unknowns: the |entries|+2 coefficients of the source polynomial P
    and two integration constants.  Equations: interpolation of P at
    each node -1/r_a, and the four boundary conditions F(+-1) = 0,
    F'(+-1) = -+2 p(+-1) with p the characteristic product.  The
    system is square and has a unique solution whenever the nodes are
    distinct.
    """
    entries = data.entries
    m = len(entries)
    if m == 0:
        raise SpecError("empty admissible data")
    nodes = [Fraction(-1, 1) / e.r for e in entries]
    if len(set(nodes)) != m:
        raise RepeatedNodeError("repeated interpolation nodes")

    reduced = Polynomial.one()
    for e in entries:
        reduced = reduced * Polynomial.linear(1, e.r) ** (e.dim - 1)
    char = characteristic_product(data)

    # Basis images: for P = sum p_k z^k, F'' = reduced * P, so F' and F
    # are the iterated antiderivatives plus the two constants.
    monomial_first = []
    monomial_second = []
    for k in range(m + 2):
        g = reduced * Polynomial.from_coeffs([0] * k + [1])
        first = g.antiderivative()
        monomial_first.append(first)
        monomial_second.append(first.antiderivative())

    size = m + 4
    matrix = [[Fraction(0)] * size for _ in range(size)]
    rhs = [Fraction(0)] * size

    for i, e in enumerate(entries):
        node = nodes[i]
        for k in range(m + 2):
            matrix[i][k] = node**k
        prod = Fraction(1)
        for j, other in enumerate(entries):
            if j != i:
                prod *= 1 - other.r / e.r
        rhs[i] = 2 * e.dim * e.s * e.r * prod

    one = Fraction(1)
    # F(x)  = sum_k p_k * B_k(x) + c_lin * x + c_const
    # F'(x) = sum_k p_k * C_k(x) + c_lin
    boundary = [
        (monomial_second, one, one, one, Fraction(0)),  # F(1) = 0
        (monomial_second, -one, -one, one, Fraction(0)),  # F(-1) = 0
        (monomial_first, one, one, Fraction(0), -2 * char(1)),  # F'(1)
        (monomial_first, -one, one, Fraction(0), 2 * char(-1)),  # F'(-1)
    ]
    for row_idx, (basis, point, lin_coef, const_coef, value) in enumerate(boundary):
        row = matrix[m + row_idx]
        for k in range(m + 2):
            row[k] = basis[k](point)
        row[m + 2] = lin_coef
        row[m + 3] = const_coef
        rhs[m + row_idx] = value

    try:
        solution = solve_linear(matrix, rhs)
    except SingularMatrixError as exc:  # distinct nodes make this unreachable
        raise SingularSystemError(str(exc)) from exc

    source = Polynomial.from_coeffs(solution[: m + 2])
    c_lin, c_const = solution[m + 2], solution[m + 3]
    second = reduced * source
    first = second.antiderivative() + Polynomial.constant(c_lin)
    profile = second.antiderivative().antiderivative() + Polynomial.linear(
        c_const, c_lin
    )

    assert profile(1) == 0 and profile(-1) == 0
    assert first(1) == -2 * char(1) and first(-1) == 2 * char(-1)
    positive = (not profile.is_zero) and strictly_positive_on(profile, -1, 1)
    return ExtremalProfile(
        profile=profile, source=source, char_product=char, positive=positive
    )


CSC = "csc"
POSITIVITY_FAILS = "positivity_fails"
INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class CscResult:
    """Outcome of the two-factor constant-scalar-curvature solve.

    s:           the normalized scalar curvature (None if inconsistent)
    certificate: the quadratic that must be positive on (-1, 1)
    verdict:     csc / positivity_fails / inconsistent
    """

    s: Optional[Fraction]
    certificate: Optional[Polynomial]
    verdict: str


def _affine_solve(coef: Fraction, const: Fraction) -> Fraction:
    return -const / coef


def solve_csc(data: AdmissibleData) -> CscResult:
    """Decide constant scalar curvature for two retained factors and
    trivial fiber blocks.

    Each of the two curvature equations is affine in the candidate
    value s; a common root plus positivity of the certificate
    quadratic on (-1, 1) is equivalent to a CSC structure.  For data
    coming from curve factors a nonnegative root makes the quadratic
    concave down with positive endpoint values, so positivity follows,
    but the solver always runs the exact check: it accepts synthetic
    data with s_a * r_a >= 2 where that argument breaks down.
    """
    base = data.base_entries
    if len(base) != 2 or data.d0 != 0 or data.dinf != 0:
        raise SpecError("two retained factors and a trivial split required")
    (e1, e2) = base
    s1, r1 = e1.s, e1.r
    s2, r2 = e2.s, e2.r
    if r1 == r2:
        raise EqualParameterError("class parameters must differ")

    # r1*(s1*(r1-r2) - 2 + (1-s)*r1*r2) + 3*(s-1)*r2 = 0, affine in s.
    coef_a = r2 * (3 - r1 * r1)
    const_a = r1 * (s1 * (r1 - r2) - 2 + r1 * r2) - 3 * r2
    coef_b = r1 * (3 - r2 * r2)
    const_b = r2 * (s2 * (r2 - r1) - 2 + r1 * r2) - 3 * r1
    sa = _affine_solve(coef_a, const_a)
    sb = _affine_solve(coef_b, const_b)
    if sa != sb:
        return CscResult(s=None, certificate=None, verdict=INCONSISTENT)
    s = sa

    certificate = (
        Polynomial.linear(1, r1) * Polynomial.linear(1, r2)
        + (1 - s / 2) * r1 * r2 * Polynomial.from_coeffs([1, 0, -1])
    )
    if strictly_positive_on(certificate, -1, 1):
        return CscResult(s=s, certificate=certificate, verdict=CSC)
    return CscResult(s=s, certificate=certificate, verdict=POSITIVITY_FAILS)


def csc_ansatz(data: AdmissibleData) -> Fraction:
    """Closed form for the CSC value under the balanced hypothesis
    s1 + s2 = 0, r1 + r2 = 0."""
    base = data.base_entries
    if len(base) != 2 or data.d0 != 0 or data.dinf != 0:
        raise SpecError("two retained factors and a trivial split required")
    (e1, e2) = base
    if e1.s + e2.s != 0 or e1.r + e2.r != 0:
        raise AnsatzError("balanced hypothesis fails")
    s1, r1 = e1.s, e1.r
    return (1 - r1 * r1 + 2 * s1 * r1) / (3 - r1 * r1)


def genus_threshold(genus: int) -> int:
    """Largest k for which the symmetric nearly-colinear family over a
    genus-g square fails the nonnegative-curvature criterion.

    The criterion k^2 + (3-2g)k + (1-g) > 0 holds exactly above the
    integer part of the larger root; computed with exact integer
    square roots.
    """
    if genus < 2:
        return 0
    disc = 4 * genus * genus - 8 * genus + 5
    root = math.isqrt(disc)
    return (2 * genus - 3 + root) // 2


def quotient_class_parameters(spec: FiberJoinSpec) -> list[Fraction]:
    """Class parameters of the regular quotient for a d=1 split join.

    Per retained factor: (difference)/(sum) of the two class entries;
    colinear joins collapse to the single value (b1-b2)/(b1+b2) built
    from the two multiples of the primitive class.
    """
    validate(spec)
    if spec.split != (0, 0):
        raise SpecError("quotient parameters defined for d=1 split joins")
    retained = retained_factors(spec)
    if not retained:
        raise NotAdmissibleError("both classes agree; no admissible direction")
    if is_colinear(spec):
        join = regular_join_data(spec)
        m1, m2 = join.multiples
        return [Fraction(m1 - m2, m1 + m2)]
    w0 = spec.omega_zero()
    winf = spec.omega_infinity()
    params = [
        Fraction(w0[a] - winf[a], w0[a] + winf[a]) for a in retained
    ]
    data = admissible_data(spec)
    assert params == [e.r for e in data.base_entries]
    return params
