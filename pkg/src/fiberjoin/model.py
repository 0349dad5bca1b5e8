"""Data model for fiber joins of sphere bundles.

A fiber join is the unit sphere bundle in a direct sum of d+1 line
bundles over a compact base: each summand is classified by a positive
integral class on the base, and the join is recorded as the matrix K
whose rows are those classes written in the basis of primitive
generators (one per base factor).  An optional split (d0, dinf)
declares that the first d0+1 rows agree and the last dinf+1 rows
agree, which is the structure all curvature computations consume.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence


class SpecError(ValueError):
    """Invalid join description."""


class EmptyBaseError(SpecError):
    pass


class NonPositiveEntryError(SpecError):
    pass


class SplitMismatchError(SpecError):
    pass


class NotColinearError(SpecError):
    pass


SURFACE = "surface"
PROJECTIVE_SPACE = "projective_space"
TORUS = "torus"


@dataclass(frozen=True)
class BaseFactor:
    """One factor of the base: a Riemann surface, a projective space,
    or a 2-torus (the genus-one surface, kept as its own kind so
    reports name it)."""

    kind: str
    genus: Optional[int] = None
    n: Optional[int] = None

    def __post_init__(self):
        if self.kind == SURFACE:
            if self.genus is None or self.genus < 0:
                raise SpecError("surface factor needs genus >= 0")
        elif self.kind == PROJECTIVE_SPACE:
            if self.n is None or self.n < 1:
                raise SpecError("projective space factor needs n >= 1")
        elif self.kind == TORUS:
            if self.genus not in (None, 1):
                raise SpecError("torus factor has genus 1")
        else:
            raise SpecError(f"unknown base factor kind: {self.kind!r}")

    @staticmethod
    def surface(genus: int) -> "BaseFactor":
        return BaseFactor(SURFACE, genus=genus)

    @staticmethod
    def projective_space(n: int) -> "BaseFactor":
        return BaseFactor(PROJECTIVE_SPACE, n=n)

    @staticmethod
    def torus() -> "BaseFactor":
        return BaseFactor(TORUS, genus=1)

    @property
    def dim_c(self) -> int:
        return self.n if self.kind == PROJECTIVE_SPACE else 1

    @property
    def c1_coefficient(self) -> int:
        """Coefficient of the anticanonical class on this factor's
        primitive generator."""
        if self.kind == SURFACE:
            return 2 - 2 * self.genus
        if self.kind == PROJECTIVE_SPACE:
            return self.n + 1
        return 0

    @property
    def b1(self) -> int:
        if self.kind == SURFACE:
            return 2 * self.genus
        if self.kind == TORUS:
            return 2
        return 0

    @property
    def b2(self) -> int:
        return 1

    @property
    def effective_genus(self) -> Optional[int]:
        """Genus when the factor is a curve (surface, torus, or CP^1);
        None for higher-dimensional projective spaces."""
        if self.kind == SURFACE:
            return self.genus
        if self.kind == TORUS:
            return 1
        if self.kind == PROJECTIVE_SPACE and self.n == 1:
            return 0
        return None

    def describe(self) -> str:
        if self.kind == SURFACE:
            return f"surface(genus={self.genus})"
        if self.kind == PROJECTIVE_SPACE:
            return f"projective_space(n={self.n})"
        return "torus"


@dataclass(frozen=True)
class BaseProduct:
    factors: tuple[BaseFactor, ...]

    def __post_init__(self):
        if not self.factors:
            raise EmptyBaseError("base product needs at least one factor")

    @property
    def dim_c(self) -> int:
        return sum(f.dim_c for f in self.factors)

    def c1_vector(self) -> tuple[int, ...]:
        return tuple(f.c1_coefficient for f in self.factors)

    def describe(self) -> str:
        return " x ".join(f.describe() for f in self.factors)


@dataclass(frozen=True)
class KahlerMatrix:
    """Rows are the classifying classes of the line bundle summands,
    one column per base factor, all entries positive integers."""

    rows: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "KahlerMatrix":
        return KahlerMatrix(tuple(tuple(int(e) for e in row) for row in rows))

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def col_count(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, a: int) -> tuple[int, ...]:
        return tuple(row[a] for row in self.rows)

    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.rows))


@dataclass(frozen=True)
class FiberJoinSpec:
    base: BaseProduct
    matrix: KahlerMatrix
    split: Optional[tuple[int, int]] = None

    @property
    def d(self) -> int:
        """Fiber sphere dimension parameter: the fiber is S^(2d+1)."""
        return self.matrix.row_count - 1

    @property
    def n(self) -> int:
        return self.base.dim_c

    def omega_zero(self) -> tuple[int, ...]:
        d0, _ = self.split
        return self.matrix.rows[0]

    def omega_infinity(self) -> tuple[int, ...]:
        d0, _ = self.split
        return self.matrix.rows[d0 + 1]


def validate(spec: FiberJoinSpec) -> FiberJoinSpec:
    """Check structural invariants; returns the spec unchanged."""
    if not spec.base.factors:
        raise EmptyBaseError("base product needs at least one factor")
    rows = spec.matrix.rows
    if not rows or spec.d < 1:
        raise SpecError("a join needs at least two line bundle summands")
    width = len(spec.base.factors)
    for row in rows:
        if len(row) != width:
            raise SpecError("matrix width must equal the number of base factors")
        for entry in row:
            if entry < 1:
                raise NonPositiveEntryError(f"matrix entries must be positive: {row}")
    if spec.split is not None:
        d0, dinf = spec.split
        if d0 < 0 or dinf < 0 or d0 + dinf + 1 != spec.d:
            raise SplitMismatchError(
                f"split {spec.split} incompatible with {spec.d + 1} rows"
            )
        head = rows[: d0 + 1]
        tail = rows[d0 + 1 :]
        if any(r != head[0] for r in head) or any(r != tail[0] for r in tail):
            raise SplitMismatchError("rows must be constant on each split block")
    return spec


def make_spec(
    base: Sequence[BaseFactor],
    rows: Sequence[Sequence[int]],
    split: Optional[tuple[int, int]] = None,
) -> FiberJoinSpec:
    spec = FiberJoinSpec(
        base=BaseProduct(tuple(base)),
        matrix=KahlerMatrix.from_rows(rows),
        split=tuple(split) if split is not None else None,
    )
    return validate(spec)


def is_colinear(spec: FiberJoinSpec) -> bool:
    """Whether all rows of K are proportional (rank one over Q).

    Equivalent to the cone of the join decomposing as a product; rank
    one is decided by vanishing of every 2x2 minor against the first
    row.
    """
    rows = spec.matrix.rows
    first = rows[0]
    for row in rows[1:]:
        for a in range(len(first)):
            for b in range(a + 1, len(first)):
                if first[a] * row[b] != first[b] * row[a]:
                    return False
    return True


@dataclass(frozen=True)
class RegularJoinData:
    """Colinear joins are joins of a sphere with a weighted sphere:
    rows are multiples m_j = b * w_j of one primitive class."""

    b: int
    w: tuple[int, ...]
    primitive: tuple[int, ...]

    @property
    def multiples(self) -> tuple[int, ...]:
        return tuple(self.b * wj for wj in self.w)


def regular_join_data(spec: FiberJoinSpec) -> RegularJoinData:
    if not is_colinear(spec):
        raise NotColinearError("rows are not proportional")
    rows = spec.matrix.rows
    g = math.gcd(*rows[0])
    primitive = tuple(e // g for e in rows[0])
    multiples = []
    for row in rows:
        m = row[0] // primitive[0]
        assert all(e == m * p for e, p in zip(row, primitive))
        multiples.append(m)
    b = math.gcd(*multiples)
    w = tuple(m // b for m in multiples)
    return RegularJoinData(b=b, w=w, primitive=primitive)


def canonicalize(matrix: KahlerMatrix) -> KahlerMatrix:
    """Canonical representative of K under row and column permutations.

    Rows are unordered (reordering line bundle summands) and columns
    are unordered (relabeling base factors).  The representative is
    the lexicographically largest matrix over all column permutations
    with rows sorted descending; exact orbit enumeration is cheap at
    these sizes and, unlike alternating row/column sorts, genuinely
    canonical.
    """
    best = None
    for perm in itertools.permutations(range(matrix.col_count)):
        candidate = tuple(
            sorted((tuple(row[a] for a in perm) for row in matrix.rows), reverse=True)
        )
        if best is None or candidate > best:
            best = candidate
    return KahlerMatrix(best)


def canonical_split_spec(spec: FiberJoinSpec) -> FiberJoinSpec:
    """Orbit representative of a split join over its symmetries.

    Columns may only be exchanged between identical base factors
    (relabeling interchangeable factors), and the two split blocks
    swap only when they hold the same number of summands (relabeling
    the poles).  The representative is the lexicographically largest
    (omega_zero, omega_infinity) pair, so invariants computed from it
    always refer to the matrix the report displays.
    """
    if spec.split is None:
        raise SpecError("split required")
    d0, dinf = spec.split
    w0 = spec.omega_zero()
    winf = spec.omega_infinity()
    groups: dict[BaseFactor, list[int]] = {}
    for idx, factor in enumerate(spec.base.factors):
        groups.setdefault(factor, []).append(idx)
    group_lists = list(groups.values())
    best = None
    for perms in itertools.product(
        *(itertools.permutations(g) for g in group_lists)
    ):
        mapping = {}
        for original, permuted in zip(group_lists, perms):
            mapping.update(dict(zip(original, permuted)))
        order = [mapping[i] for i in range(len(spec.base.factors))]
        a = tuple(w0[i] for i in order)
        b = tuple(winf[i] for i in order)
        if d0 == dinf and b > a:
            a, b = b, a
        if best is None or (a, b) > best:
            best = (a, b)
    a, b = best
    rows = [list(a)] * (d0 + 1) + [list(b)] * (dinf + 1)
    return make_spec(spec.base.factors, rows, spec.split)


def column_differences(spec: FiberJoinSpec) -> tuple[int, ...]:
    """Per-factor difference of the two split classes, omega_zero - omega_infinity."""
    if spec.split is None:
        raise SpecError("split required")
    w0 = spec.omega_zero()
    winf = spec.omega_infinity()
    return tuple(a - b for a, b in zip(w0, winf))


def retained_factors(spec: FiberJoinSpec) -> tuple[int, ...]:
    """Indices of base factors where the split classes differ; the
    curvature reduction keeps exactly these."""
    return tuple(
        a for a, diff in enumerate(column_differences(spec)) if diff != 0
    )


def admissible_split_check(spec: FiberJoinSpec) -> bool:
    """Whether the split join carries an admissible structure.

    After rescaling each retained factor's reference form by its
    (nonzero, integral) class difference, the two split classes fit
    the admissible normal form; factors with equal classes drop out.
    So the check is: at least one factor sees different classes.
    """
    return bool(retained_factors(spec))
