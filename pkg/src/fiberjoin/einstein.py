"""Sasaki-Einstein obstructions and existence for fiber joins.

A join can only carry a Sasaki-Einstein structure in its sphere cone
if the contact bundle has vanishing first Chern class; on top of that
the colinear case forces an arithmetic chain tying the sum of the
multiples to the divisibility index of the base.  Existence (with a
count of inequivalent solutions) is granted in the cases where it is
actually known: d=1 joins over a single projective space hitting the
index exactly, and the homogeneous all-ones join.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .model import (
    PROJECTIVE_SPACE,
    BaseProduct,
    FiberJoinSpec,
    SpecError,
    is_colinear,
    regular_join_data,
    validate,
)
from .topology import c1_contact


class NotFanoError(SpecError):
    """The base has nonpositive anticanonical class on some factor."""


def fano_index(base: BaseProduct) -> int:
    """Divisibility index of the anticanonical class: the gcd of its
    coefficients on the primitive generators.  Defined only when every
    coefficient is positive."""
    coefficients = base.c1_vector()
    if any(c <= 0 for c in coefficients):
        raise NotFanoError(f"anticanonical coefficients {coefficients} not positive")
    return math.gcd(*coefficients)


@lru_cache(maxsize=None)
def partitions(total: int, parts: int) -> int:
    """Number of multisets of ``parts`` positive integers summing to ``total``."""
    if parts <= 0:
        return 1 if total == 0 else 0
    if total < parts:
        return 0
    if parts == 1:
        return 1
    return partitions(total - 1, parts - 1) + partitions(total - parts, parts)


@dataclass(frozen=True)
class SEVerdict:
    """Outcome of the Sasaki-Einstein check.

    possible: no known obstruction fires (True) or one does (False)
    reason:   the deciding obstruction or the granting construction
    count:    number of inequivalent solutions when the counting rule
              applies, otherwise None
    """

    possible: bool
    reason: str
    count: Optional[int] = None


def se_check(spec: FiberJoinSpec) -> SEVerdict:
    """Run the obstruction chain and the known existence upgrades."""
    validate(spec)
    n, d = spec.n, spec.d

    # Structural obstruction independent of the classes: equal split
    # blocks of dimension at least the base dimension leave no room
    # for the Einstein condition.  Checked first because vanishing c1
    # already excludes it arithmetically, which would make it
    # unobservable downstream.
    if spec.split is not None:
        d0, dinf = spec.split
        if d0 == dinf and d0 >= n:
            return SEVerdict(
                possible=False,
                reason=(
                    "equal split blocks of dimension at least the base "
                    "dimension admit no Einstein structure"
                ),
            )

    c1 = c1_contact(spec)
    if any(c != 0 for c in c1):
        return SEVerdict(
            possible=False,
            reason=f"contact bundle has nonzero first Chern class {list(c1)}",
        )

    # With c1 = 0 the anticanonical class equals the (positive) column
    # sum, so the base is automatically Fano.
    index = fano_index(spec.base)

    if is_colinear(spec):
        join = regular_join_data(spec)
        total = sum(join.multiples)
        # Arithmetic chain for colinear joins with vanishing c1: the
        # multiples sum to the index, which the weight sum divides and
        # which is pinched between d+1 and n+1.
        assert total == index
        assert join.b * sum(join.w) == index
        assert d + 1 <= index
        if index > n + 1:
            return SEVerdict(
                possible=False,
                reason=f"index {index} exceeds base dimension bound {n + 1}",
            )
        if n == d:
            assert join.w == (1,) * (d + 1)
        if d == 1 and len(spec.base.factors) == 1:
            factor = spec.base.factors[0]
            if factor.kind == PROJECTIVE_SPACE or factor.effective_genus == 0:
                return SEVerdict(
                    possible=True,
                    reason=(
                        "two-summand join over a projective space with "
                        "multiples summing to the index"
                    ),
                    count=partitions(index, 2),
                )
        if all(row == (1,) * len(spec.base.factors) for row in spec.matrix.rows):
            return SEVerdict(
                possible=True,
                reason="homogeneous join of unit-class summands",
            )
        return SEVerdict(possible=True, reason="necessary conditions pass")

    # Vanishing c1 forces every column to sum to the factor's
    # anticanonical coefficient, which already caps d by n.
    assert n >= d
    return SEVerdict(possible=True, reason="necessary conditions pass")
