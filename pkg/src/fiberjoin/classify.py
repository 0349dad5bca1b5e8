"""Classification rules, survey enumeration, and report serialization.

Each rule couples a decidable predicate on the join description with
the canonical-metric conclusion it licenses; computational rules carry
their certificate (a curvature value and a positivity certificate, or
the extremal profile itself) as a witness.  Verdict kinds:

  csc_regular_ray       the regular Reeb ray admits constant scalar curvature
  csc_ray_in_cone       some ray in the sphere subcone does
  extremal_regular_ray  the regular ray admits an extremal structure
  extremal_open_set     an open set of rays does
  se_exists             a Sasaki-Einstein structure exists
  se_obstructed         Sasaki-Einstein is impossible
  inconclusive          no rule applies
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import admissible as adm
from . import einstein, topology
from .exactalg import Polynomial
from .model import (
    BaseFactor,
    BaseProduct,
    FiberJoinSpec,
    KahlerMatrix,
    SpecError,
    admissible_split_check,
    canonical_split_spec,
    is_colinear,
    make_spec,
    regular_join_data,
    validate,
)

CSC_REGULAR_RAY = "csc_regular_ray"
CSC_RAY_IN_CONE = "csc_ray_in_cone"
EXTREMAL_REGULAR_RAY = "extremal_regular_ray"
EXTREMAL_OPEN_SET = "extremal_open_set"
SE_EXISTS = "se_exists"
SE_OBSTRUCTED = "se_obstructed"
INCONCLUSIVE = "inconclusive"

_EXISTENCE_KINDS = {
    CSC_REGULAR_RAY,
    CSC_RAY_IN_CONE,
    EXTREMAL_REGULAR_RAY,
    EXTREMAL_OPEN_SET,
}


class BoundsTooLargeError(SpecError):
    """Survey enumeration would exceed the configured cap."""


@dataclass(frozen=True)
class Verdict:
    kind: str
    rule: str
    citation: str
    witness: Optional[dict] = None

    def as_dict(self) -> dict:
        doc = {"kind": self.kind, "rule": self.rule, "citation": self.citation}
        doc["witness"] = self.witness
        return doc


def serialize_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def serialize_polynomial(poly: Polynomial) -> list[str]:
    return [serialize_rational(c) for c in poly.coeffs]


def _curvature_weight(factor: BaseFactor) -> int:
    """Scalar-curvature weight of the factor's unit-class CSC metric:
    positive for positive curvature, scaling with 1/class otherwise."""
    if factor.kind == "projective_space":
        return factor.n * (factor.n + 1)
    genus = factor.effective_genus
    return 2 - 2 * genus


def _base_scalar_sign(base: BaseProduct, class_vector) -> int:
    total = sum(
        Fraction(_curvature_weight(f), v)
        for f, v in zip(base.factors, class_vector)
    )
    return (total > 0) - (total < 0)


def _rule_colinear_subcone(spec: FiberJoinSpec) -> list[Verdict]:
    """Two-summand colinear joins over a CSC base."""
    if spec.d != 1 or not is_colinear(spec):
        return []
    join = regular_join_data(spec)
    verdicts = [
        Verdict(
            kind=CSC_RAY_IN_CONE,
            rule="colinear-subcone-csc",
            citation=(
                "a two-summand colinear join over a constant-scalar-curvature "
                "base carries a CSC ray in its sphere subcone"
            ),
            witness={"b": join.b, "w": list(join.w)},
        )
    ]
    if _base_scalar_sign(spec.base, join.primitive) >= 0:
        verdicts.append(
            Verdict(
                kind=EXTREMAL_REGULAR_RAY,
                rule="colinear-subcone-exhausted",
                citation=(
                    "with nonnegative base scalar curvature the sphere subcone "
                    "of a two-summand colinear join is exhausted by extremal "
                    "structures; in particular the regular ray is extremal"
                ),
            )
        )
    return verdicts


def _rule_colinear_open_set(spec: FiberJoinSpec) -> list[Verdict]:
    """Colinear joins over an extremal base."""
    if not is_colinear(spec):
        return []
    return [
        Verdict(
            kind=EXTREMAL_OPEN_SET,
            rule="colinear-extremal-base",
            citation=(
                "a colinear join over a base with extremal metrics carries an "
                "open set of extremal rays in its sphere subcone"
            ),
        )
    ]


def _rule_super_admissible(spec: FiberJoinSpec) -> list[Verdict]:
    """Super admissible joins over nonnegative local products."""
    if spec.split is None or not admissible_split_check(spec):
        return []
    lively = [f for f in spec.base.factors if f.b1 != 0]
    if len(lively) > 1:
        return []
    for f in spec.base.factors:
        genus = f.effective_genus
        if genus is not None and genus > 1:
            return []
    return [
        Verdict(
            kind=EXTREMAL_OPEN_SET,
            rule="super-admissible-nonneg-product",
            citation=(
                "every class on this base is admissible and the base is a "
                "local product of nonnegative CSC metrics, giving an open "
                "set of extremal rays around the regular one"
            ),
        )
    ]


def _rule_line_times_curve(spec: FiberJoinSpec) -> list[Verdict]:
    """Joins over (projective line) x (curve)."""
    if spec.split is None or len(spec.base.factors) != 2:
        return []
    if not admissible_split_check(spec):
        return []
    genera = [f.effective_genus for f in spec.base.factors]
    if any(g is None for g in genera):
        return []
    try:
        line_idx = genera.index(0)
    except ValueError:
        return []
    other_idx = 1 - line_idx
    g = genera[other_idx]
    verdict = Verdict(
        kind=EXTREMAL_REGULAR_RAY,
        rule="line-times-curve-regular-ray",
        citation=(
            "over a projective line times a curve of genus at most one, every "
            "admissible split join has an extremal structure on its regular "
            "ray; for higher genus exactly the distinguished matrix does"
        ),
    )
    if g <= 1:
        return [verdict]
    d0, dinf = spec.split
    if d0 != 1 or dinf != 1:
        return []
    w0 = spec.omega_zero()
    winf = spec.omega_infinity()
    marked = {(2, g), (1, 1)}
    seen = {
        (w0[line_idx], w0[other_idx]),
        (winf[line_idx], winf[other_idx]),
    }
    if seen != marked:
        return []
    return [verdict]


def _rule_curve_two_block(spec: FiberJoinSpec) -> list[Verdict]:
    """Two-block joins over a single curve."""
    if spec.split is None or len(spec.base.factors) != 1:
        return []
    genus = spec.base.factors[0].effective_genus
    if genus is None:
        return []
    d0, dinf = spec.split
    b1 = spec.omega_zero()[0]
    b2 = spec.omega_infinity()[0]
    verdict = Verdict(
        kind=EXTREMAL_REGULAR_RAY,
        rule="curve-two-block-window",
        citation=(
            "a two-block join over a single curve has an extremal regular "
            "ray for genus at most one, and for higher genus whenever "
            "2(1-g)/(b1-b2) lies between -d0(d0+1) and dinf(dinf+1)"
        ),
    )
    if genus <= 1:
        return [verdict]
    if b1 == b2:
        return []
    ratio = Fraction(2 * (1 - genus), b1 - b2)
    if -d0 * (d0 + 1) <= ratio <= dinf * (dinf + 1):
        return [verdict]
    return []


def _rule_line_triple(spec: FiberJoinSpec) -> list[Verdict]:
    """Three-summand joins over the projective line."""
    if spec.d != 2 or len(spec.base.factors) != 1:
        return []
    if spec.base.factors[0].effective_genus != 0:
        return []
    return [
        Verdict(
            kind=EXTREMAL_REGULAR_RAY,
            rule="line-triple-regular-ray",
            citation=(
                "every three-summand join over the projective line has an "
                "extremal structure on its regular ray"
            ),
        )
    ]


def _admissible_data_or_none(spec: FiberJoinSpec) -> Optional[adm.AdmissibleData]:
    if spec.split is None:
        return None
    try:
        return adm.admissible_data(spec)
    except SpecError:
        return None


def _rule_csc_profile(spec: FiberJoinSpec) -> list[Verdict]:
    """Exact CSC solve for two retained factors on a d=1 split."""
    if spec.split != (0, 0):
        return []
    data = _admissible_data_or_none(spec)
    if data is None or len(data.base_entries) != 2:
        return []
    result = adm.solve_csc(data)
    if result.verdict != adm.CSC:
        return []
    return [
        Verdict(
            kind=CSC_REGULAR_RAY,
            rule="csc-profile-certificate",
            citation=(
                "both curvature equations share a root and the certificate "
                "quadratic is positive on (-1, 1), so the regular ray has "
                "constant scalar curvature"
            ),
            witness={
                "s": serialize_rational(result.s),
                "certificate": serialize_polynomial(result.certificate),
            },
        )
    ]


def _rule_extremal_profile(spec: FiberJoinSpec) -> list[Verdict]:
    """Exact extremal solve on a d=1 split, where the regular quotient
    class is pinned by the join data."""
    if spec.split != (0, 0):
        return []
    data = _admissible_data_or_none(spec)
    if data is None:
        return []
    try:
        profile = adm.extremal_profile(data)
    except adm.SingularSystemError:
        return []
    if not profile.positive:
        return []
    return [
        Verdict(
            kind=EXTREMAL_REGULAR_RAY,
            rule="extremal-profile-certificate",
            citation=(
                "the extremal profile polynomial is positive on (-1, 1), so "
                "the regular ray carries an extremal structure"
            ),
            witness={"profile": serialize_polynomial(profile.profile)},
        )
    ]


def _rule_einstein(spec: FiberJoinSpec) -> list[Verdict]:
    verdict = einstein.se_check(spec)
    if not verdict.possible:
        return [
            Verdict(
                kind=SE_OBSTRUCTED,
                rule="einstein-obstruction-chain",
                citation=verdict.reason,
            )
        ]
    if verdict.reason == "necessary conditions pass":
        return []
    witness = {"count": verdict.count} if verdict.count is not None else None
    return [
        Verdict(
            kind=SE_EXISTS,
            rule="einstein-existence",
            citation=verdict.reason,
            witness=witness,
        )
    ]


_RULES: tuple[Callable[[FiberJoinSpec], list[Verdict]], ...] = (
    _rule_colinear_subcone,
    _rule_colinear_open_set,
    _rule_super_admissible,
    _rule_line_times_curve,
    _rule_curve_two_block,
    _rule_line_triple,
    _rule_csc_profile,
    _rule_extremal_profile,
    _rule_einstein,
)


def classify(spec: FiberJoinSpec) -> list[Verdict]:
    """Fire every applicable rule, in a fixed order; append a single
    inconclusive verdict when no existence conclusion was reached."""
    validate(spec)
    verdicts: list[Verdict] = []
    for rule in _RULES:
        verdicts.extend(rule(spec))
    if not any(v.kind in _EXISTENCE_KINDS for v in verdicts):
        verdicts.append(
            Verdict(
                kind=INCONCLUSIVE,
                rule="none",
                citation="no applicable existence rule",
            )
        )
    return verdicts


@dataclass(frozen=True)
class InvariantReport:
    """Everything computable about one join, Nones where no closed
    form covers the base."""

    base: str
    d: int
    n: int
    split: Optional[tuple[int, int]]
    colinear: bool
    join_b: Optional[int]
    join_w: Optional[tuple[int, ...]]
    c1: tuple[int, ...]
    euler: Optional[int]
    p1: Optional[int]
    spin: Optional[str]
    cohomology: Optional[dict]

    def as_dict(self) -> dict:
        return {
            "base": self.base,
            "d": self.d,
            "n": self.n,
            "split": list(self.split) if self.split is not None else None,
            "colinear": self.colinear,
            "join_b": self.join_b,
            "join_w": list(self.join_w) if self.join_w is not None else None,
            "c1": list(self.c1),
            "euler": self.euler,
            "p1": self.p1,
            "spin": self.spin,
            "cohomology": self.cohomology,
        }


def invariant_report(spec: FiberJoinSpec) -> InvariantReport:
    validate(spec)
    colinear = is_colinear(spec)
    join_b = join_w = None
    if colinear:
        join = regular_join_data(spec)
        join_b, join_w = join.b, join.w

    def attempt(fn):
        try:
            return fn(spec)
        except SpecError:
            return None

    cohomology = attempt(topology.cohomology_table)
    return InvariantReport(
        base=spec.base.describe(),
        d=spec.d,
        n=spec.n,
        split=spec.split,
        colinear=colinear,
        join_b=join_b,
        join_w=join_w,
        c1=topology.c1_contact(spec),
        euler=attempt(topology.euler_class),
        p1=attempt(topology.p1),
        spin=attempt(topology.spin_status),
        cohomology=cohomology.as_dict() if cohomology is not None else None,
    )


def spec_report(spec: FiberJoinSpec) -> dict:
    """The full single-join document: invariants plus verdicts."""
    return {
        "invariants": invariant_report(spec).as_dict(),
        "verdicts": [v.as_dict() for v in classify(spec)],
    }


# ---------------------------------------------------------------------------
# Survey enumeration


@dataclass(frozen=True)
class SurveyEntry:
    matrix: KahlerMatrix
    invariants: InvariantReport
    verdicts: tuple[Verdict, ...]


@dataclass(frozen=True)
class SurveyReport:
    base: BaseProduct
    split: tuple[int, int]
    max_entry: int
    entries: tuple[SurveyEntry, ...]


def survey(
    base: BaseProduct,
    split: tuple[int, int],
    max_entry: int,
    cap: int = 200_000,
) -> SurveyReport:
    """Enumerate split joins with entries in [1, max_entry], dedup by
    the canonical matrix (columns exchanged only between identical
    base factors), and classify each representative."""
    width = len(base.factors)
    if max_entry < 1:
        raise SpecError("max_entry must be at least 1")
    candidates = max_entry ** (2 * width)
    if candidates > cap:
        raise BoundsTooLargeError(
            f"{candidates} candidate class pairs exceed the cap {cap}"
        )
    d0, dinf = split
    seen: dict[tuple, SurveyEntry] = {}
    values = range(1, max_entry + 1)
    for w0 in itertools.product(values, repeat=width):
        for winf in itertools.product(values, repeat=width):
            rows = [list(w0)] * (d0 + 1) + [list(winf)] * (dinf + 1)
            spec = canonical_split_spec(make_spec(base.factors, rows, (d0, dinf)))
            if spec.matrix.rows in seen:
                continue
            seen[spec.matrix.rows] = SurveyEntry(
                matrix=spec.matrix,
                invariants=invariant_report(spec),
                verdicts=tuple(classify(spec)),
            )
    ordered = tuple(seen[key] for key in sorted(seen))
    return SurveyReport(base=base, split=split, max_entry=max_entry, entries=ordered)


def survey_document(report: SurveyReport) -> dict:
    return {
        "base": [_factor_document(f) for f in report.base.factors],
        "split": list(report.split),
        "max_entry": report.max_entry,
        "entries": [
            {
                "K": [list(row) for row in entry.matrix.rows],
                "invariants": entry.invariants.as_dict(),
                "verdicts": [v.as_dict() for v in entry.verdicts],
            }
            for entry in report.entries
        ],
    }


def survey_csv(report: SurveyReport) -> str:
    """One row per canonical matrix: flattened invariants plus the
    sorted set of verdict kinds."""
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(
        ["K", "d", "n", "colinear", "c1", "euler", "p1", "spin", "verdicts"]
    )
    for entry in report.entries:
        inv = entry.invariants
        writer.writerow(
            [
                ";".join(",".join(str(e) for e in row) for row in entry.matrix.rows),
                inv.d,
                inv.n,
                inv.colinear,
                ",".join(str(c) for c in inv.c1),
                inv.euler if inv.euler is not None else "",
                inv.p1 if inv.p1 is not None else "",
                inv.spin if inv.spin is not None else "",
                ";".join(sorted({v.kind for v in entry.verdicts})),
            ]
        )
    return out.getvalue()


# ---------------------------------------------------------------------------
# Document parsing


def _factor_document(factor: BaseFactor) -> dict:
    if factor.kind == "surface":
        return {"kind": "surface", "genus": factor.genus}
    if factor.kind == "projective_space":
        return {"kind": "projective_space", "n": factor.n}
    return {"kind": "torus"}


def parse_factor(doc: dict) -> BaseFactor:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise SpecError(f"base factor needs a kind: {doc!r}")
    kind = doc["kind"]
    if kind == "surface":
        return BaseFactor.surface(int(doc["genus"]))
    if kind == "projective_space":
        return BaseFactor.projective_space(int(doc["n"]))
    if kind == "torus":
        return BaseFactor.torus()
    raise SpecError(f"unknown base factor kind: {kind!r}")


def parse_spec(doc: dict) -> FiberJoinSpec:
    """Parse the JSON join document: base, K, optional split."""
    if not isinstance(doc, dict):
        raise SpecError("join document must be an object")
    try:
        factors = [parse_factor(f) for f in doc["base"]]
        rows = [[int(e) for e in row] for row in doc["K"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(f"malformed join document: {exc}") from exc
    split = doc.get("split")
    if split is not None:
        if len(split) != 2:
            raise SpecError("split must be a pair")
        split = (int(split[0]), int(split[1]))
    return make_spec(factors, rows, split)


def emit(report, fmt: str = "json") -> str:
    """Serialize a survey report or a plain document; surveys also
    support csv."""
    if isinstance(report, SurveyReport):
        if fmt == "json":
            return json.dumps(survey_document(report), indent=2)
        if fmt == "csv":
            return survey_csv(report)
        raise SpecError(f"unsupported format: {fmt}")
    if fmt == "json":
        return json.dumps(report, indent=2)
    raise SpecError(f"unsupported format: {fmt}")
