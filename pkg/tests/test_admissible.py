"""Admissible data, the extremal profile system, and the CSC solver."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fiberjoin.admissible import (
    CSC,
    FIBER_INFINITY,
    FIBER_ZERO,
    INCONSISTENT,
    POSITIVITY_FAILS,
    AdmissibleData,
    AdmissibleEntry,
    AnsatzError,
    DegenerateFactorError,
    EqualParameterError,
    NotAdmissibleError,
    RepeatedNodeError,
    RepeatedParameterError,
    admissible_data,
    characteristic_product,
    csc_ansatz,
    extremal_profile,
    genus_threshold,
    quotient_class_parameters,
    solve_csc,
)
from fiberjoin.exactalg import Polynomial, strictly_positive_on
from fiberjoin.model import BaseFactor, make_spec


def surface_pair(g1, g2, rows=((2, 1), (1, 3))):
    return make_spec(
        [BaseFactor.surface(g1), BaseFactor.surface(g2)],
        [list(r) for r in rows],
        (0, 0),
    )


def base_entry(idx, s, r):
    return AdmissibleEntry(f"factor_{idx}", 1, Fraction(s), Fraction(r))


# equations (17) and (18) written out directly, as an oracle
def curvature_equation(s_own, r_own, r_other, s):
    return (
        r_own * (s_own * (r_own - r_other) - 2 + (1 - s) * r_own * r_other)
        + 3 * (s - 1) * r_other
    )


# --- admissible data -----------------------------------------------------


def test_admissible_data_of_reference_spec():
    data = admissible_data(surface_pair(5, 3))
    (e1, e2) = data.entries
    assert (e1.s, e2.s) == (-8, 2)
    assert (e1.r, e2.r) == (Fraction(1, 3), Fraction(-1, 2))
    assert data.d0 == 0 and data.dinf == 0
    assert data.base_entries == data.entries


def test_admissible_data_fiber_entries():
    spec = make_spec(
        [BaseFactor.surface(0), BaseFactor.surface(2)],
        [[2, 1], [2, 1], [1, 2], [1, 2], [1, 2]],
        (1, 2),
    )
    data = admissible_data(spec)
    labels = [e.label for e in data.entries]
    assert labels == ["factor_0", "factor_1", FIBER_ZERO, FIBER_INFINITY]
    fiber0 = data.entries[2]
    fiberinf = data.entries[3]
    assert (fiber0.dim, fiber0.s, fiber0.r) == (1, 2, 1)
    assert (fiberinf.dim, fiberinf.s, fiberinf.r) == (2, -3, -1)


def test_admissible_data_drops_unretained_factor():
    spec = make_spec(
        [BaseFactor.surface(0), BaseFactor.surface(2)], [[2, 3], [1, 3]], (0, 0)
    )
    data = admissible_data(spec)
    assert len(data.base_entries) == 1
    assert data.base_entries[0].label == "factor_0"


def test_admissible_data_requires_split():
    spec = make_spec(
        [BaseFactor.surface(0), BaseFactor.surface(2)], [[2, 1], [1, 2]], None
    )
    with pytest.raises(Exception):
        admissible_data(spec)


def test_admissible_data_rejects_all_equal_columns():
    spec = make_spec(
        [BaseFactor.surface(0), BaseFactor.surface(2)], [[2, 3], [2, 3]], (0, 0)
    )
    with pytest.raises(NotAdmissibleError):
        admissible_data(spec)


def test_admissible_data_rejects_duplicate_columns():
    spec = make_spec(
        [BaseFactor.surface(1), BaseFactor.surface(1)], [[2, 2], [1, 1]], (0, 0)
    )
    with pytest.raises(DegenerateFactorError):
        admissible_data(spec)


def test_admissible_data_rejects_repeated_r():
    spec = make_spec(
        [BaseFactor.surface(1), BaseFactor.surface(2)], [[2, 4], [1, 2]], (0, 0)
    )
    with pytest.raises(RepeatedParameterError):
        admissible_data(spec)


def test_admissible_data_rejects_higher_projective_factor():
    spec = make_spec(
        [BaseFactor.projective_space(2), BaseFactor.surface(0)],
        [[2, 1], [1, 2]],
        (0, 0),
    )
    with pytest.raises(NotAdmissibleError):
        admissible_data(spec)


def test_r_values_live_in_open_unit_interval():
    data = admissible_data(surface_pair(5, 3))
    for e in data.base_entries:
        assert -1 < e.r < 1


# --- characteristic product ----------------------------------------------


def test_characteristic_product():
    data = admissible_data(surface_pair(5, 3))
    p = characteristic_product(data)
    expected = Polynomial.linear(1, Fraction(1, 3)) * Polynomial.linear(
        1, Fraction(-1, 2)
    )
    assert p == expected
    assert p.coeffs == (Fraction(1), Fraction(-1, 6), Fraction(-1, 6))


# --- extremal profile -----------------------------------------------------


def test_profile_reference_case():
    data = admissible_data(surface_pair(5, 3))
    result = extremal_profile(data)
    q = Polynomial.from_coeffs([Fraction(3, 4), Fraction(-1, 6), Fraction(1, 12)])
    assert result.profile == Polynomial.from_coeffs([1, 0, -1]) * q
    assert result.positive


def test_profile_boundary_conditions_hand_case():
    data = AdmissibleData(
        (base_entry(0, 3, Fraction(1, 2)), base_entry(1, -1, Fraction(-1, 3)))
    )
    result = extremal_profile(data)
    p = result.char_product
    f = result.profile
    fprime = f.derivative()
    assert f(1) == 0 and f(-1) == 0
    assert fprime(1) == -2 * p(1)
    assert fprime(-1) == 2 * p(-1)


def test_profile_second_derivative_factorization():
    data = AdmissibleData(
        (
            base_entry(0, 2, Fraction(1, 5)),
            base_entry(1, -4, Fraction(-2, 7)),
            AdmissibleEntry(FIBER_ZERO, 2, Fraction(3), Fraction(1)),
        )
    )
    result = extremal_profile(data)
    reduced = Polynomial.one()
    for e in data.entries:
        reduced = reduced * Polynomial.linear(1, e.r) ** (e.dim - 1)
    assert result.profile.derivative().derivative() == reduced * result.source


def test_profile_source_interpolation():
    data = AdmissibleData(
        (base_entry(0, 5, Fraction(2, 3)), base_entry(1, 1, Fraction(-3, 5)))
    )
    result = extremal_profile(data)
    for e in data.entries:
        node = Fraction(-1) / e.r
        others = Fraction(1)
        for other in data.entries:
            if other is not e:
                others *= 1 - other.r / e.r
        assert result.source(node) == 2 * e.dim * e.s * e.r * others


def test_profile_repeated_nodes_raise():
    data = AdmissibleData(
        (base_entry(0, 1, Fraction(1, 2)), base_entry(1, 2, Fraction(1, 2)))
    )
    with pytest.raises(RepeatedNodeError):
        extremal_profile(data)


def test_profile_rejects_empty_data():
    with pytest.raises(Exception):
        extremal_profile(AdmissibleData(()))


rational_r = st.fractions(
    min_value=Fraction(-9, 10), max_value=Fraction(9, 10), max_denominator=12
).filter(lambda x: x != 0)
rational_s = st.fractions(
    min_value=Fraction(-20), max_value=Fraction(20), max_denominator=12
)


@given(st.lists(st.tuples(rational_r, rational_s), min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_profile_postconditions_random(params):
    rs = [r for r, _ in params]
    if len(set(rs)) != len(rs):
        return
    entries = tuple(
        base_entry(i, s, r) for i, (r, s) in enumerate(params)
    )
    result = extremal_profile(AdmissibleData(entries))
    f = result.profile
    fprime = f.derivative()
    p = result.char_product
    assert f(1) == 0 and f(-1) == 0
    assert fprime(1) == -2 * p(1) and fprime(-1) == 2 * p(-1)


# --- csc solver -----------------------------------------------------------


def test_csc_reference_values():
    result = solve_csc(admissible_data(surface_pair(5, 3)))
    assert result.verdict == CSC
    assert result.s == -1
    assert result.certificate == Polynomial.from_coeffs(
        [Fraction(3, 4), Fraction(-1, 6), Fraction(1, 12)]
    )


def test_csc_second_reference():
    result = solve_csc(admissible_data(surface_pair(18, 14)))
    assert result.verdict == CSC
    assert result.s == -6
    assert result.certificate == Polynomial.from_coeffs(
        [Fraction(1, 3), Fraction(-1, 6), Fraction(1, 2)]
    )


def test_csc_positivity_failure():
    result = solve_csc(admissible_data(surface_pair(31, 25)))
    assert result.verdict == POSITIVITY_FAILS
    assert result.s == -11
    assert result.certificate == Polynomial.from_coeffs(
        [Fraction(-1, 12), Fraction(-1, 6), Fraction(11, 12)]
    )


def test_csc_returned_s_solves_both_equations():
    for genera in [(5, 3), (18, 14), (31, 25)]:
        data = admissible_data(surface_pair(*genera))
        (e1, e2) = data.base_entries
        result = solve_csc(data)
        assert curvature_equation(e1.s, e1.r, e2.r, result.s) == 0
        assert curvature_equation(e2.s, e2.r, e1.r, result.s) == 0


def test_csc_inconsistent_data():
    data = AdmissibleData(
        (base_entry(0, 1, Fraction(1, 2)), base_entry(1, 1, Fraction(1, 3)))
    )
    result = solve_csc(data)
    assert result.verdict == INCONSISTENT
    assert result.s is None and result.certificate is None


def test_csc_rejects_equal_parameters():
    data = AdmissibleData(
        (base_entry(0, 1, Fraction(1, 2)), base_entry(1, 2, Fraction(1, 2)))
    )
    with pytest.raises(EqualParameterError):
        solve_csc(data)


def test_csc_rejects_wrong_shape():
    lone = AdmissibleData((base_entry(0, 1, Fraction(1, 2)),))
    with pytest.raises(Exception):
        solve_csc(lone)


@given(rational_r, rational_r, rational_s)
@settings(max_examples=80, deadline=None)
def test_csc_consistent_solutions_satisfy_oracle(r1, r2, s1):
    """Back-solve s2 so both equations share the root, then cross-check."""
    if r1 == r2:
        return
    s = Fraction(
        2 * r1 + 3 * r2 - r1 * r1 * r2 - r1 * s1 * (r1 - r2),
        r2 * (3 - r1 * r1),
    )
    s2 = (2 * r2 - r1 * r2 * r2 * (1 - s) - 3 * (s - 1) * r1) / (
        r2 * (r2 - r1)
    )
    data = AdmissibleData((base_entry(0, s1, r1), base_entry(1, s2, r2)))
    result = solve_csc(data)
    assert result.s == s
    assert curvature_equation(s1, r1, r2, s) == 0
    assert curvature_equation(s2, r2, r1, s) == 0
    # Curve factors always satisfy s_a*r_a = 2(1-g_a)/(k0+kinf) < 2,
    # which forces r1*r2 < 0 and makes the quadratic concave down, so a
    # nonnegative root settles positivity.  Synthetic data may violate it.
    if s >= 0 and s1 * r1 < 2 and s2 * r2 < 2:
        assert result.verdict == CSC
    if result.verdict == CSC:
        assert strictly_positive_on(result.certificate, -1, 1)


# --- ansatz and threshold ---------------------------------------------------


def symmetric_family_spec(g, k):
    return make_spec(
        [BaseFactor.surface(g), BaseFactor.surface(g)],
        [[k + 1, k], [k, k + 1]],
        (0, 0),
    )


def test_ansatz_matches_solver_on_symmetric_family():
    for g in range(0, 6):
        for k in range(1, 6):
            data = admissible_data(symmetric_family_spec(g, k))
            assert csc_ansatz(data) == solve_csc(data).s


def test_ansatz_rejects_unbalanced_data():
    with pytest.raises(AnsatzError):
        csc_ansatz(admissible_data(surface_pair(5, 3)))


@given(rational_r, rational_s)
@settings(max_examples=60, deadline=None)
def test_ansatz_closed_form_random(r1, s1):
    data = AdmissibleData((base_entry(0, s1, r1), base_entry(1, -s1, -r1)))
    expected = (1 - r1 * r1 + 2 * s1 * r1) / (3 - r1 * r1)
    assert csc_ansatz(data) == expected
    assert solve_csc(data).s == expected


def test_genus_threshold_values():
    assert genus_threshold(0) == 0
    assert genus_threshold(1) == 0
    assert genus_threshold(2) == 1
    assert genus_threshold(3) == 3
    assert genus_threshold(4) == 5


def test_threshold_separates_sign_of_s():
    for g in range(2, 8):
        threshold = genus_threshold(g)
        for k in range(1, threshold + 4):
            data = admissible_data(symmetric_family_spec(g, k))
            s = solve_csc(data).s
            assert (s > 0) == (k > threshold)


def test_spot_value_genus_two():
    data = admissible_data(symmetric_family_spec(2, 2))
    assert solve_csc(data).s == Fraction(2, 37)


# --- quotient class parameters ----------------------------------------------


def test_quotient_parameters_non_colinear():
    assert quotient_class_parameters(surface_pair(5, 3)) == [
        Fraction(1, 3),
        Fraction(-1, 2),
    ]


def test_quotient_parameters_colinear():
    spec = make_spec(
        [BaseFactor.surface(2), BaseFactor.surface(0)], [[3, 3], [1, 1]], (0, 0)
    )
    assert quotient_class_parameters(spec) == [Fraction(1, 2)]


def test_quotient_parameters_need_two_summands():
    spec = make_spec(
        [BaseFactor.surface(0), BaseFactor.surface(0)],
        [[1, 1], [1, 1], [1, 1]],
        (1, 0),
    )
    with pytest.raises(Exception):
        quotient_class_parameters(spec)
