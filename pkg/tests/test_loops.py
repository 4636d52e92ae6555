from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from iwahori.errors import ConstraintViolated, NotInLoopGroup, UnsupportedKind, ZeroDenominator
from iwahori.loops.cases import (
    case3_literal_prefix,
    case_elements,
    check_case,
    lift_candidates,
    lift_image,
    membership_witness,
    model_for,
    parahoric_member,
    su3_constraint,
    su3_unipotent,
    su3_unipotent_inverse,
    translation_lift,
    verify_cases,
)
from iwahori.loops.field import GF, FiniteField, prime_power
from iwahori.loops.laurent import LaurentPoly, LoopMatrix, ramified_model, split_model, unramified_model

FIELDS = [3, 4, 5, 7, 8, 9, 25]


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    assert prime_power(12) is None
    with pytest.raises(ValueError):
        FiniteField(6)


@pytest.mark.parametrize("q", FIELDS)
def test_field_axioms(q):
    F = GF(q)
    elems = range(q)
    for a in elems:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.pow(a, q - 1) == 1
        for b in elems:
            assert F.mul(a, b) == F.mul(b, a)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_distributivity_gf9(a, b, c):
    F = GF(9)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_subfield_of_gf9():
    assert len(GF(9).subfield(3)) == 3
    assert len(unramified_model(3).base_scalars()) == 2


@pytest.mark.parametrize("make", [ramified_model, unramified_model, split_model])
def test_tau_is_a_ring_involution(make):
    model = make(5 if make is not unramified_model else 3)
    F = model.field
    a = LaurentPoly(model, {-1: 1, 0: F.q - 1, 2: 2 % F.q})
    b = LaurentPoly(model, {1: F.q - 1, 3: 1})
    assert (a * b).tau() == a.tau() * b.tau()
    assert (a + b).tau() == a.tau() + b.tau()
    assert a.tau().tau() == a


def test_laurent_basics():
    m = ramified_model(5)
    p = LaurentPoly.monomial(m, 2, -3)
    assert p.valuation() == -3
    assert p * p.inverse() == 1
    assert LaurentPoly.zero(m).valuation() == float("inf")
    assert p.tau() == LaurentPoly.monomial(m, 3, -3)
    with pytest.raises(ZeroDivisionError):
        (p + 1).inverse()
    assert p.to_json() == {"-3": 2}


def test_loop_matrix_inverse():
    m = split_model(5)
    t = LaurentPoly.monomial(m, 1, 1)
    a = LoopMatrix(m, [[1, t], [0, 1]])
    b = LoopMatrix(m, [[t, 0], [0, t.inverse()]])
    for x in (a, b, a * b):
        assert x.det() == 1
        assert x * x.inverse() == LoopMatrix.identity(m, 2)


@pytest.mark.parametrize("q", [3, 5])
def test_su3_unipotents_form_a_group(q):
    model = ramified_model(q)
    c = LaurentPoly.monomial(model, 1, 1)
    d = -(c.tau() * c).scale(model.field.inv(2))  # tau(c) c + 2 Re d = 0
    assert su3_constraint(c, d).is_zero()
    for i in (1, -1):
        u = su3_unipotent(i, c, d)
        assert u.det() == 1
        assert u * su3_unipotent_inverse(i, c, d) == LoopMatrix.identity(model, 3)


def test_su3_constraint_violation():
    model = ramified_model(5)
    with pytest.raises(ConstraintViolated):
        su3_unipotent(1, LaurentPoly.zero(model), LaurentPoly.one(model))
    with pytest.raises(ValueError):
        su3_unipotent(0, LaurentPoly.zero(model), LaurentPoly.zero(model))


def test_literal_case3_prefix_violates_constraint():
    with pytest.raises(ConstraintViolated):
        case3_literal_prefix(ramified_model(5), 1)


def test_membership_examples():
    model = ramified_model(5)
    zero = LaurentPoly.zero(model)
    assert parahoric_member(su3_unipotent(1, zero, LaurentPoly.monomial(model, 1, 1)), "su3_standard")
    assert not parahoric_member(su3_unipotent(1, zero, LaurentPoly.monomial(model, 2, -1)), "su3_standard")
    with pytest.raises(NotInLoopGroup):
        parahoric_member(LoopMatrix.identity(model, 2), "su3_standard")
    with pytest.raises(UnsupportedKind):
        parahoric_member(LoopMatrix.identity(model, 2), "so5")
    diag = LoopMatrix.diagonal(model, [LaurentPoly.const(model, 2)] * 2)
    with pytest.raises(NotInLoopGroup):
        parahoric_member(diag, "sl2_standard")
    with pytest.raises(UnsupportedKind):
        parahoric_member(LoopMatrix.identity(unramified_model(3), 3), "su3_nonstandard")


@pytest.mark.parametrize("kind, model", [
    ("sl2_standard", split_model(5)),
    ("su3_standard", ramified_model(5)),
    ("su3_standard", unramified_model(3)),
    ("su3_nonstandard", ramified_model(5)),
])
def test_translation_lifts(kind, model):
    lift = translation_lift(kind, model)
    assert lift.is_monomial_matrix()
    assert lift_image(lift) == (1,)
    assert translation_lift(kind, model, -1) is not lift
    assert lift_image(translation_lift(kind, model, -1)) == (-1,)
    assert all(lift_image(m)[0] != 0 for m in lift_candidates(kind, model))


def test_pinned_direction_is_the_working_one():
    for case in (1, 2, 3):
        model = model_for(case, 5)
        kind = {1: "sl2_standard", 2: "su3_standard", 3: "su3_nonstandard"}[case]
        wrong = translation_lift(kind, model, -1)
        assert not any(check_case(case, 5, x, lift=wrong)[0] for x in model.base_scalars())


def test_case1_witness():
    ok, k = check_case(1, 5, 2)
    assert ok
    assert k.to_json() == [[{}, {"0": 2}], [{"0": 2}, {"1": 1}]]


@pytest.mark.parametrize("case, q, unr", [(1, 3, False), (2, 7, False), (3, 5, False), (2, 3, True), (2, 9, True)])
def test_verify_cases(case, q, unr):
    report = verify_cases(case, q, unr)
    assert report["all_pass"] and report["first_failure"] is None
    assert report["checked"] == q - 1
    assert [r["x"] for r in report["results"]] == sorted(r["x"] for r in report["results"])


def test_zero_is_its_own_check():
    for case in (1, 2, 3):
        assert check_case(case, 5, 0)[0]
        assert case_elements(case, model_for(case, 5), 0)[1] is None
        with pytest.raises(ZeroDenominator):
            membership_witness(case, model_for(case, 5), 0)


def test_unsupported_models():
    with pytest.raises(UnsupportedKind):
        model_for(1, 4)
    with pytest.raises(UnsupportedKind):
        model_for(3, 5, unramified=True)
    with pytest.raises(UnsupportedKind):
        model_for(4, 5)
    with pytest.raises(ValueError):
        verify_cases(1, 11)
