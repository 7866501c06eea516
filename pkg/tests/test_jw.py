from fractions import Fraction

import pytest

from twotl.diagram import enumerate_diagrams, generator_diagram, identity_diagram, tau_involute
from twotl.jw import (
    NotExists,
    check_defining_property,
    check_idempotent,
    existence_check,
    jw_denominator,
    jw_generic,
    jw_specialize,
    nested_cap_coefficient,
    rotatability_check,
    rotation_compare,
    tau_partner_color,
    valuation_audit,
    verify_ptr,
)
from twotl.polyarith import BiPoly, RatFunc, color_swap
from twotl.qnum import S, T, qbinom, quantum_number, theta_two_color
from twotl.rings import IntegersMod, Rationals, Specialization, parse_ring

Q = lambda n, c=S: RatFunc(quantum_number(n, c))
Z5 = Specialization(IntegersMod(5), 2, 2)


def test_small_projectors():
    assert jw_generic(0).coefficients == {identity_diagram(0): RatFunc(1)}
    assert jw_generic(1).coefficients == {identity_diagram(1): RatFunc(1)}
    jw2 = jw_generic(2)
    assert jw2.coeff(generator_diagram(1, 2)) == RatFunc(1) / Q(2)
    jw3 = jw_generic(3)
    assert jw3.coeff(generator_diagram(1, 3)) == Q(2, T) / Q(3)
    assert jw3.coeff(generator_diagram(2, 3)) == Q(2) / Q(3)
    assert len(jw3.coefficients) == 5


@pytest.mark.parametrize("n", range(0, 8))
def test_defining_property(n):
    assert check_defining_property(n, S)
    assert check_defining_property(n, T)


def test_color_swap_relates_projectors():
    for n in range(0, 7):
        s, t = jw_generic(n, S), jw_generic(n, T)
        for d, f in s.coefficients.items():
            assert t.coeff(d) == f.map(color_swap)


def test_denominator_examples():
    assert jw_denominator(3, S) == BiPoly.parse("x_s*x_t - 1")
    assert jw_denominator(5, S) == theta_two_color(4, S) * theta_two_color(5, S)
    assert jw_denominator(1, S) == BiPoly.const(1)


def test_nested_cap_examples():
    assert nested_cap_coefficient(5, 2, S) == RatFunc(1) / RatFunc(qbinom(5, 2, S))
    assert nested_cap_coefficient(4, 0, S) == RatFunc(1)
    assert nested_cap_coefficient(3, 1, S) == RatFunc(1) / Q(3)


def test_existence_examples():
    rep = existence_check(4, S, Z5)
    assert rep.exists and [v for _, v, _ in rep.witness] == [1, 4, 1, 4, 1]
    rep = existence_check(5, S, Z5)
    assert not rep.exists and rep.failures() == [1, 2, 3, 4]
    for n in range(0, 6):
        assert existence_check(n, S, Specialization.generic()).exists


def test_specialize_examples():
    a = jw_specialize(2, S, Z5)
    assert a.coeffs == {identity_diagram(2): 1, generator_diagram(1, 2): 3}
    b = jw_specialize(3, S, Specialization(Rationals(), 2, 2))
    assert b.coeffs[generator_diagram(1, 3)] == Fraction(2, 3)
    assert b.coeffs[generator_diagram(2, 3)] == Fraction(2, 3)
    assert sorted(b.coeffs.values()) == [Fraction(1, 3)] * 2 + [Fraction(2, 3)] * 2 + [1]
    with pytest.raises(NotExists):
        jw_specialize(5, S, Z5)


def test_rotatability_examples():
    rep = rotatability_check(4, S, Z5)
    assert rep.rotatable and rep.details["binomial_form"]
    for n in range(1, 6):
        assert rotatability_check(n, S, Specialization.generic()).rotatable is False
    assert rotation_compare(4, Z5) is not None
    assert rotation_compare(2, Specialization(Rationals(), 2, 2)) is None
    for n in range(2, 7):
        assert rotation_compare(n, Specialization.generic()) is None


def test_rotation_scalar_when_two_vanishes():
    sp = Specialization(IntegersMod(2), 0, 0)
    assert rotatability_check(1, S, sp).rotatable
    assert rotation_compare(1, sp) == 1


def test_golden_ratio_realization_projectors():
    R = parse_ring("Z[y]/(y^2-y-1)")
    sp = Specialization(R, R.parse("-y"), R.parse("-y"))
    rep = rotatability_check(4, S, sp)
    assert rep.exists and rep.rotatable
    assert rotation_compare(4, sp) is not None


def test_ptr_examples():
    assert verify_ptr(1) == -Q(2)
    assert verify_ptr(2) == -Q(3) / Q(2)
    assert verify_ptr(5) == -Q(6) / Q(5)
    assert verify_ptr(3, T) == -Q(4, T) / Q(3, T)


@pytest.mark.parametrize("n", range(1, 7))
def test_idempotent_generic(n):
    assert check_idempotent(jw_generic(n, S).as_element())


def test_valuation_audit_examples():
    rep3 = valuation_audit(3, S)
    assert rep3["min_valuation"]["3s"] == -1 and rep3["min_valuation"]["2s"] == 0
    rep2 = valuation_audit(2, S)
    assert rep2["min_valuation"]["2s"] == -1 and rep2["min_valuation"]["2t"] == 0
    rep1 = valuation_audit(1, S)
    assert all(v >= 0 for v in rep1["min_valuation"].values())


@pytest.mark.parametrize("n", range(1, 7))
def test_mirror_symmetry(n):
    c = S
    target = jw_generic(n, tau_partner_color(n, c))
    for d in enumerate_diagrams(n):
        assert jw_generic(n, c).coeff(d) == target.coeff(tau_involute(d)).map(color_swap)


def test_mirror_statement_with_opposite_color_fails_for_odd_n():
    # reading the mirror image in the opposite-colored algebra only works for even n
    n = 3
    d = generator_diagram(1, n)
    lhs = jw_generic(n, S).coeff(d)
    rhs = jw_generic(n, T).coeff(tau_involute(d)).map(color_swap)
    assert lhs != rhs
