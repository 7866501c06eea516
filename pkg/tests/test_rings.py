from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twotl.polyarith import BiPoly, RatFunc
from twotl.qnum import S, quantum_number
from twotl.rings import (
    DenominatorNotInvertible,
    FracA,
    Integers,
    IntegersMod,
    NotInvertible,
    Rationals,
    RingMismatch,
    Specialization,
    UnsupportedRing,
    parse_ring,
    specialize_frac,
    specialize_poly,
    unit_ideal,
)

GOLDEN = parse_ring("Z[y]/(y^2-y-1)")


def test_ring_ops_examples():
    assert IntegersMod(5).add(3, 4) == 2
    y = GOLDEN.gen()
    assert GOLDEN.format(GOLDEN.mul(y, y)) == "y + 1"
    assert Rationals().mul(Fraction(1, 2), Fraction(2, 3)) == Fraction(1, 3)


def test_invertibility_examples():
    assert not IntegersMod(5).is_invertible(0)
    assert not IntegersMod(6).is_invertible(3)
    y = GOLDEN.gen()
    assert GOLDEN.is_invertible(y)
    assert GOLDEN.inverse(y) == GOLDEN.parse("y - 1")
    assert not GOLDEN.is_invertible(GOLDEN.from_int(2))
    assert Integers().is_invertible(-1) and not Integers().is_invertible(2)
    with pytest.raises(NotInvertible):
        Rationals().inverse(Fraction(0))


def test_quotient_over_q_inverts_integers():
    R = parse_ring("Q[y]/(y^2-2)")
    two = R.from_int(2)
    assert R.mul(two, R.inverse(two)) == R.one()
    assert not R.is_invertible(R.zero())


def test_mismatch_and_descriptor_errors():
    with pytest.raises(RingMismatch):
        IntegersMod(5).add(7, 1)
    with pytest.raises(RingMismatch):
        Integers().add(Fraction(1, 2), 1)
    with pytest.raises(UnsupportedRing):
        parse_ring("Z/x")
    with pytest.raises(ValueError):
        IntegersMod(1)
    with pytest.raises(ValueError):
        parse_ring("Z[y]/(2*y^2-1)")


def test_parse_and_describe_round_trip():
    for text in ("Z", "Q", "Z/5", "Z[y]/(y^2-y-1)", "Q[y]/(y^3-2)", "FracA"):
        assert parse_ring(text).describe() == text


def test_specialize_examples():
    sp = Specialization(IntegersMod(5), 2, 2)
    assert specialize_poly(quantum_number(3, S), sp) == 3
    assert specialize_poly(BiPoly.parse("x_s"), sp) == 2
    assert specialize_poly(BiPoly.const(1), sp) == 1
    half = RatFunc(1) / RatFunc(quantum_number(2, S))
    assert specialize_frac(half, sp) == 3
    with pytest.raises(DenominatorNotInvertible):
        specialize_frac(half, Specialization(IntegersMod(4), 2, 2))
    assert specialize_frac(RatFunc(0), sp) == 0


def test_generic_specialization_is_identity():
    sp = Specialization.generic()
    p = quantum_number(6, S)
    assert specialize_poly(p, sp) == RatFunc(p)


polys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-9, 9),
                        max_size=5).map(BiPoly)
rings = st.sampled_from([Integers(), Rationals(), IntegersMod(7), IntegersMod(12), GOLDEN,
                         parse_ring("Q[y]/(y^3-y+1)")])


@st.composite
def specializations(draw):
    R = draw(rings)
    def val():
        if R.describe().startswith(("Z[", "Q[")):
            return R._reduce([draw(st.integers(-4, 4)) for _ in range(R.d)])
        if isinstance(R, Rationals):
            return Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 5)))
        return R.from_int(draw(st.integers(-9, 9)))
    return Specialization(R, val(), val())


@given(specializations(), polys, polys)
def test_specialize_is_homomorphism(sp, a, b):
    R = sp.ring
    assert specialize_poly(a + b, sp) == R.add(specialize_poly(a, sp), specialize_poly(b, sp))
    assert specialize_poly(a * b, sp) == R.mul(specialize_poly(a, sp), specialize_poly(b, sp))


@given(st.sampled_from([2, 3, 5, 7, 11]), st.integers(0, 100))
def test_prime_field_zero_xor_unit(p, v):
    R = IntegersMod(p)
    x = R.from_int(v)
    assert R.is_invertible(x) != R.is_zero(x)


@given(specializations())
def test_inverse_certificate(sp):
    R = sp.ring
    for v in (sp.image_s, sp.image_t):
        if R.is_invertible(v):
            assert R.mul(v, R.inverse(v)) == R.one()


def test_unit_ideal():
    assert unit_ideal(Integers(), [2, -1])
    assert not unit_ideal(Integers(), [2, 4])
    assert unit_ideal(Rationals(), [Fraction(0), Fraction(3)])
    assert not unit_ideal(IntegersMod(6), [2, 4])
    assert unit_ideal(IntegersMod(6), [2, 3])
    two = GOLDEN.from_int(2)
    assert not unit_ideal(GOLDEN, [two])
    assert unit_ideal(GOLDEN, [two, GOLDEN.from_int(3)])
    assert not unit_ideal(GOLDEN, [two, GOLDEN.parse("2*y")])


def test_fraca_json():
    R = FracA()
    f = RatFunc(BiPoly.parse("x_t")) / RatFunc(BiPoly.parse("x_s*x_t - 1"))
    assert R.to_json(f) == {"num": "x_t", "den": "x_s*x_t - 1"}
    assert R.from_json(R.to_json(f)) == f
