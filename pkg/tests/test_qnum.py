import pytest
import sympy as sp

from oracles import from_sympy, psi_oracle, two_color_qnum
from twotl.polyarith import BiPoly, RatFunc, UniPoly, color_swap, divides, exact_div
from twotl.qnum import (
    S,
    T,
    DomainError,
    binom_ideal_generator,
    cyclo_valuation,
    divisors,
    g_poly,
    inv_binom_ideal_generator,
    mobius,
    psi,
    qbezout,
    qbinom,
    quantum_number,
    theta_bezout,
    theta_one_color,
    theta_two_color,
    valuation_formula,
)

P = BiPoly.parse
ONE = BiPoly.const(1)


def test_quantum_number_examples():
    assert quantum_number(1, S) == ONE
    assert quantum_number(0, S).is_zero()
    assert str(quantum_number(5, S)) == "x_s^2*x_t^2 - 3*x_s*x_t + 1"
    assert quantum_number(-3, S) == -P("x_s*x_t - 1")


@pytest.mark.parametrize("n", range(-24, 25))
def test_quantum_number_against_chebyshev(n):
    assert quantum_number(n, S) == from_sympy(two_color_qnum(n, "s"))
    assert quantum_number(n, T) == from_sympy(two_color_qnum(n, "t"))


def test_qbinom_examples():
    assert qbinom(7, 0, S) == ONE
    assert qbinom(4, 2, S) == P("x_s*x_t - 1") * P("x_s*x_t - 2")
    assert qbinom(3, 1, T) == P("x_s*x_t - 1")


def test_qbinom_pascal_and_symmetry():
    for n in range(1, 10):
        for k in range(n + 1):
            assert qbinom(n, k, S) == qbinom(n, n - k, S)
            # quotient of quantum factorials, checked by multiplying back
            lhs = qbinom(n, k, S)
            for j in range(1, k + 1):
                lhs = lhs * quantum_number(j, S)
            rhs = ONE
            for j in range(n - k + 1, n + 1):
                rhs = rhs * quantum_number(j, S)
            assert lhs == rhs


def test_mobius_examples():
    assert [mobius(k) for k in (1, 6, 4)] == [1, 1, 0]
    assert [mobius(k) for k in range(1, 13)] == [int(sp.mobius(k)) for k in range(1, 13)]


def test_theta_examples():
    assert theta_one_color(2) == UniPoly.parse("x")
    assert theta_one_color(6) == UniPoly.parse("x^2 - 3")
    assert theta_one_color(5) == UniPoly.parse("x^4 - 3*x^2 + 1")
    assert psi(3) == UniPoly.parse("y - 1", "y")
    assert psi(4) == UniPoly.parse("y - 2", "y")
    assert psi(5) == UniPoly.parse("y^2 - 3*y + 1", "y")
    assert theta_two_color(2, S) == P("x_s")
    assert theta_two_color(6, S) == P("x_s*x_t - 3")
    assert theta_two_color(1, T) == ONE
    with pytest.raises(DomainError):
        psi(2)


@pytest.mark.parametrize("n", range(3, 19))
def test_psi_is_minimal_polynomial(n):
    ref = psi_oracle(n)
    assert list(psi(n).coeffs) == [int(c) for c in reversed(ref.all_coeffs())]
    assert psi(n).degree() == sp.totient(n) // 2


def test_valuation_examples():
    assert cyclo_valuation(quantum_number(6, S), 6, S) == 1
    assert cyclo_valuation(qbinom(4, 2, S), 2, S) == 0
    assert cyclo_valuation(RatFunc(1) / RatFunc(quantum_number(3, S)), 3, S) == -1


def test_qbezout_examples():
    a, b = qbezout(2, 3, S)
    assert (a, b) == (P("x_t"), BiPoly.const(-1))
    assert qbezout(4, 4, S) == (ONE, BiPoly.const(0))
    a, b = qbezout(3, 5, S)
    assert a * quantum_number(3, S) + b * quantum_number(5, S) == ONE


def test_theta_bezout_examples():
    a, b = theta_bezout(2, 3, S)
    assert a * P("x_s") + b * P("x_s*x_t - 1") == ONE
    with pytest.raises(DomainError):
        theta_bezout(2, 4, S)
    a, b = theta_bezout(4, 6, S)
    assert a * P("x_s*x_t - 2") + b * P("x_s*x_t - 3") == ONE


def test_ideal_generator_examples():
    assert binom_ideal_generator(3, S) == P("x_s*x_t - 1")
    assert binom_ideal_generator(4, S) == P("x_s*x_t - 2")
    assert binom_ideal_generator(6, S) == P("x_s*x_t - 3")
    assert inv_binom_ideal_generator(3, S) == P("x_s*x_t - 1")
    assert inv_binom_ideal_generator(5, S) == theta_two_color(4, S) * theta_two_color(5, S)
    assert inv_binom_ideal_generator(1, S) == ONE
    assert g_poly(5, S) == inv_binom_ideal_generator(5, S)


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_product(n):
    for c in (S, T):
        prod = ONE
        for k in divisors(n):
            prod = prod * theta_two_color(k, c)
        assert prod == quantum_number(n, c)


def test_divisibility_of_quantum_numbers():
    for n in range(1, 16):
        for d in divisors(n):
            assert divides(quantum_number(d, S), quantum_number(n, S))


def test_color_independence_of_theta():
    for n in range(3, 16):
        assert theta_two_color(n, S) == theta_two_color(n, T)
        assert color_swap(theta_two_color(n, S)) == theta_two_color(n, S)


def test_valuation_formula_spot():
    assert valuation_formula(4, 2, 2) == 0
    assert valuation_formula(6, 3, 2) == 1
    assert exact_div(qbinom(6, 3, S), theta_two_color(2, S)) * theta_two_color(2, S) == qbinom(6, 3, S)
