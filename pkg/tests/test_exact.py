import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from kummer_lorentz.exact import (
    CycloNum,
    FpElem,
    NonIntegralError,
    compute_unit_w,
    cyclo_make,
    cyclo_mul,
    format_basis,
    h_valuation,
    is_prime,
    reduce_mod_h,
)

PRIMES = [2, 3, 5, 7, 11, 13]
Z = sympy.Symbol("z")


def sympy_reduce(p, expr):
    """Coordinates on 1..z^(p-2) of expr mod the p-th cyclotomic polynomial."""
    rem = sympy.Poly(sympy.rem(sympy.expand(expr), sympy.cyclotomic_poly(p, Z), Z), Z)
    coeffs = [Fraction(0)] * (p - 1)
    for (k,), c in rem.terms():
        coeffs[k] = Fraction(int(c.p), int(c.q))
    return tuple(coeffs)


def as_sympy(x: CycloNum):
    return sum(sympy.Rational(c.numerator, c.denominator) * Z**k for k, c in enumerate(x.coeffs))


small_ints = st.integers(min_value=-6, max_value=6)


def cyclo(p):
    return st.lists(small_ints, min_size=p - 1, max_size=p - 1).map(lambda c: CycloNum(p, c))


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


class TestFp:
    def test_arithmetic(self):
        a, b = FpElem(5, 2), FpElem(5, 4)
        assert a + b + a * b == FpElem(5, 4)
        assert a * a.inverse() == FpElem(5, 1)
        assert FpElem.from_rational(5, Fraction(1, 2)) == FpElem(5, 3)

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            FpElem(7, 0).inverse()

    def test_denominator_divisible_by_p(self):
        with pytest.raises((ZeroDivisionError, ArithmeticError)):
            FpElem.from_rational(3, Fraction(1, 3))

    def test_non_prime_modulus(self):
        with pytest.raises(ValueError):
            FpElem(4, 1)


class TestCycloMake:
    def test_relation_folds(self):
        assert cyclo_make(3, [0, 0, 1]).coeffs == (-1, -1)
        assert cyclo_make(3, [1]).coeffs == (1, 0)
        assert cyclo_make(5, [0, 0, 0, 0, 1]).coeffs == (-1, -1, -1, -1)

    @pytest.mark.parametrize("p", PRIMES)
    def test_high_powers_match_oracle(self, p):
        raw = list(range(1, 2 * p + 2))
        expr = sum(c * Z**k for k, c in enumerate(raw))
        assert cyclo_make(p, raw).coeffs == sympy_reduce(p, expr)


class TestCycloMul:
    def test_h_squared_p3(self):
        h = CycloNum.h(3)
        assert cyclo_mul(h, h) == -3 * CycloNum.zeta(3)

    def test_h_squared_p5(self):
        h = CycloNum.h(5)
        assert (h * h).coeffs == (1, -2, 1, 0)

    def test_one_is_neutral(self):
        x = CycloNum(5, [1, 2, 3, 4])
        assert cyclo_mul(CycloNum.const(5, 1), x) == x

    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_product_matches_oracle(self, p, data):
        a, b = data.draw(cyclo(p)), data.draw(cyclo(p))
        assert (a * b).coeffs == sympy_reduce(p, as_sympy(a) * as_sympy(b))

    @pytest.mark.parametrize("p", [3, 5, 7])
    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_ring_axioms(self, p, data):
        a, b, c = (data.draw(cyclo(p)) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @pytest.mark.parametrize("p", [3, 5, 7])
    @settings(max_examples=30, deadline=None)
    @given(data=st.data())
    def test_inverse(self, p, data):
        a = data.draw(cyclo(p))
        if a.is_zero():
            return
        assert a * a.inverse() == CycloNum.const(p, 1)


class TestReduceModH:
    @pytest.mark.parametrize("p", PRIMES)
    def test_basic(self, p):
        assert reduce_mod_h(CycloNum.zeta(p)) == FpElem(p, 1)
        assert reduce_mod_h(CycloNum.h(p)) == FpElem(p, 0)

    def test_minus_zeta_p3(self):
        assert reduce_mod_h(-CycloNum.zeta(3)).value == 2

    def test_non_integral(self):
        with pytest.raises(NonIntegralError):
            reduce_mod_h(CycloNum(3, [Fraction(1, 3), 0]))

    @pytest.mark.parametrize("p", [3, 5, 7])
    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_ring_homomorphism(self, p, data):
        a, b = data.draw(cyclo(p)), data.draw(cyclo(p))
        assert reduce_mod_h(a * b) == reduce_mod_h(a) * reduce_mod_h(b)
        assert reduce_mod_h(a + b) == reduce_mod_h(a) + reduce_mod_h(b)


class TestValuation:
    @pytest.mark.parametrize("p", PRIMES)
    def test_examples(self, p):
        assert h_valuation(CycloNum.h(p)) == 1
        assert h_valuation(CycloNum.const(p, p)) == p - 1
        assert h_valuation(CycloNum.const(p, 1)) == 0
        assert h_valuation(CycloNum.const(p, 0)) == math.inf

    def test_non_integral(self):
        assert h_valuation(CycloNum.const(5, Fraction(1, 5))) == -4
        assert h_valuation(CycloNum.h(5).inverse()) == -1

    @pytest.mark.parametrize("p", [3, 5, 7])
    @settings(max_examples=30, deadline=None)
    @given(data=st.data())
    def test_additive_on_products(self, p, data):
        a, b = data.draw(cyclo(p)), data.draw(cyclo(p))
        if a.is_zero() or b.is_zero():
            return
        assert h_valuation(a * b) == h_valuation(a) + h_valuation(b)


class TestUnitW:
    def test_p3(self):
        w = compute_unit_w(3)
        assert w == -CycloNum.zeta(3)
        assert w == -1 - CycloNum.h(3)
        assert w == (1 + CycloNum.zeta(3)).inverse()

    def test_p2(self):
        assert compute_unit_w(2) == CycloNum.const(2, -1)

    def test_p5_residue(self):
        assert reduce_mod_h(compute_unit_w(5)).value == 4

    @pytest.mark.parametrize("p", PRIMES)
    def test_defining_relation(self, p):
        w = compute_unit_w(p)
        assert CycloNum.h(p) ** (p - 1) == p * w
        assert w.is_integral() and w.is_unit()
        assert abs(w.norm()) == 1
        assert reduce_mod_h(w) == FpElem(p, -1)

    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_norm_matches_oracle(self, p):
        x = CycloNum(p, list(range(1, p)))
        res = sympy.resultant(sympy.cyclotomic_poly(p, Z), as_sympy(x), Z)
        assert x.norm() == int(res)


def test_format_basis():
    assert format_basis((-1, -1), "h") == "-1 - 1·h"
    assert str(CycloNum(3, [0, -1])) == "-1·ζ (p=3)"
