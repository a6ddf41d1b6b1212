from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from kummer_lorentz.matrices import (
    Mat2,
    MinkowskiForm,
    cocycle,
    conjugate_to_diagonal,
    det_A,
    dual_minkowski_dot,
    mat_A,
    matrix_report,
    minkowski_dot,
    verify_cocycle_identities,
)
from kummer_lorentz.symbolic import RatFunc, ratfunc_eq, var

h, u, v = (RatFunc(var(n)) for n in "huv")
rationals = st.fractions(min_value=-4, max_value=4, max_denominator=9)


class TestMatA:
    def test_examples(self):
        assert mat_A(1, 0) == Mat2.identity()
        assert mat_A(1, 2) == Mat2([[1, -2], [-2, 1]])
        assert ratfunc_eq(mat_A().det(), 1 - h * h * u * u)
        assert ratfunc_eq(det_A(), mat_A().det())

    def test_spot_product(self):
        a, b = Fraction(1, 2), Fraction(1, 3)
        assert mat_A(1, a) @ mat_A(1, b) == mat_A(1, Fraction(5, 7)) * Fraction(7, 6)

    @settings(max_examples=100, deadline=None)
    @given(rationals, rationals, rationals)
    def test_product_pointwise(self, hv, a, b):
        bb = cocycle(hv, a, b)
        if bb == 0:
            return
        w = (a + b) / bb
        assert mat_A(hv, a) @ mat_A(hv, b) == mat_A(hv, w) * bb

    @settings(max_examples=50, deadline=None)
    @given(rationals, rationals)
    def test_unipotent(self, a, b):
        assert mat_A(0, a) @ mat_A(0, b) == mat_A(0, a + b)


class TestForms:
    def test_basis_values(self):
        form = MinkowskiForm()
        assert ratfunc_eq(form((1, 0), (1, 0)), h * h)
        assert ratfunc_eq(form((0, 1), (0, 1)), -1)

    def test_rows_orthogonal(self):
        A = mat_A()
        assert ratfunc_eq(minkowski_dot(MinkowskiForm(), A.rows[0], A.rows[1]), 0)

    def test_columns_need_dual_form(self):
        A = mat_A()
        c0, c1 = A.column(0), A.column(1)
        assert not ratfunc_eq(minkowski_dot(MinkowskiForm(), c0, c1), 0)
        assert ratfunc_eq(dual_minkowski_dot(MinkowskiForm(), c0, c1), 0)


class TestCocycle:
    def test_symbolic_report(self):
        rep = verify_cocycle_identities()
        assert rep.passed
        assert [c.id for c in rep.checks] == ["product", "coboundary", "cocycle_sigma", "normalized_product"]

    def test_numeric_report(self):
        assert verify_cocycle_identities(1, Fraction(1, 2), Fraction(1, 3)).passed

    def test_product_matches_sympy(self):
        sh, su, sv = sympy.symbols("h u v")
        A = lambda x: sympy.Matrix([[1, -sh**2 * x], [-x, 1]])
        b = 1 + sh**2 * su * sv
        w = (su + sv) / b
        diff = (A(su) * A(sv) - b * A(w)).applyfunc(sympy.cancel)
        assert diff == sympy.zeros(2, 2)

    def test_extra_b_squared_form_is_false(self):
        # (A(u)A(v))^2 a(w) = b^2 a(u)a(v) A(w)^2 fails; the entrywise square without b^2 holds
        sh, su, sv = sympy.symbols("h u v")
        A = lambda x: sympy.Matrix([[1, -sh**2 * x], [-x, 1]])
        a = lambda x: 1 - sh**2 * x**2
        b = 1 + sh**2 * su * sv
        w = (su + sv) / b
        P = A(su) * A(sv)
        wrong = sympy.cancel(P[0, 0] ** 2 * a(w) - b**2 * a(su) * a(sv) * A(w)[0, 0] ** 2)
        right = sympy.cancel(P[0, 0] ** 2 * a(w) - a(su) * a(sv) * A(w)[0, 0] ** 2)
        assert wrong != 0 and right == 0


class TestConjugation:
    def test_symbolic(self):
        _, D = conjugate_to_diagonal()
        assert ratfunc_eq(D[0, 0], 1 + h * u) and ratfunc_eq(D[1, 1], 1 - h * u)
        assert ratfunc_eq(D[0, 1], 0) and ratfunc_eq(D[1, 0], 0)

    def test_identity_at_zero(self):
        _, D = conjugate_to_diagonal(3, 0)
        assert D == Mat2.identity()

    def test_singular_at_h_zero(self):
        with pytest.raises(ValueError):
            conjugate_to_diagonal(0, 1)

    @settings(max_examples=50, deadline=None)
    @given(rationals.filter(lambda x: x != 0), rationals)
    def test_pointwise(self, hv, a):
        _, D = conjugate_to_diagonal(hv, a)
        assert D == Mat2.diag(1 + hv * a, 1 - hv * a)


def test_report_all_pass():
    rep = matrix_report()
    assert rep.passed and rep.count("flagged") == 0
