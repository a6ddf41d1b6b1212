from fractions import Fraction
from math import comb

import pytest
import sympy

from kummer_lorentz.cyclotomic import (
    FpPoly,
    artin_schreier,
    artin_schreier_poly,
    cyclotomic_report,
    eval_coefficients,
    format_psi,
    psi_coefficients,
    specialize,
    specialize_phi,
    specialize_psi,
    verify_ramification,
)
from kummer_lorentz.exact import CycloNum, FpElem, reduce_mod_h

PRIMES = [2, 3, 5, 7, 11, 13]
Z, U = sympy.symbols("z u")


def oracle_psi_coeffs(p):
    """binom(p, i) h^(i-p) reduced mod the cyclotomic polynomial by sympy."""
    phi = sympy.Poly(sympy.cyclotomic_poly(p, Z), Z, domain="QQ")
    hinv = sympy.Poly(sympy.invert(Z - 1, phi.as_expr(), Z), Z, domain="QQ")
    powers = [sympy.Poly(1, Z, domain="QQ")]
    for _ in range(p):
        powers.append((powers[-1] * hinv).rem(phi))
    out = [(Fraction(0),) * (p - 1)]
    for i in range(1, p + 1):
        poly = powers[p - i] * comb(p, i)
        coeffs = [Fraction(0)] * (p - 1)
        for (k,), c in poly.terms():
            coeffs[k] = Fraction(int(c.p), int(c.q))
        out.append(tuple(coeffs))
    return out


def oracle_fiber(p, expr):
    """Reduce a polynomial in u with Z-coefficients mod p via sympy's GF(p)."""
    return sympy.Poly(expr, U, modulus=p)


class TestArtinSchreier:
    def test_examples(self):
        assert artin_schreier(7, FpElem(7, 0)) == FpElem(7, 0)
        assert artin_schreier(7, FpElem(7, 1)) == FpElem(7, 0)

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_vanishes_on_fp(self, p):
        assert all(artin_schreier(p, FpElem(p, x)).value == 0 for x in range(p))

    def test_poly(self):
        assert artin_schreier_poly(5) == FpPoly(5, (0, -1, 0, 0, 0, 1))
        assert str(artin_schreier_poly(3)) == "u^3 - u"


class TestPsi:
    def test_p2_over_z(self):
        sp = specialize_psi(2)
        assert [c.coeffs for c in sp.psi_coeffs] == [(0,), (-1,), (1,)]
        assert str(sp.psi_mod_h) == "u^2 - u"

    def test_p3_coefficients(self):
        z, h = CycloNum.zeta(3), CycloNum.h(3)
        c = psi_coefficients(3)
        assert c[3] == 1 and c[2] == -(z * z) * h and c[1] == -(z * z) and c[0] == 0
        assert format_psi(3, c) == "u^3 - ζ^2·h·u^2 - ζ^2·u"

    @pytest.mark.parametrize("p", PRIMES)
    def test_coefficients_match_oracle(self, p):
        assert [c.coeffs for c in psi_coefficients(p)] == oracle_psi_coeffs(p)

    @pytest.mark.parametrize("p", PRIMES)
    def test_fiber(self, p):
        sp = specialize_psi(p)
        assert sp.ok
        assert sp.psi_mod_h == artin_schreier_poly(p)
        assert all(c.is_integral() for c in sp.psi_coeffs)

    @pytest.mark.parametrize("p", [3, 5])
    def test_pointwise_against_definition(self, p):
        h = CycloNum.h(p)
        coeffs = psi_coefficients(p)
        for x in (CycloNum.const(p, 2), CycloNum.zeta(p) + 3):
            assert eval_coefficients(coeffs, x) * h**p == (h * x + 1) ** p - 1


class TestPhi:
    def test_p2_rejected(self):
        with pytest.raises(ValueError):
            specialize_phi(2)

    def test_p3(self):
        sp = specialize_phi(3)
        assert sp.phi_num_mod_h == FpPoly(3, (0, -2, 0, 2))
        assert sp.phi_num_mod_h == FpPoly(3, (0, 1, 0, 2))
        assert sp.phi_den_mod_h == FpPoly(3, (2,))
        assert sp.phi_mod_h == artin_schreier_poly(3)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_fibers(self, p):
        sp = specialize_phi(p)
        assert sp.ok
        expected = oracle_fiber(p, 2 * U**p - 2 * U)
        got = sympy.Poly(sum(c * U**k for k, c in enumerate(sp.phi_num_mod_h.coeffs)), U, modulus=p)
        assert got == expected
        assert sp.phi_den_mod_h == FpPoly(p, (2,))
        assert sp.phi_mod_h == artin_schreier_poly(p)


class TestRamification:
    @pytest.mark.parametrize("p", PRIMES)
    def test_report(self, p):
        assert verify_ramification(p).passed

    def test_p3_verbatim(self):
        rep = verify_ramification(3)
        assert rep["example.h_squared"].detail == "h^2 = -3·ζ"
        assert rep["example.w"].status == "pass"
        assert rep["w_h_adic"].status == "pass"

    def test_p2(self):
        assert specialize(2).w == CycloNum.const(2, -1)

    def test_p5_w_residue(self):
        assert reduce_mod_h(specialize(5).w).value == 4

    def test_p7_all_pass(self):
        assert specialize(7).ok


def test_report_runs_for_default_primes():
    rep = cyclotomic_report()
    assert rep.passed and rep.count("fail") == 0 and rep.count("flagged") == 0
