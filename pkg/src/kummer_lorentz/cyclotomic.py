"""Kummer maps over Z[zeta_p] and their reduction to Artin-Schreier.

With ``h = zeta - 1`` we have ``h^(p-1) = w p`` for a unit ``w = -1 mod h``.
That makes ``psi_p`` (and the numerator of ``phi_p``) integral, and reducing
the coefficients mod ``h`` gives ``u^p - u`` over F_p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import (
    CycloNum,
    FpElem,
    NonIntegralError,
    compute_unit_w,
    format_basis,
    h_valuation,
    is_prime,
    reduce_mod_h,
)
from .morphisms import kummer_psi
from .report import Report
from .symbolic import evaluate

__all__ = [
    "FpPoly",
    "SpecializationReport",
    "artin_schreier",
    "artin_schreier_poly",
    "psi_coefficients",
    "specialize_psi",
    "specialize_phi",
    "specialize",
    "verify_ramification",
    "eval_coefficients",
    "format_unit",
    "format_psi",
    "cyclotomic_report",
    "DEFAULT_PRIMES",
]

DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p in ``u``, coefficients low degree first."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = [c % self.p for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: FpElem) -> FpElem:
        acc = FpElem(self.p, 0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale(self, c: int) -> "FpPoly":
        return FpPoly(self.p, tuple(c * x for x in self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        top = self.degree
        for k in range(top, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            s = _signed(c, self.p, leading=k == top)
            mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            mag = abs(s)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}·{mono}")
            if not parts:
                parts.append(f"-{body}" if s < 0 else body)
            else:
                parts.append(f"- {body}" if s < 0 else f"+ {body}")
        return " ".join(parts)


def _signed(c: int, p: int, leading: bool) -> int:
    # lower-order residues above p/2 print as negatives (every 1 over F_2)
    if leading:
        return c
    if p == 2:
        return -1
    return c if c <= p // 2 else c - p


def artin_schreier_poly(p: int) -> FpPoly:
    """``u^p - u`` over F_p."""
    return FpPoly(p, (0, p - 1) + (0,) * (p - 2) + (1,))


def artin_schreier(p: int, u: FpElem) -> FpElem:
    if not isinstance(u, FpElem):
        u = FpElem(p, u)
    if u.p != p:
        raise ValueError(f"modulus mismatch: F_{u.p} vs F_{p}")
    return u**p - u


@dataclass
class SpecializationReport:
    p: int
    w: CycloNum
    psi_coeffs: list[CycloNum] | None = None
    psi_mod_h: FpPoly | None = None
    phi_num_coeffs: list[CycloNum] | None = None
    phi_den_coeffs: list[CycloNum] | None = None
    phi_num_mod_h: FpPoly | None = None
    phi_den_mod_h: FpPoly | None = None
    phi_mod_h: FpPoly | None = None
    verdicts: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())


def _reduce_poly(p: int, coeffs: Sequence[CycloNum]) -> FpPoly:
    return FpPoly(p, tuple(reduce_mod_h(c).value for c in coeffs))


def psi_coefficients(p: int) -> list[CycloNum]:
    """Coefficients of ``psi_p(u) = ((h u + 1)^p - 1)/h^p``: ``C(p, i) h^(i - p)``."""
    h = CycloNum.h(p)
    h_inv = h.inverse()
    return [CycloNum.const(p, 0)] + [h_inv ** (p - i) * math.comb(p, i) for i in range(1, p + 1)]


def eval_coefficients(coeffs: Sequence, x):
    """Horner evaluation of ``sum coeffs[i] x^i``."""
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def specialize_psi(p: int) -> SpecializationReport:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    w = compute_unit_w(p)
    coeffs = psi_coefficients(p)
    rep = SpecializationReport(p, w, psi_coeffs=coeffs)
    v = rep.verdicts
    v["psi_integral"] = all(c.is_integral() for c in coeffs)
    v["psi_leading_one"] = coeffs[p] == 1
    v["psi_constant_zero"] = coeffs[0] == 0
    # second route: evaluate the symbolic psi_p coefficientwise at h = zeta - 1
    h = CycloNum.h(p)
    sym = kummer_psi(None, p).map
    num_by_u = sym.num.coefficients_in("u")
    den = evaluate(sym.den, {"h": h})
    v["psi_matches_symbolic"] = all(
        (evaluate(num_by_u[i], {"h": h}) / den if i in num_by_u else 0) == coeffs[i]
        for i in range(p + 1)
    )
    if v["psi_integral"]:
        rep.psi_mod_h = _reduce_poly(p, coeffs)
        v["psi_fiber_is_artin_schreier"] = rep.psi_mod_h == artin_schreier_poly(p)
    else:
        v["psi_fiber_is_artin_schreier"] = False
    return rep


def specialize_phi(p: int) -> SpecializationReport:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError("phi_p needs an odd prime: its denominator vanishes mod h for p = 2")
    w = compute_unit_w(p)
    h = CycloNum.h(p)
    h_inv = h.inverse()
    zero = CycloNum.const(p, 0)
    # N = ((1 + hu)^p - (1 - hu)^p)/h^p keeps odd powers, D = (1 + hu)^p + (1 - hu)^p even ones
    num = [h_inv ** (p - i) * (2 * math.comb(p, i)) if i % 2 else zero for i in range(p + 1)]
    den = [h**i * (2 * math.comb(p, i)) if i % 2 == 0 else zero for i in range(p + 1)]
    rep = SpecializationReport(p, w, phi_num_coeffs=num, phi_den_coeffs=den)
    v = rep.verdicts
    v["phi_num_integral"] = all(c.is_integral() for c in num)
    v["phi_den_integral"] = all(c.is_integral() for c in den)
    v["phi_den_at_zero_is_2"] = den[0] == 2
    v["phi_num_at_zero_is_0"] = num[0] == 0
    if v["phi_num_integral"] and v["phi_den_integral"]:
        rep.phi_num_mod_h = _reduce_poly(p, num)
        rep.phi_den_mod_h = _reduce_poly(p, den)
        v["phi_num_fiber"] = rep.phi_num_mod_h == artin_schreier_poly(p).scale(2)
        v["phi_den_fiber_is_2"] = rep.phi_den_mod_h == FpPoly(p, (2,))
        if rep.phi_den_mod_h.degree == 0:
            inv = pow(rep.phi_den_mod_h.coeffs[0], -1, p)
            rep.phi_mod_h = rep.phi_num_mod_h.scale(inv)
            v["phi_fiber_is_artin_schreier"] = rep.phi_mod_h == artin_schreier_poly(p)
        else:
            v["phi_fiber_is_artin_schreier"] = False
    else:
        v["phi_num_fiber"] = v["phi_den_fiber_is_2"] = v["phi_fiber_is_artin_schreier"] = False
    return rep


def specialize(p: int) -> SpecializationReport:
    """ψ part for every prime, φ part too when p is odd."""
    rep = specialize_psi(p)
    if p != 2:
        phi = specialize_phi(p)
        for name in (
            "phi_num_coeffs",
            "phi_den_coeffs",
            "phi_num_mod_h",
            "phi_den_mod_h",
            "phi_mod_h",
        ):
            setattr(rep, name, getattr(phi, name))
        rep.verdicts.update(phi.verdicts)
    return rep


def format_unit(x: CycloNum) -> str:
    """``±zeta^k`` when x is one, otherwise the basis expansion."""
    p = x.p
    z = CycloNum.zeta(p)
    for k in range(p):
        for sign in (1, -1):
            if z**k * sign == x:
                mono = "1" if k == 0 else ("ζ" if k == 1 else f"ζ^{k}")
                return ("-" if sign < 0 else "") + mono
    return f"({format_basis(x.coeffs, 'ζ')})"


def format_psi(p: int, coeffs: Sequence[CycloNum]) -> str:
    """``psi_p`` with each coefficient written as unit·h^k."""
    h = CycloNum.h(p)
    parts = []
    for i in range(len(coeffs) - 1, 0, -1):
        c = coeffs[i]
        if c == 0:
            continue
        k = h_valuation(c)
        unit = format_unit(c / h**k)
        sign = ""
        if unit.startswith("-"):
            sign, unit = "-", unit[1:]
        factors = [] if unit == "1" else [unit]
        if k:
            factors.append("h" if k == 1 else f"h^{k}")
        factors.append("u" if i == 1 else f"u^{i}")
        body = "·".join(factors)
        if not parts:
            parts.append(sign + body)
        else:
            parts.append(f"{'-' if sign else '+'} {body}")
    return " ".join(parts) if parts else "0"


def verify_ramification(p: int) -> Report:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    rep = Report(f"ramification:p={p}")
    rep.anchor("uniformizer h = zeta - 1", "h^(p-1) = w p with w = -1 mod h")
    h = CycloNum.h(p)
    v = h_valuation(CycloNum.const(p, p))
    rep.add("valuation_of_p", f"v_h({p}) = {p - 1}", v == p - 1, f"v_h({p}) = {v}")
    w = h ** (p - 1) / p
    rep.add("w_integral", "w = h^(p-1)/p lies in Z[ζ_p]", w.is_integral(), f"w = {format_basis(w.coeffs, 'ζ')}")
    unit = w.is_unit()
    rep.add("w_unit", "w has an integral inverse", unit)
    rep.add("w_norm", "N(w) = ±1", abs(w.norm()) == 1, f"N(w) = {w.norm()}")
    try:
        res = reduce_mod_h(w)
        rep.add("w_residue", "w ≡ -1 mod h", res.value == p - 1, f"w mod h = {res.value}")
    except NonIntegralError as exc:
        rep.add("w_residue", "w ≡ -1 mod h", False, str(exc))
    rep.add(
        "w_h_adic",
        "w in the basis 1, h, ..., h^(p-2)",
        all(c.denominator == 1 for c in w.to_h_basis()),
        f"w = {format_basis(w.to_h_basis(), 'h')}",
    )
    if p == 3:
        z = CycloNum.zeta(3)
        rep.add("example.relation", "ζ^2 + ζ + 1 = 0", z * z + z + 1 == 0)
        h2 = h * h
        rep.add("example.h_squared", "h^2 = (ζ - 1)^2 = -3ζ", h2 == -3 * z, f"h^2 = {format_basis(h2.coeffs, 'ζ')}")
        ok = w == -z and w == (1 + z).inverse() and w == -1 - h
        rep.add("example.w", "w = -ζ = (1 + ζ)^-1 = -1 - h", ok, f"w = {format_basis(w.to_h_basis(), 'h')}")
    return rep


def _integral_samples(p: int) -> Iterable[CycloNum]:
    z = CycloNum.zeta(p)
    h = CycloNum.h(p)
    base = [CycloNum.const(p, 0), CycloNum.const(p, 1), CycloNum.const(p, -2), z, h, 1 + 2 * z, h * h - 3, z**2 - 5 * z + 7]
    return base


def cyclotomic_report(primes: Sequence[int] = DEFAULT_PRIMES) -> Report:
    rep = Report("cyclotomic")
    rep.anchor("p-cyclotomic ring", "special fiber of psi_p", "special fiber of phi_p")
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        rep.extend(verify_ramification(p), prefix=f"p{p}")
        sp = specialize(p)
        for name, ok in sp.verdicts.items():
            detail = ""
            if name == "psi_fiber_is_artin_schreier" and sp.psi_mod_h is not None:
                detail = f"fiber {sp.psi_mod_h}"
            elif name == "phi_fiber_is_artin_schreier" and sp.phi_mod_h is not None:
                num_text = f"2·({sp.phi_mod_h})" if sp.verdicts.get("phi_num_fiber") else str(sp.phi_num_mod_h)
                detail = f"N mod h = {num_text}, D mod h = {sp.phi_den_mod_h}, fiber {sp.phi_mod_h}"
            rep.add(f"p{p}.{name}", name.replace("_", " "), ok, detail)
        coeffs = sp.psi_coeffs
        ok = all(
            reduce_mod_h(eval_coefficients(coeffs, x)) == artin_schreier(p, reduce_mod_h(x))
            for x in _integral_samples(p)
        )
        rep.add(f"p{p}.psi_pointwise_fiber", "ψ_p(x) mod h = ℘(x mod h) on sample points", ok)
    return rep
