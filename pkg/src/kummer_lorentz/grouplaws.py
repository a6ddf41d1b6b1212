"""One-parameter rational group laws on a single coordinate.

A law is stored symbolically (a rational function in ``u``, ``v`` and the
parameter ``h``) and evaluated pointwise over whatever scalar ring the points
come from: ``Fraction``, ``float``, :class:`FpElem` or :class:`CycloNum`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from numbers import Rational as _RationalABC
from typing import Sequence

from .report import Report
from .symbolic import (
    MultiPoly,
    RatFunc,
    ZeroDenominatorError,
    const,
    elementary_symmetric,
    evaluate,
    ratfunc_eq,
    substitute,
    var,
)

__all__ = [
    "GroupLaw",
    "UndefinedComposition",
    "lorentz_law",
    "sos_law",
    "multiplicative_law",
    "additive_law",
    "compose_points",
    "inverse_point",
    "nfold_compose",
    "fold_formula",
    "closed_formula",
    "printed_threefold_formula",
    "check_axioms",
    "grouplaw_report",
]

U, V, W, H = var("u"), var("v"), var("w"), var("h")


class UndefinedComposition(ZeroDenominatorError):
    """The point lies on the indeterminacy locus of the rational law."""


@dataclass(frozen=True)
class GroupLaw:
    name: str
    compose: RatFunc
    neutral: Fraction
    inverse: RatFunc
    h: object = None
    bindings: dict = field(default_factory=dict)

    @property
    def defined_when(self) -> MultiPoly:
        """Composition is defined where this polynomial does not vanish."""
        return self.compose.den

    @property
    def symbolic(self) -> bool:
        return "h" in self.compose.free_variables() and "h" not in self.bindings

    def __str__(self):
        return f"{self.name}: u ⊕ v = {self.compose}"


def _param(h):
    """Split a parameter into (symbolic expression, bindings for evaluation)."""
    if h is None or (isinstance(h, str) and h == "h"):
        return H, {}
    if isinstance(h, (MultiPoly, RatFunc)):
        return h, {}
    if isinstance(h, _RationalABC):
        return const(h), {}
    # scalars outside Q stay symbolic and are bound at evaluation time
    return H, {"h": h}


def lorentz_law(h=None) -> GroupLaw:
    """``u ⊕ v = (u + v) / (1 + h^2 u v)``; ``h = 0`` is addition."""
    he, bind = _param(h)
    compose = RatFunc(U + V) / (1 + he**2 * U * V)
    return GroupLaw("lorentz", compose, Fraction(0), RatFunc(-U), h, bind)


def sos_law(h=None) -> GroupLaw:
    """``u ⊕' v = u + v + h u v``, inverse ``-u / (1 + h u)``."""
    he, bind = _param(h)
    compose = RatFunc(U + V + he * U * V)
    inverse = RatFunc(-U) / (1 + he * U)
    return GroupLaw("sos", compose, Fraction(0), inverse, h, bind)


def multiplicative_law() -> GroupLaw:
    return GroupLaw("mul", RatFunc(U * V), Fraction(1), RatFunc(1) / U)


def additive_law() -> GroupLaw:
    return GroupLaw("add", RatFunc(U + V), Fraction(0), RatFunc(-U))


def _point_values(law: GroupLaw, values: dict, h) -> dict:
    values = dict(values)
    values.update(law.bindings)
    if h is not None:
        values["h"] = h
    return values


def compose_points(law: GroupLaw, u, v, h=None):
    """Evaluate the law at a pair of points.

    ``h`` is only needed when the law was built with a symbolic parameter.
    Raises :class:`UndefinedComposition` on the indeterminacy locus.
    """
    try:
        return evaluate(law.compose, _point_values(law, {"u": u, "v": v}, h))
    except ZeroDenominatorError as exc:
        raise UndefinedComposition(f"{law.name}: {u} ⊕ {v} is undefined") from exc


def inverse_point(law: GroupLaw, u, h=None):
    try:
        return evaluate(law.inverse, _point_values(law, {"u": u}, h))
    except ZeroDenominatorError as exc:
        raise UndefinedComposition(f"{law.name}: inverse of {u} is undefined") from exc


def nfold_compose(law: GroupLaw, points: Sequence, h=None):
    """Left fold of :func:`compose_points`; the empty product is the neutral element."""
    if not points:
        return law.neutral
    return reduce(lambda acc, x: compose_points(law, acc, x, h), points[1:], points[0])


def _names(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def fold_formula(law: GroupLaw, n: int) -> RatFunc:
    """The n-fold left composite ``((x1 ⊕ x2) ⊕ x3) ...`` as a rational function."""
    names = _names(n)
    acc = RatFunc(var(names[0]))
    for name in names[1:]:
        acc = substitute(law.compose, {"u": acc, "v": var(name)})
    return acc


def closed_formula(n: int) -> RatFunc:
    """Odd over even elementary symmetric functions for the Lorentz law:

        (sum_{k odd} h^(k-1) s_k) / (sum_{k even} h^k s_k)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    names = _names(n)
    num = MultiPoly.constant(0)
    den = MultiPoly.constant(0)
    for k in range(n + 1):
        s = elementary_symmetric(k, names)
        if k % 2:
            num = num + H ** (k - 1) * s
        else:
            den = den + H**k * s
    return RatFunc(num, den)


def printed_threefold_formula() -> RatFunc:
    """The three-fold composite as commonly printed, with ``h^4`` on sigma_2."""
    names = _names(3)
    s1, s2, s3 = (elementary_symmetric(k, names) for k in (1, 2, 3))
    return RatFunc(s1 + H**2 * s3, 1 + H**4 * s2)


def check_axioms(law: GroupLaw) -> Report:
    """Prove commutativity, associativity, neutrality and inversion as
    identities of rational functions."""
    rep = Report(f"axioms:{law.name}")
    f, e = law.compose, law.neutral
    swapped = substitute(f, {"u": V, "v": U})
    rep.add("commutative", "u ⊕ v = v ⊕ u", ratfunc_eq(f, swapped))
    left = substitute(f, {"u": f, "v": W})
    right = substitute(f, {"v": substitute(f, {"u": V, "v": W})})
    rep.add("associative", "(u ⊕ v) ⊕ w = u ⊕ (v ⊕ w)", ratfunc_eq(left, right))
    rep.add("neutral", f"u ⊕ {e} = u", ratfunc_eq(substitute(f, {"v": e}), U))
    rep.add("inverse", "u ⊕ inv(u) = neutral", ratfunc_eq(substitute(f, {"v": law.inverse}), e))
    return rep


def grouplaw_report() -> Report:
    rep = Report("grouplaws")
    rep.anchor("velocity addition law", "three- and four-fold composites", "SOS group law")
    laws = [lorentz_law(), sos_law(), multiplicative_law(), additive_law()]
    for law in laws:
        rep.extend(check_axioms(law), prefix=law.name)

    for n in range(2, 6):
        ok = ratfunc_eq(closed_formula(n), fold_formula(lorentz_law(), n))
        rep.add(
            f"closed_formula.n{n}",
            f"{n}-fold composite = odd/even sigma closed formula",
            ok,
            str(closed_formula(n)) if n <= 3 else "",
        )

    fold3 = fold_formula(lorentz_law(), 3)
    if ratfunc_eq(printed_threefold_formula(), fold3):
        rep.add("printed_threefold", "printed three-fold formula", True)
    else:
        rep.flag(
            "printed_threefold",
            "printed three-fold denominator 1 + h^4·σ_2 disagrees with the composite",
            "expansion gives (σ_1 + h^2·σ_3)/(1 + h^2·σ_2); the h^2 form is the one verified",
        )

    rep.add(
        "lorentz_h0_is_addition",
        "lorentz law at h = 0 is addition",
        ratfunc_eq(lorentz_law(0).compose, additive_law().compose),
    )
    rep.add(
        "sos_h0_is_addition",
        "sos law at h = 0 is addition",
        ratfunc_eq(sos_law(0).compose, additive_law().compose),
    )
    return rep
