"""Relativistic velocity addition on the interval (-c, c).

Floating-point layer on top of the exact group law with ``h = 1/c``.  A
:class:`Velocity` carries, next to its value, its image ``beta`` under the
isomorphism ``(-c, c) -> R_{>0}``; composition multiplies the betas, which
keeps boosts accurate close to the light cone where ``1 - u^2/c^2`` would
otherwise be swamped by rounding.  Exact ``Fraction`` velocities are accepted
by :func:`add_velocity` and stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Sequence, Union

from .grouplaws import UndefinedComposition
from .matrices import Mat2

__all__ = [
    "Velocity",
    "Boost",
    "add_velocity",
    "boost_matrix",
    "beta_real",
    "rapidity",
    "from_rapidity",
    "galilean_limit_probe",
    "galilean_ratios",
]

Real = Union[float, Fraction, int]


def _is_exact(x) -> bool:
    return isinstance(x, _RationalABC)


@dataclass(frozen=True)
class Velocity:
    value: Real
    c: Real = 1.0
    beta: float | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not self.c > 0:
            raise ValueError(f"speed of light must be positive, got {self.c}")
        if abs(self.value) > self.c:
            raise ValueError(f"|{self.value}| exceeds c = {self.c}")
        if self.beta is None and abs(self.value) < self.c:
            x = float(Fraction(self.value) / Fraction(self.c)) if _is_exact(self.value) and _is_exact(self.c) else self.value / self.c
            object.__setattr__(self, "beta", math.sqrt((1 + x) / (1 - x)))

    @property
    def interior(self) -> bool:
        return abs(self.value) < self.c

    @property
    def ratio(self) -> float:
        """``u / c`` as a float."""
        if _is_exact(self.value) and _is_exact(self.c):
            return float(Fraction(self.value) / Fraction(self.c))
        return self.value / self.c

    def __float__(self):
        return float(self.value)


def _check_frame(u: Velocity, v: Velocity) -> None:
    if u.c != v.c:
        raise ValueError(f"velocities live in different frames: c = {u.c} vs c = {v.c}")


def add_velocity(u: Velocity, v: Velocity) -> Velocity:
    """``(u + v) / (1 + u v / c^2)``."""
    _check_frame(u, v)
    c = u.c
    if all(_is_exact(x) for x in (u.value, v.value, c)):
        uv, vv, cc = Fraction(u.value), Fraction(v.value), Fraction(c)
        den = 1 + uv * vv / (cc * cc)
        if den == 0:
            raise UndefinedComposition(f"{u.value} ⊕ {v.value} is undefined (1 + uv/c^2 = 0)")
        return Velocity((uv + vv) / den, c)
    x, y = u.value / c, v.value / c
    den = 1 + x * y
    if den == 0:
        raise UndefinedComposition(f"{u.value} ⊕ {v.value} is undefined (1 + uv/c^2 = 0)")
    # in units of c, so that a light-speed argument returns exactly c
    value = c * ((x + y) / den)
    beta = u.beta * v.beta if u.beta is not None and v.beta is not None else None
    if abs(value) >= c:
        return Velocity(math.copysign(c, value), c)
    return Velocity(value, c, beta)


def _require_interior(u: Velocity, what: str) -> None:
    if not u.interior:
        raise ValueError(f"{what} needs |u| < c, got u = {u.value}, c = {u.c}")


def _gamma_pair(u: Velocity) -> tuple[float, float]:
    """(gamma, gamma * u/c)."""
    b = u.beta
    gamma = 0.5 * (b + 1 / b)
    x = u.ratio
    gx = 0.5 * (b - 1 / b) if abs(x) >= 0.5 else gamma * x
    return gamma, gx


@dataclass(frozen=True)
class Boost:
    matrix: Mat2
    u: Velocity

    def det(self) -> float:
        return self.matrix.det()

    def apply(self, x: float, t: float) -> tuple[float, float]:
        """Coordinates ``(x', t')`` of the event ``(x, t)`` in the moving frame."""
        m = self.matrix
        return m[0, 0] * x + m[0, 1] * t, m[1, 0] * x + m[1, 1] * t

    def __matmul__(self, other: "Boost") -> Mat2:
        return self.matrix @ other.matrix


def boost_matrix(u: Velocity) -> Boost:
    """``gamma * [[1, -u/c^2], [-u, 1]]`` in (x, t) order."""
    _require_interior(u, "boost_matrix")
    c = float(u.c)
    gamma, gx = _gamma_pair(u)
    return Boost(Mat2([[gamma, -gx / c], [-c * gx, gamma]]), u)


def beta_real(u: Velocity) -> float:
    """``sqrt((1 + u/c)/(1 - u/c))``, the isomorphism onto the positive reals."""
    _require_interior(u, "beta_real")
    return u.beta


def rapidity(u: Velocity) -> float:
    """``artanh(u/c)``; ``rapidity(u ⊕ v) == rapidity(u) + rapidity(v)``."""
    _require_interior(u, "rapidity")
    x = u.ratio
    if abs(x) < 0.5:
        return math.atanh(x)
    return math.log(u.beta)


def from_rapidity(eta: float, c: Real = 1.0) -> Velocity:
    """Inverse of :func:`rapidity`: ``c * tanh(eta)``."""
    return Velocity(float(c) * math.tanh(eta), c, math.exp(eta))


def galilean_limit_probe(u: Real, v: Real, c_values: Sequence[Real]) -> list[float]:
    """``|(u ⊕_c v) - (u + v)|`` for each c, computed exactly from the inputs."""
    uf, vf = Fraction(u), Fraction(v)
    out = []
    for c in c_values:
        cf = Fraction(c)
        if not cf > max(abs(uf), abs(vf)):
            raise ValueError(f"c = {c} must exceed |u| and |v|")
        w = (uf + vf) / (1 + uf * vf / (cf * cf))
        out.append(float(abs(w - (uf + vf))))
    return out


def galilean_ratios(deviations: Sequence[float], c_values: Sequence[Real]) -> list[float]:
    """``deviation * c^2``; stays roughly constant when deviations decay like c^-2."""
    return [d * float(c) ** 2 for d, c in zip(deviations, c_values)]
