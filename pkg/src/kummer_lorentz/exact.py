"""Exact scalars: rationals, prime fields and the cyclotomic ring Z[zeta_p].

Rationals are :class:`fractions.Fraction`.  Elements of Q(zeta_p) are stored
on the integral basis ``1, zeta, ..., zeta^(p-2)``, so an element lies in
Z[zeta_p] exactly when all of its coordinates are integers.  The prime
``h = zeta - 1`` is the uniformizer used for valuations and residues.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction

__all__ = [
    "Rational",
    "FpElem",
    "CycloNum",
    "is_prime",
    "cyclo_make",
    "cyclo_mul",
    "reduce_mod_h",
    "h_valuation",
    "compute_unit_w",
    "NonIntegralError",
]


class NonIntegralError(ArithmeticError):
    """Raised when an operation needs an element of Z[zeta_p]."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


# --------------------------------------------------------------------------
# F_p
# --------------------------------------------------------------------------


class FpElem:
    """An element of the prime field F_p."""

    __slots__ = ("p", "value")

    def __init__(self, p: int, value: int = 0):
        _check_prime(p)
        self.p = p
        self.value = int(value) % p

    @classmethod
    def from_rational(cls, p: int, q) -> "FpElem":
        q = Fraction(q)
        if q.denominator % p == 0:
            raise ZeroDivisionError(f"{q} has no image in F_{p}")
        return cls(p, q.numerator * pow(q.denominator, -1, p))

    def _lift_rational(self, q) -> "FpElem":
        return FpElem.from_rational(self.p, q)

    def _coerce(self, other) -> "FpElem":
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError(f"modulus mismatch: F_{self.p} vs F_{other.p}")
            return other
        if isinstance(other, _RationalABC):
            return FpElem.from_rational(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.p, self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.p, self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.p, o.value - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.p, self.value * o.value)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(self.p, -self.value)

    def inverse(self) -> "FpElem":
        if self.value == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}")
        return FpElem(self.p, pow(self.value, -1, self.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FpElem(self.p, pow(self.value, n, self.p))

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, _RationalABC):
            try:
                return self.value == FpElem.from_rational(self.p, other).value
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash(("Fp", self.p, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpElem({self.p}, {self.value})"

    def __str__(self):
        return f"{self.value} (mod {self.p})"


# --------------------------------------------------------------------------
# Q(zeta_p)
# --------------------------------------------------------------------------


def _canonical(p: int, raw: Sequence) -> tuple[Fraction, ...]:
    # fold zeta^m with zeta^p = 1, then eliminate zeta^(p-1)
    folded = [Fraction(0)] * p
    for m, c in enumerate(raw):
        folded[m % p] += Fraction(c)
    top = folded[p - 1]
    return tuple(c - top for c in folded[: p - 1])


def _upoly_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _upoly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_upoly_trim(a)) >= len(b):
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
    return _upoly_trim(q), a


def _upoly_sub_mul(a: list, q: list, b: list) -> list:
    """a - q*b"""
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        for j, y in enumerate(b):
            out[i + j] -= x * y
    return _upoly_trim(out)


class CycloNum:
    """An element of Q(zeta_p) in coordinates on 1, zeta, ..., zeta^(p-2).

    For ``p = 2`` the basis is just ``1`` and ``zeta = -1``.
    Arithmetic mixes freely with ``int`` and ``Fraction``.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence):
        if len(coeffs) != p - 1:
            raise ValueError(f"expected {p - 1} coordinates, got {len(coeffs)}")
        self.p = p
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    # constructors -----------------------------------------------------

    @classmethod
    def const(cls, p: int, c) -> "CycloNum":
        _check_prime(p)
        return cls(p, [Fraction(c)] + [Fraction(0)] * (p - 2))

    @classmethod
    def zeta(cls, p: int) -> "CycloNum":
        return cyclo_make(p, [0, 1])

    @classmethod
    def h(cls, p: int) -> "CycloNum":
        """The uniformizer ``zeta - 1``."""
        return cyclo_make(p, [-1, 1])

    # ring structure ---------------------------------------------------

    def _lift_rational(self, q) -> "CycloNum":
        return CycloNum.const(self.p, q)

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.p != self.p:
                raise ValueError(f"mismatched p: {self.p} vs {other.p}")
            return other
        if isinstance(other, _RationalABC):
            return CycloNum.const(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycloNum(self.p, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, _RationalABC):
            c = Fraction(other)
            return CycloNum(self.p, [a * c for a in self.coeffs])
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return cyclo_mul(self, o)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Inverse in Q(zeta_p) by the extended Euclidean algorithm mod Phi_p."""
        if self.is_zero():
            raise ZeroDivisionError("0 is not invertible")
        p = self.p
        phi = [Fraction(1)] * p
        r0, r1 = phi, _upoly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _upoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _upoly_sub_mul(s0, q, s1)
        # r1 is a nonzero constant because Phi_p is irreducible
        c = r1[0]
        return cyclo_make(p, [x / c for x in s1] or [0])

    def __truediv__(self, other):
        if isinstance(other, _RationalABC):
            c = Fraction(other)
            if c == 0:
                raise ZeroDivisionError("division by zero")
            return CycloNum(self.p, [a / c for a in self.coeffs])
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycloNum.const(self.p, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, _RationalABC):
            return self.coeffs == CycloNum.const(self.p, other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("cyclo", self.p, self.coeffs))

    # predicates and projections --------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_unit(self) -> bool:
        """True when the element is a unit of Z[zeta_p]."""
        if not self.is_integral() or self.is_zero():
            return False
        return self.inverse().is_integral()

    def norm(self) -> Fraction:
        """Field norm to Q, as the determinant of multiplication-by-self."""
        p = self.p
        basis = [cyclo_make(p, [0] * i + [1]) for i in range(p - 1)]
        rows = [list((self * b).coeffs) for b in basis]
        return _det(rows)

    def to_h_basis(self) -> tuple[Fraction, ...]:
        """Coordinates on 1, h, ..., h^(p-2); integral iff the element is."""
        # zeta^k = (1 + h)^k
        out = [Fraction(0)] * (self.p - 1)
        for k, c in enumerate(self.coeffs):
            if c:
                for j in range(k + 1):
                    out[j] += c * math.comb(k, j)
        return tuple(out)

    def __repr__(self):
        return f"CycloNum({self.p}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        return f"{format_basis(self.coeffs, 'ζ')} (p={self.p})"


def format_basis(coeffs: Iterable, symbol: str) -> str:
    """Render ``sum c_k * symbol^k`` as e.g. ``-1 - 1·ζ``."""
    parts = []
    for k, c in enumerate(coeffs):
        c = Fraction(c)
        if c == 0:
            continue
        mono = "" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}")
        mag = abs(c)
        body = str(mag) if not mono else f"{mag}·{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts) if parts else "0"


def _det(rows: list[list[Fraction]]) -> Fraction:
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for k in range(col, n):
                    m[r][k] -= f * m[col][k]
    return det


def cyclo_make(p: int, raw: Sequence) -> CycloNum:
    """Canonical element from coefficients on powers ``zeta^0 .. zeta^d``."""
    _check_prime(p)
    if len(raw) == 0:
        raise ValueError("raw coefficient sequence is empty")
    return CycloNum(p, _canonical(p, raw))


def cyclo_mul(a: CycloNum, b: CycloNum) -> CycloNum:
    if a.p != b.p:
        raise ValueError(f"mismatched p: {a.p} vs {b.p}")
    p = a.p
    raw = [Fraction(0)] * max(1, 2 * (p - 1) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    raw[i + j] += x * y
    return cyclo_make(p, raw)


def reduce_mod_h(a: CycloNum) -> FpElem:
    """Residue map Z[zeta_p] -> F_p sending zeta to 1."""
    if not a.is_integral():
        raise NonIntegralError(f"{a} is not in Z[zeta_{a.p}]")
    return FpElem(a.p, sum(int(c) for c in a.coeffs))


@lru_cache(maxsize=None)
def _h_inverse(p: int) -> CycloNum:
    return CycloNum.h(p).inverse()


def _integral_valuation(a: CycloNum) -> int:
    h_inv = _h_inverse(a.p)
    k = 0
    while reduce_mod_h(a).value == 0:
        a = a * h_inv
        if not a.is_integral():
            raise AssertionError("exact division by h left Z[zeta_p]")
        k += 1
    return k


def h_valuation(a: CycloNum) -> Union[int, float]:
    """The h-adic valuation; ``math.inf`` for zero."""
    if a.is_zero():
        return math.inf
    d = math.lcm(*(c.denominator for c in a.coeffs))
    if d == 1:
        return _integral_valuation(a)
    return _integral_valuation(a * d) - _integral_valuation(CycloNum.const(a.p, d))


def compute_unit_w(p: int) -> CycloNum:
    """The unit ``w`` with ``h^(p-1) = w * p``; checked to be a unit congruent to -1."""
    _check_prime(p)
    w = CycloNum.h(p) ** (p - 1) / p
    if not w.is_integral():
        raise ArithmeticError(f"h^{p - 1}/{p} is not integral")
    if not w.is_unit():
        raise ArithmeticError(f"h^{p - 1}/{p} is not a unit")
    if reduce_mod_h(w).value != p - 1:
        raise ArithmeticError(f"h^{p - 1}/{p} is not congruent to -1 mod h")
    return w
