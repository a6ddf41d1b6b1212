"""Exact multivariate polynomials and rational functions over Q.

Polynomials are sparse maps from exponent vectors to nonzero ``Fraction``
coefficients, with the variable list kept sorted.  Rational functions are
unreduced ``num/den`` pairs; equality is decided by cross-multiplication,
so no multivariate gcd is ever needed.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from numbers import Rational as _RationalABC
from typing import Callable, Iterable, Mapping, Sequence, Union

__all__ = [
    "MultiPoly",
    "RatFunc",
    "ZeroDenominatorError",
    "var",
    "variables",
    "const",
    "ratfunc_eq",
    "elementary_symmetric",
    "substitute",
    "evaluate",
]


class ZeroDenominatorError(ZeroDivisionError):
    """A denominator vanished, identically or at a point."""


Exponents = tuple[int, ...]


def _is_scalar(x) -> bool:
    return isinstance(x, _RationalABC)


class MultiPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping[Exponents, object] | None = None):
        vs = tuple(variables)
        if list(vs) != sorted(set(vs)):
            # reorder into the canonical sorted layout
            order = sorted(set(vs))
            idx = [order.index(v) for v in vs]
            moved: dict[Exponents, Fraction] = {}
            for e, c in (terms or {}).items():
                ne = [0] * len(order)
                for i, k in zip(idx, e):
                    ne[i] += k
                moved[tuple(ne)] = moved.get(tuple(ne), Fraction(0)) + Fraction(c)
            vs, terms = tuple(order), moved
        self.variables: tuple[str, ...] = vs
        self.terms: dict[Exponents, Fraction] = {}
        for e, c in (terms or {}).items():
            if len(e) != len(vs):
                raise ValueError(f"exponent {e} does not match variables {vs}")
            c = Fraction(c)
            if c:
                self.terms[tuple(e)] = c

    # construction helpers ----------------------------------------------

    @classmethod
    def constant(cls, c) -> "MultiPoly":
        return cls((), {(): c})

    def embed(self, variables: Sequence[str]) -> "MultiPoly":
        """Same polynomial over a (sorted) superset of variables."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        pos = [variables.index(v) for v in self.variables]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for i, k in zip(pos, e):
                ne[i] = k
            out[tuple(ne)] = c
        return MultiPoly(variables, out)

    def _align(self, other: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        if self.variables == other.variables:
            return self, other
        vs = tuple(sorted(set(self.variables) | set(other.variables)))
        return self.embed(vs), other.embed(vs)

    @staticmethod
    def _lift(x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        if _is_scalar(x):
            return MultiPoly.constant(x)
        return NotImplemented

    # arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._align(o)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            c = Fraction(other)
            return MultiPoly(self.variables, {e: v * c for e, v in self.terms.items()})
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._align(o)
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial; use RatFunc")
        result = MultiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if _is_scalar(other):
            if other == 0:
                raise ZeroDenominatorError("division by zero")
            return self * (1 / Fraction(other))
        return RatFunc(self) / other

    def __rtruediv__(self, other):
        return RatFunc(other) / RatFunc(self)

    # comparison --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, RatFunc) else NotImplemented
        if o is NotImplemented:
            return NotImplemented
        return (self - o).is_zero()

    def __hash__(self):
        return hash(frozenset(self.trimmed().terms.items()))

    # inspection --------------------------------------------------------

    def trimmed(self) -> "MultiPoly":
        """Drop variables that occur in no term."""
        used = [i for i in range(len(self.variables)) if any(e[i] for e in self.terms)]
        if len(used) == len(self.variables):
            return self
        return MultiPoly(
            [self.variables[i] for i in used],
            {tuple(e[i] for i in used): c for e, c in self.terms.items()},
        )

    def free_variables(self) -> set[str]:
        return set(self.trimmed().variables)

    def degree_in(self, name: str) -> int:
        if name not in self.variables:
            return 0
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def constant_value(self) -> Fraction | None:
        """The value if the polynomial is constant, else None."""
        if not self.terms:
            return Fraction(0)
        t = self.trimmed()
        if t.variables:
            return None
        return t.terms[()]

    def leading(self) -> tuple[Exponents, Fraction]:
        """Leading term in graded-lexicographic order."""
        e = max(self.terms, key=lambda e: (sum(e), e))
        return e, self.terms[e]

    def coefficients_in(self, name: str) -> dict[int, "MultiPoly"]:
        """Split as a polynomial in ``name`` with coefficients in the rest."""
        if name not in self.variables:
            return {0: self}
        i = self.variables.index(name)
        rest = self.variables[:i] + self.variables[i + 1 :]
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            out.setdefault(e[i], {})[e[:i] + e[i + 1 :]] = c
        return {k: MultiPoly(rest, t) for k, t in sorted(out.items())}

    def monomial_content(self) -> Exponents:
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(min(col) for col in zip(*self.terms))

    def __repr__(self):
        return f"MultiPoly({self.variables}, {self.terms})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-k for k in e))):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def var(name: str) -> MultiPoly:
    return MultiPoly((name,), {(1,): 1})


def variables(*names: str) -> tuple[MultiPoly, ...]:
    return tuple(var(n) for n in names)


def const(c) -> MultiPoly:
    return MultiPoly.constant(c)


# --------------------------------------------------------------------------


class RatFunc:
    """A quotient ``num/den`` of polynomials, normalized so that the leading
    coefficient of ``den`` is positive.  Not gcd-reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise ZeroDenominatorError("denominator is identically zero")
        if num.is_zero():
            num, den = MultiPoly.constant(0), MultiPoly.constant(1)
        else:
            num, den = _cancel_monomial(num, den)
            c = den.constant_value()
            if c is not None:
                num, den = num * (1 / c), MultiPoly.constant(1)
            elif den.leading()[1] < 0:
                num, den = -num, -den
        self.num = num
        self.den = den

    @staticmethod
    def _lift(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, MultiPoly) or _is_scalar(x):
            return RatFunc(x)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.num and not o.num.is_zero():
            return RatFunc(self.num, o.den)
        if o.den == self.num and not self.num.is_zero():
            return RatFunc(o.num, self.den)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            raise ZeroDenominatorError("division by the zero rational function")
        if self.den == o.den:
            return RatFunc(self.num, o.num)
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            if self.num.is_zero():
                raise ZeroDenominatorError("negative power of zero")
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num**n, self.den**n)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ratfunc_eq(self, o)

    __hash__ = None  # equality is semantic; no canonical hash without gcd

    def free_variables(self) -> set[str]:
        return self.num.free_variables() | self.den.free_variables()

    def is_polynomial(self) -> bool:
        return self.den.constant_value() is not None

    def __call__(self, **values):
        return evaluate(self, values)

    def __repr__(self):
        return f"RatFunc({self.num!s}, {self.den!s})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _as_poly(x) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    if _is_scalar(x):
        return MultiPoly.constant(x)
    if isinstance(x, str):
        return var(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial")


def _cancel_monomial(num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    num, den = num._align(den)
    common = tuple(min(a, b) for a, b in zip(num.monomial_content(), den.monomial_content()))
    if not any(common):
        return num, den

    def shift(p):
        return MultiPoly(
            p.variables, {tuple(k - m for k, m in zip(e, common)): c for e, c in p.terms.items()}
        )

    return shift(num), shift(den)


def _as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, str):
        return RatFunc(var(x))
    return RatFunc(x)


# --------------------------------------------------------------------------
# operations
# --------------------------------------------------------------------------


def ratfunc_eq(f, g) -> bool:
    """Equality as rational functions: ``f.num*g.den - g.num*f.den == 0``."""
    f, g = _as_ratfunc(f), _as_ratfunc(g)
    return (f.num * g.den - g.num * f.den).is_zero()


def elementary_symmetric(k: int, names: Sequence[str]) -> MultiPoly:
    n = len(names)
    if not 0 <= k <= n:
        raise ValueError(f"sigma_{k} undefined in {n} variables")
    vs = tuple(sorted(names))
    pos = [vs.index(v) for v in names]
    terms = {}
    for combo in combinations(pos, k):
        e = [0] * n
        for i in combo:
            e[i] = 1
        terms[tuple(e)] = 1
    return MultiPoly(vs, terms)


def _homogenize(poly: MultiPoly, bindings: dict[str, RatFunc], degrees: dict[str, int]) -> MultiPoly:
    """``poly`` with each bound x replaced by N_x/D_x, times prod D_x^degrees[x]."""
    bound = [v for v in poly.variables if v in bindings]
    if not bound:
        out = poly
        for v, d in degrees.items():
            out = out * bindings[v].den ** d
        return out
    free_vars = [v for v in poly.variables if v not in bindings]
    free_idx = [poly.variables.index(v) for v in free_vars]
    bound_idx = [poly.variables.index(v) for v in bound]
    num_pows: dict[tuple[str, int], MultiPoly] = {}
    den_pows: dict[tuple[str, int], MultiPoly] = {}

    def npow(v, k):
        if (v, k) not in num_pows:
            num_pows[(v, k)] = bindings[v].num ** k
        return num_pows[(v, k)]

    def dpow(v, k):
        if (v, k) not in den_pows:
            den_pows[(v, k)] = bindings[v].den ** k
        return den_pows[(v, k)]

    total = MultiPoly.constant(0)
    for e, c in poly.terms.items():
        term = MultiPoly(free_vars, {tuple(e[i] for i in free_idx): c})
        for v, i in zip(bound, bound_idx):
            term = term * npow(v, e[i]) * dpow(v, degrees[v] - e[i])
        total = total + term
    # bound variables that are absent from this polynomial still carry D^deg
    for v, d in degrees.items():
        if v not in bound and d:
            total = total * dpow(v, d)
    return total


def substitute(f, bindings: Mapping[str, object]) -> RatFunc:
    """Simultaneously replace variables by rational functions (or scalars)."""
    f = _as_ratfunc(f)
    bs = {k: _as_ratfunc(v) for k, v in bindings.items()}
    bs = {k: v for k, v in bs.items() if k in f.num.variables or k in f.den.variables}
    if not bs:
        return f
    dn = {v: f.num.degree_in(v) for v in bs}
    dd = {v: f.den.degree_in(v) for v in bs}
    # N(x) * prod D^dd  /  Q(x) * prod D^dn, after clearing prod D^max
    top = {v: max(dn[v], dd[v]) for v in bs}
    num = _homogenize(f.num, bs, top)
    den = _homogenize(f.den, bs, top)
    if den.is_zero():
        raise ZeroDenominatorError("denominator vanishes identically after substitution")
    return RatFunc(num, den)


# --------------------------------------------------------------------------
# pointwise evaluation over an arbitrary scalar ring
# --------------------------------------------------------------------------


def _lifter(values: Iterable) -> Callable[[Fraction], object]:
    for x in values:
        lift = getattr(type(x), "_lift_rational", None)
        if lift is not None:
            return lambda c, x=x: lift(x, c)
        if isinstance(x, float):
            return float
        if isinstance(x, complex):
            return complex
    return lambda c: c


def _eval_poly(poly: MultiPoly, values: Mapping[str, object], lift) -> object:
    missing = [v for v in poly.trimmed().variables if v not in values]
    if missing:
        raise KeyError(f"no value for {missing}")
    total = lift(Fraction(0))
    for e, c in poly.terms.items():
        term = lift(c)
        for v, k in zip(poly.variables, e):
            if k:
                term = term * values[v] ** k
        total = total + term
    return total


def evaluate(f, values: Mapping[str, object]):
    """Value of ``f`` at a point; scalars may be Fraction, float, FpElem, CycloNum."""
    f = _as_ratfunc(f)
    lift = _lifter(values.values())
    den = _eval_poly(f.den, values, lift)
    if den == 0:
        raise ZeroDenominatorError(f"denominator {f.den} vanishes at {dict(values)}")
    num = _eval_poly(f.num, values, lift)
    if f.den.constant_value() == 1:
        return num
    return num / den


Scalar = Union[Fraction, int, float]
