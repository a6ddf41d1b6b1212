"""2x2 matrix realization of the Lorentz law.

``A_h(u) = [[1, -h^2 u], [-u, 1]]`` satisfies ``A(u) A(v) = b(u, v) A(u ⊕ v)``
with cocycle ``b = 1 + h^2 u v``.  The normalized matrices ``A / sqrt(det A)``
are only ever handled in squared, denominator-cleared form here; the real
square roots live in :mod:`kummer_lorentz.relativity`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .report import Report
from .symbolic import RatFunc, elementary_symmetric, ratfunc_eq, substitute, var

__all__ = [
    "Mat2",
    "MinkowskiForm",
    "mat_A",
    "det_A",
    "cocycle",
    "minkowski_dot",
    "dual_minkowski_dot",
    "verify_cocycle_identities",
    "conjugate_to_diagonal",
    "conjugator",
    "matrix_report",
]


class Mat2:
    """A 2x2 matrix over any commutative scalar type supporting + - * /."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("Mat2 needs a 2x2 array")
        self.rows = (tuple(rows[0]), tuple(rows[1]))

    @classmethod
    def identity(cls, one=1) -> "Mat2":
        return cls([[one, 0 * one], [0 * one, one]])

    @classmethod
    def diag(cls, a, d) -> "Mat2":
        return cls([[a, 0 * a], [0 * d, d]])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def map(self, fn: Callable) -> "Mat2":
        return Mat2([[fn(x) for x in r] for r in self.rows])

    def entries(self) -> list:
        return [*self.rows[0], *self.rows[1]]

    def __matmul__(self, other: "Mat2") -> "Mat2":
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return Mat2([[a * e + b * g, a * f + b * h], [c * e + d * g, c * f + d * h]])

    def __mul__(self, s) -> "Mat2":
        return self.map(lambda x: x * s)

    def __rmul__(self, s) -> "Mat2":
        return self.map(lambda x: s * x)

    def __truediv__(self, s) -> "Mat2":
        return self.map(lambda x: x / s)

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Mat2":
        return self.map(lambda x: -x)

    def det(self):
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def trace(self):
        return self.rows[0][0] + self.rows[1][1]

    def transpose(self) -> "Mat2":
        (a, b), (c, d) = self.rows
        return Mat2([[a, c], [b, d]])

    def inverse(self) -> "Mat2":
        det = self.det()
        if det == 0:
            raise ZeroDivisionError("singular matrix")
        (a, b), (c, d) = self.rows
        return Mat2([[d / det, -b / det], [-c / det, a / det]])

    def column(self, j: int) -> tuple:
        return (self.rows[0][j], self.rows[1][j])

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    __hash__ = None

    def max_abs_diff(self, other: "Mat2") -> float:
        return max(abs(x - y) for x, y in zip(self.entries(), other.entries()))

    def __repr__(self):
        return f"Mat2({[list(r) for r in self.rows]})"

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "]"


def _sym(x, name: str):
    if x is None:
        return RatFunc(var(name))
    if isinstance(x, str):
        return RatFunc(var(x))
    return x


def mat_A(h=None, u=None) -> Mat2:
    """``[[1, -h^2 u], [-u, 1]]``; ``None`` means the symbol of that name."""
    h, u = _sym(h, "h"), _sym(u, "u")
    one = 1 + 0 * u
    return Mat2([[one, -(h * h) * u], [-u, one]])


def det_A(h=None, u=None):
    h, u = _sym(h, "h"), _sym(u, "u")
    return 1 - h * h * u * u


def cocycle(h=None, u=None, v=None):
    """``b(u, v) = 1 + h^2 u v``."""
    h, u, v = _sym(h, "h"), _sym(u, "u"), _sym(v, "v")
    return 1 + h * h * u * v


@dataclass(frozen=True)
class MinkowskiForm:
    h: object = None

    def __call__(self, x, y):
        return minkowski_dot(self, x, y)


def minkowski_dot(form: MinkowskiForm, x: Sequence, y: Sequence):
    """``((a, b), (a', b'))_h = h^2 a a' - b b'``."""
    h = _sym(form.h, "h")
    (a, b), (a2, b2) = x, y
    return h * h * a * a2 - b * b2


def dual_minkowski_dot(form: MinkowskiForm, x: Sequence, y: Sequence):
    """``a a' - h^2 b b'``, the form preserved (up to scale) by the transposes."""
    h = _sym(form.h, "h")
    (a, b), (a2, b2) = x, y
    return a * a2 - h * h * b * b2


def _mat_eq(m: Mat2, n: Mat2) -> bool:
    return all(ratfunc_eq(x, y) for x, y in zip(m.entries(), n.entries()))


def verify_cocycle_identities(h=None, u=None, v=None) -> Report:
    """Cocycle, coboundary and normalized-product identities as exact
    rational-function identities (symbolic by default)."""
    h, u, v = _sym(h, "h"), _sym(u, "u"), _sym(v, "v")
    rep = Report("cocycle")
    rep.anchor("matrix product cocycle", "determinant coboundary", "normalized matrix product")
    w = (u + v) / (1 + h * h * u * v)
    b = cocycle(h, u, v)
    Au, Av, Aw = mat_A(h, u), mat_A(h, v), mat_A(h, w)
    au, av, aw = det_A(h, u), det_A(h, v), det_A(h, w)
    prod = Au @ Av

    rep.add("product", "A(u)A(v) = b(u,v)·A(u ⊕ v)", _mat_eq(prod, Aw * b))
    rep.add("coboundary", "a(u)a(v) = b(u,v)^2·a(u ⊕ v)", ratfunc_eq(au * av, b * b * aw))
    sigma = {k: substitute(elementary_symmetric(k, ["u", "v"]), {"u": u, "v": v}) for k in (0, 2)}
    rep.add("cocycle_sigma", "b(u,v) = σ_0 + h^2·σ_2", ratfunc_eq(b, sigma[0] + h * h * sigma[2]))
    # B(u)B(v) = B(u ⊕ v) with B = A / sqrt(a), squared entrywise to clear roots
    normalized = all(
        ratfunc_eq(x * x * aw, au * av * y * y) for x, y in zip(prod.entries(), Aw.entries())
    )
    rep.add(
        "normalized_product",
        "(A(u)A(v))_ij^2 · a(u ⊕ v) = a(u)a(v) · A(u ⊕ v)_ij^2",
        normalized,
        "square-root-free form of B(u)B(v) = B(u ⊕ v)",
    )
    return rep


def conjugator(h) -> Mat2:
    h = _sym(h, "h")
    one = 1 + 0 * h
    return Mat2([[-h, h], [one, one]])


def conjugate_to_diagonal(h=None, u=None) -> tuple[Mat2, Mat2]:
    """Return ``(C_h, C_h^-1 A_h(u) C_h)`` and check the latter is
    ``diag(1 + h u, 1 - h u)``.  Needs ``2h`` invertible."""
    h, u = _sym(h, "h"), _sym(u, "u")
    C = conjugator(h)
    if C.det() == 0:
        raise ValueError("2h is not invertible: C_h is singular (horospheric degeneration)")
    D = C.inverse() @ mat_A(h, u) @ C
    expected = Mat2.diag(1 + h * u, 1 - h * u)
    if not all(_scalar_eq(x, y) for x, y in zip(D.entries(), expected.entries())):
        raise ArithmeticError(f"conjugation did not diagonalize: {D}")
    return C, D


def _scalar_eq(x, y) -> bool:
    if isinstance(x, RatFunc) or isinstance(y, RatFunc):
        return ratfunc_eq(x, y)
    return x == y


def matrix_report() -> Report:
    rep = Report("matrices")
    rep.anchor("pseudo-orthogonal matrices A_h(u)", "conjugation to the diagonal torus")
    h, u, v = _sym(None, "h"), _sym(None, "u"), _sym(None, "v")
    A = mat_A()
    rep.add("det", "det A_h(u) = 1 - h^2 u^2", ratfunc_eq(A.det(), 1 - h * h * u * u))
    form = MinkowskiForm()
    rep.add("rows_orthogonal", "rows of A_h(u) are ( , )_h-orthogonal", ratfunc_eq(form(A.rows[0], A.rows[1]), 0))
    # A G A^T = a(u) G, so columns are orthogonal for the dual form diag(1, -h^2)
    rep.add(
        "columns_orthogonal",
        "columns of A_h(u) are orthogonal for the dual form aa' - h^2 bb'",
        ratfunc_eq(dual_minkowski_dot(form, A.column(0), A.column(1)), 0),
    )
    rep.extend(verify_cocycle_identities())
    rep.add(
        "det_multiplicative",
        "det(A(u)A(v)) = det A(u) · det A(v)",
        ratfunc_eq((mat_A(h, u) @ mat_A(h, v)).det(), det_A(h, u) * det_A(h, v)),
    )
    eig_ok = True
    for sign in (1, -1):
        vec = (-sign * h, 1 + 0 * h)
        Av = (A[0, 0] * vec[0] + A[0, 1] * vec[1], A[1, 0] * vec[0] + A[1, 1] * vec[1])
        lam = 1 + sign * h * u
        eig_ok &= all(ratfunc_eq(x, lam * y) for x, y in zip(Av, vec))
    rep.add("eigenvectors", "A_h(u)·v_± = (1 ± hu)·v_± with v_± = (∓h, 1)", eig_ok)
    try:
        _, D = conjugate_to_diagonal()
        rep.add("conjugation", "C_h^-1 A_h(u) C_h = diag(1 + hu, 1 - hu)", True, f"D = {D}")
    except ArithmeticError as exc:
        rep.add("conjugation", "C_h^-1 A_h(u) C_h = diag(1 + hu, 1 - hu)", False, str(exc))
    rep.add(
        "unipotent_h0",
        "A_0(u)A_0(v) = A_0(u + v)",
        _mat_eq(mat_A(0, u) @ mat_A(0, v), mat_A(0, u + v)),
    )
    return rep
