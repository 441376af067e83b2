"""q-difference operators  sum_k f_k(X) * w^k  with  (w f)(X) = f(qX).

Coefficients are full rational functions of X (``RatFunc`` involving X),
since V(X) has the denominator X - X^{-1}.  Whether an operator maps
Laurent polynomials to Laurent polynomials is a checked property
(`preserves_symmetric`), not a type invariant.
"""
from __future__ import annotations

from typing import Mapping

from .scalars import ONE, ZERO, RatFunc, S, U, X, as_ratfunc

# An alias for readability: coefficients of operators are rational in X.
XRat = RatFunc


def shift_x(f: RatFunc, k: int) -> RatFunc:
    """f(X) -> f(q^k X)."""
    if k == 0:
        return f
    return f.scale_var(X, (2 * k, 0, 0, 0, 0))


def invert_x(f: RatFunc) -> RatFunc:
    """f(X) -> f(X^{-1})."""
    if not f.involves(X):
        return f
    return f.transform(lambda e: (e[0], e[1], -e[2], e[3], e[4]))


def x_power(n: int) -> RatFunc:
    return RatFunc.var(X, n)


_x = RatFunc.var(X)
_u = RatFunc.var(U)

# V(X) = (t^{1/2} X - t^{-1/2} X^{-1}) / (X - X^{-1})
V = (_u * _x - _u ** -1 * _x ** -1) / (_x - _x ** -1)
V_INV = invert_x(V)


class QDiffOp:
    """Immutable finite sum of rational-function coefficients times shift powers."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, RatFunc] | None = None):
        clean = {}
        for k, c in (terms or {}).items():
            c = as_ratfunc(c)
            if not c.is_zero():
                clean[int(k)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def identity(cls) -> "QDiffOp":
        return cls({0: ONE})

    @classmethod
    def shift(cls, k: int = 1) -> "QDiffOp":
        """The operator w^k."""
        return cls({k: ONE})

    @classmethod
    def mul_by(cls, f) -> "QDiffOp":
        return cls({0: as_ratfunc(f)})

    def coefficient(self, k: int) -> RatFunc:
        return self.terms.get(k, ZERO)

    def shifts(self) -> list[int]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # algebra ----------------------------------------------------------

    def __add__(self, other: "QDiffOp") -> "QDiffOp":
        if not isinstance(other, QDiffOp):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return QDiffOp(out)

    def __neg__(self) -> "QDiffOp":
        return QDiffOp({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "QDiffOp") -> "QDiffOp":
        if not isinstance(other, QDiffOp):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "QDiffOp":
        """Left multiplication by a function of X (or a scalar)."""
        c = as_ratfunc(c)
        if c.is_zero():
            return QDiffOp()
        return QDiffOp({k: c * f for k, f in self.terms.items()})

    def __rmul__(self, c) -> "QDiffOp":
        if isinstance(c, QDiffOp):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, other) -> "QDiffOp":
        if isinstance(other, QDiffOp):
            return op_compose(self, other)
        return op_compose(self, QDiffOp.mul_by(other))

    def __pow__(self, n: int) -> "QDiffOp":
        if n < 0:
            raise ValueError("negative powers of operators are not defined in general")
        out = QDiffOp.identity()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, QDiffOp):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items())))
        return self._hash

    def __call__(self, f) -> RatFunc:
        return op_apply(self, f)

    def __repr__(self) -> str:
        if not self.terms:
            return "QDiffOp(0)"
        return "QDiffOp(" + " + ".join(f"[{c}]*w^{k}" for k, c in sorted(self.terms.items())) + ")"


def op_apply(op: QDiffOp, f) -> RatFunc:
    """sum_k f_k(X) * f(q^k X)."""
    f = as_ratfunc(f)
    out = ZERO
    for k, c in op.terms.items():
        out = out + c * shift_x(f, k)
    return out


def op_compose(a: QDiffOp, b: QDiffOp) -> QDiffOp:
    """(f w^j)(g w^k) = f(X) g(q^j X) w^{j+k}, extended bilinearly."""
    out: dict[int, RatFunc] = {}
    shifted: dict[tuple[int, int], RatFunc] = {}
    for j, f in a.terms.items():
        for k, g in b.terms.items():
            key = (j, k)
            if key not in shifted:
                shifted[key] = shift_x(g, j)
            term = f * shifted[key]
            n = j + k
            out[n] = out[n] + term if n in out else term
    return QDiffOp(out)


def op_linear(a: QDiffOp, b: QDiffOp, c1=1, c2=1) -> QDiffOp:
    return a.scale(c1) + b.scale(c2)


def op_equal(a: QDiffOp, b: QDiffOp) -> bool:
    return a == b


def symmetric_basis(n: int) -> RatFunc:
    """p_n = X^n + X^{-n}."""
    return x_power(n) + x_power(-n)


def is_symmetric_laurent(f: RatFunc) -> bool:
    """Laurent in X (scalar denominators allowed) and invariant under X -> 1/X."""
    if f.den.degrees()[X] > 0:
        return False
    return invert_x(f) == f


def preserves_symmetric(op: QDiffOp, degree_bound: int) -> bool:
    """Does ``op`` map each p_n, 0 <= n <= degree_bound, to a symmetric Laurent polynomial?"""
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    return all(is_symmetric_laurent(op_apply(op, symmetric_basis(n)))
               for n in range(degree_bound + 1))


def op_at_q1(op: QDiffOp) -> QDiffOp:
    """Classical limit q^{1/2} -> 1: the shift acts trivially and the operator
    collapses to multiplication by sum_k f_k(X)|_{s=1}."""
    total = ZERO
    for c in op.terms.values():
        total = total + c.subs_values({S: 1})
    return QDiffOp.mul_by(total)
