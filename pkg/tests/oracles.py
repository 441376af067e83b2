"""Reference implementations that share no code with the package kernels.

* ``DictPoly``: sparse Laurent polynomials as {exponent tuple: Fraction}.
  Rational functions are (num, den) pairs compared by cross-multiplication,
  so no gcd is involved.
* ``univariate_reduce``: Euclid over Q for one-variable canonical forms.
* Numeric actions of q-difference operators and torus elements on test
  functions at rational points, used to check normal ordering against
  sequential application.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping

NV = 5  # s, u, X, v1, v2
S, U, X, V1, V2 = range(NV)


class DictPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        self.terms = {tuple(e): Fraction(c) for e, c in (terms or {}).items() if Fraction(c) != 0}

    @classmethod
    def const(cls, c) -> "DictPoly":
        return cls({(0,) * NV: c})

    def __add__(self, other: "DictPoly") -> "DictPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return DictPoly(out)

    def __neg__(self) -> "DictPoly":
        return DictPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "DictPoly") -> "DictPoly":
        return self + (-other)

    def __mul__(self, other: "DictPoly") -> "DictPoly":
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return DictPoly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, DictPoly) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, point: Mapping[int, Fraction]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    t *= Fraction(point[i]) ** k
            total += t
        return total


def frac_equal(n1: DictPoly, d1: DictPoly, n2: DictPoly, d2: DictPoly) -> bool:
    """n1/d1 == n2/d2 by cross-multiplication."""
    return n1 * d2 == n2 * d1


# univariate Euclid ----------------------------------------------------------

def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
    return q, a


def univariate_gcd(a: list, b: list) -> list[Fraction]:
    """Monic gcd of dense coefficient lists (lowest degree first)."""
    a, b = _trim([Fraction(x) for x in a]), _trim([Fraction(x) for x in b])
    while b:
        _, r = _divmod(a, b)
        a, b = b, _trim(r)
    lead = a[-1]
    return [x / lead for x in a]


def univariate_reduce(num: list, den: list) -> tuple[list[Fraction], list[Fraction]]:
    """Cancel the gcd and make the denominator monic."""
    g = univariate_gcd(num, den)
    n, r1 = _divmod([Fraction(x) for x in num], g)
    d, r2 = _divmod([Fraction(x) for x in den], g)
    assert not _trim(r1) and not _trim(r2)
    lead = _trim(d)[-1]
    return _trim([x / lead for x in n]), [x / lead for x in d]


# numeric actions ------------------------------------------------------------

def apply_operator_numeric(op, f: Callable[[Fraction], Fraction], x: Fraction,
                           s_val: Fraction, u_val: Fraction) -> Fraction:
    """(sum_k c_k w^k) f evaluated at X = x, where (w f)(X) = f(s^2 X)."""
    total = Fraction(0)
    for k, c in op.terms.items():
        total += c.evaluate({S: s_val, U: u_val, X: x}) * f(x * s_val ** (2 * k))
    return total


def apply_torus_numeric(a, g: Callable[[Fraction, Fraction], Fraction], v1: Fraction, v2: Fraction,
                        s_val: Fraction, u_val: Fraction) -> Fraction:
    """(sum c_l D1^l1 D2^l2) g at (v1, v2), where D_r rescales v_r by s^2."""
    total = Fraction(0)
    for (l1, l2), c in a.terms.items():
        coeff = c.evaluate({S: s_val, U: u_val, V1: v1, V2: v2})
        total += coeff * g(v1 * s_val ** (2 * l1), v2 * s_val ** (2 * l2))
    return total
