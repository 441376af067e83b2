"""Exact rational functions with integer-exponent (Laurent) monomial shifts.

Every quantity in the package lives in the single field Q(s, u, X, v1, v2):

    s  = q^{1/2}        u  = t^{1/2}
    X  = the variable of the polynomial representation
    v1 = w1^{1/2}       v2 = w2^{1/2}

A `RatFunc` restricted to ``s`` and ``u`` is a scalar of the coefficient
field; with ``X`` it is a coefficient of a q-difference operator; with
``v1, v2`` it is a coefficient of the quantum torus.

Canonical form of a nonzero element::

    x = m * num / den

with ``m`` a Laurent monomial (``shift``), ``num`` and ``den`` coprime
polynomials, neither divisible by a variable, and ``den`` monic for the
graded-lex order on (s, u, X, v1, v2).  This representative is unique, so
equality and hashing are structural.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable, Mapping

import flint

VARS = ("s", "u", "X", "v1", "v2")
S, U, X, V1, V2 = range(len(VARS))
NVARS = len(VARS)

_CTX = flint.fmpq_mpoly_ctx.get(VARS, "deglex")
_ZERO_EXP = (0,) * NVARS
_POLY_ONE = _CTX.from_dict({_ZERO_EXP: 1})
_POLY_ZERO = _CTX.from_dict({})

ExpMap = Callable[[tuple], tuple]


class PoleError(ZeroDivisionError):
    """A denominator vanishes at a specialization point."""


def _fmpq(c) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    return flint.fmpq(c)


def _to_fraction(c: flint.fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _mono(exps) -> flint.fmpq_mpoly:
    return _CTX.from_dict({tuple(exps): 1})


def _strip_monomial(p):
    """Split ``p = m * p'`` with ``p'`` not divisible by any variable."""
    mc = p.term_content()
    e = mc.monoms()[0]
    if any(e):
        return p / _mono(e), e
    return p, _ZERO_EXP


class RatFunc:
    """Immutable element of Q(s, u, X, v1, v2) in canonical form."""

    __slots__ = ("num", "den", "shift", "_hash")

    # construction -----------------------------------------------------

    @classmethod
    def _raw(cls, num, den, shift) -> "RatFunc":
        self = object.__new__(cls)
        self.num = num
        self.den = den
        self.shift = shift
        self._hash = None
        return self

    @classmethod
    def _canon(cls, num, den, shift, reduce: bool = True) -> "RatFunc":
        if num.is_zero():
            return ZERO
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce and not den.is_constant():
            g = num.gcd(den)
            if not g.is_one():
                num = num / g
                den = den / g
        num, en = _strip_monomial(num)
        den, ed = _strip_monomial(den)
        shift = tuple(a + b - c for a, b, c in zip(shift, en, ed))
        lc = den.leading_coefficient()
        if lc != 1:
            num = num / lc
            den = den / lc
        return cls._raw(num, den, shift)

    @classmethod
    def const(cls, c) -> "RatFunc":
        c = _fmpq(c)
        if c == 0:
            return ZERO
        return cls._raw(_CTX.from_dict({_ZERO_EXP: c}), _POLY_ONE, _ZERO_EXP)

    @classmethod
    def monomial(cls, exps, coeff=1) -> "RatFunc":
        exps = tuple(exps)
        if len(exps) != NVARS:
            exps = exps + (0,) * (NVARS - len(exps))
        c = _fmpq(coeff)
        if c == 0:
            return ZERO
        return cls._raw(_CTX.from_dict({_ZERO_EXP: c}), _POLY_ONE, exps)

    @classmethod
    def var(cls, name_or_index, power: int = 1) -> "RatFunc":
        i = VARS.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        e = [0] * NVARS
        e[i] = power
        return cls.monomial(e)

    @classmethod
    def from_terms(cls, terms: Mapping[tuple, object]) -> "RatFunc":
        """Laurent polynomial from ``{exponent tuple: rational coefficient}``."""
        terms = {tuple(e) + (0,) * (NVARS - len(e)): _fmpq(c) for e, c in terms.items()}
        terms = {e: c for e, c in terms.items() if c != 0}
        if not terms:
            return ZERO
        mn = tuple(min(e[i] for e in terms) for i in range(NVARS))
        num = _CTX.from_dict({tuple(a - b for a, b in zip(e, mn)): c for e, c in terms.items()})
        return cls._canon(num, _POLY_ONE, mn, reduce=False)

    @classmethod
    def from_poly(cls, num, den=None) -> "RatFunc":
        """Wrap raw polynomials of the underlying flint context."""
        return cls._canon(num, _POLY_ONE if den is None else den, _ZERO_EXP)

    # predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        """True if the denominator is 1 (a Laurent polynomial)."""
        return self.den.is_one()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one() and not any(self.shift)

    def involves(self, var: int) -> bool:
        if self.is_zero():
            return False
        return bool(self.shift[var]) or self.num.degrees()[var] > 0 or self.den.degrees()[var] > 0

    def variables(self) -> set[int]:
        return {i for i in range(NVARS) if self.involves(i)}

    def homogeneous_degree(self, vars_: Iterable[int]) -> int | None:
        """Total degree in ``vars_`` if num and den are both homogeneous in them, else None."""
        vars_ = tuple(vars_)
        if self.is_zero():
            return 0

        def hdeg(p):
            ds = {sum(e[i] for i in vars_) for e in p.monoms()}
            return ds.pop() if len(ds) == 1 else None

        dn, dd = hdeg(self.num), hdeg(self.den)
        if dn is None or dd is None:
            return None
        return dn - dd + sum(self.shift[i] for i in vars_)

    # arithmetic -------------------------------------------------------

    def __neg__(self) -> "RatFunc":
        if self.is_zero():
            return self
        return RatFunc._raw(-self.num, self.den, self.shift)

    def __add__(self, other) -> "RatFunc":
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        m = tuple(min(a, b) for a, b in zip(self.shift, other.shift))
        na = self.num
        if self.shift != m:
            na = na * _mono(tuple(a - b for a, b in zip(self.shift, m)))
        nb = other.num
        if other.shift != m:
            nb = nb * _mono(tuple(a - b for a, b in zip(other.shift, m)))
        if self.den == other.den:
            return RatFunc._canon(na + nb, self.den, m)
        g = self.den.gcd(other.den)
        if g.is_one():
            num = na * other.den + nb * self.den
            return RatFunc._canon(num, self.den * other.den, m, reduce=False)
        db = other.den / g
        num = na * db + nb * (self.den / g)
        return RatFunc._canon(num, self.den * db, m)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return as_ratfunc(other) + (-self)

    def __mul__(self, other) -> "RatFunc":
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        shift = tuple(a + b for a, b in zip(self.shift, other.shift))
        an, ad, bn, bd = self.num, self.den, other.num, other.den
        if not bd.is_one():
            g = an.gcd(bd)
            if not g.is_one():
                an, bd = an / g, bd / g
        if not ad.is_one():
            g = bn.gcd(ad)
            if not g.is_one():
                bn, ad = bn / g, ad / g
        # products of monic, monomial-free, coprime parts stay canonical
        return RatFunc._raw(an * bn, ad * bd, shift)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        lc = self.num.leading_coefficient()
        return RatFunc._raw(self.den / lc, self.num / lc, tuple(-a for a in self.shift))

    def __truediv__(self, other) -> "RatFunc":
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return as_ratfunc(other) * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        if self.is_zero():
            return ZERO
        return RatFunc._raw(self.num ** n, self.den ** n, tuple(a * n for a in self.shift))

    # equality ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.shift == other.shift and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((
                self.shift,
                tuple(sorted(self.num.to_dict().items())),
                tuple(sorted(self.den.to_dict().items())),
            ))
        return self._hash

    # substitutions ----------------------------------------------------

    def transform(self, exp_map: ExpMap, sign: Callable[[tuple], int] | None = None,
                  injective: bool = True) -> "RatFunc":
        """Apply a monomial substitution termwise.

        ``exp_map`` sends an exponent vector to a new one and must be additive
        (it describes substitutions like X -> q X or X -> 1/X); ``sign`` gives
        the +-1 picked up by a monomial (for v1 -> -v1).  Non-injective maps,
        such as v2 -> 1, need ``injective=False`` so that the gcd is recomputed.
        """
        if self.is_zero():
            return self
        num, sn = _map_poly(self.num, exp_map, sign)
        den, sd = _map_poly(self.den, exp_map, sign)
        shift = exp_map(self.shift)
        if sign is not None and sign(self.shift) < 0:
            num = -num
        shift = tuple(a + b - c for a, b, c in zip(shift, sn, sd))
        return RatFunc._canon(num, den, shift, reduce=not injective)

    def scale_var(self, var: int, factor_exps: tuple) -> "RatFunc":
        """Substitute ``x_var -> m * x_var`` for the monomial ``m = x^factor_exps``."""
        if not self.involves(var):
            return self

        def emap(e):
            k = e[var]
            return tuple(a + k * b for a, b in zip(e, factor_exps))

        return self.transform(emap)

    def subs_values(self, values: Mapping[int, object]) -> "RatFunc":
        """Substitute rational numbers for some variables."""
        if self.is_zero():
            return self
        vals = {i: _fmpq(v) for i, v in values.items()}
        named = {VARS[i]: v for i, v in vals.items()}
        num = self.num.subs(named)
        den = self.den.subs(named)
        if den.is_zero():
            raise PoleError(f"pole at specialization {dict((VARS[i], str(v)) for i, v in vals.items())}")
        c = flint.fmpq(1)
        shift = list(self.shift)
        for i, v in vals.items():
            e = shift[i]
            if e:
                if v == 0:
                    if e < 0:
                        raise PoleError(f"pole at {VARS[i]}=0")
                    return ZERO
                c *= v ** e
                shift[i] = 0
        return RatFunc._canon(num * c, den, tuple(shift))

    def evaluate(self, values: Mapping[int, object]) -> Fraction:
        """Evaluate at a point; every variable occurring must be assigned."""
        r = self.subs_values(values)
        if r.variables():
            missing = [VARS[i] for i in sorted(r.variables())]
            raise ValueError(f"unassigned variables {missing}")
        return r.constant_value()

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not (self.num.is_constant() and self.den.is_constant()) or any(self.shift):
            raise ValueError("not a constant")
        return _to_fraction(self.num.leading_coefficient()) / _to_fraction(self.den.leading_coefficient())

    def laurent_terms(self) -> dict[tuple, Fraction]:
        """Terms of a Laurent polynomial (requires den == 1)."""
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial")
        return {tuple(a + b for a, b in zip(e, self.shift)): _to_fraction(c)
                for e, c in self.num.to_dict().items()}

    def numerator(self) -> "RatFunc":
        """``m * num`` as a Laurent polynomial."""
        return RatFunc._raw(self.num, _POLY_ONE, self.shift)

    def denominator(self) -> "RatFunc":
        return RatFunc._raw(self.den, _POLY_ONE, _ZERO_EXP)

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        num = str(self.num)
        m = "*".join(f"{VARS[i]}^{e}" if e != 1 else VARS[i]
                     for i, e in enumerate(self.shift) if e)
        out = f"({num})" if not self.num.is_constant() or m else num
        if m:
            out = f"{out}*{m}" if out != "(1)" else m
        if not self.den.is_one():
            out = f"{out}/({self.den})"
        return out


def _map_poly(p, exp_map: ExpMap, sign):
    d = {}
    for e, c in p.to_dict().items():
        ne = exp_map(e)
        if sign is not None and sign(e) < 0:
            c = -c
        d[ne] = d.get(ne, 0) + c
    d = {e: c for e, c in d.items() if c != 0}
    if not d:
        return _POLY_ZERO, _ZERO_EXP
    mn = tuple(min(e[i] for e in d) for i in range(NVARS))
    return _CTX.from_dict({tuple(a - b for a, b in zip(e, mn)): c for e, c in d.items()}), mn


ZERO = RatFunc._raw(_POLY_ZERO, _POLY_ONE, _ZERO_EXP)
ONE = RatFunc._raw(_POLY_ONE, _POLY_ONE, _ZERO_EXP)


def as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction, flint.fmpq)):
        return RatFunc.const(x)
    return NotImplemented


# Scalars of the coefficient field are RatFuncs in s, u only.
Scalar = RatFunc


def is_scalar(x: RatFunc) -> bool:
    return x.variables() <= {S, U}


_s = RatFunc.var(S)
_u = RatFunc.var(U)

PARAMS = {
    "q_half": _s,
    "t_half": _u,
    "q": _s ** 2,
    "t": _u ** 2,
    "A": _s ** -1,
    "lambda": _u ** 2 * _s ** -2,
    "z": _u ** 2 * _s ** -2,
    "z_half": _u * _s ** -1,
}


def scalar_from_param(name: str) -> RatFunc:
    """A = q^{-1/2}, lambda = z = q^{-1} t, z_half = q^{-1/2} t^{1/2}, and q, t, their roots."""
    try:
        return PARAMS[name]
    except KeyError:
        raise ValueError(f"unknown parameter {name!r}; expected one of {sorted(PARAMS)}") from None


def scalar_arith(a: RatFunc, b: RatFunc, kind: str) -> RatFunc:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


def rational_sqrt(x) -> Fraction:
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"{x} has no real square root")
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n != x.numerator or d * d != x.denominator:
        raise ValueError(f"{x} has no rational square root; pass s_val/u_val directly")
    return Fraction(n, d)


def scalar_specialize(x: RatFunc, q_val=None, t_val=None, *, s_val=None, u_val=None) -> Fraction:
    """Evaluate a scalar at q, t (or directly at s = q^{1/2}, u = t^{1/2})."""
    if s_val is None:
        if q_val is None:
            raise ValueError("need q_val or s_val")
        s_val = rational_sqrt(q_val)
    if u_val is None:
        if t_val is None:
            raise ValueError("need t_val or u_val")
        u_val = rational_sqrt(t_val)
    return x.evaluate({S: Fraction(s_val), U: Fraction(u_val)})
