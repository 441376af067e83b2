"""Skein algebra of the once-punctured torus as words in alpha, beta, gamma.

Letters are ``"a"`` (alpha), ``"b"`` (beta), ``"c"`` (gamma).  Coefficients
are scalars with A = q^{-1/2} and lambda = q^{-1} t already substituted.
Equality of skein elements is decided in the faithful operator
representation: words are evaluated left to right as compositions of
q-difference operators.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .qdiff import V, V_INV, QDiffOp, op_at_q1, preserves_symmetric, x_power
from .report import CheckReport
from .scalars import ONE, ZERO, PARAMS, PoleError, RatFunc, S, U, X, as_ratfunc, rational_sqrt

LETTERS = ("a", "b", "c")
_ALIASES = {"a": "a", "alpha": "a", "b": "b", "beta": "b", "c": "c", "gamma": "c"}

A = PARAMS["A"]
LAMBDA = PARAMS["lambda"]
_s = RatFunc.var(S)

Word = tuple


class SkeinExpr:
    """Noncommutative polynomial in a, b, c with scalar coefficients.

    Words are never reordered; only identical words are merged.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, RatFunc] | None = None):
        clean = {}
        for w, c in (terms or {}).items():
            c = as_ratfunc(c)
            w = tuple(w)
            if any(x not in LETTERS for x in w):
                raise ValueError(f"bad word {w!r}")
            if not c.is_zero():
                clean[w] = clean[w] + c if w in clean else c
        self.terms = {w: c for w, c in clean.items() if not c.is_zero()}

    @classmethod
    def gen(cls, letter: str) -> "SkeinExpr":
        return cls({(_ALIASES[letter],): ONE})

    @classmethod
    def scalar(cls, c) -> "SkeinExpr":
        return cls({(): as_ratfunc(c)})

    @classmethod
    def word(cls, w: Iterable[str], coeff=1) -> "SkeinExpr":
        return cls({tuple(_ALIASES[x] for x in w): as_ratfunc(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(len(w) == 0 for w in self.terms)

    def scalar_part(self) -> RatFunc:
        return self.terms.get((), ZERO)

    def max_len(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __add__(self, other) -> "SkeinExpr":
        other = _as_expr(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return SkeinExpr(out)

    __radd__ = __add__

    def __neg__(self) -> "SkeinExpr":
        return SkeinExpr({w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> "SkeinExpr":
        other = _as_expr(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "SkeinExpr":
        return _as_expr(other) + (-self)

    def __mul__(self, other) -> "SkeinExpr":
        other = _as_expr(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Word, RatFunc] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                out[w] = out[w] + c if w in out else c
        return SkeinExpr(out)

    def __rmul__(self, other) -> "SkeinExpr":
        other = _as_expr(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def __pow__(self, n: int) -> "SkeinExpr":
        if n < 0:
            raise ValueError("negative powers of skein elements are undefined")
        out = SkeinExpr.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        # structural equality; use skein_equal for equality in the algebra
        other = _as_expr(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "SkeinExpr(0)"
        parts = [f"({c})*{''.join(w) or '1'}" for w, c in sorted(self.terms.items())]
        return "SkeinExpr(" + " + ".join(parts) + ")"


def _as_expr(x):
    if isinstance(x, SkeinExpr):
        return x
    r = as_ratfunc(x)
    if r is NotImplemented:
        return NotImplemented
    return SkeinExpr.scalar(r)


alpha = SkeinExpr.gen("a")
beta = SkeinExpr.gen("b")
gamma = SkeinExpr.gen("c")


def all_words(max_len: int, min_len: int = 1) -> list[Word]:
    return [w for n in range(min_len, max_len + 1) for w in itertools.product(LETTERS, repeat=n)]


# operator representation ---------------------------------------------------

def phi_gamma(k: int) -> QDiffOp:
    """Operator of the curve gamma_k:
    q^{-k/2} X^{-k} V(X) w + q^{-k/2} X^k V(X^{-1}) w^{-1}."""
    c = _s ** (-k)
    return QDiffOp({1: c * x_power(-k) * V, -1: c * x_power(k) * V_INV})


def _standard_images() -> dict[str, QDiffOp]:
    return {
        "a": QDiffOp.mul_by(x_power(1) + x_power(-1)),
        "b": QDiffOp({1: V, -1: V_INV}),
        "c": QDiffOp({1: _s ** -1 * x_power(-1) * V, -1: _s ** -1 * x_power(1) * V_INV}),
    }


class Representation:
    """Algebra map from words to operators, fixed by the images of a, b, c.

    Word images are memoized by prefix, so evaluating many long words
    sharing prefixes stays cheap.
    """

    def __init__(self, images: Mapping[str, QDiffOp]):
        self.images = {_ALIASES[k]: v for k, v in images.items()}
        missing = set(LETTERS) - set(self.images)
        if missing:
            raise ValueError(f"missing generator images {sorted(missing)}")
        self._cache: dict[Word, QDiffOp] = {(): QDiffOp.identity()}

    def word(self, w: Word) -> QDiffOp:
        w = tuple(w)
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        n = len(w) - 1
        while w[:n] not in self._cache:
            n -= 1
        op = self._cache[w[:n]]
        for i in range(n, len(w)):
            op = op * self.images[w[i]]
            self._cache[w[: i + 1]] = op
        return op

    def __call__(self, e: SkeinExpr) -> QDiffOp:
        out: dict[int, RatFunc] = {}
        for w, c in e.terms.items():
            for k, f in self.word(w).terms.items():
                t = c * f
                out[k] = out[k] + t if k in out else t
        return QDiffOp(out)


PHI = Representation(_standard_images())


def phi_generator(g: str) -> QDiffOp:
    return PHI.images[_ALIASES[g]]


def skein_eval(e: SkeinExpr, rep: Representation = PHI) -> QDiffOp:
    return rep(e)


def skein_equal(a: SkeinExpr, b: SkeinExpr, rep: Representation = PHI) -> bool:
    return rep(a - b).is_zero()


# curve family ------------------------------------------------------------

def gamma_minus_one() -> SkeinExpr:
    """gamma_{-1} = (ab + ba)/(A + A^{-1}) - c, from resolving the crossing of a and b."""
    return (alpha * beta + beta * alpha) * (ONE / (A + A ** -1)) - gamma


def gamma_expr(k: int) -> SkeinExpr:
    """Symbolic gamma_k, built from gamma_0 = b, gamma_1 = c, gamma_{-1} and the
    ladder  gamma_k a = A gamma_{k+1} + A^{-1} gamma_{k-1}."""
    if k == 0:
        return beta
    if k == 1:
        return gamma
    if k == -1:
        return gamma_minus_one()
    if k > 1:
        prev, cur = beta, gamma
        for _ in range(k - 1):
            prev, cur = cur, (cur * alpha - prev * (A ** -1)) * (A ** -1)
        return cur
    nxt, cur = beta, gamma_minus_one()
    for _ in range(-k - 1):
        nxt, cur = cur, (cur * alpha - nxt * A) * A
    return cur


# relations ---------------------------------------------------------------

def presentation_relations(casimir_shift=0) -> list[tuple[str, SkeinExpr, SkeinExpr]]:
    """The four defining relations as (name, lhs, rhs)."""
    a, b, c = alpha, beta, gamma
    q_comm = A ** -2 - A ** 2
    casimir_lhs = a * a * A ** -2 + b * b * A ** 2 + c * c * A ** -2 - a * b * c * A ** -1
    casimir_rhs = SkeinExpr.scalar(A ** 2 + A ** -2 + LAMBDA + LAMBDA ** -1 + as_ratfunc(casimir_shift))
    return [
        ("[a,b]_A = (A^-2 - A^2) c", a * b * A ** -1 - b * a * A, c * q_comm),
        ("[b,c]_A = (A^-2 - A^2) a", b * c * A ** -1 - c * b * A, a * q_comm),
        ("[c,a]_A = (A^-2 - A^2) b", c * a * A ** -1 - a * c * A, b * q_comm),
        ("casimir", casimir_lhs, casimir_rhs),
    ]


def check_presentation(rep: Representation = PHI, casimir_shift=0) -> CheckReport:
    report = CheckReport("presentation")
    with report.timed():
        for name, lhs, rhs in presentation_relations(casimir_shift):
            diff = rep(lhs - rhs)
            report.add(name, diff.is_zero(),
                       "exact operator identity" if diff.is_zero()
                       else f"residual has shifts {diff.shifts()}")
    return report


def check_curve_family(k_bound: int = 5, symbolic_bound: int = 3, rep: Representation = PHI) -> CheckReport:
    report = CheckReport("curve_family")
    with report.timed():
        report.add("gamma_0 = b", phi_gamma(0) == rep.images["b"])
        report.add("gamma_1 = c", phi_gamma(1) == rep.images["c"])
        report.add("gamma_-1 resolution", phi_gamma(-1) == rep(gamma_minus_one()))
        a_op = rep.images["a"]
        bad = [k for k in range(-k_bound, k_bound + 1)
               if phi_gamma(k) * a_op != phi_gamma(k + 1).scale(A) + phi_gamma(k - 1).scale(A ** -1)]
        report.add(f"ladder |k| <= {k_bound}", not bad, f"failing k: {bad}" if bad else "")
        bad = [k for k in range(-symbolic_bound, symbolic_bound + 1) if rep(gamma_expr(k)) != phi_gamma(k)]
        report.add(f"symbolic gamma_k |k| <= {symbolic_bound}", not bad, f"failing k: {bad}" if bad else "")
    return report


def check_symmetric_preservation(max_len: int = 3, degree_bound: int = 6,
                                 rep: Representation = PHI) -> CheckReport:
    report = CheckReport("symmetric_preservation")
    with report.timed():
        bad = [w for w in all_words(max_len) if not preserves_symmetric(rep.word(w), degree_bound)]
        report.add(f"words of length <= {max_len} preserve C[X^+-1]^Z2 (deg <= {degree_bound})",
                   not bad, f"failing words: {[''.join(w) for w in bad]}" if bad else "")
    return report


# classical limit -----------------------------------------------------------

def classical_symbols(rep: Representation = PHI) -> dict[str, RatFunc]:
    """Multiplication symbols of the generators at q = 1 (functions of t^{1/2} and X)."""
    return {g: op_at_q1(rep.images[g]).coefficient(0) for g in LETTERS}


def classical_check(t_val, sample_points: Sequence, rep: Representation = PHI,
                    u_val=None) -> CheckReport:
    """At q = 1 the generators commute and satisfy
    a^2 + b^2 + c^2 - abc = 2 + t + t^{-1} at every sample X."""
    report = CheckReport("classical")
    with report.timed():
        t_val = Fraction(t_val)
        if u_val is None:
            u_val = rational_sqrt(t_val)
        u_val = Fraction(u_val)
        for g1, g2 in (("a", "b"), ("b", "c"), ("c", "a")):
            comm = op_at_q1(rep.images[g1] * rep.images[g2] - rep.images[g2] * rep.images[g1])
            report.add(f"[{g1},{g2}] = 0 at q=1", comm.is_zero())
        sym = classical_symbols(rep)
        for x in sample_points:
            x = Fraction(x)
            name = f"cubic at t={t_val}, X={x}"
            try:
                vals = {g: f.evaluate({U: u_val, X: x}) for g, f in sym.items()}
            except PoleError as exc:
                report.add(name, None, f"skipped: {exc}")
                continue
            a, b, c = vals["a"], vals["b"], vals["c"]
            residual = a * a + b * b + c * c - a * b * c - (2 + t_val + 1 / t_val)
            report.add(name, residual == 0, f"residual {residual}")
    return report
