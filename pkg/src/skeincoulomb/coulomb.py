"""Half-graded quantum torus, dressed minuscule monopole operators, and the map
to q-difference operators.

Elements of the torus are normal ordered: ``sum c_{l1,l2}(v1, v2) D1^l1 D2^l2``
with ``v_i = w_i^{1/2}`` and

    D_r v_s = q^{delta_rs} v_s D_r,     so     D_r w_s = q^{2 delta_rs} w_s D_r.

Exponents of v count half-steps of w, so every power of q that appears in
normal ordering is an integer power of s = q^{1/2}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from .mcg import builtin_endo, endo_apply, operator_images
from .qdiff import QDiffOp, shift_x, x_power
from .report import CheckReport
from .scalars import ONE, PARAMS, ZERO, RatFunc, S, U, V1, V2, as_ratfunc
from .skein import PHI, Representation, SkeinExpr, all_words

_s = RatFunc.var(S)
_u = RatFunc.var(U)
_v = (RatFunc.var(V1), RatFunc.var(V2))
_w = (_v[0] ** 2, _v[1] ** 2)
Q = PARAMS["q"]
Z = PARAMS["z"]
Z_HALF = PARAMS["z_half"]
Q_HALF = PARAMS["q_half"]

DKey = tuple  # (l1, l2)


def _move_past(c: RatFunc, l: DKey) -> RatFunc:
    """c(v1, v2) -> c(q^{l1} v1, q^{l2} v2), the effect of D^l c = c' D^l."""
    l1, l2 = l
    if (l1 == 0 or not c.involves(V1)) and (l2 == 0 or not c.involves(V2)):
        return c
    return c.transform(lambda e: (e[0] + 2 * (l1 * e[V1] + l2 * e[V2]),) + e[1:])


class TorusElem:
    """Normal-ordered element  sum_l c_l(v1, v2) D1^{l1} D2^{l2}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[DKey, RatFunc] | None = None):
        clean = {}
        for l, c in (terms or {}).items():
            c = as_ratfunc(c)
            if not c.is_zero():
                clean[(int(l[0]), int(l[1]))] = c
        self.terms = clean

    @classmethod
    def coeff(cls, c) -> "TorusElem":
        return cls({(0, 0): as_ratfunc(c)})

    @classmethod
    def D(cls, l1: int = 0, l2: int = 0) -> "TorusElem":
        return cls({(l1, l2): ONE})

    @classmethod
    def v(cls, i: int, power: int = 1) -> "TorusElem":
        """v_i^power = w_i^{power/2}."""
        return cls.coeff(_v[i - 1] ** power)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other) -> "TorusElem":
        other = _as_torus(other)
        out = dict(self.terms)
        for l, c in other.terms.items():
            out[l] = out[l] + c if l in out else c
        return TorusElem(out)

    __radd__ = __add__

    def __neg__(self) -> "TorusElem":
        return TorusElem({l: -c for l, c in self.terms.items()})

    def __sub__(self, other) -> "TorusElem":
        return self + (-_as_torus(other))

    def __rsub__(self, other) -> "TorusElem":
        return _as_torus(other) + (-self)

    def __mul__(self, other) -> "TorusElem":
        return torus_mul(self, _as_torus(other))

    def __rmul__(self, other) -> "TorusElem":
        return torus_mul(_as_torus(other), self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "TorusElem(0)"
        return "TorusElem(" + " + ".join(f"[{c}]*D{l}" for l, c in sorted(self.terms.items())) + ")"


def _as_torus(x) -> TorusElem:
    if isinstance(x, TorusElem):
        return x
    return TorusElem.coeff(x)


def torus_mul(a: TorusElem, b: TorusElem) -> TorusElem:
    out: dict[DKey, RatFunc] = {}
    for l, c in a.terms.items():
        for m, d in b.terms.items():
            key = (l[0] + m[0], l[1] + m[1])
            t = c * _move_past(d, l)
            out[key] = out[key] + t if key in out else t
    return TorusElem(out)


# dressing polynomials ------------------------------------------------------

@dataclass(frozen=True)
class SymLaurent:
    """Symmetric Laurent polynomial in ``n`` variables with scalar coefficients."""

    n: int
    terms: Mapping[tuple, RatFunc] = field(hash=False)

    def __post_init__(self):
        if self.n not in (1, 2):
            raise ValueError("only one or two variables are supported")
        clean = {}
        for e, c in self.terms.items():
            e = tuple(e)
            if len(e) != self.n:
                raise ValueError(f"exponent {e} does not have {self.n} entries")
            c = as_ratfunc(c)
            if not c.is_zero():
                clean[e] = c
        if self.n == 2 and any(clean.get((b, a), ZERO) != c for (a, b), c in clean.items()):
            raise ValueError("dressing polynomial is not symmetric")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def one(cls, n: int) -> "SymLaurent":
        return cls(n, {(0,) * n: ONE})

    @classmethod
    def power(cls, k: int) -> "SymLaurent":
        """x^k in one variable."""
        return cls(1, {(k,): ONE})

    @classmethod
    def sym_monomial(cls, a: int, b: int) -> "SymLaurent":
        """x1^a x2^b + x1^b x2^a (equal to 2 x1^a x2^a when a == b)."""
        terms = {(a, b): ONE}
        terms[(b, a)] = terms.get((b, a), ZERO) + ONE
        return cls(2, terms)

    def total_degree(self) -> int | None:
        """Common total degree, or None if not homogeneous."""
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    def evaluate(self, args: Sequence[RatFunc]) -> RatFunc:
        out = ZERO
        for e, c in self.terms.items():
            t = c
            for x, k in zip(args, e):
                t = t * x ** k
            out = out + t
        return out


# monopole operators --------------------------------------------------------

def monopole(kind: str, n: int, f: SymLaurent) -> TorusElem:
    """E_n[f] or F_n[f] as a sum over subsets I of {1, 2} with |I| = n."""
    if f.n != n:
        raise ValueError(f"dressing polynomial has {f.n} variables, expected {n}")
    if kind not in ("E", "F"):
        raise ValueError(f"kind must be 'E' or 'F', not {kind!r}")
    qz = Q * Z
    out = TorusElem()
    for I in combinations((0, 1), n):
        if kind == "E":
            coef = f.evaluate([_w[i] for i in I])
        else:
            coef = f.evaluate([Q ** -2 * _w[i] for i in I])
        for r in I:
            for s_ in (0, 1):
                if s_ in I:
                    continue
                if kind == "E":
                    coef = coef * (1 - qz * _w[r] / _w[s_]) / (1 - _w[s_] / _w[r])
                else:
                    coef = coef * (1 - qz * _w[s_] / _w[r]) / (1 - _w[r] / _w[s_])
        sign = 1 if kind == "E" else -1
        l = tuple(sign if i in I else 0 for i in (0, 1))
        out = out + TorusElem({l: coef})
    return out


def invariant_generator(kind: str, n: int, f: SymLaurent) -> TorusElem:
    """w1^{-k/2} w2^{-k/2} E_n[f] (or F_n[f]) with k the total degree of f."""
    k = f.total_degree()
    if k is None:
        raise ValueError("dressing polynomial is not homogeneous")
    return TorusElem.coeff(_v[0] ** -k * _v[1] ** -k) * monopole(kind, n, f)


def _coeff_invariant(c: RatFunc) -> bool:
    return c.homogeneous_degree((V1, V2)) == 0


def is_invariant(a) -> bool:
    """Invariance under simultaneous rescaling of w1, w2: every coefficient has
    homogeneous numerator and denominator of equal degree in v1, v2."""
    return all(_coeff_invariant(c) for c in a.terms.values())


# quotient by D1 D2 - 1 ------------------------------------------------------

class QuotElem:
    """Element of the invariant quotient, represented as  sum_m c_m(v) D1^m."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, RatFunc] | None = None):
        self.terms = {int(m): as_ratfunc(c) for m, c in (terms or {}).items() if not as_ratfunc(c).is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "QuotElem") -> "QuotElem":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return QuotElem(out)

    def __neg__(self) -> "QuotElem":
        return QuotElem({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "QuotElem") -> "QuotElem":
        return self + (-other)

    def scale(self, c) -> "QuotElem":
        c = as_ratfunc(c)
        return QuotElem({m: c * f for m, f in self.terms.items()})

    def lift(self) -> TorusElem:
        return TorusElem({(m, 0): c for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "QuotElem(0)"
        return "QuotElem(" + " + ".join(f"[{c}]*D1^{m}" for m, c in sorted(self.terms.items())) + ")"


def reduce_quot(a: TorusElem) -> QuotElem:
    """Substitute D2 = D1^{-1}; the D's commute, so no scalar factors arise."""
    out: dict[int, RatFunc] = {}
    for (l1, l2), c in a.terms.items():
        m = l1 - l2
        out[m] = out[m] + c if m in out else c
    return QuotElem(out)


# map to q-difference operators --------------------------------------------

# D1 -> -q^{-1} X^{-2} w,  D2 -> -q^{-1} X^2 w^{-1}
D1_IMAGE = QDiffOp({1: -(Q ** -1) * x_power(-2)})
D2_IMAGE = QDiffOp({-1: -(Q ** -1) * x_power(2)})


def _monomial_inverse(op: QDiffOp) -> QDiffOp:
    """(f w^k)^{-1} = f(q^{-k} X)^{-1} w^{-k}."""
    (k, f), = op.terms.items()
    return QDiffOp({-k: shift_x(f, -k).inverse()})


_D_POWERS: dict[tuple[int, int], QDiffOp] = {}


def _d_power(r: int, m: int) -> QDiffOp:
    key = (r, m)
    if key not in _D_POWERS:
        base = D1_IMAGE if r == 1 else D2_IMAGE
        if m < 0:
            base = _monomial_inverse(base)
        op = QDiffOp.identity()
        for _ in range(abs(m)):
            op = op * base
        _D_POWERS[key] = op
    return _D_POWERS[key]


def coeff_to_x(c: RatFunc) -> RatFunc:
    """A degree-0 coefficient is a function of W = v1/v2; substitute W -> X."""
    if not _coeff_invariant(c):
        raise ValueError("not C*-invariant")
    return c.transform(lambda e: (e[0], e[1], e[2] + e[V1], 0, 0), injective=False)


def psi_map(a) -> QDiffOp:
    """The injective map of the invariant quotient into End C_{q,t}(X).

    Accepts a reduced ``QuotElem`` or an unreduced ``TorusElem``; in the latter
    case D1 and D2 are mapped separately, so for instance D1 D2 - 1 maps to 0
    as an identity of operators.
    """
    if isinstance(a, QuotElem):
        items = [((m, 0), c) for m, c in a.terms.items()]
    elif isinstance(a, TorusElem):
        items = list(a.terms.items())
    else:
        raise TypeError(f"cannot map {type(a).__name__}")
    if not all(_coeff_invariant(c) for _, c in items):
        raise ValueError("not C*-invariant")
    out = QDiffOp()
    for (l1, l2), c in items:
        op = _d_power(1, l1) * _d_power(2, l2)
        out = out + op.scale(coeff_to_x(c))
    return out


def epsilon(a: QuotElem) -> QuotElem:
    """The involution W -> -W (fixing q, z and the D's), realized as v1 -> -v1."""
    if not is_invariant(a):
        raise ValueError("not C*-invariant")
    return QuotElem({m: c.transform(lambda e: e, sign=lambda e: -1 if e[V1] % 2 else 1)
                     for m, c in a.terms.items()})


# skein algebra -> monopole operators ---------------------------------------

W_SUM = TorusElem.coeff(_v[0] * _v[1] ** -1 + _v[0] ** -1 * _v[1])


def iso_generators(which: int) -> dict[str, TorusElem]:
    """Images of a, b, c under the first (which=1) or second (which=2) realization."""
    if which == 1:
        return {
            "a": W_SUM,
            "b": TorusElem.coeff(Q_HALF / Z_HALF) * monopole("F", 1, SymLaurent.one(1)),
            "c": TorusElem.coeff(Q ** 2 / Z_HALF * _v[0] ** -1 * _v[1] ** -1)
            * monopole("F", 1, SymLaurent.power(1)),
        }
    if which == 2:
        return {
            "a": W_SUM,
            "b": TorusElem.coeff(Q ** -1 / Z_HALF * _v[0] * _v[1]) * monopole("F", 1, SymLaurent.power(-1)),
            "c": TorusElem.coeff(Q_HALF / Z_HALF) * monopole("F", 1, SymLaurent.one(1)),
        }
    raise ValueError("which must be 1 or 2")


class TorusRealization:
    """Word-by-word image of skein elements in the torus, memoized by prefix."""

    def __init__(self, images: Mapping[str, TorusElem]):
        self.images = dict(images)
        self._cache: dict[tuple, TorusElem] = {(): TorusElem.coeff(1)}

    def word(self, w) -> TorusElem:
        w = tuple(w)
        if w not in self._cache:
            self._cache[w] = self.word(w[:-1]) * self.images[w[-1]]
        return self._cache[w]

    def __call__(self, e: SkeinExpr) -> TorusElem:
        out = TorusElem()
        for w, c in e.terms.items():
            out = out + TorusElem.coeff(c) * self.word(w)
        return out


_REALIZATIONS: dict[int, TorusRealization] = {}


def realization(which: int) -> TorusRealization:
    if which not in _REALIZATIONS:
        _REALIZATIONS[which] = TorusRealization(iso_generators(which))
    return _REALIZATIONS[which]


def iso_image(which: int, e: SkeinExpr) -> QuotElem:
    return reduce_quot(realization(which)(e))


# checks --------------------------------------------------------------------

def chebyshev_normalized(n: int) -> RatFunc:
    """P_n(X + X^{-1}) with P_0 = 2, P_1 = x, P_{n+1} = x P_n - P_{n-1}."""
    x = x_power(1) + x_power(-1)
    prev, cur = RatFunc.const(2), x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, x * cur - prev
    return cur


def _v_op(k: int, sign: int) -> QDiffOp:
    """X^{sign k} V(X) w + X^{-sign k} V(X^{-1}) w^{-1}."""
    from .qdiff import V, V_INV

    return QDiffOp({1: x_power(sign * k) * V, -1: x_power(-sign * k) * V_INV})


def check_coulombrep(k_max: int = 4, deg_max: int = 6) -> CheckReport:
    if k_max < 2 or deg_max < 2:
        raise ValueError("k_max and deg_max must be >= 2")
    report = CheckReport("coulombrep")
    with report.timed():
        report.add("W + W^-1 -> X + X^-1", psi_map(reduce_quot(W_SUM)) == QDiffOp.mul_by(x_power(1) + x_power(-1)))
        lead = Q ** -1 * _u
        for k in range(k_max + 1):
            e_img = psi_map(reduce_quot(invariant_generator("E", 1, SymLaurent.power(k))))
            f_img = psi_map(reduce_quot(invariant_generator("F", 1, SymLaurent.power(k))))
            report.add(f"E1[x^{k}] image", e_img == _v_op(k, 1).scale(lead))
            report.add(f"F1[x^{k}] image", f_img == _v_op(k, -1).scale(Q ** (-2 * k - 1) * _u))
        bad = []
        for k in range(-k_max, 0):
            e_img = psi_map(reduce_quot(invariant_generator("E", 1, SymLaurent.power(k))))
            f_img = psi_map(reduce_quot(invariant_generator("F", 1, SymLaurent.power(k))))
            if e_img != _v_op(k, 1).scale(lead) or f_img != _v_op(k, -1).scale(Q ** (-2 * k - 1) * _u):
                bad.append(k)
        report.add(f"E1/F1 images for -{k_max} <= k < 0", not bad, f"failing k: {bad}" if bad else "")
        for a in range(deg_max + 1):
            for b in range(a + 1):
                if a + b > deg_max:
                    continue
                f = SymLaurent.sym_monomial(a, b)
                cheb = QDiffOp.mul_by(chebyshev_normalized(a - b))
                e2 = psi_map(reduce_quot(invariant_generator("E", 2, f)))
                f2 = psi_map(reduce_quot(invariant_generator("F", 2, f)))
                report.add(f"E2[x1^{a}x2^{b}+x1^{b}x2^{a}] -> P_{a - b}", e2 == cheb)
                report.add(f"F2[x1^{a}x2^{b}+x1^{b}x2^{a}] -> q^{-2 * (a + b)} P_{a - b}",
                           f2 == cheb.scale(Q ** (-2 * (a + b))))
        report.add("D1 D2 - 1 -> 0", psi_map(TorusElem.D(1, 1) - TorusElem.coeff(1)).is_zero())
        W = TorusElem.coeff(_v[0] * _v[1] ** -1)
        D1 = TorusElem.D(1, 0)
        report.add("D1 W = q W D1 in the torus", D1 * W == TorusElem.coeff(Q) * W * D1)
        report.add("D1 W = q W D1 under psi", psi_map(D1 * W) == psi_map(W * D1).scale(Q))
    return report


def check_main_theorem(max_len: int = 3, rep: Representation = PHI) -> CheckReport:
    """Both realizations agree with the operator representation (the second one
    twisted by tau+), and they intertwine xi1 resp. xi3 with epsilon."""
    if max_len < 2:
        raise ValueError("max_len must be >= 2")
    report = CheckReport("realizations")
    with report.timed():
        twisted = operator_images([builtin_endo("tau_plus")], rep)
        xi1, xi3 = builtin_endo("xi1"), builtin_endo("xi3")
        words = all_words(max_len)
        images = {1: {}, 2: {}}
        for which, target in ((1, rep), (2, twisted)):
            bad = []
            for w in words:
                img = iso_image(which, SkeinExpr.word(w))
                images[which][w] = img
                if psi_map(img) != target.word(w):
                    bad.append("".join(w))
            label = "Phi" if which == 1 else "Phi o tau+"
            report.add(f"psi o iso{which} = {label} on words of length <= {max_len}", not bad,
                       f"failing words: {bad}" if bad else f"{len(words)} words")
        for which, xi in ((1, xi1), (2, xi3)):
            bad = []
            for w in words:
                lhs = iso_image(which, endo_apply(xi, SkeinExpr.word(w)))
                rhs = epsilon(images[which][w])
                if psi_map(lhs) != psi_map(rhs):
                    bad.append("".join(w))
            report.add(f"iso{which} intertwines {xi.name} with epsilon (length <= {max_len})", not bad,
                       f"failing words: {bad}" if bad else f"{len(words)} words")
    return report
