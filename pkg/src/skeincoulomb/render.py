"""Canonical text rendering in the user-facing variables q, t, X, w1, w2.

Internally s = q^{1/2}, u = t^{1/2}, v_i = w_i^{1/2}, so every exponent of
s, u, v_i is printed halved. Terms are sorted by descending exponent vector
in the order (X, w1, w2, q, t).
"""
from __future__ import annotations

from fractions import Fraction

from .coulomb import QuotElem, TorusElem
from .qdiff import QDiffOp
from .scalars import RatFunc, S, U, V1, V2, X

# (internal index, printed name, exponent divisor)
_DISPLAY = ((X, "X", 1), (V1, "w1", 2), (V2, "w2", 2), (S, "q", 2), (U, "t", 2))


def _exponent(e: int, div: int) -> str:
    f = Fraction(int(e), div)
    if f == 1:
        return ""
    if f.denominator == 1:
        return f"^{{{f.numerator}}}"
    return f"^{{{f.numerator}/{f.denominator}}}"


def _monomial(e: tuple) -> str:
    return "".join(f"{name}{_exponent(e[i], div)}" for i, name, div in _DISPLAY if e[i])


def _sort_key(e: tuple):
    return tuple(-e[i] for i, _, _ in _DISPLAY)


def render_laurent(f: RatFunc) -> str:
    """A Laurent polynomial, e.g. ``w1^{1/2}w2^{-1/2} + w1^{-1/2}w2^{1/2}``."""
    if f.is_zero():
        return "0"
    terms = sorted(f.laurent_terms().items(), key=lambda kv: _sort_key(kv[0]))
    out = []
    for n, (e, c) in enumerate(terms):
        mono = _monomial(e)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}{mono}"
        else:
            body = str(mag)
        if n == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def render_ratfunc(f: RatFunc) -> str:
    if f.is_laurent():
        return render_laurent(f)
    num, den = f.numerator(), f.denominator()
    return f"({render_laurent(num)})/({render_laurent(den)})"


def _wrap(text: str) -> str:
    return text if " " not in text and not text.startswith("(") else f"[{text}]"


def _shift_name(k: int, symbol: str) -> str:
    return symbol if k == 1 else f"{symbol}^{{{k}}}"


def render_operator(op: QDiffOp) -> str:
    """Shifts in descending order, each as ``[coefficient]·ϖ^{k}``."""
    if op.is_zero():
        return "0"
    parts = []
    for k in sorted(op.terms, reverse=True):
        c = render_ratfunc(op.terms[k])
        parts.append(c if k == 0 else f"{_wrap(c)}·{_shift_name(k, 'ϖ')}")
    return " + ".join(parts)


def render_torus(a) -> str:
    """A torus element (``D1^{l1}D2^{l2}``) or a quotient element (``D1^{m}``)."""
    if isinstance(a, QuotElem):
        items = {(m, 0): c for m, c in a.terms.items()}
    elif isinstance(a, TorusElem):
        items = a.terms
    else:
        raise TypeError(f"cannot render {type(a).__name__}")
    if not items:
        return "0"
    parts = []
    for l in sorted(items, reverse=True):
        c = render_ratfunc(items[l])
        d = "".join(_shift_name(k, f"D{r}") for r, k in ((1, l[0]), (2, l[1])) if k)
        parts.append(c if not d else f"{_wrap(c)}·{d}")
    return " + ".join(parts)


def render(x) -> str:
    if isinstance(x, QDiffOp):
        return render_operator(x)
    if isinstance(x, (TorusElem, QuotElem)):
        return render_torus(x)
    if isinstance(x, RatFunc):
        return render_ratfunc(x)
    raise TypeError(f"cannot render {type(x).__name__}")
