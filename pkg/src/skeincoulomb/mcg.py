"""SL(2,Z) Dehn twists tau+, tau-, the rotation sigma and the sign involutions
xi1, xi2, xi3, as substitution endomorphisms of skein words."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .report import CheckReport
from .scalars import ZERO, RatFunc, X
from .skein import (
    LETTERS,
    PHI,
    Representation,
    SkeinExpr,
    all_words,
    alpha,
    beta,
    gamma,
    gamma_minus_one,
    presentation_relations,
    skein_equal,
)


@dataclass(frozen=True)
class Endo:
    """Algebra endomorphism given by the images of a, b, c."""

    name: str
    images: Mapping[str, SkeinExpr] = field(hash=False)

    def __call__(self, x: SkeinExpr) -> SkeinExpr:
        return endo_apply(self, x)


def _endo(name, a, b, c) -> Endo:
    return Endo(name, {"a": a, "b": b, "c": c})


def builtin_endo(name: str) -> Endo:
    g = gamma_minus_one()
    table = {
        "identity": (alpha, beta, gamma),
        "tau_plus": (alpha, g, beta),
        "tau_minus": (g, beta, alpha),
        "sigma": (beta, alpha, g),
        "xi1": (-alpha, beta, -gamma),
        "xi2": (alpha, -beta, -gamma),
        "xi3": (-alpha, -beta, gamma),
    }
    if name not in table:
        raise ValueError(f"unknown endomorphism {name!r}; expected one of {sorted(table)}")
    return _endo(name, *table[name])


BUILTIN_NAMES = ("tau_plus", "tau_minus", "sigma", "xi1", "xi2", "xi3")


def endo_apply(e: Endo, x: SkeinExpr) -> SkeinExpr:
    """Substitute the generator images into every word and expand."""
    cache: dict[tuple, SkeinExpr] = {(): SkeinExpr.scalar(1)}

    def image(w):
        if w not in cache:
            cache[w] = image(w[:-1]) * e.images[w[-1]]
        return cache[w]

    out = SkeinExpr()
    for w, c in x.terms.items():
        out = out + image(w) * c
    return out


def endo_compose(e1: Endo, e2: Endo) -> Endo:
    """e1 o e2 (apply e2 first)."""
    return Endo(f"{e1.name}*{e2.name}", {g: endo_apply(e1, e2.images[g]) for g in LETTERS})


def operator_images(chain: Sequence[Endo], rep: Representation = PHI) -> Representation:
    """The representation  rep o e1 o e2 o ... o en  for ``chain = [e1, ..., en]``.

    Computed letter by letter on operators, so long compositions never expand
    into long symbolic words.
    """
    cur = rep
    for e in chain:
        cur = Representation({g: cur(e.images[g]) for g in LETTERS})
    return cur


def chains_agree(lhs: Sequence[Endo], rhs: Sequence[Endo], rep: Representation = PHI) -> bool:
    left, right = operator_images(lhs, rep), operator_images(rhs, rep)
    return all(left.images[g] == right.images[g] for g in LETTERS)


# inverses ------------------------------------------------------------------

def _poly_lcm(a, b):
    return a * (b / a.gcd(b))


def _linear_equations(columns: list, target) -> tuple[list[list[RatFunc]], list[RatFunc]]:
    """Expand ``sum_j c_j columns[j] = target`` (operators) into scalar equations.

    For each shift, all coefficients are brought to a common denominator and
    the numerators are compared power by power in X.
    """
    rows, rhs = [], []
    shifts = set(target.terms)
    for op in columns:
        shifts |= set(op.terms)
    for k in sorted(shifts):
        entries = [op.coefficient(k) for op in columns] + [target.coefficient(k)]
        lcm = None
        for f in entries:
            if not f.is_zero():
                lcm = f.den if lcm is None else _poly_lcm(lcm, f.den)
        L = RatFunc.from_poly(lcm)
        expanded = []
        for f in entries:
            g = f * L
            terms: dict[int, dict] = {}
            for e, c in (g.laurent_terms().items() if not g.is_zero() else ()):
                terms.setdefault(e[X], {})[e[:X] + (0,) + e[X + 1:]] = c
            expanded.append({n: RatFunc.from_terms(t) for n, t in terms.items()})
        powers = set()
        for d in expanded:
            powers |= set(d)
        for n in sorted(powers):
            rows.append([d.get(n, ZERO) for d in expanded[:-1]])
            rhs.append(expanded[-1].get(n, ZERO))
    return rows, rhs


def solve_linear(rows: list[list[RatFunc]], rhs: list[RatFunc]) -> list[RatFunc] | None:
    """One solution of a linear system over the scalar field (free variables set
    to zero), or None if inconsistent."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if not m[i][col].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][col].is_zero():
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    if any(not row[-1].is_zero() for row in m[r:]):
        return None
    sol = [ZERO] * ncols
    for i, col in enumerate(pivots):
        sol[col] = m[i][-1]
    return sol


def find_inverse(e: Endo, max_len: int = 2, rep: Representation = PHI) -> Endo | None:
    """Search generator images of e^{-1} among combinations of words of length <= max_len.

    The candidate is accepted only after both e o e^{-1} and e^{-1} o e are
    verified to be the identity on generators.
    """
    words = [()] + all_words(max_len)
    twisted = operator_images([e], rep)
    columns = [twisted.word(w) for w in words]
    images = {}
    for g in LETTERS:
        rows, rhs = _linear_equations(columns, rep.images[g])
        sol = solve_linear(rows, rhs)
        if sol is None:
            return None
        images[g] = SkeinExpr({w: c for w, c in zip(words, sol) if not c.is_zero()})
    inv = Endo(f"{e.name}^-1", images)
    identity = builtin_endo("identity")
    if not (chains_agree([e, inv], [identity], rep) and chains_agree([inv, e], [identity], rep)):
        return None
    return inv


# checks --------------------------------------------------------------------

def check_well_defined(e: Endo, rep: Representation = PHI) -> CheckReport:
    """Does e send every presentation relation to an operator identity?"""
    report = CheckReport(f"well_defined[{e.name}]")
    with report.timed():
        twisted = operator_images([e], rep)
        for name, lhs, rhs in presentation_relations():
            report.add(f"{e.name}: {name}", twisted(lhs - rhs).is_zero())
    return report


def check_group_relations(rep: Representation = PHI, inverse_len: int = 2) -> CheckReport:
    report = CheckReport("group_relations")
    with report.timed():
        sigma, tp, tm = (builtin_endo(n) for n in ("sigma", "tau_plus", "tau_minus"))
        identity = builtin_endo("identity")
        report.add("sigma^4 = id", chains_agree([sigma] * 4, [identity], rep))
        report.add("(sigma tau+)^3 = sigma^2", chains_agree([sigma, tp] * 3, [sigma, sigma], rep))
        report.add("sigma^2 = id on generators", chains_agree([sigma, sigma], [identity], rep),
                   "observed, not a stated relation")
        sigma_inv = find_inverse(sigma, inverse_len, rep)
        tm_inv = find_inverse(tm, inverse_len, rep)
        if sigma_inv is None:
            report.add("tau- = tau+ sigma^-1 tau+", False, "inverse not constructed for sigma")
        else:
            report.add("tau- = tau+ sigma^-1 tau+", chains_agree([tm], [tp, sigma_inv, tp], rep))
        if tm_inv is None:
            report.add("sigma = tau+ tau-^-1 tau+", False, "inverse not constructed for tau-")
        else:
            report.add("sigma = tau+ tau-^-1 tau+", chains_agree([sigma], [tp, tm_inv, tp], rep))
    return report


def check_involutions(max_len: int = 3, rep: Representation = PHI) -> CheckReport:
    report = CheckReport("involutions")
    with report.timed():
        for name in ("xi1", "xi2", "xi3"):
            xi = builtin_endo(name)
            bad = [w for w in all_words(max_len)
                   if not skein_equal(endo_apply(xi, endo_apply(xi, SkeinExpr.word(w))), SkeinExpr.word(w), rep)]
            report.add(f"{name}^2 = id on words of length <= {max_len}", not bad)
    return report


def invariant_sample(which: str, max_len: int) -> list[SkeinExpr]:
    """Nonzero symmetrizations  w + xi(w)  over all words of length <= max_len."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    xi = builtin_endo(which)
    out = []
    for w in all_words(max_len):
        e = SkeinExpr.word(w)
        sym = e + endo_apply(xi, e)
        if not sym.is_zero():
            out.append(sym)
    return out


# (map, source involution, target involution) for every arrow of the duality triangle
DUALITY_ARROWS = (
    ("tau_plus", "xi1", "xi3"),
    ("tau_plus", "xi3", "xi1"),
    ("sigma", "xi1", "xi2"),
    ("sigma", "xi2", "xi1"),
    ("tau_minus", "xi2", "xi3"),
    ("tau_minus", "xi3", "xi2"),
    ("tau_plus", "xi2", "xi2"),
    ("tau_minus", "xi1", "xi1"),
    ("sigma", "xi3", "xi3"),
)


def check_duality_diagram(max_len: int = 3, rep: Representation = PHI) -> CheckReport:
    if max_len < 2:
        raise ValueError("max_len must be >= 2")
    report = CheckReport("duality_diagram")
    with report.timed():
        for g_name, src, dst in DUALITY_ARROWS:
            g, xi = builtin_endo(g_name), builtin_endo(dst)
            sample = invariant_sample(src, max_len)
            bad = 0
            for e in sample:
                img = endo_apply(g, e)
                if not skein_equal(endo_apply(xi, img), img, rep):
                    bad += 1
            report.add(f"{g_name}: Sk^{src} -> Sk^{dst}", bad == 0,
                       f"{len(sample) - bad}/{len(sample)} samples map into Sk^{dst}")
        tp, xi1 = builtin_endo("tau_plus"), builtin_endo("xi1")
        tp2 = endo_compose(tp, tp)
        bad = 0
        for e in invariant_sample("xi1", max_len):
            twice = endo_apply(tp, endo_apply(tp, e))
            if not (skein_equal(twice, endo_apply(tp2, e), rep) and skein_equal(endo_apply(xi1, twice), twice, rep)):
                bad += 1
        report.add("tau+ along xi1 -> xi3 -> xi1 equals tau+^2", bad == 0)
    return report


def check_mcg(max_len: int = 3, rep: Representation = PHI) -> CheckReport:
    report = CheckReport("mcg")
    with report.timed():
        report.extend(check_group_relations(rep), "group")
        report.extend(check_involutions(max_len, rep), "involution")
        for name in BUILTIN_NAMES:
            report.extend(check_well_defined(builtin_endo(name), rep), "well_defined")
        report.extend(check_duality_diagram(max(max_len, 2), rep), "duality")
    return report
