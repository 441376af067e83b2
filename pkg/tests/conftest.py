import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from skeincoulomb.qdiff import QDiffOp  # noqa: E402
from skeincoulomb.scalars import RatFunc, S, U, V1, V2, X  # noqa: E402

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# strategies -----------------------------------------------------------------

small_exp = st.integers(-2, 2)
small_coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def laurent(vars_, max_terms=3):
    """Random Laurent polynomial in the given variable indices."""
    def build(items):
        terms = {}
        for exps, c in items:
            e = [0] * 5
            for v, k in zip(vars_, exps):
                e[v] = k
            terms[tuple(e)] = terms.get(tuple(e), 0) + c
        return RatFunc.from_terms(terms)

    term = st.tuples(st.tuples(*[small_exp] * len(vars_)), small_coeff)
    return st.lists(term, min_size=1, max_size=max_terms).map(build)


def ratfunc(vars_, max_terms=3):
    """Random rational function with a nonzero denominator."""
    return st.tuples(laurent(vars_, max_terms), laurent(vars_, 2).filter(lambda d: not d.is_zero())).map(
        lambda nd: nd[0] / nd[1])


scalars = ratfunc((S, U))
x_laurent = laurent((S, U, X))
x_coeffs = ratfunc((S, U, X), 2)
torus_coeffs = ratfunc((S, V1, V2), 2)


@st.composite
def qdiff_ops(draw, max_shift=3, max_terms=3):
    n = draw(st.integers(1, max_terms))
    terms = {}
    for _ in range(n):
        k = draw(st.integers(-max_shift, max_shift))
        terms[k] = draw(x_coeffs)
    return QDiffOp(terms)


@st.composite
def torus_elems(draw, max_shift=2, max_terms=3):
    from skeincoulomb.coulomb import TorusElem

    n = draw(st.integers(1, max_terms))
    terms = {}
    for _ in range(n):
        l = (draw(st.integers(-max_shift, max_shift)), draw(st.integers(-max_shift, max_shift)))
        terms[l] = draw(torus_coeffs)
    return TorusElem(terms)
