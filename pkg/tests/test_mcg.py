import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeincoulomb.mcg import (
    DUALITY_ARROWS,
    Endo,
    builtin_endo,
    chains_agree,
    check_duality_diagram,
    check_group_relations,
    check_involutions,
    check_well_defined,
    endo_apply,
    endo_compose,
    find_inverse,
    invariant_sample,
)
from skeincoulomb.skein import SkeinExpr, alpha, beta, gamma, skein_equal

words = st.lists(st.sampled_from("abc"), min_size=1, max_size=3).map(tuple)


def gens_equal(e1: Endo, e2: Endo) -> bool:
    return all(skein_equal(e1.images[g], e2.images[g]) for g in "abc")


def test_apply_examples():
    assert endo_apply(builtin_endo("xi1"), alpha * gamma) == alpha * gamma
    assert endo_apply(builtin_endo("tau_plus"), gamma) == beta
    assert endo_apply(builtin_endo("xi2"), beta) == -beta


def test_compose_examples():
    xi1, xi2, xi3 = (builtin_endo(n) for n in ("xi1", "xi2", "xi3"))
    assert gens_equal(endo_compose(xi1, xi1), builtin_endo("identity"))
    assert gens_equal(endo_compose(xi1, xi2), xi3)
    tp = builtin_endo("tau_plus")
    assert gens_equal(endo_compose(tp, builtin_endo("identity")), tp)


def test_unknown_endo():
    with pytest.raises(ValueError):
        builtin_endo("rho")


def test_group_relations():
    report = check_group_relations()
    assert report.passed, report.to_text()
    assert len(report.checks) == 5


@pytest.mark.parametrize("name", ["tau_plus", "tau_minus", "sigma"])
def test_inverses_have_short_images(name):
    e = builtin_endo(name)
    inv = find_inverse(e, 2)
    assert inv is not None
    assert all(inv.images[g].max_len() <= 2 for g in "abc")
    assert chains_agree([e, inv], [builtin_endo("identity")])


def test_sigma_inverse_is_sigma():
    inv = find_inverse(builtin_endo("sigma"))
    assert gens_equal(inv, builtin_endo("sigma"))


@pytest.mark.parametrize("name", ["tau_plus", "tau_minus", "sigma", "xi1", "xi2", "xi3"])
def test_builtins_well_defined(name):
    assert check_well_defined(builtin_endo(name)).passed


def test_fake_map_is_rejected():
    fake = Endo("fake", {"a": alpha, "b": beta, "c": beta})
    assert not check_well_defined(fake).passed


def test_involutions():
    assert check_involutions(3).passed


def test_invariant_sample_examples():
    sample = invariant_sample("xi1", 2)
    assert SkeinExpr.word("ac") * 2 in sample
    assert all(not any(len(w) == 1 and w[0] == "a" for w in e.terms) for e in sample)
    xi1 = builtin_endo("xi1")
    assert all(skein_equal(endo_apply(xi1, e), e) for e in sample)


def test_duality_examples():
    tp, sigma = builtin_endo("tau_plus"), builtin_endo("sigma")
    img = endo_apply(tp, alpha * gamma * 2)
    assert skein_equal(endo_apply(builtin_endo("xi3"), img), img)
    img = endo_apply(sigma, beta * beta)
    assert img == alpha * alpha
    assert skein_equal(endo_apply(builtin_endo("xi1"), img), img)
    xi2 = builtin_endo("xi2")
    e = alpha * beta * gamma
    assert skein_equal(endo_apply(xi2, e), e)
    img = endo_apply(tp, e)
    assert skein_equal(endo_apply(xi2, img), img)


def test_ac_plus_ca_is_xi2_anti_invariant():
    # ac + ca is negated by xi2, and so is its image ab + ba under tau+
    xi2, tp = builtin_endo("xi2"), builtin_endo("tau_plus")
    e = alpha * gamma + gamma * alpha
    img = endo_apply(tp, e)
    assert img == alpha * beta + beta * alpha
    assert skein_equal(endo_apply(xi2, e), -e)
    assert skein_equal(endo_apply(xi2, img), -img)


def test_tau_plus_commutes_with_xi2():
    tp, xi2 = builtin_endo("tau_plus"), builtin_endo("xi2")
    assert chains_agree([tp, xi2], [xi2, tp])


def test_duality_diagram():
    report = check_duality_diagram(3)
    assert report.passed, report.to_text()
    assert len(report.checks) == len(DUALITY_ARROWS) + 1


def test_arrow_to_wrong_involution_fails():
    # tau+ does not send xi1-invariants into xi2-invariants
    tp, xi2 = builtin_endo("tau_plus"), builtin_endo("xi2")
    bad = [e for e in invariant_sample("xi1", 2) if not skein_equal(endo_apply(xi2, endo_apply(tp, e)), endo_apply(tp, e))]
    assert bad


@given(words, st.sampled_from(["tau_plus", "tau_minus", "sigma", "xi1", "xi2", "xi3"]))
def test_endo_apply_is_multiplicative(w, name):
    e = builtin_endo(name)
    prod = SkeinExpr.word(w[:1]) * SkeinExpr.word(w[1:]) if len(w) > 1 else SkeinExpr.word(w)
    expected = endo_apply(e, SkeinExpr.word(w[:1]))
    if len(w) > 1:
        expected = expected * endo_apply(e, SkeinExpr.word(w[1:]))
    assert endo_apply(e, prod) == expected
