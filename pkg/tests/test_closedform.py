import pytest

from divbeta.betafamily import enumerate_j, max_denominator, split_index
from divbeta.closedform import (
    CaseTag,
    closed_form_p5,
    correction_c,
    correction_d,
    delta_power_form,
    recursive_top_form,
    theorem_form,
)
from divbeta.conditions import check_all
from divbeta.level1 import Level1Form


def terms5(f):
    return f.reduce(5).terms()


def test_corrections_small_cases():
    assert correction_c(0, 2, 1) + correction_d(0, 2, 1) == Level1Form.from_terms([(42, 24, 4), (41, 27, 3)])
    assert correction_c(1, 4, 2).terms() == [(2260, 720, 6)]
    assert terms5(correction_c(1, 4, 2)) == [(2260, 720, 1)]


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_corrections_have_the_right_weight(n, r):
    for m in range(0, n - 1):
        for f in (correction_c(m, n, r), correction_d(m, n, r)):
            (a, b, _), = f.terms()
            assert 12 * a + 4 * b == 24 * r * 5**n


def test_correction_index_checks():
    with pytest.raises(ValueError):
        correction_c(0, 1, 1)
    with pytest.raises(ValueError):
        correction_d(1, 2, 1)
    with pytest.raises(ValueError):
        correction_c(2, 3, 1)
    with pytest.raises(ValueError):
        correction_c(0, 2, 0)


def test_case_tag_invariant():
    with pytest.raises(ValueError):
        CaseTag("pure-delta", 1)
    with pytest.raises(ValueError):
        CaseTag("full-sum")


def test_closed_form_examples():
    f, tag = closed_form_p5(5, 5)
    assert f == Level1Form.monomial(10, 0) and tag == CaseTag("pure-delta")
    f, tag = closed_form_p5(1250, 700)
    assert f.terms() == [(2500, 0, 1), (2300, 600, 8), (2275, 675, 6)]
    assert terms5(f) == [(2500, 0, 1), (2300, 600, 3), (2275, 675, 1)]
    assert tag == CaseTag("full-sum", 1)
    f, tag = closed_form_p5(50, 29)
    assert f.terms() == [(100, 0, 1), (92, 24, 8), (91, 27, 6)] and tag == CaseTag("full-sum", 1)
    assert check_all(f, 5, 50, 29).passed


def test_non_family_override():
    with pytest.raises(ValueError):
        closed_form_p5(25, 29)
    f, tag = closed_form_p5(25, 29, allow_nonfamily=True)
    assert f.terms() == [(50, 0, 1), (42, 24, 4), (41, 27, 3)] and tag == CaseTag("full-sum", 1)
    assert check_all(f, 5, 25, 29).passed


def test_theorem_sweep_passes_all_conditions():
    for n in range(4):
        for r in (1, 2, 3):
            i = r * 5**n
            for j in enumerate_j(5, i):
                f, tag = closed_form_p5(i, j)
                rep = check_all(f, 5, i, j)
                assert rep.passed and rep.c4_at_2 == "certified", (i, j, rep.failed_stage)
                if tag.branch != "pure-delta":
                    # q-order comes from the last correction term
                    n_, r_, u = n, r, tag.u
                    last = correction_c(u - 1, n_, r_) if tag.branch == "trimmed-sum" else correction_d(u - 1, n_, r_)
                    assert f.ord_q() == last.terms()[0][0]


@pytest.mark.parametrize("n,r", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_recursion_agrees_mod_5(n, r):
    f = recursive_top_form(n, r)
    g, _ = closed_form_p5(r * 5 ** (n + 1), max_denominator(5, n + 1))
    assert f.reduce(5) == g.reduce(5)


def test_recursion_first_step():
    f = recursive_top_form(1, 2)
    assert f == Level1Form.monomial(20, 0) ** 5 + correction_c(0, 2, 2) + correction_d(0, 2, 2)
    assert f.terms() == [(100, 0, 1), (92, 24, 8), (91, 27, 6)]
    with pytest.raises(ValueError):
        recursive_top_form(1, 1)


def test_delta_power_forms():
    for i in range(1, 30):
        assert delta_power_form(7, *split_index(7, i)) == Level1Form.monomial(4 * i, 0)
    with pytest.raises(ValueError):
        delta_power_form(7, 7, 0)
    assert delta_power_form(11, 1, 1) == Level1Form.monomial(110, 0)
    assert delta_power_form(677, 1, 0) == Level1Form.monomial(38194, 0)
    assert delta_power_form(13, 2, 1) == Level1Form.monomial(14 * 2 * 13, 0)
    assert delta_power_form(17, 1, 0, conjecture=True) == Level1Form.monomial(24, 0)
    with pytest.raises(ValueError):
        delta_power_form(5, 1, 0)
    with pytest.raises(ValueError):
        delta_power_form(17, 1, 0)


@pytest.mark.parametrize("p", [11, 13])
def test_other_prime_forms_pass(p):
    for n in (0, 1):
        for r in (1, 2):
            i = r * p**n
            f = delta_power_form(p, r, n)
            for j in range(1, p**n + 1):
                rep = check_all(f, p, i, j)
                assert rep.passed and rep.c4_at_2 == "certified", (p, i, j)


def test_theorem_form_dispatch():
    assert theorem_form(5, 50, 29) == closed_form_p5(50, 29)[0]
    assert theorem_form(11, 11, 11) == Level1Form.monomial(110, 0)
    with pytest.raises(ValueError):
        theorem_form(11, 11, 12)
    with pytest.raises(ValueError):
        theorem_form(7, 7, 2)
    assert theorem_form(7, 7, 2, conjecture=True) == Level1Form.monomial(28, 0)
