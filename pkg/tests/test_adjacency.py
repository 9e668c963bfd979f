import itertools

import pytest
from hypothesis import given, settings

from surgery.adjacency import (
    HOPF_PAIR_SLOPES,
    SplitHopfStructure,
    Verdict,
    certify_split_hopf_form,
    check_pair_classification,
    integral_adjacency_check,
    is_integer_homology_sphere,
    necessary_conditions,
    proper_sublinks,
)
from surgery.corpus import load_corpus_link
from surgery.homology import h1_order
from surgery.links import FramedLink, sublink
from surgery.slopes import make_slope
from test_links import links


def pair(lk, s1, s2):
    return FramedLink([[0, lk], [lk, 0]], [s1, s2])


def test_pair_examples():
    assert check_pair_classification(1, "1", "1/2").verdict is Verdict.PASS
    assert check_pair_classification(-1, "-1/2", "-1").verdict is Verdict.PASS
    assert check_pair_classification(0, "1/5", "-1/3").verdict is Verdict.PASS
    rep = check_pair_classification(1, "1", "1")
    assert rep.verdict is Verdict.FAIL and rep.violations[0].components == (0, 1)
    assert check_pair_classification(2, "1", "1/2").verdict is Verdict.FAIL
    assert check_pair_classification(0, "2", "1").violations[0].components == (0,)


def test_pair_classification_equals_homology_sphere_condition():
    # independent oracle: H_1 of the pair surgery is trivial
    for lk in range(-25, 26):
        for q1 in range(-25, 26):
            for q2 in range(-25, 26):
                if not q1 or not q2:
                    continue
                s1, s2 = make_slope(1, q1), make_slope(1, q2)
                expected = h1_order(pair(lk, s1, s2)) == 1
                assert check_pair_classification(lk, s1, s2).passed == expected, (lk, q1, q2)


def test_hopf_pair_slopes_are_homology_spheres():
    assert len(HOPF_PAIR_SLOPES) == 4
    for s1, s2 in HOPF_PAIR_SLOPES:
        for lk in (1, -1):
            assert h1_order(pair(lk, s1, s2)) == 1


def test_proper_sublinks_order():
    assert proper_sublinks(3) == [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]
    assert len(proper_sublinks(5)) == 2 ** 5 - 2


def test_borromean_shadow():
    link = load_corpus_link("borromean.json")
    rep = necessary_conditions(link)
    assert rep.verdict is Verdict.INCONCLUSIVE and rep.verdict.exit_code == 2
    assert integral_adjacency_check(link).verdict is Verdict.INCONCLUSIVE
    assert is_integer_homology_sphere(link)


def test_hopf_chain_passes():
    link = load_corpus_link("chain3.json")
    assert necessary_conditions(link).verdict is Verdict.INCONCLUSIVE
    assert necessary_conditions(link, homology_sphere=True).verdict is Verdict.FAIL


def test_bad_triple():
    link = load_corpus_link("bad-triple.json")
    rep = necessary_conditions(link, homology_sphere=True)
    assert rep.verdict is Verdict.FAIL and rep.verdict.exit_code == 1
    assert any("order 3" in v.detail for v in rep.violations)
    # without the homology sphere hypothesis this is a relabelled Hopf chain
    assert necessary_conditions(link).verdict is Verdict.INCONCLUSIVE


def test_linking_clause_for_four_components():
    lk = [[0, 1, 1, 0], [1, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]]
    link = FramedLink(lk, ["1", "1/2", "1/2", "1"])
    rep = necessary_conditions(link)
    assert rep.verdict is Verdict.FAIL
    assert any(v.condition.startswith("component of a linked pair") for v in rep.violations)


def test_two_components_skip_pair_checks():
    # proper sublinks of a pair are the single components only
    rep = necessary_conditions(pair(3, make_slope(1, 1), make_slope(1, 1)))
    assert rep.verdict is Verdict.INCONCLUSIVE
    rep = necessary_conditions(pair(0, make_slope(2, 1), make_slope(1, 1)))
    assert rep.verdict is Verdict.FAIL and rep.violations[0].components == (0,)


def test_needs_two_components():
    with pytest.raises(ValueError):
        necessary_conditions(FramedLink([[0]], ["1"]))


@settings(max_examples=150, deadline=None)
@given(links(max_n=4))
def test_pass_implies_trivial_sublinks(link):
    if link.n < 2 or any(s.is_infinite for s in link.slopes):
        return
    rep = necessary_conditions(link)
    if rep.verdict is not Verdict.FAIL:
        for idx in proper_sublinks(link.n):
            assert h1_order(sublink(link, idx)) == 1
    assert necessary_conditions(link).to_json() == rep.to_json()


def test_report_rendering():
    rep = necessary_conditions(load_corpus_link("bad-triple.json"), homology_sphere=True)
    assert str(rep).splitlines()[0] == "verdict: fail"
    d = rep.to_dict()
    assert d["verdict"] == "fail" and d["violations"]


def test_split_hopf_certification():
    good = FramedLink([[0, 1, 0], [1, 0, 0], [0, 0, 0]], ["1", "1/2", "-1/4"])
    structure = SplitHopfStructure.from_pairs(3, [(0, 1)])
    assert structure.singletons == (2,)
    assert certify_split_hopf_form(good, structure).verdict is Verdict.PASS
    coupled = good.with_slopes(["1", "-1/2", "1/3"])
    rep = certify_split_hopf_form(coupled, structure)
    assert rep.verdict is Verdict.FAIL and rep.violations[0].condition == "sign coupling violated"
    rep = certify_split_hopf_form(good.with_slopes(["1", "1/2", "2"]), structure)
    assert rep.violations[0].condition == "unknot slope must be 1/k"


def test_split_hopf_inconsistent():
    link = FramedLink([[0, 1, 0], [1, 0, 0], [0, 0, 0]], ["1", "1/2", "1"])
    with pytest.raises(ValueError, match="inconsistent declaration"):
        certify_split_hopf_form(link, SplitHopfStructure.from_pairs(3, [(0, 2)]))
    with pytest.raises(ValueError, match="inconsistent declaration"):
        certify_split_hopf_form(link, SplitHopfStructure(((0, 1),), ()))


def test_integral_check():
    ok = FramedLink([[0, 0, 0]] * 3, ["1", "-1", "1"])
    assert integral_adjacency_check(ok).verdict is Verdict.INCONCLUSIVE
    bad = FramedLink([[0, 0, 0]] * 3, ["1", "2", "1"])
    assert integral_adjacency_check(bad).verdict is Verdict.FAIL
    with pytest.raises(ValueError, match="not an integral multi-slope"):
        integral_adjacency_check(FramedLink([[0, 0], [0, 0]], ["1", "1/2"]))


def test_integral_signs_independent():
    for signs in itertools.product((1, -1), repeat=3):
        link = FramedLink([[0] * 3] * 3, [make_slope(s, 1) for s in signs])
        assert integral_adjacency_check(link).verdict is Verdict.INCONCLUSIVE
        assert is_integer_homology_sphere(link)
