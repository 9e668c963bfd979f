import pytest

from surgery.adjacency import (
    SplitHopfStructure,
    Verdict,
    certify_split_hopf_form,
    check_pair_classification,
    necessary_conditions,
)
from surgery.enumeration import (
    enumerate_hopf_brunnian_slopes,
    enumerate_pair_solutions,
    enumerate_triple_obstructions,
    split_hopf_link,
    split_pair_solutions,
)
from surgery.homology import h1_order
from surgery.links import FramedLink, sublink
from surgery.slopes import make_slope

EXCEPTIONAL = sorted(
    (lk, a, b) for lk in (1, -1) for a, b in ((1, 2), (2, 1), (-1, -2), (-2, -1))
)


def test_small_bounds():
    sols = enumerate_pair_solutions(1, 1)
    zero, exc = split_pair_solutions(sols)
    assert zero == [(0, a, b) for a in (-1, 1) for b in (-1, 1)]
    assert exc == []


def test_exceptional_family_bounds_10():
    zero, exc = split_pair_solutions(enumerate_pair_solutions(10, 10))
    assert exc == EXCEPTIONAL
    assert len(zero) == 20 * 20


def test_solutions_are_homology_spheres():
    for lk, q1, q2 in enumerate_pair_solutions(4, 4):
        link = FramedLink([[0, lk], [lk, 0]], [make_slope(1, q1), make_slope(1, q2)])
        assert h1_order(link) == 1
        assert h1_order(sublink(link, [0])) == h1_order(sublink(link, [1])) == 1


def test_bad_bounds():
    with pytest.raises(ValueError):
        enumerate_pair_solutions(-1, 3)
    with pytest.raises(ValueError):
        enumerate_triple_obstructions(1)


def test_triple_obstructions():
    found = {(o.linking, tuple(str(s) for s in o.slopes)): o.order for o in enumerate_triple_obstructions(2)}
    assert found[((1, 1, 0), ("1", "1/2", "1/2"))] == 3
    assert found[((1, 0, 1), ("1", "1/2", "1"))] == 3
    assert not any(lk == (0, 0, 0) for lk, _ in found)


def test_triple_obstructions_are_genuine():
    for o in enumerate_triple_obstructions(3):
        a, b, c = o.linking
        s = o.slopes
        for lk, x, y in ((a, s[0], s[1]), (b, s[0], s[2]), (c, s[1], s[2])):
            assert check_pair_classification(lk, x, y).passed
        assert o.order != 1 and h1_order(o.link()) == o.order


def test_hopf_brunnian_counts():
    assert len(list(enumerate_hopf_brunnian_slopes(2, [(0, 1)], 5))) == 4
    singles = list(enumerate_hopf_brunnian_slopes(1, [], 3))
    assert sorted(s[0].q * s[0].p for s in singles) == [-3, -2, -1, 1, 2, 3]
    assert len(list(enumerate_hopf_brunnian_slopes(3, [(0, 1)], 2))) == 16


def test_hopf_brunnian_outputs_certify():
    for n, pairs in ((3, [(0, 1)]), (4, [(0, 1), (2, 3)]), (4, [(1, 3)])):
        structure = SplitHopfStructure.from_pairs(n, pairs)
        stream = list(enumerate_hopf_brunnian_slopes(n, pairs, 2))
        assert stream == list(enumerate_hopf_brunnian_slopes(n, pairs, 2))
        for slopes in stream:
            link = split_hopf_link(n, pairs, slopes)
            assert certify_split_hopf_form(link, structure).verdict is Verdict.PASS
            assert necessary_conditions(link).verdict is not Verdict.FAIL


def test_overlapping_pairs_rejected():
    with pytest.raises(ValueError, match="inconsistent declaration"):
        list(enumerate_hopf_brunnian_slopes(3, [(0, 1), (1, 2)], 2))
