"""Acceptance criteria, one test each.  Every test prints a single
``PASS``/``FAIL`` line with the criterion number and its measured time."""

import io
import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from surgery import chains
from surgery.adjacency import Verdict, integral_adjacency_check, proper_sublinks
from surgery.chains import (
    ChainPresentation,
    LensSpace,
    blow_down_sequence_oracle,
    chain_linking_matrix,
    chain_to_lens,
    dual_link_oracle,
    dual_slopes_integral,
    lens_equivalent,
)
from surgery.cli import main
from surgery.corpus import load_corpus_link
from surgery.enumeration import (
    enumerate_pair_solutions,
    enumerate_triple_obstructions,
    split_pair_solutions,
)
from surgery.homology import determinant, h1_order, invariant_factors, presentation_matrix
from surgery.links import FramedLink, sublink
from surgery.slopes import INFINITY, cf_chain_evaluate, cf_negative_expand, make_slope, slope_distance
from oracles import naive_invariant_factors, nested_cf
from test_chains import random_lens_chain, random_move

# wall-clock limits in seconds
LIMITS = {1: 1.0, 2: 1.0, 3: 1.0, 4: 1.0, 5: 5.0, 6: 10.0, 7: 10.0, 8: 1.0, 9: 5.0}


@pytest.fixture
def criterion(capsys):
    state = {}

    def record(number, ok, detail, elapsed=None):
        limit = LIMITS.get(number)
        timed = elapsed is None or limit is None or elapsed < limit
        state.update(ok=ok and timed)
        clock = "" if elapsed is None else f" [{elapsed:.2f}s" + (f" / {limit:g}s]" if limit else "]")
        with capsys.disabled():
            print(f"\n{'PASS' if ok and timed else 'FAIL'} criterion {number}: {detail}{clock}")
        assert ok, detail
        assert timed, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"

    return record


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def test_criterion_01_pair_determinant(criterion):
    def run():
        bad, count = [], 0
        for l in range(-10, 11):
            for q1 in range(-10, 11):
                for q2 in range(-10, 11):
                    if not q1 or not q2:
                        continue
                    count += 1
                    link = FramedLink([[0, l], [l, 0]], [make_slope(1, q1), make_slope(1, q2)])
                    expect = abs(q1 * q2 * l * l - 1) or math.inf
                    if h1_order(link) != expect:
                        bad.append((l, q1, q2))
        return count, bad

    (count, bad), dt = timed(run)
    criterion(1, not bad, f"h1_order = |q1 q2 l^2 - 1| on {count} cases, {len(bad)} mismatches", dt)


def test_criterion_02_triple_matrices(criterion):
    def run():
        first = FramedLink([[0, 1, 1], [1, 0, 0], [1, 0, 0]], ["1", "1/2", "1/2"])
        second = FramedLink([[0, 1, 0], [1, 0, 1], [0, 1, 0]], ["1", "1/2", "1"])
        found = {(o.linking, o.slopes, o.order) for o in enumerate_triple_obstructions(2)}
        return (
            presentation_matrix(first) == [[1, 2, 2], [1, 1, 0], [1, 0, 1]]
            and presentation_matrix(second) == [[1, 2, 0], [1, 1, 1], [0, 2, 1]]
            and h1_order(first) == h1_order(second) == 3
            and ((1, 1, 0), first.slopes, 3) in found
            and ((1, 0, 1), second.slopes, 3) in found
        )

    ok, dt = timed(run)
    criterion(2, ok, "both 3x3 configurations have order 3 and are enumerated", dt)


def test_criterion_03_hopf_chain_lens(criterion):
    def run():
        lens = chain_to_lens("1/2,1,1/2")
        return (
            lens_equivalent(lens, LensSpace(3, 2), oriented=True)
            and lens_equivalent(lens, LensSpace(3, 1), oriented=False)
            and not lens_equivalent(lens, LensSpace(3, 1), oriented=True)
        ), lens

    (ok, lens), dt = timed(run)
    criterion(3, ok, f"(1/2, 1, 1/2) -> {lens} = -L(3,1)", dt)


def test_criterion_04_borromean_shadow(criterion):
    def run():
        link = load_corpus_link("borromean.json")
        orders = [h1_order(sublink(link, idx)) for idx in proper_sublinks(3)]
        verdict = integral_adjacency_check(link).verdict
        return h1_order(link) == 1 and orders == [1] * 6 and verdict is Verdict.INCONCLUSIVE

    ok, dt = timed(run)
    criterion(4, ok, "Borromean (1,1,1): full and all proper sublinks order 1, integral check passes", dt)


def test_criterion_05_pair_completeness(criterion):
    def run():
        _, exc = split_pair_solutions(enumerate_pair_solutions(25, 25))
        expected = {
            (lk, a, b) for lk in (1, -1) for a, b in ((1, 2), (2, 1), (-1, -2), (-2, -1))
        }
        return set(exc) == expected and len(exc) == 8, len(exc)

    (ok, count), dt = timed(run)
    criterion(5, ok, f"bounds (25, 25): {count} exceptional solutions, the expected eight", dt)


def test_criterion_06_snf_oracle(criterion):
    rng = random.Random(20240601)
    mats = [[[rng.randint(-10, 10) for _ in range(5)] for _ in range(5)] for _ in range(1000)]

    def run():
        return [i for i, A in enumerate(mats) if invariant_factors(A) != naive_invariant_factors(A)]

    bad, dt = timed(run)
    criterion(6, not bad, f"1000 random 5x5 matrices, {len(bad)} disagreements with the naive oracle", dt)


def test_criterion_07_dual_slopes(criterion):
    def run():
        count, bad = 0, []
        for n in range(1, 5):
            for coeffs in itertools.product(range(-3, 4), repeat=n):
                ch = ChainPresentation(tuple(make_slope(c, 1) for c in coeffs))
                B = chain_linking_matrix(ch)
                if abs(determinant(B)) != 1:
                    continue
                count += 1
                lk, slopes = dual_slopes_integral(B)
                if slopes != blow_down_sequence_oracle(ch) or (lk, slopes) != dual_link_oracle(ch):
                    bad.append(coeffs)
        return count, bad

    (count, bad), dt = timed(run)
    criterion(7, not bad and count > 0, f"{count} unimodular chains, {len(bad)} disagreements (slopes and linking)", dt)


def test_criterion_08_continued_fractions(criterion):
    def run():
        bad, count = [], 0
        for p in range(2, 51):
            for q in range(1, p):
                if math.gcd(p, q) != 1:
                    continue
                count += 1
                cf = cf_negative_expand(Fraction(p, q))
                ok = (
                    cf_chain_evaluate(cf) == make_slope(p, q)
                    and nested_cf(cf) == Fraction(p, q)
                    and chain_to_lens([make_slope(c, 1) for c in cf]) == LensSpace(p, q)
                )
                if not ok:
                    bad.append((p, q))
        return count, bad

    (count, bad), dt = timed(run)
    criterion(8, not bad, f"{count} fractions round-trip and present L(p,q), {len(bad)} failures", dt)


def test_criterion_09_move_invariance(criterion):
    rng = random.Random(99)

    def run():
        moves, bad = 0, []
        while moves < 500:
            ch = random_lens_chain(rng)
            before = chain_to_lens(ch)
            for _ in range(5):
                if not ch.coeffs or moves >= 500:
                    break
                ch = random_move(ch, rng)
                moves += 1
                if not lens_equivalent(chain_to_lens(ch), before, oriented=True):
                    bad.append(str(ch))
        return moves, bad

    (moves, bad), dt = timed(run)
    criterion(9, not bad, f"{moves} random moves, {len(bad)} changed the oriented lens space", dt)


def test_criterion_10_slope_distance(criterion):
    d = slope_distance(INFINITY, make_slope(1, 5))
    criterion(10, d == 5, f"distance(inf, 1/5) = {d}")


def test_criterion_11_verify(criterion, monkeypatch):
    out = io.StringIO()
    fresh = main(["verify"], out=out)
    summary = out.getvalue().splitlines()[-1]
    monkeypatch.setattr(chains, "LENS_ORIENTATION", -1)
    out = io.StringIO()
    mutated = main(["verify"], out=out)
    named = "FAIL hopf-chain-lens" in out.getvalue()
    ok = fresh == 0 and summary == "12/12 reference checks pass" and mutated != 0 and named
    criterion(11, ok, f"fresh build exit {fresh} ({summary}); flipped orientation exit {mutated}")
