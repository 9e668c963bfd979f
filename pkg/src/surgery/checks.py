"""Regression harness over the published example values.

Each check recomputes a reported number or classification from scratch and
compares it with the literal value.  ``run_checks`` never raises for a failed
check; it reports it.
"""

from __future__ import annotations

import traceback
from dataclasses import dataclass
from typing import Callable

from . import chains
from .adjacency import (
    SplitHopfStructure,
    Verdict,
    certify_split_hopf_form,
    check_pair_classification,
    integral_adjacency_check,
    is_integer_homology_sphere,
    necessary_conditions,
    proper_sublinks,
)
from .corpus import load_diagram
from .enumeration import (
    enumerate_hopf_brunnian_slopes,
    enumerate_pair_solutions,
    enumerate_triple_obstructions,
    split_pair_solutions,
)
from .homology import h1, h1_order, presentation_matrix
from .links import FramedLink, linking_matrix, sublink
from .slopes import INFINITY, make_slope, slope_distance


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _trivial_slope_distance():
    d = slope_distance(INFINITY, make_slope(1, 5))
    return d == 5, f"distance(inf, 1/5) = {d}"


def _borromean_linking():
    lk = linking_matrix(load_diagram("borromean.pd"))
    ok = all(v == 0 for row in lk for v in row)
    return ok, f"linking matrix {lk}"


def _pair_determinant():
    bad = []
    for l in range(-4, 5):
        for q1 in (-3, -2, -1, 1, 2, 3):
            for q2 in (-3, -2, -1, 1, 2, 3):
                link = FramedLink([[0, l], [l, 0]], [make_slope(1, q1), make_slope(1, q2)])
                A = presentation_matrix(link)
                # canonical slopes carry the sign on the numerator
                if q1 > 0 and q2 > 0 and A != [[1, q2 * l], [q1 * l, 1]]:
                    bad.append(("matrix", l, q1, q2))
                expect = abs(q1 * q2 * l * l - 1)
                if h1_order(link) != (expect if expect else float("inf")):
                    bad.append(("order", l, q1, q2))
    return not bad, f"{len(bad)} mismatches against |q1 q2 l^2 - 1|"


def _triple(lk12, lk13, lk23, slopes):
    return FramedLink([[0, lk12, lk13], [lk12, 0, lk23], [lk13, lk23, 0]], slopes)


def _first_triple():
    link = _triple(1, 1, 0, ["1", "1/2", "1/2"])
    A = presentation_matrix(link)
    order = h1_order(link)
    found = any(
        o.linking == (1, 1, 0) and o.slopes == link.slopes and o.order == 3
        for o in enumerate_triple_obstructions(2)
    )
    ok = A == [[1, 2, 2], [1, 1, 0], [1, 0, 1]] and order == 3 and found
    return ok, f"matrix {A}, |H_1| = {order}, enumerated: {found}"


def _second_triple():
    link = _triple(1, 0, 1, ["1", "1/2", "1"])
    A = presentation_matrix(link)
    order = h1_order(link)
    found = any(
        o.linking == (1, 0, 1) and o.slopes == link.slopes and o.order == 3
        for o in enumerate_triple_obstructions(2)
    )
    ok = A == [[1, 2, 0], [1, 1, 1], [0, 2, 1]] and order == 3 and found
    return ok, f"matrix {A}, |H_1| = {order}, enumerated: {found}"


def _hopf_pair():
    link = FramedLink([[0, 1], [1, 0]], ["1", "1/2"])
    g = h1(link)
    rep = check_pair_classification(1, "1", "1/2")
    return g.is_trivial and rep.verdict is Verdict.PASS, f"H_1 = {g}, pair check {rep.verdict.value}"


def _pair_family():
    _, linked = split_pair_solutions(enumerate_pair_solutions(10, 10))
    expected = sorted(
        (l, a, b) for l in (-1, 1) for a, b in ((1, 2), (2, 1), (-1, -2), (-2, -1))
    )
    return linked == expected, f"linked solutions {linked}"


def _borromean_surgery():
    link = FramedLink(linking_matrix(load_diagram("borromean.pd")), ["1", "1", "1"])
    orders = [h1_order(sublink(link, s)) for s in proper_sublinks(3)]
    rep = integral_adjacency_check(link)
    ok = is_integer_homology_sphere(link) and orders == [1] * 6 and rep.passed
    return ok, f"|H_1| = {h1_order(link)}, sublinks {orders}, integral check {rep.verdict.value}"


def _inconsistent_signs():
    link = FramedLink([[0] * 3] * 3, ["1", "-1", "1"])
    rep = integral_adjacency_check(link)
    return rep.passed, f"integral check {rep.verdict.value}"


def _hopf_chain_conditions():
    link = FramedLink(linking_matrix(load_diagram("chain3.pd")), ["1/2", "1", "1/2"])
    rep = necessary_conditions(link)
    order = h1_order(link)
    ok = rep.passed and order == 3 and str(h1(link)) == "Z/3"
    return ok, f"necessary conditions {rep.verdict.value}, H_1 = {h1(link)}"


def _hopf_chain_lens():
    lens = chains.chain_to_lens("1/2,1,1/2")
    target = chains.LensSpace.make(3, 1)
    ok = (
        lens == target.mirror()
        and chains.lens_equivalent(lens, chains.LensSpace.make(3, 2), oriented=True)
        and not chains.lens_equivalent(lens, target, oriented=True)
        and chains.lens_equivalent(lens, target, oriented=False)
    )
    return ok, f"chain (1/2, 1, 1/2) gives {lens}; expected -L(3,1) = {target.mirror()}"


def _split_hopf_self_adjacency():
    link = FramedLink([[0, 1, 0], [1, 0, 0], [0, 0, 0]], ["1", "1/2", "1/7"])
    rep = certify_split_hopf_form(link, SplitHopfStructure(((0, 1),), (2,)))
    pairs = list(enumerate_hopf_brunnian_slopes(2, [(0, 1)], 5))
    ok = rep.verdict is Verdict.PASS and len(pairs) == 4
    return ok, f"certificate {rep.verdict.value}, {len(pairs)} slope pairs on a Hopf link"


CHECKS: dict[str, Callable[[], tuple[bool, str]]] = {
    "trivial-slope-distance": _trivial_slope_distance,
    "borromean-linking": _borromean_linking,
    "pair-determinant": _pair_determinant,
    "triple-obstruction-1": _first_triple,
    "triple-obstruction-2": _second_triple,
    "hopf-pair-surgery": _hopf_pair,
    "pair-classification-complete": _pair_family,
    "borromean-poincare-shadow": _borromean_surgery,
    "integral-signs-independent": _inconsistent_signs,
    "hopf-chain-conditions": _hopf_chain_conditions,
    "hopf-chain-lens": _hopf_chain_lens,
    "split-hopf-self-adjacency": _split_hopf_self_adjacency,
}


def run_checks(names=None) -> list[CheckResult]:
    results = []
    for name in names or CHECKS:
        try:
            ok, detail = CHECKS[name]()
        except Exception as exc:  # a crash is a failed check, not a crashed run
            ok, detail = False, "".join(traceback.format_exception_only(type(exc), exc)).strip()
        results.append(CheckResult(name, bool(ok), detail))
    return results
