"""Bounded brute-force searches over linking numbers and 1/k slopes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .adjacency import HOPF_PAIR_SLOPES, SplitHopfStructure, check_pair_classification
from .homology import h1_order
from .links import FramedLink
from .slopes import Slope, make_slope

__all__ = [
    "TripleObstruction",
    "enumerate_pair_solutions",
    "split_pair_solutions",
    "enumerate_triple_obstructions",
    "enumerate_hopf_brunnian_slopes",
    "split_hopf_link",
]


def _nonzero(bound: int) -> list[int]:
    return [k for k in range(-bound, bound + 1) if k]


def _pair_link(lk: int, q1: int, q2: int) -> FramedLink:
    return FramedLink([[0, lk], [lk, 0]], [make_slope(1, q1), make_slope(1, q2)])


def enumerate_pair_solutions(bound_l: int, bound_q: int) -> list[tuple[int, int, int]]:
    """All ``(lk, q1, q2)`` with ``|lk| <= bound_l``, ``1 <= |qi| <= bound_q`` for
    which ``(1/q1, 1/q2)`` surgery on a two-component link with linking ``lk``
    has trivial H_1.  Sorted lexicographically.
    """
    if bound_l < 0 or bound_q < 1:
        raise ValueError("bounds must be nonnegative (linking) and positive (slopes)")
    out = []
    for lk in range(-bound_l, bound_l + 1):
        for q1 in _nonzero(bound_q):
            for q2 in _nonzero(bound_q):
                if h1_order(_pair_link(lk, q1, q2)) == 1:
                    out.append((lk, q1, q2))
    return out


def split_pair_solutions(solutions) -> tuple[list, list]:
    """Partition into the unlinked family and the linked (exceptional) one."""
    zero = [s for s in solutions if s[0] == 0]
    return zero, [s for s in solutions if s[0] != 0]


@dataclass(frozen=True)
class TripleObstruction:
    linking: tuple[int, int, int]  # (lk12, lk13, lk23)
    slopes: tuple[Slope, Slope, Slope]
    order: object  # int or math.inf

    def link(self) -> FramedLink:
        a, b, c = self.linking
        return FramedLink([[0, a, b], [a, 0, c], [b, c, 0]], self.slopes)


def enumerate_triple_obstructions(bound_q: int) -> list[TripleObstruction]:
    """Three-component configurations with slopes ``1/q`` (``|q| <= bound_q``)
    whose pairs all pass the pair classification but whose full surgery is not
    a homology sphere.
    """
    if bound_q < 2:
        raise ValueError("bound must be at least 2")
    slopes = [make_slope(1, q) for q in _nonzero(bound_q)]
    out = []
    for pattern in itertools.product((-1, 0, 1), repeat=3):
        a, b, c = pattern
        for s in itertools.product(slopes, repeat=3):
            pairs = ((a, s[0], s[1]), (b, s[0], s[2]), (c, s[1], s[2]))
            if not all(check_pair_classification(*p).passed for p in pairs):
                continue
            ob = TripleObstruction(pattern, s, None)
            order = h1_order(ob.link())
            if order != 1:
                out.append(TripleObstruction(pattern, s, order))
    return out


def split_hopf_link(n: int, pairs: Sequence[Sequence[int]], slopes) -> FramedLink:
    """Linking data of a split union of positive Hopf pairs and unknots."""
    lk = [[0] * n for _ in range(n)]
    for a, b in pairs:
        lk[a][b] = lk[b][a] = 1
    return FramedLink(lk, slopes)


def enumerate_hopf_brunnian_slopes(
    n: int, pairs: Sequence[Sequence[int]], bound_k: int
) -> Iterator[tuple[Slope, ...]]:
    """Every multi-slope a split Hopf/unknot link accepts, with ``|k| <= bound_k``
    on unknot components ``1/k``.

    Emitted in product order: Hopf pairs first (in the order given, each
    running through the four allowed slope pairs), then singletons in index
    order with ``k`` ascending.
    """
    structure = SplitHopfStructure.from_pairs(n, pairs)
    structure.validate(n)
    singles = [make_slope(1, k) for k in _nonzero(bound_k)]
    choices = [HOPF_PAIR_SLOPES] * len(structure.pairs) + [singles] * len(structure.singletons)
    for combo in itertools.product(*choices):
        slopes = [None] * n
        for (a, b), (sa, sb) in zip(structure.pairs, combo):
            slopes[a], slopes[b] = sa, sb
        for i, s in zip(structure.singletons, combo[len(structure.pairs):]):
            slopes[i] = s
        yield tuple(slopes)
