"""Algebraic checks for n-adjacency to S^3 on linking data and slopes.

The characterizations involve geometric predicates (unknotted, Brunnian,
split) that linking numbers cannot see.  Checks that only verify necessary
algebraic conditions therefore end in ``Verdict.INCONCLUSIVE`` rather than a
plain pass.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .homology import h1_order
from .links import FramedLink, sublink
from .slopes import Slope, SlopeLike, as_slope, make_slope

__all__ = [
    "Verdict",
    "Violation",
    "AdjacencyReport",
    "SplitHopfStructure",
    "HOPF_PAIR_SLOPES",
    "check_pair_classification",
    "necessary_conditions",
    "certify_split_hopf_form",
    "integral_adjacency_check",
    "is_integer_homology_sphere",
    "proper_sublinks",
]

HALF = make_slope(1, 2)
ONE = make_slope(1, 1)
HOPF_PAIR_SLOPES = (
    (ONE, HALF),
    (HALF, ONE),
    (-ONE, -HALF),
    (-HALF, -ONE),
)

GEOMETRIC_CAVEAT = (
    "linking numbers and H_1 only: unknottedness, Brunnian and split structure are assumed, not checked"
)


class Verdict(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive-pass"

    @property
    def exit_code(self) -> int:
        return {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.INCONCLUSIVE: 2}[self]


@dataclass(frozen=True)
class Violation:
    components: tuple[int, ...]
    condition: str
    detail: str

    def to_dict(self) -> dict:
        return {"components": list(self.components), "condition": self.condition, "detail": self.detail}


@dataclass(frozen=True)
class AdjacencyReport:
    verdict: Verdict
    violations: tuple[Violation, ...] = ()
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if (self.verdict is Verdict.FAIL) != bool(self.violations):
            raise ValueError("a report fails exactly when it lists violations")

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.FAIL

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "violations": [v.to_dict() for v in self.violations],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def __str__(self):
        lines = [f"verdict: {self.verdict.value}"]
        for v in self.violations:
            comps = ",".join(str(i) for i in v.components)
            lines.append(f"  [{comps}] {v.condition}: {v.detail}")
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


def _report(violations: Sequence[Violation], ok: Verdict, notes=()) -> AdjacencyReport:
    if violations:
        return AdjacencyReport(Verdict.FAIL, tuple(violations), tuple(notes))
    return AdjacencyReport(ok, (), tuple(notes))


def _order_str(order) -> str:
    return "infinite" if order == float("inf") else str(order)


def check_pair_classification(lk: int, s1: SlopeLike, s2: SlopeLike) -> AdjacencyReport:
    """Slopes/linking allowed for a two-component self-adjacency of S^3.

    Either ``lk == 0`` and both slopes are ``1/k``, or ``|lk| == 1`` and the
    slopes are ``+-(1, 1/2)`` or ``+-(1/2, 1)``.
    """
    s1, s2 = as_slope(s1), as_slope(s2)
    if s1.is_infinite or s2.is_infinite:
        raise ValueError("pair classification needs finite slopes")
    bad = []
    for i, s in enumerate((s1, s2)):
        if not s.is_reciprocal:
            bad.append(Violation((i,), "unknot slope must be 1/k", f"slope {s}"))
    if abs(lk) > 1:
        bad.append(Violation((0, 1), "linking number must be 0 or +-1", f"lk = {lk}"))
    elif abs(lk) == 1 and not bad and (s1, s2) not in HOPF_PAIR_SLOPES:
        bad.append(
            Violation(
                (0, 1),
                "linked pair slopes must be +-(1, 1/2) or +-(1/2, 1)",
                f"slopes ({s1}, {s2}) with lk = {lk}",
            )
        )
    return _report(bad, Verdict.PASS)


def proper_sublinks(n: int) -> list[tuple[int, ...]]:
    """Nonempty proper index sets ordered by size, then lexicographically."""
    return [c for k in range(1, n) for c in itertools.combinations(range(n), k)]


def necessary_conditions(link: FramedLink, homology_sphere: bool = False) -> AdjacencyReport:
    """Algebraic necessary conditions for ``link`` to be the surgery dual of an
    n-adjacency to S^3.

    * every nonempty proper sublink surgers to a homology sphere;
    * every proper two-component sublink passes the pair classification;
    * when ``n >= 4``, or ``n == 3`` and the full surgery is a homology
      sphere, components of a linked pair link nothing else.

    ``homology_sphere=True`` additionally asserts that the full surgery is an
    integer homology sphere and reports a violation if it is not.
    """
    n = link.n
    if n < 2:
        raise ValueError("adjacency needs at least two components")
    if any(s.is_infinite for s in link.slopes):
        raise ValueError("necessary_conditions needs finite slopes")
    bad = []

    for idx in (c for c in proper_sublinks(n) if len(c) == 2):
        i, j = idx
        rep = check_pair_classification(link.linking[i][j], link.slopes[i], link.slopes[j])
        for v in rep.violations:
            comps = tuple(idx[k] for k in v.components)
            bad.append(Violation(comps, v.condition, v.detail))

    for idx in proper_sublinks(n):
        order = h1_order(sublink(link, idx))
        if order != 1:
            bad.append(
                Violation(idx, "proper sublink must surger to S^3", f"|H_1| = order {_order_str(order)}")
            )

    full = h1_order(link)
    if homology_sphere and full != 1:
        bad.append(
            Violation(
                tuple(range(n)),
                "full surgery must be an integer homology sphere",
                f"|H_1| = order {_order_str(full)}",
            )
        )
    if n >= 4 or (n == 3 and full == 1):
        for i, j in itertools.combinations(range(n), 2):
            if abs(link.linking[i][j]) != 1:
                continue
            for c in (i, j):
                for k in range(n):
                    if k not in (i, j) and link.linking[c][k]:
                        bad.append(
                            Violation(
                                tuple(sorted((c, k))),
                                "component of a linked pair must link nothing else",
                                f"lk({c},{k}) = {link.linking[c][k]} while |lk({i},{j})| = 1",
                            )
                        )

    notes = [f"full surgery has |H_1| = {_order_str(full)}", GEOMETRIC_CAVEAT]
    return _report(bad, Verdict.INCONCLUSIVE, notes)


@dataclass(frozen=True)
class SplitHopfStructure:
    """Declared decomposition of a link into Hopf pairs and unknots."""

    pairs: tuple[tuple[int, int], ...]
    singletons: tuple[int, ...] = field(default=())

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> "SplitHopfStructure":
        pairs = tuple(tuple(p) for p in pairs)
        used = {i for p in pairs for i in p}
        return cls(pairs, tuple(i for i in range(n) if i not in used))

    def validate(self, n: int) -> None:
        seen = [i for p in self.pairs for i in p] + list(self.singletons)
        if any(len(p) != 2 or p[0] == p[1] for p in self.pairs):
            raise ValueError("inconsistent declaration: pairs need two distinct components")
        if sorted(seen) != list(range(n)):
            raise ValueError("inconsistent declaration: pairs and singletons must partition the link")


def certify_split_hopf_form(link: FramedLink, structure: SplitHopfStructure) -> AdjacencyReport:
    """Slope conditions for a split union of Hopf links and unknots."""
    n = link.n
    structure.validate(n)
    partner = {}
    for a, b in structure.pairs:
        partner[a], partner[b] = b, a
    for i in range(n):
        for j in range(i + 1, n):
            expected = partner.get(i) == j
            if expected and abs(link.linking[i][j]) != 1:
                raise ValueError(f"inconsistent declaration: pair ({i},{j}) has lk {link.linking[i][j]}")
            if not expected and link.linking[i][j]:
                raise ValueError(f"inconsistent declaration: ({i},{j}) should be unlinked")

    bad = []
    for i in structure.singletons:
        s = link.slopes[i]
        if s.is_infinite or not s.is_reciprocal:
            bad.append(Violation((i,), "unknot slope must be 1/k", f"slope {s}"))
    for a, b in structure.pairs:
        sa, sb = link.slopes[a], link.slopes[b]
        if (sa, sb) in HOPF_PAIR_SLOPES:
            continue
        mags = {(abs(sa.p), sa.q), (abs(sb.p), sb.q)}
        if not sa.is_infinite and not sb.is_infinite and mags == {(1, 1), (1, 2)}:
            cond = "sign coupling violated"
        else:
            cond = "Hopf pair slopes must be +-(1, 1/2) or +-(1/2, 1)"
        bad.append(Violation((a, b), cond, f"slopes ({sa}, {sb})"))
    notes = ["certified assuming the declared split Hopf/unknot structure is geometrically true"]
    return _report(bad, Verdict.PASS, notes)


def integral_adjacency_check(link: FramedLink) -> AdjacencyReport:
    """Integral case: all slopes +-1 (signs independent) and all linking zero."""
    for s in link.slopes:
        if not s.is_integral:
            raise ValueError(f"not an integral multi-slope: {s}")
    bad = []
    for i, s in enumerate(link.slopes):
        if abs(s.p) != 1:
            bad.append(Violation((i,), "integral dual slope must be +-1", f"slope {s}"))
    for i, j in itertools.combinations(range(link.n), 2):
        if link.linking[i][j]:
            bad.append(
                Violation((i, j), "pairwise linking must vanish", f"lk = {link.linking[i][j]}")
            )
    notes = ["Brunnian property itself is geometric and not verified"]
    return _report(bad, Verdict.INCONCLUSIVE, notes)


def is_integer_homology_sphere(link: FramedLink) -> bool:
    return h1_order(link) == 1
