"""Framed links as linking data plus slopes, and signed PD-code ingestion."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .slopes import INFINITY, Slope, SlopeLike, as_slope

__all__ = [
    "FramedLink",
    "Crossing",
    "Diagram",
    "PDParseError",
    "sublink",
    "parse_pd",
    "linking_matrix",
    "load_link",
]


def _as_matrix(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class FramedLink:
    """Algebraic shadow of a surgery presentation.

    ``linking[i][j]`` is the linking number of components ``i`` and ``j``;
    ``slopes[i]`` is the surgery slope on component ``i`` (``inf`` means the
    component is left alone).  Components are indexed from 0.
    """

    linking: tuple[tuple[int, ...], ...]
    slopes: tuple[Slope, ...]
    labels: Optional[tuple[str, ...]] = None

    def __init__(self, linking, slopes: Iterable[SlopeLike], labels=None):
        linking = _as_matrix(linking)
        slopes = tuple(as_slope(s) for s in slopes)
        n = len(slopes)
        if n < 1:
            raise ValueError("a link needs at least one component")
        if len(linking) != n or any(len(row) != n for row in linking):
            raise ValueError(f"linking matrix must be {n}x{n}")
        for i in range(n):
            if linking[i][i] != 0:
                raise ValueError("linking matrix must have zero diagonal")
            for j in range(i):
                if linking[i][j] != linking[j][i]:
                    raise ValueError("linking matrix must be symmetric")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("need one label per component")
        object.__setattr__(self, "linking", linking)
        object.__setattr__(self, "slopes", slopes)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return len(self.slopes)

    def __len__(self):
        return len(self.slopes)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def with_slopes(self, slopes) -> "FramedLink":
        return FramedLink(self.linking, slopes, self.labels)

    def permuted(self, order: Sequence[int]) -> "FramedLink":
        """Reorder components so that new component ``k`` is old ``order[k]``."""
        if sorted(order) != list(range(self.n)):
            raise ValueError("not a permutation of the components")
        lk = [[self.linking[i][j] for j in order] for i in order]
        labels = [self.labels[i] for i in order] if self.labels else None
        return FramedLink(lk, [self.slopes[i] for i in order], labels)

    @classmethod
    def from_dict(cls, data: dict) -> "FramedLink":
        try:
            linking = data["linking"]
            slopes = data["slopes"]
        except KeyError as exc:
            raise ValueError(f"link spec missing key {exc.args[0]!r}") from None
        return cls(linking, [as_slope(str(s)) for s in slopes], data.get("labels"))

    def to_dict(self) -> dict:
        out = {
            "linking": [list(row) for row in self.linking],
            "slopes": [str(s) for s in self.slopes],
        }
        if self.labels:
            out = {"labels": list(self.labels), **out}
        return out

    @classmethod
    def from_json(cls, text: str) -> "FramedLink":
        return cls.from_dict(json.loads(text))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_diagram(cls, diagram: "Diagram", slopes=None) -> "FramedLink":
        if slopes is None:
            slopes = [INFINITY] * len(diagram.components)
        return cls(linking_matrix(diagram), slopes, diagram.components)


def load_link(path) -> tuple[FramedLink, dict]:
    """Read a JSON link spec; returns the link and the raw document."""
    data = json.loads(Path(path).read_text())
    return FramedLink.from_dict(data), data


def sublink(link: FramedLink, indices: Iterable[int]) -> FramedLink:
    """Restrict ``link`` to a nonempty set of component indices.

    The selection is treated as a set; components keep their original order.
    """
    sel = sorted(set(indices))
    if not sel:
        raise ValueError("empty sublink selector")
    if sel[0] < 0 or sel[-1] >= link.n:
        raise IndexError(f"selector out of range for a {link.n}-component link: {sel}")
    lk = [[link.linking[i][j] for j in sel] for i in sel]
    labels = [link.labels[i] for i in sel] if link.labels else None
    return FramedLink(lk, [link.slopes[i] for i in sel], labels)


# ---------------------------------------------------------------------------
# Signed planar diagram codes


class PDParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Crossing:
    """``X[a,b,c,d]``: ``a -> c`` is the under strand, ``b``/``d`` the over strand."""

    strands: tuple[int, int, int, int]
    sign: int
    under: str
    over: str


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    components: tuple[str, ...] = field(default=())

    def __post_init__(self):
        comps = set(self.components)
        for x in self.crossings:
            if x.sign not in (1, -1):
                raise ValueError("crossing sign must be +1 or -1")
            if x.under not in comps or x.over not in comps:
                raise ValueError("crossing references an unknown component")


_CROSSING_RE = re.compile(
    r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]"
    r"\s+sign\s*=\s*(\S+)"
    r"\s+comps\s*=\s*\(\s*(\w+)\s*,\s*(\w+)\s*\)\s*$"
)


def parse_pd(text: str) -> Diagram:
    """Parse the line-oriented signed PD format.

    Each crossing line reads ``X[a,b,c,d] sign=+ comps=(i,j)`` where ``i``
    owns the under strands ``a, c`` and ``j`` the over strands ``b, d``.
    Blank lines and ``#`` comments are ignored; an optional
    ``components i j k`` line fixes the component order, which otherwise
    follows first appearance.
    """
    crossings = []
    order: list[str] = []
    declared: Optional[list[str]] = None
    strand_owner: dict[int, tuple[str, int]] = {}
    strand_uses: dict[int, list[tuple[int, int]]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1
        if stripped.startswith("components"):
            names = stripped.split()[1:]
            if declared is not None:
                raise PDParseError("duplicate components line", lineno, col)
            if not names or len(set(names)) != len(names):
                raise PDParseError("components line needs distinct labels", lineno, col)
            declared = names
            continue
        if not stripped.startswith("X["):
            raise PDParseError(f"unexpected token {stripped.split()[0]!r}", lineno, col)
        m = _CROSSING_RE.match(stripped)
        if not m:
            if "sign" not in stripped:
                raise PDParseError("unsigned crossing", lineno, col)
            raise PDParseError(f"malformed crossing {stripped!r}", lineno, col)
        a, b, c, d = (int(m.group(k)) for k in range(1, 5))
        sign_tok = m.group(5)
        if sign_tok in ("+", "+1"):
            sign = 1
        elif sign_tok in ("-", "-1"):
            sign = -1
        else:
            raise PDParseError(f"bad sign {sign_tok!r}", lineno, col + m.start(5))
        under, over = m.group(6), m.group(7)
        for name in (under, over):
            if name not in order:
                order.append(name)
        for s, owner in ((a, under), (c, under), (b, over), (d, over)):
            prev = strand_owner.setdefault(s, (owner, lineno))
            if prev[0] != owner:
                raise PDParseError(
                    f"strand {s} assigned to components {prev[0]} and {owner}", lineno, col
                )
            strand_uses.setdefault(s, []).append((lineno, col))
        crossings.append(Crossing((a, b, c, d), sign, under, over))

    if not crossings:
        raise PDParseError("empty diagram")
    for s, uses in strand_uses.items():
        if len(uses) != 2:
            lineno, col = uses[-1]
            raise PDParseError(f"dangling strand {s} (used {len(uses)} times)", lineno, col)
    if declared is not None:
        missing = [x for x in order if x not in declared]
        if missing:
            raise PDParseError(f"undeclared components {missing}")
        order = declared
    return Diagram(tuple(crossings), tuple(order))


def linking_matrix(d: Diagram) -> tuple[tuple[int, ...], ...]:
    """Half the signed count of crossings between each pair of components."""
    idx = {name: i for i, name in enumerate(d.components)}
    n = len(idx)
    twice = [[0] * n for _ in range(n)]
    for x in d.crossings:
        i, j = idx[x.under], idx[x.over]
        if i != j:
            twice[i][j] += x.sign
            twice[j][i] += x.sign
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if twice[i][j] % 2:
                raise ValueError(
                    f"odd signed crossing count between {d.components[i]} and "
                    f"{d.components[j]}: corrupted diagram"
                )
            row.append(twice[i][j] // 2)
        out.append(tuple(row))
    return tuple(out)
