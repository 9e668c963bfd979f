"""Kirby calculus on linear chains of unknots.

A chain ``(r1, ..., rn)`` is a string of unknots where consecutive
components clasp once and all other pairs are unlinked; ``ri`` is the
surgery coefficient on the i-th unknot.  Chains whose interior coefficients
are integers present lens spaces.

Every move here is a Rolfsen twist in disguise.  Twisting an unknot ``c``
``t`` times sends a slope ``s`` on ``c`` itself to ``1/(1/s + t)``, adds
``t * lk(c, d)**2`` to the slope of any other component ``d`` and adds
``t * lk(c, d) * lk(c, e)`` to ``lk(d, e)``.  Components whose surgery slope
becomes ``inf`` drop out of the chain.

Optional meridian decorations track, for each original component, the image
of its meridian as a slope on that component's own torus.  Once the
component has been twisted away it survives as a *core* (a knot in the new
picture) carrying the tracked slope; when the whole chain is gone the cores
with their slopes are the dual surgery description.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

from .homology import determinant, smith_normal_form
from .slopes import (
    INFINITY,
    Slope,
    SlopeLike,
    as_slope,
    cf_chain_evaluate,
    cf_negative_expand,
    make_slope,
    parse_slope,
)

__all__ = [
    "LENS_ORIENTATION",
    "DUAL_CONVENTION",
    "LensSpace",
    "Meridian",
    "ChainPresentation",
    "lens_from_slope",
    "lens_equivalent",
    "chain_to_lens",
    "slam_dunk",
    "blow_down_chain",
    "rolfsen_twist",
    "apply_moves",
    "reduce_chain",
    "chain_linking_matrix",
    "dual_slopes_integral",
    "blow_down_sequence_oracle",
    "dual_link_oracle",
]

# A chain evaluating to p/q presents L(p, LENS_ORIENTATION * q).  With +1,
# p/q surgery on the unknot is L(p, q), so (1/2, 1, 1/2) gives L(3, 2) = -L(3, 1).
LENS_ORIENTATION = 1

# Dual of an integral presentation B of S^3 is DUAL_CONVENTION * B^-1.
# The explicit move oracle below agrees with -1.
DUAL_CONVENTION = -1


@dataclass(frozen=True)
class LensSpace:
    """Oriented lens space ``L(p, q)``; ``p == 1`` is S^3 and ``p == 0`` is S^1 x S^2."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p < 0:
            raise ValueError("p must be nonnegative")
        if p == 0 and q != 1 or p == 1 and q != 0:
            raise ValueError("use LensSpace.make for S^3 and S^1 x S^2")
        if p >= 2 and not (0 < q < p and math.gcd(p, q) == 1):
            raise ValueError(f"L({p},{q}) is not canonical")

    @classmethod
    def make(cls, p: int, q: int) -> "LensSpace":
        p = abs(p)
        if p == 0:
            return cls(0, 1)
        if p == 1:
            return cls(1, 0)
        if math.gcd(p, q) != 1:
            raise ValueError(f"gcd({p}, {q}) != 1")
        return cls(p, q % p)

    def mirror(self) -> "LensSpace":
        """``-L(p, q) = L(p, -q)``."""
        return LensSpace.make(self.p, -self.q) if self.p >= 2 else self

    def __str__(self):
        if self.p == 0:
            return "S^1 x S^2"
        if self.p == 1:
            return "S^3"
        return f"L({self.p},{self.q})"


def lens_from_slope(s: SlopeLike) -> LensSpace:
    s = as_slope(s)
    if s.is_infinite:
        return LensSpace(1, 0)
    if s.p == 0:
        return LensSpace(0, 1)
    sign = 1 if s.p > 0 else -1
    return LensSpace.make(abs(s.p), LENS_ORIENTATION * sign * s.q)


def lens_equivalent(a: LensSpace, b: LensSpace, oriented: bool = True) -> bool:
    if a.p != b.p:
        return False
    p = a.p
    if p <= 1:
        return True
    qa, qb = a.q % p, b.q % p
    if qb == qa or (qa * qb) % p == 1:
        return True
    if oriented:
        return False
    return qb == (-qa) % p or (qa * qb) % p == p - 1


@dataclass(frozen=True)
class Meridian:
    """Tracked image of the meridian of original component ``label``.

    While the component is still in the chain, ``host`` is its position.
    After it has been twisted away ``host`` is None and ``links`` holds its
    linking numbers with the current chain components.  The tracked curve is
    ``orientation * (slope.p, slope.q)`` as an oriented class; cores are
    always oriented so that ``orientation`` is 1.
    """

    label: int
    slope: Slope = INFINITY
    host: Optional[int] = None
    links: tuple[int, ...] = ()
    orientation: int = 1

    def __post_init__(self):
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")


@dataclass(frozen=True)
class ChainPresentation:
    coeffs: tuple[Slope, ...]
    signs: tuple[int, ...] = ()
    meridians: tuple[Meridian, ...] = ()
    core_linking: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        coeffs = tuple(as_slope(c) for c in self.coeffs)
        if any(c.is_infinite for c in coeffs):
            raise ValueError("chain coefficients must be finite")
        signs = tuple(self.signs) or (1,) * max(len(coeffs) - 1, 0)
        if len(signs) != max(len(coeffs) - 1, 0) or any(s not in (1, -1) for s in signs):
            raise ValueError("need one clasp sign (+1 or -1) per consecutive pair")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "signs", signs)
        k = len(self.meridians)
        if self.core_linking and len(self.core_linking) != k:
            raise ValueError("core_linking must be indexed by meridians")
        if not self.core_linking:
            object.__setattr__(self, "core_linking", tuple((0,) * k for _ in range(k)))
        for m in self.meridians:
            if m.host is not None and not 0 <= m.host < len(coeffs):
                raise ValueError(f"meridian {m.label} has no host {m.host}")
            if m.host is None and len(m.links) != len(coeffs):
                raise ValueError(f"core {m.label} needs one linking number per component")

    @classmethod
    def parse(cls, text: str) -> "ChainPresentation":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(parse_slope(tok) for tok in text.split(",")))

    def tracked(self) -> "ChainPresentation":
        """Same chain with a fresh meridian decoration on every component."""
        return replace(
            self,
            meridians=tuple(Meridian(i, INFINITY, i) for i in range(len(self.coeffs))),
            core_linking=(),
        )

    def __len__(self):
        return len(self.coeffs)

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)


def _chain(coeffs) -> ChainPresentation:
    if isinstance(coeffs, ChainPresentation):
        return coeffs
    if isinstance(coeffs, str):
        return ChainPresentation.parse(coeffs)
    return ChainPresentation(tuple(coeffs))


# ---------------------------------------------------------------------------
# Working representation: live chain components followed by cores, with a
# full linking matrix.


@dataclass
class _Work:
    surg: list  # Slope for live components, None for cores
    track: list  # tracked Slope or None
    label: list
    lk: list = field(default_factory=list)


def _to_work(ch: ChainPresentation) -> _Work:
    m = len(ch.coeffs)
    hosted = {mer.host: mer for mer in ch.meridians if mer.host is not None}
    cores = [(k, mer) for k, mer in enumerate(ch.meridians) if mer.host is None]
    surg = list(ch.coeffs) + [None] * len(cores)
    track = [_raw(hosted[i]) if i in hosted else None for i in range(m)]
    label = [hosted[i].label if i in hosted else None for i in range(m)]
    track += [_raw(mer) for _, mer in cores]
    label += [mer.label for _, mer in cores]
    n = len(surg)
    lk = [[0] * n for _ in range(n)]
    for i, s in enumerate(ch.signs):
        lk[i][i + 1] = lk[i + 1][i] = s
    for a, (ka, mer) in enumerate(cores):
        for i, v in enumerate(mer.links):
            lk[m + a][i] = lk[i][m + a] = v
        for b, (kb, _) in enumerate(cores):
            if a != b:
                lk[m + a][m + b] = ch.core_linking[ka][kb]
    return _Work(surg, track, label, lk)


def _from_work(w: _Work) -> ChainPresentation:
    live = [i for i, s in enumerate(w.surg) if s is not None]
    for x, i in enumerate(live):
        for y, j in enumerate(live):
            if y > x + 1 and w.lk[i][j]:
                raise ValueError("move leaves the class of linear chains")
    signs = []
    for i, j in zip(live, live[1:]):
        if abs(w.lk[i][j]) != 1:
            raise ValueError("move leaves the class of linear chains")
        signs.append(w.lk[i][j])
    pos = {i: x for x, i in enumerate(live)}
    tracked = sorted(
        (i for i, t in enumerate(w.track) if t is not None), key=lambda i: w.label[i]
    )
    meridians = []
    for i in tracked:
        p, q = w.track[i]
        sign = -1 if q < 0 or (q == 0 and p < 0) else 1
        slope = make_slope(p, q)
        if i in pos:
            meridians.append(Meridian(w.label[i], slope, pos[i], orientation=sign))
        else:
            meridians.append(
                Meridian(w.label[i], slope, None, tuple(w.lk[i][j] for j in live), sign)
            )
    core_linking = tuple(
        tuple(
            w.lk[i][j] if i != j and i not in pos and j not in pos else 0 for j in tracked
        )
        for i in tracked
    )
    return ChainPresentation(
        tuple(w.surg[i] for i in live), tuple(signs), tuple(meridians), core_linking
    )


def _raw(mer: Meridian) -> tuple[int, int]:
    return mer.orientation * mer.slope.p, mer.orientation * mer.slope.q


# Surgery slopes are unoriented; tracked curves are oriented (p, q) pairs.
# Both transform by the same linear maps.


def _own_twist(s, t: int):
    # p/q -> p/(q + t p)
    if s is None:
        return None
    if isinstance(s, Slope):
        return make_slope(s.p, s.q + t * s.p)
    return s[0], s[1] + t * s[0]


def _shift(s, k: int):
    # p/q -> p/q + k
    if s is None:
        return None
    if isinstance(s, Slope):
        return make_slope(s.p + k * s.q, s.q)
    return s[0] + k * s[1], s[1]


def _twist(w: _Work, c: int, t: int) -> None:
    if t == 0:
        return
    n = len(w.surg)
    row = list(w.lk[c])
    for d in range(n):
        if d == c or not row[d]:
            continue
        k = t * row[d] * row[d]
        w.surg[d] = _shift(w.surg[d], k)
        w.track[d] = _shift(w.track[d], k)
        for e in range(n):
            if e != c and e != d and row[e]:
                w.lk[d][e] += t * row[d] * row[e]
    w.surg[c] = _own_twist(w.surg[c], t)
    w.track[c] = _own_twist(w.track[c], t)
    if w.surg[c].is_infinite:
        w.surg[c] = None
        if w.track[c] is None:
            # untracked and trivially filled: forget it entirely
            for d in range(n):
                w.lk[c][d] = w.lk[d][c] = 0
        elif w.track[c][1] < 0:
            # the tracked curve is q times the core; orient the core along it
            w.track[c] = (-w.track[c][0], -w.track[c][1])
            for d in range(n):
                w.lk[c][d] = -w.lk[c][d]
                w.lk[d][c] = -w.lk[d][c]


def _check_index(ch: ChainPresentation, index: int) -> None:
    if not 0 <= index < len(ch.coeffs):
        raise IndexError(f"no component {index} in a chain of length {len(ch.coeffs)}")


# ---------------------------------------------------------------------------
# Moves


def rolfsen_twist(chain, index: int, t: int) -> ChainPresentation:
    """Twist ``t`` times along the spanning disk of component ``index``.

    Only end components may be twisted freely; twisting an interior component
    would link its two neighbours, so it is allowed only when it removes the
    component with ``|t| == 1`` (a blow-down).
    """
    ch = _chain(chain)
    _check_index(ch, index)
    if t == 0:
        return ch
    m = len(ch.coeffs)
    c = ch.coeffs[index]
    removes = c.q + t * c.p == 0
    if 0 < index < m - 1 and not (removes and abs(t) == 1):
        raise ValueError("twisting an interior component leaves the class of linear chains")
    w = _to_work(ch)
    _twist(w, index, t)
    return _from_work(w)


def blow_down_chain(chain, index: int) -> ChainPresentation:
    """Remove a +-1 framed component; neighbours lose the sign and become adjacent."""
    ch = _chain(chain)
    _check_index(ch, index)
    c = ch.coeffs[index]
    if not (c.is_integral and abs(c.p) == 1):
        raise ValueError(f"not blow-downable: coefficient {c} is not +-1")
    return rolfsen_twist(ch, index, -c.p)


def slam_dunk(chain) -> ChainPresentation:
    """Replace a non-integral last coefficient by its integral expansion.

    ``r = c1 - 1/(c2 - ...)`` turns the last unknot into one with coefficient
    ``c1`` followed by a chain ``c2, ..., cm`` of meridians.  A chain whose
    last coefficient is already integral is returned unchanged.  The last
    component must not carry a meridian decoration.
    """
    ch = _chain(chain)
    if not ch.coeffs or ch.coeffs[-1].is_integral:
        return ch
    last = len(ch.coeffs) - 1
    if any(mer.host == last for mer in ch.meridians):
        raise ValueError("cannot slam-dunk a decorated component")
    expansion = [Slope(c, 1) for c in cf_negative_expand(ch.coeffs[-1])]
    extra = len(expansion) - 1
    meridians = tuple(
        mer if mer.host is not None else replace(mer, links=mer.links + (0,) * extra)
        for mer in ch.meridians
    )
    return ChainPresentation(
        ch.coeffs[:-1] + tuple(expansion),
        ch.signs + (1,) * extra,
        meridians,
        ch.core_linking,
    )


def apply_moves(chain, script: Iterable[str]) -> ChainPresentation:
    """Replay a move script (``twist i t``, ``blowdown i``, ``slamdunk``)."""
    ch = _chain(chain)
    for line in script:
        words = line.split("#", 1)[0].split()
        if not words:
            continue
        op, args = words[0], [int(x) for x in words[1:]]
        if op == "twist" and len(args) == 2:
            ch = rolfsen_twist(ch, *args)
        elif op == "blowdown" and len(args) == 1:
            ch = blow_down_chain(ch, *args)
        elif op == "slamdunk" and not args:
            ch = slam_dunk(ch)
        else:
            raise ValueError(f"bad move {line!r}")
    return ch


def reduce_chain(chain) -> tuple[ChainPresentation, list[str]]:
    """Greedily shorten a chain with blow-downs and end twists of 1/k components."""
    ch = _chain(chain)
    script = []
    while ch.coeffs:
        m = len(ch.coeffs)
        k = next(
            (i for i, c in enumerate(ch.coeffs) if c.is_integral and abs(c.p) == 1), None
        )
        if k is not None:
            script.append(f"blowdown {k}")
            ch = blow_down_chain(ch, k)
            continue
        end = next((i for i in (0, m - 1) if ch.coeffs[i].is_reciprocal), None)
        if end is None:
            break
        c = ch.coeffs[end]
        t = -c.q * c.p
        script.append(f"twist {end} {t}")
        ch = rolfsen_twist(ch, end, t)
    return ch, script


# ---------------------------------------------------------------------------
# Lens spaces


def chain_to_lens(chain) -> LensSpace:
    """Lens space presented by a chain with integral interior coefficients.

    A rational first coefficient is slam-dunked into the chain from the left
    before the nested continued fraction is evaluated.  An empty chain is S^3.
    """
    ch = _chain(chain)
    coeffs = list(ch.coeffs)
    if not coeffs:
        return LensSpace(1, 0)
    if any(not c.is_integral for c in coeffs[1:-1]):
        raise ValueError("interior rational coefficient: not a lens space chain")
    if len(coeffs) > 1 and not coeffs[0].is_integral:
        head = [Slope(c, 1) for c in reversed(cf_negative_expand(coeffs[0]))]
        coeffs = head + coeffs[1:]
    return lens_from_slope(cf_chain_evaluate(coeffs))


# ---------------------------------------------------------------------------
# Duals


def chain_linking_matrix(chain) -> list[list[int]]:
    """Integral linking matrix (framings on the diagonal) of an integral chain."""
    ch = _chain(chain)
    if any(not c.is_integral for c in ch.coeffs):
        raise ValueError("chain is not integral")
    n = len(ch.coeffs)
    B = [[0] * n for _ in range(n)]
    for i, c in enumerate(ch.coeffs):
        B[i][i] = c.p
    for i, s in enumerate(ch.signs):
        B[i][i + 1] = B[i + 1][i] = s
    return B


def dual_slopes_integral(B) -> tuple[list[list[int]], list[Slope]]:
    """Linking matrix and slopes of the core link of an integral surgery on S^3.

    ``B`` carries framings on its diagonal and must be symmetric with
    determinant +-1.  The dual presentation is ``DUAL_CONVENTION * B^-1``.
    """
    B = [[int(x) for x in row] for row in B]
    n = len(B)
    if any(len(row) != n for row in B) or any(
        B[i][j] != B[j][i] for i in range(n) for j in range(i)
    ):
        raise ValueError("framing matrix must be square and symmetric")
    if abs(determinant(B)) != 1:
        raise ValueError("not a surgery presentation of S^3 (|det| != 1)")
    D, U, V = smith_normal_form(B)
    # U B V = I, so B^-1 = V U
    inv = [[sum(V[i][k] * U[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    dual = [[DUAL_CONVENTION * inv[i][j] for j in range(n)] for i in range(n)]
    slopes = [Slope(dual[i][i], 1) for i in range(n)]
    linking = [[0 if i == j else dual[i][j] for j in range(n)] for i in range(n)]
    return linking, slopes


def _oracle_reduce(chain) -> tuple[ChainPresentation, list[str]]:
    ch = _chain(chain)
    if not ch.meridians:
        ch = ch.tracked()
    if any(not c.is_integral for c in ch.coeffs[1:]):
        raise ValueError("out of oracle scope: only the first coefficient may be rational")
    script = []
    while ch.coeffs:
        if len(ch.coeffs) == 1:
            r = ch.coeffs[0]
            if not r.is_reciprocal:
                raise ValueError(f"chain does not present S^3 (left with {r})")
            t = -r.q * r.p
            script.append(f"twist 0 {t}")
            ch = rolfsen_twist(ch, 0, t)
            continue
        m = len(ch.coeffs)
        t = 1 - ch.coeffs[1].p
        if t:
            script.append(f"twist 0 {t}")
            ch = rolfsen_twist(ch, 0, t)
            if len(ch.coeffs) < m:
                continue
        script.append("blowdown 1")
        ch = blow_down_chain(ch, 1)
    return ch, script


def dual_link_oracle(chain) -> tuple[list[list[int]], list[Slope]]:
    """Dual linking matrix and slopes by explicit twists and blow-downs."""
    final, _ = _oracle_reduce(chain)
    labels = [mer.label for mer in final.meridians]
    if labels != list(range(len(labels))):
        raise ValueError("lost track of a meridian")
    return [list(row) for row in final.core_linking], [mer.slope for mer in final.meridians]


def blow_down_sequence_oracle(chain) -> list[Slope]:
    """Dual slope of every component, found by running the chain down to nothing."""
    return dual_link_oracle(chain)[1]
