"""Exact slopes on a torus boundary and negative continued fractions.

A slope ``p/q`` stands for the curve ``p*mu + q*lambda`` in a fixed
meridian/longitude basis.  ``1/0`` is the meridian, i.e. the trivial filling.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Slope",
    "INFINITY",
    "IndeterminateChain",
    "make_slope",
    "as_slope",
    "parse_slope",
    "slope_distance",
    "cf_negative_expand",
    "cf_chain_evaluate",
]


class IndeterminateChain(ArithmeticError):
    """Raised when a chain evaluation runs into 0/0."""


@dataclass(frozen=True, order=False)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise TypeError("slope entries must be integers")
        if self.q < 0 or (self.p, self.q) == (0, 0):
            raise ValueError(f"non-canonical slope ({self.p}, {self.q}); use make_slope")
        if self.q == 0 and self.p != 1:
            raise ValueError("infinite slope must be stored as 1/0")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"slope {self.p}/{self.q} is not reduced")

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def is_integral(self) -> bool:
        return self.q == 1

    @property
    def is_reciprocal(self) -> bool:
        """True for slopes 1/k with k a nonzero integer."""
        return abs(self.p) == 1 and self.q >= 1

    @property
    def value(self) -> Fraction:
        if self.q == 0:
            raise ValueError("the infinite slope has no rational value")
        return Fraction(self.p, self.q)

    def __neg__(self) -> "Slope":
        return self if self.q == 0 else Slope(-self.p, self.q)

    def __str__(self):
        if self.q == 0:
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"

    def __repr__(self):
        return f"Slope({self})"


INFINITY = Slope(1, 0)

SlopeLike = Union[Slope, Fraction, int, str]


def make_slope(p: int, q: int) -> Slope:
    """Reduced canonical slope ``p/q``; denominators end up nonnegative."""
    p, q = int(p), int(q)
    if p == 0 and q == 0:
        raise ValueError("undefined slope 0/0")
    if q == 0:
        return INFINITY
    g = math.gcd(p, q)
    p, q = p // g, q // g
    if q < 0:
        p, q = -p, -q
    return Slope(p, q)


_SLOPE_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def parse_slope(text: str) -> Slope:
    """Parse ``"p/q"``, ``"p"`` or ``"inf"``."""
    s = text.strip()
    if s.lower() in ("inf", "infinity", "1/0"):
        return INFINITY
    m = _SLOPE_RE.match(s)
    if not m:
        raise ValueError(f"malformed slope {text!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    return make_slope(p, q)


def as_slope(x: SlopeLike) -> Slope:
    if isinstance(x, Slope):
        return x
    if isinstance(x, str):
        return parse_slope(x)
    if isinstance(x, bool):
        raise TypeError("booleans are not slopes")
    if isinstance(x, int):
        return Slope(x, 1)
    if isinstance(x, Fraction):
        return Slope(x.numerator, x.denominator)
    raise TypeError(f"cannot interpret {x!r} as a slope")


def slope_distance(a: SlopeLike, b: SlopeLike) -> int:
    """Minimal geometric intersection number ``|p_a q_b - p_b q_a|``."""
    a, b = as_slope(a), as_slope(b)
    return abs(a.p * b.q - b.p * a.q)


def cf_negative_expand(r) -> list[int]:
    """Integers ``[c1, ..., cm]`` with ``r = c1 - 1/(c2 - 1/(... - 1/cm))``.

    Each step takes ``c = ceil(r)``, so every term after the first is at
    least 2.  The expansion is unique with that property.
    """
    if isinstance(r, (Slope, str)):
        s = as_slope(r)
        if s.is_infinite:
            raise ValueError("cannot expand the infinite slope")
        r = s.value
    r = Fraction(r)
    if r == 0:
        raise ValueError("cannot expand 0")
    out = []
    while True:
        c = math.ceil(r)
        out.append(c)
        if r == c:
            return out
        r = 1 / (c - r)


def _homogeneous(s: Slope) -> tuple[int, int]:
    return s.p, s.q


def cf_chain_evaluate(coeffs: Iterable[SlopeLike]) -> Slope:
    """Evaluate ``r1 - 1/(r2 - 1/(... - 1/rn))`` exactly.

    Works in homogeneous coordinates so that infinite intermediates need no
    special casing: ``x - 1/inf = x`` and ``x - 1/0 = inf``.
    """
    seq: Sequence[Slope] = [as_slope(c) for c in coeffs]
    if not seq:
        raise ValueError("empty chain")
    num, den = _homogeneous(seq[-1])
    for s in reversed(seq[:-1]):
        a, b = _homogeneous(s)
        # a/b - den/num
        num, den = a * num - b * den, b * num
        if num == 0 and den == 0:
            raise IndeterminateChain(f"0/0 while evaluating chain {[str(c) for c in seq]}")
        g = math.gcd(num, den)
        num, den = num // g, den // g
    return make_slope(num, den)
