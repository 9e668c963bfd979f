"""First homology of rational surgery on a framed link."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .links import FramedLink

__all__ = [
    "AbelianGroup",
    "UnsurgeredComponent",
    "presentation_matrix",
    "smith_normal_form",
    "invariant_factors",
    "determinant",
    "h1",
    "h1_order",
]

Matrix = list[list[int]]


class UnsurgeredComponent(ValueError):
    pass


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^rank + Z/d1 + Z/d2 + ...`` with ``d1 | d2 | ...`` and every ``d >= 2``."""

    torsion: tuple[int, ...] = ()
    rank: int = 0

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        if self.rank < 0:
            raise ValueError("negative rank")
        if any(d < 2 for d in t):
            raise ValueError("invariant factors must be at least 2")
        if any(t[k + 1] % t[k] for k in range(len(t) - 1)):
            raise ValueError(f"{t} is not a divisibility chain")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_diagonal(cls, diag) -> "AbelianGroup":
        diag = [abs(d) for d in diag]
        return cls(tuple(sorted(d for d in diag if d > 1)), sum(1 for d in diag if d == 0))

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def order(self):
        """Group order, ``math.inf`` when the rank is positive."""
        return math.inf if self.rank else math.prod(self.torsion)

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}


def presentation_matrix(link: FramedLink) -> Matrix:
    """``A[i][i] = p_i`` and ``A[i][j] = q_j * lk(i, j)``."""
    for i, s in enumerate(link.slopes):
        if s.is_infinite:
            raise UnsurgeredComponent(
                f"unsurgered component {link.label(i)}: restrict to a sublink first"
            )
    n = link.n
    return [
        [link.slopes[i].p if i == j else link.slopes[j].q * link.linking[i][j] for j in range(n)]
        for i in range(n)
    ]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    return a, x0, y0


def _row_combo(M, i, j, x, y, u, v):
    """rows (i, j) <- (x*ri + y*rj, u*ri + v*rj)."""
    ri, rj = M[i], M[j]
    M[i] = [x * a + y * b for a, b in zip(ri, rj)]
    M[j] = [u * a + v * b for a, b in zip(ri, rj)]


def _col_combo(M, i, j, x, y, u, v):
    """cols (i, j) <- (x*ci + y*cj, u*ci + v*cj)."""
    for row in M:
        a, b = row[i], row[j]
        row[i], row[j] = x * a + y * b, u * a + v * b


def smith_normal_form(A) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(D, U, V)`` with ``U @ A @ V == D`` in Smith normal form.

    Pivots are combined with Bezout 2x2 transforms so each pivot only ever
    shrinks to a gcd.  ``U`` and ``V`` are unimodular.
    """
    D = [[int(x) for x in row] for row in A]
    m = len(D)
    n = len(D[0]) if m else 0
    U, V = _identity(m), _identity(n)

    for t in range(min(m, n)):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        D[t], D[i0] = D[i0], D[t]
        U[t], U[i0] = U[i0], U[t]
        _col_combo(D, t, j0, 0, 1, 1, 0)
        _col_combo(V, t, j0, 0, 1, 1, 0)

        while True:
            for i in range(t + 1, m):
                b = D[i][t]
                if b == 0:
                    continue
                a = D[t][t]
                if b % a == 0:
                    k = b // a
                    _row_combo(D, t, i, 1, 0, -k, 1)
                    _row_combo(U, t, i, 1, 0, -k, 1)
                else:
                    g, x, y = _egcd(a, b)
                    _row_combo(D, t, i, x, y, -b // g, a // g)
                    _row_combo(U, t, i, x, y, -b // g, a // g)
            for j in range(t + 1, n):
                b = D[t][j]
                if b == 0:
                    continue
                a = D[t][t]
                if b % a == 0:
                    k = b // a
                    _col_combo(D, t, j, 1, 0, -k, 1)
                    _col_combo(V, t, j, 1, 0, -k, 1)
                else:
                    g, x, y = _egcd(a, b)
                    _col_combo(D, t, j, x, y, -b // g, a // g)
                    _col_combo(V, t, j, x, y, -b // g, a // g)
            if any(D[i][t] for i in range(t + 1, m)):
                continue
            a = D[t][t]
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % a),
                None,
            )
            if bad is None:
                break
            # pull a non-multiple into the pivot row, then clear again
            _row_combo(D, t, bad, 1, 1, 0, 1)
            _row_combo(U, t, bad, 1, 1, 0, 1)

        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return D, U, V


def invariant_factors(A) -> list[int]:
    """Diagonal of the Smith normal form (zeros included)."""
    D, _, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def determinant(A) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    M = [[int(x) for x in row] for row in A]
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def h1(link: FramedLink) -> AbelianGroup:
    """H_1 of the manifold obtained by surgery on every component of ``link``."""
    return AbelianGroup.from_diagonal(invariant_factors(presentation_matrix(link)))


def h1_order(link: FramedLink):
    """``|det|`` of the presentation matrix, or ``math.inf`` when it vanishes."""
    d = abs(determinant(presentation_matrix(link)))
    return d if d else math.inf
