"""Exact integer linear algebra on Z^2: determinants, primitivity, Smith normal form.

Vectors are plain ``(x, y)`` tuples of Python ints, 2x2 matrices are row-major
``((a, b), (c, d))`` tuples acting on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import ZeroVector

LatticeVector = tuple[int, int]
Matrix2 = tuple[tuple[int, int], tuple[int, int]]

IDENTITY: Matrix2 = ((1, 0), (0, 1))


def det2(v: LatticeVector, w: LatticeVector) -> int:
    return v[0] * w[1] - v[1] * w[0]


def is_primitive(v: LatticeVector) -> bool:
    if v[0] == 0 and v[1] == 0:
        raise ZeroVector("the zero vector has no primitivity")
    return gcd(v[0], v[1]) == 1


def add(v: LatticeVector, w: LatticeVector) -> LatticeVector:
    return (v[0] + w[0], v[1] + w[1])


def sub(v: LatticeVector, w: LatticeVector) -> LatticeVector:
    return (v[0] - w[0], v[1] - w[1])


def neg(v: LatticeVector) -> LatticeVector:
    return (-v[0], -v[1])


def scale(k: int, v: LatticeVector) -> LatticeVector:
    return (k * v[0], k * v[1])


def apply(m: Matrix2, v: LatticeVector) -> LatticeVector:
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def matmul(a: Matrix2, b: Matrix2) -> Matrix2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def matdet(m: Matrix2) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def columns(v: LatticeVector, w: LatticeVector) -> Matrix2:
    """Matrix whose columns are ``v`` and ``w``."""
    return ((v[0], w[0]), (v[1], w[1]))


def unimodular_inverse(m: Matrix2) -> Matrix2:
    d = matdet(m)
    if d not in (1, -1):
        raise ValueError(f"matrix {m} is not unimodular (det {d})")
    # for d = +-1, 1/d == d
    return ((d * m[1][1], -d * m[0][1]), (-d * m[1][0], d * m[0][0]))


@dataclass(frozen=True)
class GroupInvariants:
    """A finitely generated abelian group Z^free_rank + sum Z/d_i, d_1 | d_2 | ..."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        t = tuple(self.torsion)
        if any(d < 2 for d in t):
            raise ValueError(f"torsion entries must be >= 2, got {t}")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion {t} is not a divisibility chain")
        object.__setattr__(self, "torsion", t)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` when the group is infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: dict) -> "GroupInvariants":
        return cls(int(data["free_rank"]), tuple(int(d) for d in data.get("torsion", ())))

    def __str__(self) -> str:
        parts = ["Z"] * min(self.free_rank, 1)
        if self.free_rank > 1:
            parts = [f"Z^{self.free_rank}"]
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def _pivot(m: list[list[int]], t: int) -> tuple[int, int] | None:
    # smallest nonzero |entry| in the trailing block, ties to lowest (row, col)
    best = None
    for i in range(t, len(m)):
        for j in range(t, len(m[0])):
            if m[i][j] and (best is None or abs(m[i][j]) < best[0]):
                best = (abs(m[i][j]), i, j)
    return None if best is None else best[1:]


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def invariant_factors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form of ``matrix``, including zeros.

    Elementary row/column operations only; the pivot at each stage is the
    entry of smallest nonzero absolute value, lowest index first.
    """
    m = [list(map(int, row)) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag = []
    for t in range(min(rows, cols)):
        p = _pivot(m, t)
        if p is None:
            break
        while True:
            i, j = p
            _swap_rows(m, t, i)
            _swap_cols(m, t, j)
            a = m[t][t]
            for i in range(t + 1, rows):
                q = m[i][t] // a
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
            for j in range(t + 1, cols):
                q = m[t][j] // a
                if q:
                    for row in m:
                        row[j] -= q * row[t]
            rest = [(i, t) for i in range(t + 1, rows) if m[i][t]]
            rest += [(t, j) for j in range(t + 1, cols) if m[t][j]]
            if rest:
                p = min(rest, key=lambda ij: (abs(m[ij[0]][ij[1]]), ij))
                continue
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if m[i][j] % a),
                None,
            )
            if bad is None:
                break
            # fold the offending row into row t; the next pass shrinks the pivot
            m[t] = [x + y for x, y in zip(m[t], m[bad[0]])]
            p = (t, t)
        diag.append(abs(m[t][t]))
    diag += [0] * (min(rows, cols) - len(diag))
    return diag


def smith_normal_form(cols: Iterable[Sequence[int]], dim: int = 2) -> GroupInvariants:
    """Invariants of Z^dim modulo the span of the given column vectors."""
    cols = [tuple(int(x) for x in c) for c in cols]
    if any(len(c) != dim for c in cols):
        raise ValueError(f"every generator must have {dim} coordinates")
    if not cols:
        return GroupInvariants(dim)
    matrix = [[c[r] for c in cols] for r in range(dim)]
    diag = invariant_factors(matrix)
    rank = sum(1 for d in diag if d)
    return GroupInvariants(dim - rank, tuple(d for d in diag if d > 1))
