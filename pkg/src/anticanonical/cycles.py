"""Cycles of integers and the dihedral group acting on their labels.

A cycle stores ``a_i = -D_i^2`` for the boundary components ``D_1 .. D_n``.
Positions are 1-based in user-facing text and 0-based in code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import LengthOutOfRange

MIN_LENGTH = 3


class Cycle(tuple):
    """Immutable cyclic sequence of integers of length >= 3."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(int(a) for a in entries)
        if len(entries) < MIN_LENGTH:
            raise LengthOutOfRange(
                f"cycles need at least {MIN_LENGTH} components, got {len(entries)}"
            )
        return super().__new__(cls, entries)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Cycle({tuple(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def parse(cls, text: str) -> "Cycle":
        """Accept ``"0,1,1,2,1,1"``, ``"(0,1,1,2,1,1)"`` or a JSON array."""
        text = text.strip()
        if text.startswith("["):
            return cls(json.loads(text))
        text = text.strip("()")
        return cls(int(tok) for tok in text.split(",") if tok.strip())


@dataclass(frozen=True)
class DihedralElement:
    """Element of the dihedral group of order 2n acting on positions 0..n-1.

    As a permutation: ``k -> rotation + k`` or, when reflected, ``k -> rotation - k``.
    Acting on a sequence ``c`` it produces ``c'[k] = c[perm(k)]``.
    """

    n: int
    rotation: int = 0
    reflected: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rotation", self.rotation % self.n)

    def __call__(self, k: int) -> int:
        return (self.rotation - k if self.reflected else self.rotation + k) % self.n

    def act(self, seq: Sequence) -> tuple:
        return tuple(seq[self(k)] for k in range(self.n))

    def compose(self, other: "DihedralElement") -> "DihedralElement":
        """``self o other`` as permutations: k -> self(other(k))."""
        if self.reflected:
            return DihedralElement(self.n, self.rotation - other.rotation, not other.reflected)
        return DihedralElement(self.n, self.rotation + other.rotation, other.reflected)

    def inverse(self) -> "DihedralElement":
        if self.reflected:
            return self
        return DihedralElement(self.n, -self.rotation)

    @property
    def is_identity(self) -> bool:
        return not self.reflected and self.rotation == 0

    @classmethod
    def identity(cls, n: int) -> "DihedralElement":
        return cls(n)

    def to_json(self) -> dict:
        return {"rotation": self.rotation, "reflected": self.reflected}

    def __str__(self) -> str:
        return f"{'s' if self.reflected else 'r'}{self.rotation}"


def dihedral_group(n: int) -> list[DihedralElement]:
    """All 2n elements: rotations first, then reflections."""
    return [DihedralElement(n, r, False) for r in range(n)] + [
        DihedralElement(n, r, True) for r in range(n)
    ]


def generate_subgroup(n: int, gens: Iterable[DihedralElement]) -> list[DihedralElement]:
    found = {DihedralElement.identity(n)}
    frontier = list(found)
    gens = list(gens)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = g.compose(h)
                if gh not in found:
                    found.add(gh)
                    nxt.append(gh)
        frontier = nxt
    order = {e: i for i, e in enumerate(dihedral_group(n))}
    return sorted(found, key=order.__getitem__)


@dataclass(frozen=True)
class PairInvariants:
    d_squared: int
    charge: int
    euler_complement: int
    lambda_rank: int | None

    def to_json(self) -> dict:
        return {
            "d_squared": self.d_squared,
            "charge": self.charge,
            "euler_complement": self.euler_complement,
            "lambda_rank": self.lambda_rank,
        }


def d_squared(c: Sequence[int]) -> int:
    # each component meets its two neighbours once
    return -sum(c) + 2 * len(c)


def invariants_of(c: Cycle) -> PairInvariants:
    c = Cycle(c)
    d2 = d_squared(c)
    q = 12 - d2 - len(c)
    rank = q - 2 if is_negative_definite(c) else None
    return PairInvariants(d2, q, q, rank)


def intersection_matrix(c: Cycle) -> list[list[int]]:
    c = Cycle(c)
    n = len(c)
    m = [[0] * n for _ in range(n)]
    for i, a in enumerate(c):
        m[i][i] = -a
        m[i][(i + 1) % n] = 1
        m[i][(i - 1) % n] = 1
    return m


def leading_minors(m: Sequence[Sequence[int]]) -> list[int]:
    """Exact determinants of the leading k x k minors, k = 1..n.

    Fraction-free Bareiss elimination without pivoting: the k-th pivot is the
    k-th leading minor.
    """
    a = [list(map(int, row)) for row in m]
    n = len(a)
    minors = []
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            minors.append(0)
            minors.extend(_det_exact([row[: j + 1] for row in m[: j + 1]]) for j in range(k + 1, n))
            return minors
        minors.append(a[k][k])
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return minors


def _det_exact(m: Sequence[Sequence[int]]) -> int:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return int(det)


def is_negative_definite(c: Cycle) -> bool:
    """Sylvester's criterion: (-1)^k * (leading k-minor) > 0 for every k."""
    minors = leading_minors(intersection_matrix(c))
    return all((-1) ** (k + 1) * d > 0 for k, d in enumerate(minors))


def dihedral_canonical(c: Cycle) -> tuple[Cycle, DihedralElement]:
    """Lexicographically least image of ``c`` and the first element producing it."""
    c = Cycle(c)
    best = None
    for g in dihedral_group(len(c)):
        img = g.act(c)
        if best is None or img < best[0]:
            best = (img, g)
    return Cycle(best[0]), best[1]


def canonical_form(c: Sequence[int]) -> Cycle:
    return dihedral_canonical(c)[0]


def dihedral_equal(c: Sequence[int], d: Sequence[int]) -> bool:
    return len(c) == len(d) and canonical_form(c) == canonical_form(d)


def relabeling(c: Sequence[int], d: Sequence[int]) -> DihedralElement | None:
    """First dihedral ``g`` with ``g.act(c) == d``, or ``None``."""
    if len(c) != len(d):
        return None
    d = tuple(d)
    return next((g for g in dihedral_group(len(c)) if g.act(c) == d), None)


def symmetry_group(c: Cycle) -> list[DihedralElement]:
    c = Cycle(c)
    return [g for g in dihedral_group(len(c)) if g.act(c) == tuple(c)]
