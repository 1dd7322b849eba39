"""Fans of smooth complete toric surfaces as cyclic lists of primitive rays.

Ray ``v_i`` corresponds to boundary component ``D_i``. Consecutive rays satisfy
``det(v_i, v_{i+1}) = 1`` and ``v_{i-1} + v_{i+1} = a_i v_i`` with ``a_i = -D_i^2``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import lattice as L
from .cycles import Cycle, DihedralElement
from .errors import LengthOutOfRange, NotContractible, NotToric
from .lattice import LatticeVector, Matrix2


def _upper(v: LatticeVector) -> bool:
    # half-open upper half plane: angles in [0, pi)
    return v[1] > 0 or (v[1] == 0 and v[0] > 0)


def _angle_less(v: LatticeVector, w: LatticeVector) -> bool:
    """Strict comparison of the angles of v, w taken in [0, 2pi)."""
    uv, uw = _upper(v), _upper(w)
    if uv != uw:
        return uv
    return L.det2(v, w) > 0


def winding_number(rays: Sequence[LatticeVector]) -> int:
    """Turns made by a closed ray sequence whose every step is a ccw turn in (0, pi).

    Counts the steps that wrap past the positive x-axis; exact, no angles.
    """
    n = len(rays)
    return sum(1 for i in range(n) if not _angle_less(rays[i], rays[(i + 1) % n]))


def _check_rays(rays: Sequence[LatticeVector]) -> None:
    n = len(rays)
    if n < 3:
        raise LengthOutOfRange(f"a complete fan needs at least 3 rays, got {n}")
    for v in rays:
        if v == (0, 0) or not L.is_primitive(v):
            raise NotToric(f"ray {v} is not primitive")
    for i in range(n):
        d = L.det2(rays[i], rays[(i + 1) % n])
        if d != 1:
            raise NotToric(
                f"rays {i + 1} and {(i + 1) % n + 1} span a cone of determinant {d}, not 1"
            )
    w = winding_number(rays)
    if w != 1:
        raise NotToric(f"ray sequence winds {w} times around the origin")


@dataclass(frozen=True, eq=False)
class Fan:
    """Smooth complete fan; ``rays`` in counterclockwise order.

    Two fans are equal when they agree after the basis change sending the
    first two rays to (1,0) and (0,1).
    """

    rays: tuple[LatticeVector, ...]

    def __post_init__(self):
        rays = tuple((int(x), int(y)) for x, y in self.rays)
        _check_rays(rays)
        object.__setattr__(self, "rays", rays)

    def __len__(self) -> int:
        return len(self.rays)

    def ray(self, i: int) -> LatticeVector:
        """Ray of component ``i`` (1-based, cyclic)."""
        return self.rays[(i - 1) % len(self.rays)]

    def normalized(self) -> "Fan":
        g = L.unimodular_inverse(L.columns(self.rays[0], self.rays[1]))
        return Fan(tuple(L.apply(g, v) for v in self.rays))

    def transformed(self, m: Matrix2) -> "Fan":
        return Fan(tuple(L.apply(m, v) for v in self.rays))

    def rotated(self, k: int) -> "Fan":
        """Relabel so that the current component ``k + 1`` becomes component 1."""
        k %= len(self.rays)
        return Fan(self.rays[k:] + self.rays[:k])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Fan):
            return NotImplemented
        return self.normalized().rays == other.normalized().rays

    def __hash__(self) -> int:
        return hash(self.normalized().rays)

    def to_json(self) -> list[list[int]]:
        return [list(v) for v in self.rays]

    @classmethod
    def from_json(cls, data) -> "Fan":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(tuple(v) for v in data))

    @property
    def cycle(self) -> Cycle:
        return cycle_from_fan(self)


def fan_from_cycle(c: Iterable[int]) -> Fan:
    """Build the fan of a toric pair from its cycle, normalized to v_1=(1,0), v_2=(0,1).

    Raises NotToric when the recurrence does not close up with winding number one.
    """
    c = Cycle(c)
    n = len(c)
    v = [(1, 0), (0, 1)]
    for k in range(1, n):
        v.append(L.sub(L.scale(c[k], v[k]), v[k - 1]))
    wrap_next = L.sub(L.scale(c[0], v[0]), v[n - 1])
    if v[n] != v[0] or wrap_next != v[1]:
        raise NotToric(f"cycle {c} does not close up into a fan (sum {sum(c)}, need {3 * n - 12})")
    rays = tuple(v[:n])
    w = winding_number(rays)
    if w != 1:
        raise NotToric(f"cycle {c} closes up with winding number {w}, not 1")
    return Fan(rays)


def is_toric(c: Iterable[int]) -> bool:
    try:
        fan_from_cycle(c)
    except NotToric:
        return False
    return True


def cycle_from_fan(f: Fan) -> Cycle:
    rays = f.rays
    n = len(rays)
    # det(v_{i-1}, v_{i+1}) = det(v_{i-1}, a_i v_i - v_{i-1}) = a_i
    return Cycle(L.det2(rays[i - 1], rays[(i + 1) % n]) for i in range(n))


def corner_blowup(f: Fan, i: int) -> Fan:
    """Blow up the node between components ``i`` and ``i+1`` (1-based, cyclic).

    The new ray becomes component ``i+1``; later components shift up by one.
    """
    n = len(f)
    k = (i - 1) % n
    new = L.add(f.rays[k], f.rays[(k + 1) % n])
    return Fan(f.rays[: k + 1] + (new,) + f.rays[k + 1 :])


def corner_blowdown(f: Fan, i: int) -> Fan:
    """Contract component ``i`` (1-based); it must be a (-1)-curve of the boundary."""
    n = len(f)
    k = (i - 1) % n
    if n <= 3:
        raise NotContractible("contracting a component of a 3-cycle leaves no fan")
    prev, here, nxt = f.rays[k - 1], f.rays[k], f.rays[(k + 1) % n]
    if L.add(prev, nxt) != here:
        a = L.det2(prev, nxt)
        raise NotContractible(f"component {i} has self-intersection {-a}, not -1")
    return Fan(f.rays[:k] + f.rays[k + 1 :])


def insert_ray(f: Fan, v: LatticeVector) -> Fan:
    """Corner-blow up at whichever node has ``v`` as the sum of its two rays."""
    for k in range(len(f)):
        if L.add(f.rays[k], f.rays[(k + 1) % len(f)]) == v:
            return corner_blowup(f, k + 1)
    raise NotToric(f"ray {v} is not the sum of two adjacent rays")


def are_opposite(f: Fan, i: int, j: int) -> bool:
    return f.ray(i) == L.neg(f.ray(j))


def opposite_pairs(f: Fan) -> list[tuple[int, int]]:
    """All ordered (i, j), 1-based, with v_i = -v_j, in lexicographic order."""
    n = len(f)
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if are_opposite(f, i, j)]


def fan_symmetries(f: Fan) -> list[tuple[DihedralElement, Matrix2]]:
    """Unimodular maps permuting the rays, with the label permutation each induces.

    Each candidate is pinned down by where it sends v_1, v_2; orientation
    preserving maps send them to (v_j, v_{j+1}), reversing ones to (v_j, v_{j-1}).
    """
    rays = f.rays
    n = len(rays)
    src_inv = L.unimodular_inverse(L.columns(rays[0], rays[1]))
    out = []
    for reflected in (False, True):
        for j in range(n):
            g = DihedralElement(n, j, reflected)
            m = L.matmul(L.columns(rays[g(0)], rays[g(1)]), src_inv)
            if all(L.apply(m, rays[k]) == rays[g(k)] for k in range(n)):
                out.append((g, m))
    return out
