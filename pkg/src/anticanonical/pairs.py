"""Looijenga pairs presented as a toric model plus interior-blowup marks.

A ``MarkedPair`` with base fan ``F`` and marks ``m`` stands for the pair obtained
from the toric pair of ``F`` by ``m_i`` interior blowups on component ``i``.
Its boundary cycle is ``a_i(F) + m_i`` and its charge is ``sum(m)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .cycles import Cycle
from .errors import LengthMismatch, UnknownModel
from .fans import Fan, cycle_from_fan, insert_ray
from .lattice import GroupInvariants, smith_normal_form

HEXAGON = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))

MODEL_NAMES = ("T6", "T7", "Ti", "Tii", "T9")

# cycles as drawn for the common toric pairs
REFERENCE_CYCLES = {
    "T6": (1, 1, 1, 1, 1, 1),
    "T7": (1, 1, 2, 1, 2, 1, 1),
    "Ti": (1, 2, 1, 2, 1, 2, 1, 2),
    "Tii": (1, 2, 1, 2, 2, 1, 2, 1),
    "T9": (2, 2, 1, 2, 2, 1, 2, 2, 1),
}


@dataclass(frozen=True)
class StandardModel:
    name: str
    fan: Fan
    cycle: Cycle

    @property
    def n(self) -> int:
        return len(self.cycle)

    def to_json(self) -> dict:
        return {"name": self.name, "cycle": self.cycle.to_json(), "fan": self.fan.to_json()}


@lru_cache(maxsize=None)
def _build_models() -> tuple[StandardModel, ...]:
    hexagon = Fan(HEXAGON)
    t7 = insert_ray(hexagon, (-1, 1))
    ti = insert_ray(t7, (1, -1))
    tii = insert_ray(insert_ray(hexagon, (1, 2)), (-2, -1))
    t9 = insert_ray(tii, (1, -1))
    # T_i is labelled from e1+e2 so that its (-1)-components are the odd ones
    fans = {"T6": hexagon, "T7": t7, "Ti": ti.rotated(1), "Tii": tii, "T9": t9}
    return tuple(StandardModel(name, fans[name], cycle_from_fan(fans[name])) for name in MODEL_NAMES)


def standard_models() -> list[StandardModel]:
    return list(_build_models())


def get_model(name: str) -> StandardModel:
    cleaned = "".join(ch for ch in name.strip().lower() if ch not in "_()")
    key = {m.lower(): m for m in MODEL_NAMES}.get(cleaned)
    if key is None:
        raise UnknownModel(f"unknown standard model {name!r}; choose from {', '.join(MODEL_NAMES)}")
    return _build_models()[MODEL_NAMES.index(key)]


def models_of_length(n: int) -> list[StandardModel]:
    return [m for m in _build_models() if m.n == n]


@dataclass(frozen=True)
class MarkedPair:
    base: Fan
    marks: tuple[int, ...]
    model: str | None = None

    def __post_init__(self):
        marks = tuple(int(m) for m in self.marks)
        if len(marks) != len(self.base):
            raise LengthMismatch(f"{len(marks)} marks for a fan with {len(self.base)} rays")
        if any(m < 0 for m in marks):
            raise ValueError(f"marks must be nonnegative, got {marks}")
        object.__setattr__(self, "marks", marks)

    @property
    def n(self) -> int:
        return len(self.marks)

    @property
    def base_cycle(self) -> Cycle:
        return cycle_from_fan(self.base)

    @property
    def cycle(self) -> Cycle:
        """Boundary cycle of the pair itself: each interior blowup adds one."""
        return Cycle(a + m for a, m in zip(self.base_cycle, self.marks))

    @property
    def charge(self) -> int:
        return sum(self.marks)

    @property
    def support(self) -> tuple[int, ...]:
        """1-based components carrying at least one mark."""
        return tuple(i + 1 for i, m in enumerate(self.marks) if m)

    def to_json(self) -> dict:
        return {"model": self.model or self.base.to_json(), "marks": list(self.marks)}

    @classmethod
    def from_json(cls, data: dict) -> "MarkedPair":
        model = data["model"]
        if isinstance(model, str):
            m = get_model(model)
            return cls(m.fan, tuple(data["marks"]), m.name)
        return cls(Fan.from_json(model), tuple(data["marks"]))

    @classmethod
    def on_model(cls, name: str, marks: Sequence[int]) -> "MarkedPair":
        m = get_model(name)
        return cls(m.fan, tuple(marks), m.name)


def elliptic_pair(model: StandardModel | str) -> MarkedPair:
    """One interior blowup on every (-1)-component; the result is a cycle of (-2)-curves."""
    if isinstance(model, str):
        model = get_model(model)
    marks = tuple(1 if a == 1 else 0 for a in model.cycle)
    return MarkedPair(model.fan, marks, model.name)


def add_marks(p: MarkedPair, extra: Iterable[int]) -> MarkedPair:
    extra = tuple(extra)
    if len(extra) != p.n:
        raise LengthMismatch(f"{len(extra)} extra marks for a pair of length {p.n}")
    if any(e < 0 for e in extra):
        raise ValueError(f"extra marks must be nonnegative, got {extra}")
    return MarkedPair(p.base, tuple(m + e for m, e in zip(p.marks, extra)), p.model)


def fundamental_group(p: MarkedPair) -> GroupInvariants:
    """pi_1 of the complement: Z^2 modulo the rays of the marked components."""
    return smith_normal_form(v for v, m in zip(p.base.rays, p.marks) if m)
