"""Elementary transformations between toric models, and bounded searches over them.

A move ``(blowup_on=b, blowdown_at=c)`` blows up a general point of component ``b`` and
contracts the (-1)-curve meeting component ``c``; it needs ``v_b = -v_c`` so that
both are sections of a ruling. On cycles: ``a_b += 1``, ``a_c -= 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cycles import Cycle, canonical_form
from .errors import LengthMismatch, NoMarkAvailable, NotFoundWithinBounds, NotOpposite
from .fans import Fan, are_opposite, fan_from_cycle, opposite_pairs
from .pairs import MarkedPair, StandardModel, get_model

DEFAULT_MAX_MOVES = 8
DEFAULT_ENTRY_MIN = -2


@dataclass(frozen=True, order=True)
class Move:
    """Elementary transformation; components are 1-based."""

    blowup_on: int
    blowdown_at: int

    def __post_init__(self):
        if self.blowup_on == self.blowdown_at:
            raise ValueError("a move needs two distinct components")

    def reversed(self) -> "Move":
        return Move(self.blowdown_at, self.blowup_on)

    def to_json(self) -> dict:
        return {"blowup_on": self.blowup_on, "blowdown_at": self.blowdown_at}

    @classmethod
    def from_json(cls, data: dict) -> "Move":
        return cls(int(data["blowup_on"]), int(data["blowdown_at"]))

    def __str__(self) -> str:
        return f"phi[{self.blowup_on},{self.blowdown_at}]"


@dataclass(frozen=True)
class Path:
    start: Cycle
    moves: tuple[Move, ...]
    end: Cycle

    def __len__(self) -> int:
        return len(self.moves)

    def to_json(self) -> dict:
        return {
            "start": list(self.start),
            "moves": [m.to_json() for m in self.moves],
            "end": list(self.end),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Path":
        return cls(
            Cycle(data["start"]),
            tuple(Move.from_json(m) for m in data["moves"]),
            Cycle(data["end"]),
        )


def _check_move(f: Fan, m: Move) -> None:
    n = len(f)
    for i in (m.blowup_on, m.blowdown_at):
        if not 1 <= i <= n:
            raise IndexError(f"component {i} out of range 1..{n}")
    if not are_opposite(f, m.blowup_on, m.blowdown_at):
        raise NotOpposite(
            f"components {m.blowup_on} and {m.blowdown_at} are not opposite: rays {f.ray(m.blowup_on)} and {f.ray(m.blowdown_at)}"
        )


def _shift(c: Sequence[int], m: Move) -> Cycle:
    out = list(c)
    out[m.blowup_on - 1] += 1
    out[m.blowdown_at - 1] -= 1
    return Cycle(out)


def elem_transform(c: Iterable[int], m: Move) -> Cycle:
    c = Cycle(c)
    _check_move(fan_from_cycle(c), m)
    out = _shift(c, m)
    fan_from_cycle(out)  # always closes up; kept as a guard
    return out


def available_moves(c: Iterable[int]) -> list[Move]:
    return [Move(i, j) for i, j in opposite_pairs(fan_from_cycle(c))]


def replay(start: Iterable[int], moves: Iterable[Move]) -> Cycle:
    c = Cycle(start)
    for m in moves:
        c = elem_transform(c, m)
    return c


def relative_elem_transform(p: MarkedPair, m: Move) -> MarkedPair:
    """Move on the toric model that reuses one of the pair's blowup points on ``m.blowup_on``.

    The pair's own cycle is unchanged; one mark migrates from ``up`` to ``down``.
    """
    _check_move(p.base, m)
    if p.marks[m.blowup_on - 1] < 1:
        raise NoMarkAvailable(f"no interior blowup on component {m.blowup_on} to reuse")
    base = fan_from_cycle(_shift(p.base_cycle, m))
    marks = list(p.marks)
    marks[m.blowup_on - 1] -= 1
    marks[m.blowdown_at - 1] += 1
    return MarkedPair(base, tuple(marks))


def find_path(
    start: Iterable[int],
    target: Iterable[int],
    max_moves: int = DEFAULT_MAX_MOVES,
    entry_min: int = DEFAULT_ENTRY_MIN,
) -> Path:
    """Shortest move sequence from ``start`` to a relabeling of ``target``.

    Breadth-first over toric cycles whose entries stay >= ``entry_min``; moves are
    tried in lexicographic order so the result is deterministic. Raises
    NotFoundWithinBounds when the bounded search is exhausted.
    """
    start = Cycle(start)
    target = Cycle(target)
    if len(start) != len(target):
        raise LengthMismatch(f"start has length {len(start)}, target {len(target)}")
    fan_from_cycle(start)
    goal = canonical_form(target)
    parent: dict[Cycle, tuple[Cycle, Move] | None] = {start: None}
    queue = deque([(start, 0)])
    while queue:
        c, depth = queue.popleft()
        if canonical_form(c) == goal:
            moves = []
            node = c
            while parent[node] is not None:
                node, mv = parent[node]
                moves.append(mv)
            return Path(start, tuple(reversed(moves)), c)
        if depth == max_moves:
            continue
        for mv in available_moves(c):
            nxt = _shift(c, mv)
            if nxt in parent or min(nxt) < entry_min:
                continue
            parent[nxt] = (c, mv)
            queue.append((nxt, depth + 1))
    raise NotFoundWithinBounds(
        f"no path from {start} to {target} within {max_moves} moves (entries >= {entry_min})",
        max_moves=max_moves,
        entry_min=entry_min,
    )


def relative_reachable(p: MarkedPair, target_model: StandardModel | str, max_moves: int) -> bool:
    """Whether relative moves reach a toric model whose cycle is a relabeling of the target's.

    ``False`` only means not within ``max_moves``.
    """
    if isinstance(target_model, str):
        target_model = get_model(target_model)
    if target_model.n != p.n:
        raise LengthMismatch(f"pair has length {p.n}, model {target_model.name} has {target_model.n}")
    goal = canonical_form(target_model.cycle)
    seen = {(p.base_cycle, p.marks)}
    frontier = [p]
    for depth in range(max_moves + 1):
        nxt = []
        for q in frontier:
            if canonical_form(q.base_cycle) == goal:
                return True
            if depth == max_moves:
                continue
            for i, j in opposite_pairs(q.base):
                if q.marks[i - 1] < 1:
                    continue
                r = relative_elem_transform(q, Move(i, j))
                key = (r.base_cycle, r.marks)
                if key not in seen:
                    seen.add(key)
                    nxt.append(r)
        frontier = nxt
    return False
