"""Embedded case tables of toric models for lengths 7, 8, 9 and a replay engine.

Rows are transcribed as printed, including the printed index pairs ``(i, j)``
of each elementary transformation. Whether a printed pair means
``Move(blowup_on=i, blowdown_at=j)`` ("printed" orientation) or ``Move(blowup_on=j, blowdown_at=i)``
("swapped") is left open and decided per move by ``replay``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .cycles import Cycle, dihedral_equal, relabeling
from .errors import AtkError, NotFoundWithinBounds, NotToric, UnknownContinuation
from .fans import fan_from_cycle
from .pairs import get_model
from .transforms import DEFAULT_ENTRY_MIN, Move, Path, elem_transform, find_path

MODES = ("literal", "swapped", "auto")

LITERAL_PASS = "literal_pass"
SWAPPED_PASS = "pass_with_swapped_orientation"
FLIPS_PASS = "pass_with_per_move_flips"
SEARCH_PASS = "resolved_by_search"
FAIL = "fail"
STATUSES = (LITERAL_PASS, SWAPPED_PASS, FLIPS_PASS, SEARCH_PASS, FAIL)


@dataclass(frozen=True)
class TableRow:
    table_id: int
    index: int
    start: Cycle
    listed_moves: tuple[tuple[int, int], ...]
    declared_target: str
    label: str | None = None
    continuation: str | None = None
    sections: tuple[int, int] | None = None

    @property
    def row_id(self) -> str:
        return f"{self.table_id}.{self.index}"

    def to_json(self) -> dict:
        return {
            "id": self.row_id,
            "table": self.table_id,
            "label": self.label,
            "sections": list(self.sections) if self.sections else None,
            "start": list(self.start),
            "listed_moves": [list(p) for p in self.listed_moves],
            "continuation": self.continuation,
            "declared_target": self.declared_target,
        }


def _rows(table_id, target, blocks):
    out = []
    for sections, rows in blocks:
        for entry in rows:
            label, start, moves, *rest = entry
            tgt = rest[1] if len(rest) > 1 else target
            cont = rest[0] if rest else None
            out.append(
                TableRow(table_id, len(out) + 1, Cycle(start), tuple(moves), tgt, label, cont, sections)
            )
    return out


# (label, start, printed moves[, continuation[, toric model]])
_TABLE_7 = _rows(7, "T7", [
    ((3, 7), [
        (None, (1, 1, 1, 1, 2, 1, 2), []),
    ]),
    ((2, 7), [
        (None, (0, 1, 1, 2, 2, 1, 2), [(4, 1)]),
        (None, (0, 1, 1, 3, 1, 2, 1), [(4, 1)]),
        (None, (0, 0, 2, 2, 1, 3, 1), [(3, 1), (6, 2)]),
    ]),
])

_TABLE_8 = _rows(8, None, [
    ((4, 8), [
        ("a", (1, 2, 1, 2, 1, 2, 1, 2), [], None, "Ti"),
        ("b", (1, 2, 1, 1, 1, 2, 1, 3), [(6, 3), (8, 5)], None, "Tii"),
        (None, (2, 1, 2, 1, 1, 2, 1, 2), [], None, "Tii"),
    ]),
    ((3, 8), [
        (None, (1, 1, 2, 1, 2, 2, 1, 2), [], None, "Tii"),
        (None, (1, 1, 1, 1, 2, 2, 1, 3), [(8, 3)], None, "Tii"),
    ]),
    ((2, 8), [
        ("c", (0, 1, 1, 2, 2, 2, 1, 3), [(4, 1), (8, 3)], None, "Tii"),
        ("d", (0, 2, 1, 2, 2, 2, 1, 2), [(5, 1)], None, "Ti"),
        (None, (0, 1, 1, 2, 3, 1, 2, 2), [(8, 2), (5, 1)], None, "Tii"),
        (None, (0, 1, 1, 3, 1, 3, 1, 2), [(4, 1), (4, 1), (6, 3)], None, "Tii"),
        (None, (0, 1, 1, 3, 2, 1, 3, 1), [(4, 1), (7, 2)], None, "Tii"),
        (None, (0, 1, 1, 4, 1, 2, 2, 1), [(4, 1), (4, 1)], None, "Tii"),
        (None, (0, 1, 2, 1, 4, 1, 2, 1), [(5, 1), (3, 8), (5, 2)], None, "Tii"),
        (None, (0, 1, 2, 2, 2, 1, 4, 0), [(7, 1), (3, 8), (7, 2)], None, "Tii"),
        (None, (0, 1, 2, 3, 1, 2, 3, 0), [(7, 1), (4, 1)], None, "Tii"),
        (None, (0, 1, 3, 1, 3, 1, 3, 0), [(7, 1), (7, 1), (4, 8)], None, "Tii"),
    ]),
])

_TABLE_9 = _rows(9, "T9", [
    ((1, 5), [
        ("(i)", (2, 1, 2, 1, 3, 1, 2, 2, 1), [(7, 2), (1, 6), (9, 5)]),
        (None, (3, 1, 2, 1, 2, 1, 2, 2, 1), [(8, 4)], "(i)"),
        (None, (2, 1, 2, 1, 2, 1, 3, 1, 2), [(9, 4)], "(i)"),
        ("(ii)", (1, 1, 2, 1, 2, 2, 2, 1, 3), [(1, 6), (9, 5)]),
        (None, (2, 1, 2, 1, 1, 2, 2, 1, 3), [(1, 5)], "(ii)"),
        (None, (2, 2, 1, 2, 2, 1, 2, 2, 1), []),
    ]),
    ((1, 4), [
        (None, (2, 1, 1, 2, 1, 2, 3, 1, 2), [(6, 2)], "(ii)"),
        (None, (2, 1, 1, 2, 1, 3, 1, 3, 1), [(8, 3)], "(i)"),
        (None, (2, 1, 1, 1, 1, 3, 2, 1, 3), [(6, 3), (9, 4)]),
        ("(iii)", (1, 1, 1, 2, 1, 3, 2, 1, 3), [(9, 3), (6, 1)]),
        ("(iv)", (2, 1, 1, 1, 1, 4, 1, 2, 2), [(6, 3), (1, 5), (6, 2)]),
        ("(v)", (1, 1, 1, 2, 1, 4, 1, 2, 2), [(6, 2)], "(i)"),
        ("(vi)", (1, 1, 1, 1, 3, 1, 3, 1, 3), [(9, 3), (5, 1)], "(i)"),
    ]),
    ((1, 3), [
        (None, (2, 0, 3, 1, 2, 2, 2, 2, 1), [(5, 9), (8, 4), (3, 7)]),
        (None, (0, 0, 1, 2, 2, 2, 2, 1, 5), [(9, 2), (4, 1), (9, 3), (5, 1), (9, 4)]),
        (None, (1, 0, 1, 1, 3, 2, 2, 1, 4), [(5, 2)], "(iv)"),
        (None, (0, 0, 1, 3, 1, 3, 2, 1, 4), [(9, 2), (4, 1)], "(iii)"),
        (None, (1, 0, 1, 2, 1, 4, 2, 1, 3), [(6, 2), (6, 2)], "(i)"),
        (None, (2, 0, 1, 1, 2, 3, 2, 1, 3), [(5, 2), (6, 3), (9, 4)]),
        (None, (0, 0, 1, 2, 3, 1, 3, 1, 4), [(9, 2), (4, 1)], "(vi)"),
        (None, (1, 0, 1, 1, 4, 1, 3, 1, 3), [(5, 2)], "(vi)"),
        (None, (1, 0, 0, 3, 2, 1, 4, 1, 3), [(4, 2), (9, 3)], "(v)"),
        (None, (1, 0, 1, 2, 2, 1, 5, 1, 2), [(7, 2)], "(v)"),
        (None, (1, 0, 2, 1, 3, 1, 4, 1, 2), [(7, 2), (7, 2)], "(i)"),
        (None, (1, 0, 2, 2, 1, 3, 3, 1, 2), [(7, 2), (5, 2)]),
        (None, (2, 0, 2, 1, 2, 2, 3, 1, 2), [(6, 2)], "(i)"),
        (None, (1, 0, 0, 2, 2, 3, 1, 2, 4), [(4, 2), (9, 3), (6, 2)]),
        (None, (1, 0, 1, 1, 3, 3, 3, 2, 3), [(5, 2), (9, 3), (5, 2)]),
        (None, (1, 0, 2, 1, 2, 4, 1, 2, 2), [(6, 2), (6, 2)]),
        (None, (1, 0, 0, 2, 3, 2, 1, 3, 3), [(4, 2), (9, 3), (5, 2), (8, 3)]),
        (None, (1, 0, 1, 1, 4, 2, 1, 3, 2), [(5, 2), (8, 3)]),
        (None, (1, 0, 0, 3, 2, 2, 1, 2, 4), [(4, 2), (9, 3), (8, 2), (4, 9), (8, 3)]),
        (None, (1, 0, 1, 2, 2, 2, 1, 5, 1), [(8, 2), (4, 9), (8, 3)]),
        (None, (1, 0, 2, 1, 3, 2, 1, 4, 1), [(8, 2), (5, 9)]),
        (None, (2, 0, 2, 1, 2, 3, 1, 3, 1), [(6, 2), (9, 3)], "(i)"),
    ]),
])

# the two worked length-6 reductions, written with the same (blowup_on, blowdown_at) index order
_FIGURES = [
    TableRow(6, 1, Cycle((0, 1, 1, 2, 1, 1)), ((1, 4),), "T6", "worked-1"),
    TableRow(6, 2, Cycle((0, 0, 2, 1, 2, 1)), ((1, 3), (2, 5)), "T6", "worked-2"),
]

TABLES = {7: _TABLE_7, 8: _TABLE_8, 9: _TABLE_9}


def embedded_rows(table_id: int | None = None) -> list[TableRow]:
    if table_id is not None:
        return list(TABLES[table_id])
    return [r for t in (7, 8, 9) for r in TABLES[t]]


def figure_rows() -> list[TableRow]:
    return list(_FIGURES)


def all_named_cycles() -> list[Cycle]:
    """Every cycle written down for a toric pair: models, worked examples, table rows."""
    from .pairs import REFERENCE_CYCLES

    seen = {}
    for c in REFERENCE_CYCLES.values():
        seen.setdefault(Cycle(c), None)
    seen.setdefault(Cycle((1, 0, 1, 1, 2, 1)), None)
    for r in figure_rows() + embedded_rows():
        seen.setdefault(r.start, None)
    return list(seen)


def find_row(label: str, table_id: int) -> TableRow:
    for r in TABLES.get(table_id, ()):
        if r.label == label:
            return r
    raise UnknownContinuation(f"table {table_id} has no row labelled {label!r}")


def _chain(row: TableRow) -> list[TableRow]:
    chain = [row]
    while chain[-1].continuation is not None:
        nxt = find_row(chain[-1].continuation, row.table_id)
        if nxt in chain:
            raise UnknownContinuation(f"continuation cycle through {nxt.label}")
        chain.append(nxt)
    return chain


@dataclass
class ReplayReport:
    row: TableRow
    status: str
    orientation_choices: list[str] | None = None
    final_cycle: Cycle | None = None
    applied_moves: list[Move] = field(default_factory=list)
    path: Path | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    @property
    def flips(self) -> int | None:
        """Moves applied against the printed (blowup_on, blowdown_at) order."""
        if self.orientation_choices is None:
            return None
        return sum(1 for o in self.orientation_choices if o == "swapped")

    def to_json(self) -> dict:
        return {
            "row": self.row.to_json(),
            "status": self.status,
            "orientation_choices": self.orientation_choices,
            "applied_moves": [m.to_json() for m in self.applied_moves],
            "final_cycle": list(self.final_cycle) if self.final_cycle is not None else None,
            "path": self.path.to_json() if self.path is not None else None,
            "notes": list(self.notes),
        }


class _Broken(Exception):
    pass


def _run(chain: Sequence[TableRow], flips: Sequence[bool]) -> tuple[Cycle, list[Move]]:
    """Replay a chain of rows under one orientation assignment."""
    c = chain[0].start
    applied = []
    k = 0
    for pos, row in enumerate(chain):
        if pos:
            if relabeling(c, row.start) is None:
                raise _Broken(f"reached {c}, which is not a relabeling of row {row.label} start {row.start}")
            c = row.start
        for i, j in row.listed_moves:
            mv = Move(j, i) if flips[k] else Move(i, j)
            k += 1
            try:
                c = elem_transform(c, mv)
            except AtkError as exc:
                raise _Broken(f"move {k} {mv} on {c}: {exc.code}") from None
            applied.append(mv)
    return c, applied


def orientation_assignments(k: int, mode: str = "auto") -> list[tuple[bool, ...]]:
    """Assignments in trial order: printed, swapped, then fewest deviations from either."""
    if mode == "literal":
        return [(False,) * k]
    if mode == "swapped":
        return [(True,) * k]
    if mode != "auto":
        raise ValueError(f"mode must be one of {MODES}")
    uniform = [(False,) * k, (True,) * k]
    rest = [a for a in product((False, True), repeat=k) if a not in uniform]
    rest.sort(key=lambda a: (min(sum(a), k - sum(a)), a))
    out = []
    for a in uniform + rest:
        if a not in out:
            out.append(a)
    return out


def replay(row: TableRow, mode: str = "auto", search_slack: int = 2) -> ReplayReport:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    chain = _chain(row)
    k = sum(len(r.listed_moves) for r in chain)
    target = get_model(row.declared_target).cycle
    report = ReplayReport(row, FAIL)
    try:
        fan_from_cycle(row.start)
    except NotToric as exc:
        report.notes.append(f"start is not a toric cycle: {exc}")
        return report

    for flips in orientation_assignments(k, mode):
        try:
            end, applied = _run(chain, flips)
        except _Broken as exc:
            if len(report.notes) < 3:
                report.notes.append(f"{_describe(flips)}: {exc}")
            continue
        if not dihedral_equal(end, target):
            if len(report.notes) < 3:
                report.notes.append(f"{_describe(flips)}: ended at {end}, not {row.declared_target}")
            continue
        if not any(flips):
            report.status = LITERAL_PASS
        elif all(flips):
            report.status = SWAPPED_PASS
        else:
            report.status = FLIPS_PASS
        report.orientation_choices = ["swapped" if f else "printed" for f in flips]
        report.final_cycle = end
        report.applied_moves = applied
        return report

    if mode == "auto":
        try:
            path = find_path(row.start, target, max_moves=k + search_slack, entry_min=DEFAULT_ENTRY_MIN)
        except NotFoundWithinBounds as exc:
            report.notes.append(str(exc))
        else:
            report.status = SEARCH_PASS
            report.path = path
            report.final_cycle = path.end
            report.applied_moves = list(path.moves)
            report.notes.append(f"shortest path has {len(path)} moves; printed sequence has {k}")
    return report


def _describe(flips) -> str:
    if not flips:
        return "no moves"
    return "orientation " + "".join("S" if f else "P" for f in flips)


@dataclass
class VerificationSummary:
    mode: str
    reports: list[ReplayReport]

    @property
    def counts(self) -> dict[str, int]:
        out = {s: 0 for s in STATUSES}
        for r in self.reports:
            out[r.status] += 1
        return out

    @property
    def failures(self) -> list[ReplayReport]:
        return [r for r in self.reports if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"mode": self.mode, "rows": len(self.reports), "counts": self.counts, "ok": self.ok}

    def table(self) -> str:
        """Human-readable errata table, one line per row."""
        lines = [f"{'row':<6} {'label':<9} {'start':<22} {'printed':<28} {'status':<30} orientation"]
        for r in self.reports:
            printed = " ".join(f"{i},{j}" for i, j in r.row.listed_moves) or "-"
            if r.row.continuation:
                printed += f" > {r.row.continuation}"
            if r.orientation_choices is not None:
                orient = "".join("S" if o == "swapped" else "P" for o in r.orientation_choices) or "-"
            elif r.path is not None:
                orient = "search: " + " ".join(f"{m.blowup_on},{m.blowdown_at}" for m in r.path.moves)
            else:
                orient = "; ".join(r.notes[:1])
            lines.append(
                f"{r.row.row_id:<6} {r.row.label or '':<9} {str(r.row.start):<22} {printed:<28} {r.status:<30} {orient}"
            )
        counts = ", ".join(f"{k}={v}" for k, v in self.counts.items())
        lines.append(f"mode={self.mode} rows={len(self.reports)} {counts}")
        return "\n".join(lines)


def verify_all(
    mode: str = "auto",
    tables: Iterable[int] | None = None,
    include_figures: bool | None = None,
) -> VerificationSummary:
    """Replay figure and table rows; rows are independent and reported in table order."""
    tables = (7, 8, 9) if tables is None else tuple(tables)
    if include_figures is None:
        include_figures = set(tables) == {7, 8, 9}
    rows = figure_rows() if include_figures else []
    rows += [r for t in tables for r in embedded_rows(t)]
    return VerificationSummary(mode, [replay(r, mode) for r in rows])
