"""Deformation-type counts for negative definite cycles of length 6 to 9.

A negative definite pair of length n is the elliptic pair over a standard toric
model with extra interior blowups. An *alignment* ``s`` says that model
component ``k`` becomes cycle component ``s(k)``, which forces
``marks[k] = a[s(k)] - t[k]`` for the model cycle ``t``. Alignments related by an
automorphism of the elliptic pair (``s -> s o r``, r realized) or by a
symmetry of the cycle (``s -> g o s``) give deformation-equivalent pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import lattice as L
from .cycles import (
    Cycle,
    DihedralElement,
    dihedral_group,
    generate_subgroup,
    is_negative_definite,
    symmetry_group,
)
from .errors import ContainsMinusOneCurve, LengthOutOfRange, NotNegativeDefinite
from .fans import fan_symmetries
from .lattice import GroupInvariants, Matrix2
from .pairs import MarkedPair, StandardModel, get_model, models_of_length

SWAP: Matrix2 = ((0, 1), (1, 0))
ANTISWAP: Matrix2 = ((0, -1), (-1, 0))

# rotation step realized by translations of the elliptic pair, and the lattice
# involution of the toric model that supplies a reflection
_REALIZATION = {
    "T6": (1, SWAP),
    "T7": (1, ANTISWAP),
    "Ti": (2, SWAP),
    "Tii": (1, ANTISWAP),
    "T9": (3, ANTISWAP),
}


@dataclass(frozen=True)
class RealizedSymmetry:
    model: str
    n: int
    subgroup: tuple[DihedralElement, ...]
    involution: DihedralElement

    @property
    def order(self) -> int:
        return len(self.subgroup)

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "n": self.n,
            "order": self.order,
            "involution": self.involution.to_json(),
            "subgroup": [g.to_json() for g in self.subgroup],
        }


def realized_subgroup(model: StandardModel | str) -> RealizedSymmetry:
    """Label permutations induced by automorphisms of the model's elliptic pair."""
    return _realized(model if isinstance(model, str) else model.name)


@lru_cache(maxsize=None)
def _realized(name: str) -> RealizedSymmetry:
    model = get_model(name)
    n = model.n
    step, matrix = _REALIZATION[model.name]
    involution = next((g for g, m in fan_symmetries(model.fan) if m == matrix), None)
    if involution is None:
        raise AssertionError(f"{matrix} is not a symmetry of the {model.name} fan")
    support = tuple(1 if a == 1 else 0 for a in model.cycle)
    if involution.act(support) != support:
        raise AssertionError(f"{involution} moves the elliptic blowup locus of {model.name}")
    group = generate_subgroup(n, [DihedralElement(n, step), involution])
    return RealizedSymmetry(model.name, n, tuple(group), involution)


@dataclass(frozen=True)
class Presentation:
    model: str
    alignment: DihedralElement
    marks: tuple[int, ...]
    pi1: GroupInvariants

    def pair(self) -> MarkedPair:
        return MarkedPair.on_model(self.model, self.marks)

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "alignment": self.alignment.to_json(),
            "marks": list(self.marks),
            "pi1": self.pi1.to_json(),
        }


def _check_input(c: Sequence[int]) -> Cycle:
    c = Cycle(c)
    if not 6 <= len(c) <= 9:
        raise LengthOutOfRange(f"classification covers lengths 6..9, got {len(c)}")
    if not is_negative_definite(c):
        raise NotNegativeDefinite(f"cycle {c} is not negative definite")
    if min(c) < 2:
        raise ContainsMinusOneCurve(
            f"cycle {c} has a component with self-intersection >= -1; contract it first"
        )
    return c


def marks_for(c: Sequence[int], model: StandardModel, s: DihedralElement) -> tuple[int, ...] | None:
    """Interior-blowup counts on ``model`` realizing ``c`` under ``s``, or None if infeasible."""
    marks = tuple(c[s(k)] - t for k, t in enumerate(model.cycle))
    ok = all(m >= (1 if t == 1 else 0) for m, t in zip(marks, model.cycle))
    return marks if ok else None


def _pi1(model: StandardModel, marks: Sequence[int]) -> GroupInvariants:
    return _pi1_of_support(model.name, tuple(m > 0 for m in marks))


@lru_cache(maxsize=None)
def _pi1_of_support(name: str, support: tuple[bool, ...]) -> GroupInvariants:
    rays = get_model(name).fan.rays
    return L.smith_normal_form(v for v, marked in zip(rays, support) if marked)


def feasible_presentations(c: Sequence[int]) -> list[Presentation]:
    return _presentations(_check_input(c))


def _presentations(c: Cycle) -> list[Presentation]:
    out = []
    for model in models_of_length(len(c)):
        for s in dihedral_group(len(c)):
            marks = marks_for(c, model, s)
            if marks is not None:
                out.append(Presentation(model.name, s, marks, _pi1(model, marks)))
    return out


def _orbits(c: Cycle, model: StandardModel, alignments) -> list[list[DihedralElement]]:
    """Orbits of alignments under s -> g o s o r (g in Sym(c), r in realized)."""
    realized = realized_subgroup(model).subgroup
    sym = symmetry_group(c)
    left = set(alignments)
    orbits = []
    for s in alignments:
        if s not in left:
            continue
        orbit = {g.compose(s).compose(r) for g in sym for r in realized}
        orbits.append(sorted(orbit & left, key=_order_key))
        left -= orbit
    return orbits


def _order_key(g: DihedralElement):
    return (g.reflected, g.rotation)


def orbit_upper_bound(c: Sequence[int], model: StandardModel | str) -> int:
    """Number of double cosets of feasible alignments; bounds the deformation types on ``model``."""
    if isinstance(model, str):
        model = get_model(model)
    c = _check_input(c)
    feasible = [s for s in dihedral_group(len(c)) if marks_for(c, model, s) is not None]
    if not feasible:
        raise ValueError(f"{c} has no presentation over {model.name}")
    return len(_orbits(c, model, feasible))


def has_alternating_twos(c: Sequence[int]) -> bool:
    """Length 8 and a relabeling of the form (a,2,b,2,c,2,d,2)."""
    if len(c) != 8:
        return False
    return any(all(g.act(c)[k] == 2 for k in (1, 3, 5, 7)) for g in dihedral_group(8))


@dataclass(frozen=True)
class TypeCount:
    cycle: Cycle
    lo: int
    hi: int
    representatives: tuple[Presentation, ...]

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def distinct_pi1(self) -> int:
        """Fundamental groups seen among the representatives; each is a separate type."""
        return len({p.pi1 for p in self.representatives})

    @property
    def count(self) -> int | tuple[int, int]:
        return self.lo if self.exact else (self.lo, self.hi)

    def to_json(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "count": self.lo if self.exact else {"lo": self.lo, "hi": self.hi},
            "representatives": [
                {"model": p.model, "marks": list(p.marks), "pi1": p.pi1.to_json()}
                for p in self.representatives
            ],
            "distinct_pi1": self.distinct_pi1,
        }


def deformation_types(c: Sequence[int]) -> TypeCount:
    """Count deformation types of negative definite pairs with boundary cycle ``c``.

    Lengths 6 and 7 give one type. Length 8 gives one type per fundamental
    group occurring among the presentations (two exactly for the alternating
    (a,2,b,2,c,2,d,2) shape). Length 9 only has an upper bound, so the result is
    the interval [1, double-coset count].
    """
    c = _check_input(c)
    n = len(c)
    pres = _presentations(c)
    if n in (6, 7):
        return TypeCount(c, 1, 1, (pres[0],))
    if n == 8:
        reps = {}
        # prefer T_ii as witness for the simply connected type
        for p in sorted(pres, key=lambda p: (p.model != "Tii", _order_key(p.alignment))):
            reps.setdefault(p.pi1, p)
        ordered = sorted(reps.values(), key=lambda p: -(p.pi1.order or 0))
        return TypeCount(c, len(ordered), len(ordered), tuple(ordered))
    model = get_model("T9")
    feasible = [p.alignment for p in pres]
    orbits = _orbits(c, model, feasible)
    by_alignment = {p.alignment: p for p in pres}
    reps = tuple(by_alignment[o[0]] for o in orbits[:3])
    return TypeCount(c, 1, min(3, len(orbits)), reps)
