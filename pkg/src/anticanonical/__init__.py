"""Exact toric-model calculus for anticanonical (Looijenga) pairs."""

from .classify import TypeCount, deformation_types, feasible_presentations, orbit_upper_bound, realized_subgroup
from .cycles import (
    Cycle,
    DihedralElement,
    canonical_form,
    dihedral_canonical,
    dihedral_equal,
    invariants_of,
    is_negative_definite,
)
from .errors import AtkError
from .fans import Fan, corner_blowdown, corner_blowup, cycle_from_fan, fan_from_cycle, is_toric
from .lattice import GroupInvariants, smith_normal_form
from .pairs import MarkedPair, elliptic_pair, fundamental_group, get_model, standard_models
from .transforms import Move, Path, elem_transform, find_path, relative_elem_transform, relative_reachable

__version__ = "0.1.0"

__all__ = [
    "AtkError",
    "Cycle",
    "DihedralElement",
    "Fan",
    "GroupInvariants",
    "MarkedPair",
    "Move",
    "Path",
    "TypeCount",
    "canonical_form",
    "corner_blowdown",
    "corner_blowup",
    "cycle_from_fan",
    "deformation_types",
    "dihedral_canonical",
    "dihedral_equal",
    "elem_transform",
    "elliptic_pair",
    "fan_from_cycle",
    "feasible_presentations",
    "find_path",
    "fundamental_group",
    "get_model",
    "invariants_of",
    "is_negative_definite",
    "is_toric",
    "orbit_upper_bound",
    "realized_subgroup",
    "relative_elem_transform",
    "relative_reachable",
    "smith_normal_form",
    "standard_models",
]
