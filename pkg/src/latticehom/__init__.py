"""Ribbon bases for rank-selected and Whitney homology of geometric lattices,
their symmetric-group characters, and representation-stability scans."""

from .homology import (
    ChainVector,
    bar_f_chain,
    betti_top,
    boundary_apply,
    os_component,
    ribbon_basis_beta,
    ribbon_basis_wh,
    verify_basis,
    verify_os_relations,
)
from .lattices import (
    GeometricLattice,
    Matroid,
    atom_order,
    boolean_lattice,
    d_divisible_boolean,
    graphic_matroid,
    lattice_of_flats,
    partition_element,
    partition_lattice,
    uniform_matroid,
)
from .poset import GradedPoset, from_covers, mobius, rank_selected_subposet
from .repstab import (
    character_alpha,
    character_beta,
    character_wh,
    component_bound_check,
    essential_part,
    scan_beta,
    scan_wh,
    stability_scan,
)
from .shelling import f_chain, f_first, f_rib, minimal_labeling, verify_el_labeling
from .symfunc import ClassFunction, IrrepDecomposition, SymFunc, decompose, plethysm, ribbon_schur
from .tableaux import RibbonFilling, RibbonShape, YoungTableau, polytabloid, young_symmetrizer_apply

__version__ = "0.1.0"

__all__ = [
    "ChainVector", "ClassFunction", "GeometricLattice", "GradedPoset", "IrrepDecomposition", "Matroid",
    "RibbonFilling", "RibbonShape", "SymFunc", "YoungTableau", "atom_order", "bar_f_chain", "betti_top",
    "boolean_lattice", "boundary_apply", "character_alpha", "character_beta", "character_wh",
    "component_bound_check", "d_divisible_boolean", "decompose", "essential_part", "f_chain", "f_first",
    "f_rib", "from_covers", "graphic_matroid", "lattice_of_flats", "minimal_labeling", "mobius",
    "os_component", "partition_element", "partition_lattice", "plethysm", "polytabloid",
    "rank_selected_subposet", "ribbon_basis_beta", "ribbon_basis_wh", "ribbon_schur", "scan_beta",
    "scan_wh", "stability_scan", "uniform_matroid", "verify_basis", "verify_el_labeling",
    "verify_os_relations", "young_symmetrizer_apply",
]
