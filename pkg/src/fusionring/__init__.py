"""Fusion rings of quantum groups at roots of unity.

Weights are plain integer tuples in fundamental-weight coordinates, except for
gl_n, which uses epsilon-coordinates.
"""
from __future__ import annotations

__version__ = "0.1.0"

from .rootsys import RootSystem, RootSystemError, build_root_system, parse_weight, format_weight
from .charring import CharElement, chi, weight_multiplicities, weyl_dimension, char_product
from .alcove import Alcove, AlcoveError, make_alcove, project, enumerate_alcove
from .hnf import IntegerLattice, LatticeOverflow, hermite_normal_form, solve
from .fusion import FusionElement, basis, fuse, fuse_alt, structure_constant, fusion_table
from .comb import nc_elementary_A, nc_schur_A, nc_elementary_C, nc_schur_C, star_table
from .ideals import (Status, Verification, GeneratorSet, minimal_excluded, canonical_generators,
                     preset_generators, ideal_contains, verify_preset, g2_recursion_check)

__all__ = [
    "RootSystem", "RootSystemError", "build_root_system", "parse_weight", "format_weight",
    "CharElement", "chi", "weight_multiplicities", "weyl_dimension", "char_product",
    "Alcove", "AlcoveError", "make_alcove", "project", "enumerate_alcove",
    "IntegerLattice", "LatticeOverflow", "hermite_normal_form", "solve",
    "FusionElement", "basis", "fuse", "fuse_alt", "structure_constant", "fusion_table",
    "nc_elementary_A", "nc_schur_A", "nc_elementary_C", "nc_schur_C", "star_table",
    "Status", "Verification", "GeneratorSet", "minimal_excluded", "canonical_generators",
    "preset_generators", "ideal_contains", "verify_preset", "g2_recursion_check",
]
