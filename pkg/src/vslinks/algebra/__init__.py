"""Exact arithmetic: dual integers, Laurent polynomials, abelian groups, SNF."""

from .abelian import FgAbelianGroup, GroupRingElement, group_ring_add
from .dual import S, DualInt, format_dual, parse_dual
from .laurent import LaurentPoly
from .matrix import Matrix, dual_matmul, dual_matrix, dual_mul
from .snf import (
    IntegerSolver,
    integer_kernel,
    lattice_quotient,
    rank,
    smith_normal_form,
    solve_integer,
)

DualMatrix = Matrix

__all__ = [
    "S",
    "DualInt",
    "DualMatrix",
    "FgAbelianGroup",
    "GroupRingElement",
    "IntegerSolver",
    "LaurentPoly",
    "Matrix",
    "dual_matmul",
    "dual_matrix",
    "dual_mul",
    "format_dual",
    "group_ring_add",
    "integer_kernel",
    "lattice_quotient",
    "parse_dual",
    "rank",
    "smith_normal_form",
    "solve_integer",
]
