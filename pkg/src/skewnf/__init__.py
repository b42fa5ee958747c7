"""Exact canonical forms of skew-symmetric matrices and varieties of nilpotent bidiagonals."""

from .arith import GaussRat, I, Radical, rat_sqrt_lift, squarefree_split
from .blocks import bidiagonal_skew, build_P, build_Q, build_R, is_special
from .jordan import ElementaryDivisor, elementary_divisors, gaussian_roots, jordan_at, validate_skew_pairing
from .linalg import Matrix, Poly, charpoly, direct_sum, even_odd_split, is_nilpotent, rank
from .normal_form import NormalFormPlan, PBlock, QBlock, RBlock, assemble, normal_form, plan_blocks, similar

__all__ = [
    "GaussRat",
    "I",
    "Radical",
    "rat_sqrt_lift",
    "squarefree_split",
    "Matrix",
    "Poly",
    "charpoly",
    "direct_sum",
    "even_odd_split",
    "is_nilpotent",
    "rank",
    "bidiagonal_skew",
    "build_P",
    "build_Q",
    "build_R",
    "is_special",
    "ElementaryDivisor",
    "elementary_divisors",
    "gaussian_roots",
    "jordan_at",
    "validate_skew_pairing",
    "NormalFormPlan",
    "PBlock",
    "QBlock",
    "RBlock",
    "assemble",
    "normal_form",
    "plan_blocks",
    "similar",
]
