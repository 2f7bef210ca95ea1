"""Exact arithmetic substrate: scalars, Laurent and multivariate polynomials,
matrices, elimination, and the 2x2 loop factorizations."""
from .factorizations import Birkhoff, SmithDVR, birkhoff, exponent_spread, smith_dvr
from .laurent import VAL_ZERO, LaurentPoly
from .linalg import (
    Eigenvalue,
    RankKernelImage,
    charpoly,
    charpoly_eigenvalues,
    factor_rational,
    rank_kernel_image,
    solve_affine,
)
from .matrix import LAURENT, QQ, Matrix
from .mpoly import MPoly
from .numberfield import FieldElement, SimpleExtension, SplittingFound

__all__ = [
    "Birkhoff", "Eigenvalue", "FieldElement", "LAURENT", "LaurentPoly", "MPoly", "Matrix",
    "QQ", "RankKernelImage", "SimpleExtension", "SmithDVR", "SplittingFound", "VAL_ZERO",
    "birkhoff", "charpoly", "charpoly_eigenvalues", "exponent_spread", "factor_rational",
    "rank_kernel_image", "smith_dvr", "solve_affine",
]
