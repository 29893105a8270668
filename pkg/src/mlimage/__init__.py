"""Exact witnesses showing trace-zero matrices lie in the image of multilinear
polynomials of degree at most four on n x n matrices (n >= 3).

    >>> from mlimage import poly, synthesize, Matrix
    >>> report = synthesize(poly("[x1,x2]*[x3,x4] + [x3,x4]*[x1,x2]"),
    ...                     Matrix([[1, 0, 0], [0, -1, 0], [0, 0, 0]]))
    >>> report.verified
    True
"""
from .canon import BidiagonalTarget, Canonicalization, jordanize, to_bidiagonal, zero_diagonalize
from .decompose import ProperDecomposition, classify, hall_generators, pattern_pairs, proper_decompose
from .errors import MLImageError
from .field import QuadExt, adjoin_sqrt, format_scalar, parse_scalar, quad
from .freepoly import MultilinearPoly, coeff_sum, evaluate, expand, parse, poly, substitute_identity, to_text
from .matrix import Matrix, char_poly, commutator, conjugate, inverse, kernel_basis, trace, unit
from .witness import WitnessReport, synthesize, verify

__version__ = "0.1.0"

__all__ = [
    "BidiagonalTarget",
    "Canonicalization",
    "jordanize",
    "to_bidiagonal",
    "zero_diagonalize",
    "ProperDecomposition",
    "classify",
    "hall_generators",
    "pattern_pairs",
    "proper_decompose",
    "MLImageError",
    "QuadExt",
    "adjoin_sqrt",
    "format_scalar",
    "parse_scalar",
    "quad",
    "MultilinearPoly",
    "coeff_sum",
    "evaluate",
    "expand",
    "parse",
    "poly",
    "substitute_identity",
    "to_text",
    "Matrix",
    "char_poly",
    "commutator",
    "conjugate",
    "inverse",
    "kernel_basis",
    "trace",
    "unit",
    "WitnessReport",
    "synthesize",
    "verify",
]
