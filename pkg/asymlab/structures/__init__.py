from .factorization import OneFactorization, validate_one_factorization
from .graph import Graph
from .latin import (Cell, LatinRectangle, LatinSquare, cells_of,
                    validate_latin, validate_rectangle)
from .matrix import ZeroOneMatrix
from .permutation import PointPermutation
from .sts import Sts, is_admissible, validate_sts

__all__ = [
    'Cell', 'Graph', 'LatinRectangle', 'LatinSquare', 'OneFactorization',
    'PointPermutation', 'Sts', 'ZeroOneMatrix', 'cells_of', 'is_admissible',
    'validate_latin', 'validate_one_factorization', 'validate_rectangle',
    'validate_sts',
]
