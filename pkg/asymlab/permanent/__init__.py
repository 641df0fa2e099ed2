from .extension import (bang_friedland_lower, check_bang_friedland,
                        count_row_extensions, extension_matrix,
                        latin_lower_bound)
from .log_scalar import LogScalar, log_factorial
from .ryser import permanent_exact

__all__ = [
    'LogScalar', 'bang_friedland_lower', 'check_bang_friedland',
    'count_row_extensions', 'extension_matrix', 'latin_lower_bound',
    'log_factorial', 'permanent_exact',
]
