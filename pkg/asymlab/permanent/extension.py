from __future__ import annotations

from typing import Optional, Tuple

import numpy as np

from asymlab.exceptions import BoundViolated, RectangleFull
from asymlab.structures.latin import LatinRectangle
from asymlab.structures.matrix import ZeroOneMatrix

from .log_scalar import LogScalar, ctx, log_factorial
from .ryser import permanent_exact

# Slack for comparing an exact permanent against a log-domain bound
BOUND_SLACK = 1e-9


def extension_matrix(rect: LatinRectangle) -> ZeroOneMatrix:
    """Entry (i, j) is 1 iff symbol j does not yet appear in column i, so
    the permutation matrices under it are exactly the rows that extend the
    rectangle."""
    if rect.is_full():
        raise RectangleFull(f'rectangle already has {rect.n} rows')
    n = rect.n
    entries = np.ones((n, n), dtype=np.uint8)
    for row in rect.rows:
        entries[np.arange(n), row] = 0
    return ZeroOneMatrix(n, entries)


def count_row_extensions(
    rect: LatinRectangle, leading: Optional[int] = None
) -> int:
    """Number of rows that can be appended to the rectangle. With
    ``leading`` given, only rows starting with that symbol count."""
    m = extension_matrix(rect)
    if leading is None:
        return permanent_exact(m)
    if not m.entries[0, leading]:
        return 0
    if m.n == 1:
        return 1
    minor = np.delete(np.delete(m.entries, 0, axis=0), leading, axis=1)
    return permanent_exact(ZeroOneMatrix(m.n - 1, minor.copy()))


def bang_friedland_lower(n: int, k: int) -> LogScalar:
    """(k/e)^n, the lower bound for the permanent of an n x n 0/1 matrix
    with all line sums k."""
    return LogScalar.from_log(n * (ctx.log(k) - 1))


def latin_lower_bound(n: int) -> LogScalar:
    """prod_{k=1..n} (k/e)^n = (n!)^n / e^(n^2)."""
    return LogScalar.from_log(n * log_factorial(n) - n * n)


def check_bang_friedland(m: ZeroOneMatrix) -> Tuple[int, LogScalar]:
    """Exact permanent of a regular matrix together with its (k/e)^n
    bound; raises BoundViolated when the permanent falls below it."""
    k = m.regular_sum()
    if k is None or k == 0:
        raise ValueError('matrix is not regular with positive line sums')
    per = permanent_exact(m)
    bound = bang_friedland_lower(m.n, k)
    if per == 0 or ctx.log(per) < bound.ln() - BOUND_SLACK:
        raise BoundViolated(
            f'permanent {per} below (k/e)^n with n={m.n}, k={k}'
        )
    return per, bound
