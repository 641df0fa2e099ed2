from __future__ import annotations

from functools import partial
from math import prod
from typing import List, Optional, Tuple

from loguru import logger

from asymlab.config import PERMANENT_MAX_DIM
from asymlab.exceptions import DimensionTooLarge
from asymlab.parallel import run_frames
from asymlab.structures.matrix import ZeroOneMatrix


def _ryser_range(
    columns: List[List[int]], n: int, bounds: Tuple[int, int]
) -> int:
    """Signed Ryser terms for the Gray-code subsets k ^ (k >> 1) with k in
    [start, stop). A column subset S contributes
    (-1)^(n - |S|) * prod_i (sum_{j in S} a_ij)."""
    start, stop = bounds
    sums = [0] * n
    subset = start ^ (start >> 1)
    size = 0
    for j in range(n):
        if subset >> j & 1:
            size += 1
            for i in columns[j]:
                sums[i] += 1
    zeros = sums.count(0)

    total = 0
    if zeros == 0:
        total += prod(sums) if (n - size) % 2 == 0 else -prod(sums)

    for k in range(start + 1, stop):
        j = (k & -k).bit_length() - 1
        if (k ^ (k >> 1)) >> j & 1:
            size += 1
            for i in columns[j]:
                if sums[i] == 0:
                    zeros -= 1
                sums[i] += 1
        else:
            size -= 1
            for i in columns[j]:
                sums[i] -= 1
                if sums[i] == 0:
                    zeros += 1
        if zeros == 0:
            term = prod(sums)
            total += term if (n - size) % 2 == 0 else -term
    return total


def _columns(m: ZeroOneMatrix) -> List[List[int]]:
    return [
        [i for i, x in enumerate(col) if x] for col in m.columns()
    ]


def permanent_exact(
    m: ZeroOneMatrix, max_dim: Optional[int] = None, jobs: int = 1
) -> int:
    """Exact permanent by Ryser's formula over Gray-code ordered column
    subsets. With ``jobs`` > 1 the subset range is split into chunks
    summed by worker processes; the integer result does not depend on the
    split."""
    n = m.n
    if max_dim is None:
        max_dim = PERMANENT_MAX_DIM
    if n > max_dim:
        raise DimensionTooLarge(f'dimension {n} above the cap {max_dim}')
    if n == 0:
        return 1

    columns = _columns(m)
    end = 1 << n
    if jobs <= 1:
        return _ryser_range(columns, n, (1, end))

    chunks = max(jobs * 4, 1)
    step = max((end - 1) // chunks, 1)
    bounds = [(s, min(s + step, end)) for s in range(1, end, step)]
    logger.debug(f'Permanent of order {n} split into {len(bounds)} chunks.')
    return sum(run_frames(partial(_ryser_range, columns, n), bounds, jobs))
