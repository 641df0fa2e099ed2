from __future__ import annotations

from typing import Iterator, List, NamedTuple, Optional, Tuple

from asymlab import Block
from asymlab.config import STS_BUDGET_CAP, STS_CAP, SPLIT_DEPTH
from asymlab.exceptions import CapExceeded, InadmissibleOrder
from asymlab.parallel import ResultCache
from asymlab.structures.sts import Sts, is_admissible

from .search import TreeSearch, Visitor, deadline_for, run_search


class PartialSts(NamedTuple):
    blocks: Tuple[Block, ...]
    # covered[x] has bit y set when the pair {x, y} is in some block
    covered: Tuple[int, ...]


class StsSearch(TreeSearch[PartialSts, Sts]):
    """Exact cover of the pairs by triples, always covering the least
    uncovered pair, third points in ascending order."""

    kind = 'sts'

    def __init__(self, n: int, deadline: Optional[float] = None) -> None:
        super().__init__(n, SPLIT_DEPTH['sts'], deadline)
        self.full = (1 << n) - 1
        self.num_blocks = n * (n - 1) // 6

    def root(self) -> PartialSts:
        return PartialSts((), tuple(1 << x for x in range(self.n)))

    def least_uncovered(self, state: PartialSts) -> Tuple[int, int]:
        for a, mask in enumerate(state.covered):
            if mask != self.full:
                free = ~mask & self.full
                return a, (free & -free).bit_length() - 1
        raise ValueError('every pair is covered')

    def children(self, state: PartialSts) -> Iterator[PartialSts]:
        a, b = self.least_uncovered(state)
        covered = state.covered
        free = ~(covered[a] | covered[b]) & self.full
        for c in range(b + 1, self.n):
            if not free >> c & 1:
                continue
            new = list(covered)
            new[a] |= 1 << b | 1 << c
            new[b] |= 1 << a | 1 << c
            new[c] |= 1 << a | 1 << b
            yield PartialSts((*state.blocks, (a, b, c)), tuple(new))

    def is_leaf(self, state: PartialSts) -> bool:
        return len(state.blocks) == self.num_blocks

    def structure(self, state: PartialSts) -> Sts:
        return Sts(self.n, tuple(sorted(state.blocks)))


def enumerate_sts(
    n: int,
    visitor: Optional[Visitor[Sts]] = None,
    count_only: bool = False,
    jobs: int = 1,
    budget: Optional[float] = None,
    cache: Optional[ResultCache] = None,
) -> int:
    """Visit every labeled STS on n points, or count them. Orders above
    the usual cap are only counted, and only within a time budget."""
    if not is_admissible(n):
        raise InadmissibleOrder(f'{n} is not 1 or 3 (mod 6)')
    if n > STS_CAP and not (
        count_only and budget is not None and n <= STS_BUDGET_CAP
    ):
        raise CapExceeded(
            f'STS({n}) needs count-only mode and a budget, cap is {STS_CAP}'
        )

    if not count_only:
        if visitor is None:
            raise ValueError('a visitor is needed unless counting only')
        return run_search(StsSearch(n, deadline_for(budget)), visitor, jobs)

    if cache is not None:
        cached = cache.get('sts', n)
        if cached is not None:
            return cached
    count = run_search(StsSearch(n, deadline_for(budget)), None, jobs)
    if cache is not None:
        cache.put('sts', n, False, count)
    return count


def all_sts(n: int) -> List[Sts]:
    out: List[Sts] = []
    enumerate_sts(n, out.append)
    return out
