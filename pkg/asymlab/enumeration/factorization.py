from __future__ import annotations

from typing import Iterator, List, NamedTuple, Optional, Tuple

from asymlab import Edge, Factor
from asymlab.config import OF_CAP, SPLIT_DEPTH
from asymlab.exceptions import CapExceeded, OddOrder
from asymlab.parallel import ResultCache
from asymlab.structures.factorization import OneFactorization

from .search import TreeSearch, Visitor, deadline_for, run_search


class PartialFactorization(NamedTuple):
    # chosen edges; every n/2 consecutive edges form one factor
    edges: Tuple[Edge, ...]
    # bit a * n + b for every chosen edge (a, b)
    used: int
    # points matched in the factor under construction
    matched: int


class FactorizationSearch(
    TreeSearch[PartialFactorization, OneFactorization]
):
    """Factors are built one at a time. A new factor takes the edge {0, j}
    with j the least point not yet paired with 0, so factors appear in
    canonical order; inside a factor the least unmatched point is covered
    next, partners in ascending order."""

    kind = 'of'

    def __init__(self, n: int, deadline: Optional[float] = None) -> None:
        super().__init__(n, SPLIT_DEPTH['of'], deadline)
        self.half = n // 2
        self.num_edges = n * (n - 1) // 2
        self.full = (1 << n) - 1

    def _bit(self, a: int, b: int) -> int:
        return 1 << (a * self.n + b)

    def root(self) -> PartialFactorization:
        return PartialFactorization((), 0, 0)

    def _add(
        self, state: PartialFactorization, a: int, b: int
    ) -> PartialFactorization:
        matched = state.matched | 1 << a | 1 << b
        if matched == self.full:
            matched = 0
        return PartialFactorization(
            (*state.edges, (a, b)), state.used | self._bit(a, b), matched
        )

    def children(
        self, state: PartialFactorization
    ) -> Iterator[PartialFactorization]:
        n = self.n
        if state.matched == 0:
            # new factor: only the least unused edge at 0 is allowed
            for j in range(1, n):
                if not state.used & self._bit(0, j):
                    yield self._add(state, 0, j)
                    return
            return
        free = ~state.matched & self.full
        a = (free & -free).bit_length() - 1
        for b in range(a + 1, n):
            if state.matched >> b & 1 or state.used & self._bit(a, b):
                continue
            yield self._add(state, a, b)

    def is_leaf(self, state: PartialFactorization) -> bool:
        return len(state.edges) == self.num_edges

    def structure(self, state: PartialFactorization) -> OneFactorization:
        factors: List[Factor] = [
            tuple(sorted(state.edges[i:i + self.half]))
            for i in range(0, self.num_edges, self.half)
        ]
        return OneFactorization(self.n, tuple(factors))


def enumerate_one_factorizations(
    n: int,
    visitor: Optional[Visitor[OneFactorization]] = None,
    count_only: bool = False,
    jobs: int = 1,
    budget: Optional[float] = None,
    cache: Optional[ResultCache] = None,
) -> int:
    """Visit every labeled 1-factorization of K_n, or count them."""
    if n < 2 or n % 2:
        raise OddOrder(f'{n} points')
    if n > OF_CAP:
        raise CapExceeded(f'1-factorizations of K_{n}, cap is {OF_CAP}')

    search = FactorizationSearch(n, deadline_for(budget))
    if not count_only:
        if visitor is None:
            raise ValueError('a visitor is needed unless counting only')
        return run_search(search, visitor, jobs)

    if cache is not None:
        cached = cache.get('of', n)
        if cached is not None:
            return cached
    count = run_search(search, None, jobs)
    if cache is not None:
        cache.put('of', n, False, count)
    return count


def all_one_factorizations(n: int) -> List[OneFactorization]:
    out: List[OneFactorization] = []
    enumerate_one_factorizations(n, out.append)
    return out
