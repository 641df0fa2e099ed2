from __future__ import annotations

from math import factorial
from typing import Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from asymlab.config import (LATIN_DIRECT_CAP, LATIN_REDUCED_CAP,
                            LATIN_VISIT_CAP, SPLIT_DEPTH)
from asymlab.exceptions import CapExceeded
from asymlab.parallel import ResultCache
from asymlab.permanent import count_row_extensions
from asymlab.structures.latin import LatinRectangle, LatinSquare, Rows

from .search import TreeSearch, Visitor, deadline_for, run_search


def extension_rows(
    n: int, rows: Rows, leading: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    """Rows that can be appended to ``rows`` in lexicographic order,
    optionally only those starting with ``leading``."""
    used = [0] * n
    for row in rows:
        for j, symbol in enumerate(row):
            used[j] |= 1 << symbol
    row: List[int] = []

    def place(j: int, taken: int) -> Iterator[Tuple[int, ...]]:
        if j == n:
            yield tuple(row)
            return
        choices = (leading,) if j == 0 and leading is not None else range(n)
        for symbol in choices:
            bit = 1 << symbol
            if taken & bit or used[j] & bit:
                continue
            row.append(symbol)
            yield from place(j + 1, taken | bit)
            row.pop()

    yield from place(0, 0)


class LatinSearch(TreeSearch[Rows, LatinSquare]):
    """Squares built row by row. In reduced mode the first row is the
    identity and row i starts with symbol i."""

    kind = 'latin'

    def __init__(
        self,
        n: int,
        reduced: bool = False,
        shortcut: bool = True,
        deadline: Optional[float] = None,
    ) -> None:
        super().__init__(n, SPLIT_DEPTH['latin'], deadline)
        self.reduced = reduced
        self.shortcut = shortcut

    def root(self) -> Rows:
        return (tuple(range(self.n)),) if self.reduced else ()

    def _leading(self, rows: Rows) -> Optional[int]:
        return len(rows) if self.reduced else None

    def children(self, state: Rows) -> Iterator[Rows]:
        for row in extension_rows(self.n, state, self._leading(state)):
            yield (*state, row)

    def is_leaf(self, state: Rows) -> bool:
        return len(state) == self.n

    def structure(self, state: Rows) -> LatinSquare:
        return LatinSquare(self.n, state)

    def count_below(self, state: Rows) -> Optional[int]:
        if not self.shortcut:
            return None
        k = len(state)
        # an (n-1)-row rectangle completes in exactly one way
        if k == self.n - 1:
            return 1
        if k == self.n - 2:
            return count_row_extensions(
                LatinRectangle(self.n, state), self._leading(state)
            )
        return None


def reduced_to_labeled(n: int, reduced: int) -> int:
    return reduced * factorial(n) * factorial(n - 1)


def enumerate_latin(
    n: int,
    visitor: Optional[Visitor[LatinSquare]] = None,
    count_only: bool = False,
    reduced_only: bool = False,
    jobs: int = 1,
    budget: Optional[float] = None,
    cache: Optional[ResultCache] = None,
) -> int:
    """Visit every labeled (or reduced) Latin square of order n, or just
    count them with ``count_only``. Returns the count."""
    cap = LATIN_REDUCED_CAP if count_only else LATIN_VISIT_CAP
    if not 1 <= n <= cap:
        raise CapExceeded(f'Latin squares of order {n}, cap is {cap}')

    if not count_only:
        if visitor is None:
            raise ValueError('a visitor is needed unless counting only')
        search = LatinSearch(n, reduced_only, deadline=deadline_for(budget))
        return run_search(search, visitor, jobs)

    if cache is not None:
        cached = cache.get('latin', n, reduced_only)
        if cached is not None:
            return cached

    if reduced_only or n <= LATIN_DIRECT_CAP:
        search = LatinSearch(n, reduced_only, deadline=deadline_for(budget))
        count = run_search(search, None, jobs)
    else:
        logger.info(f'Counting labeled squares of order {n} from reduced.')
        count = reduced_to_labeled(
            n, enumerate_latin(n, count_only=True, reduced_only=True,
                               jobs=jobs, budget=budget, cache=cache)
        )

    if cache is not None:
        cache.put('latin', n, reduced_only, count)
    return count


def latin_rectangles(n: int, k: int) -> Iterator[LatinRectangle]:
    """Every labeled k-row Latin rectangle of order n."""
    search = LatinSearch(n, shortcut=False)
    stack: List[Rows] = [search.root()]
    while stack:
        rows = stack.pop()
        if len(rows) == k:
            yield LatinRectangle(n, rows)
            continue
        stack.extend(reversed(list(search.children(rows))))


def count_latin_via_permanents(n: int) -> int:
    """Labeled count as the sum, over all (n-2)-row rectangles, of the
    permanents of their extension matrices."""
    if n < 1:
        raise CapExceeded(f'Latin squares of order {n}')
    if n == 1:
        return 1
    return sum(
        count_row_extensions(rect) for rect in latin_rectangles(n, n - 2)
    )


def all_latin_squares(n: int) -> List[LatinSquare]:
    out: List[LatinSquare] = []
    enumerate_latin(n, out.append)
    return out


def reduced_latin_squares(n: int) -> Sequence[LatinSquare]:
    out: List[LatinSquare] = []
    enumerate_latin(n, out.append, reduced_only=True)
    return out
