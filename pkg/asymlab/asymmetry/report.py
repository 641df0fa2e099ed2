from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from math import factorial
from typing import Callable, Dict, Optional

from loguru import logger

from asymlab.config import LATIN_VISIT_CAP, OF_CAP, STS_CAP
from asymlab.enumeration import FactorizationSearch, LatinSearch, StsSearch
from asymlab.enumeration.search import TreeSearch
from asymlab.exceptions import (CapExceeded, InadmissibleOrder,
                                InconsistentCount, MalformedInput, OddOrder)
from asymlab.parallel import run_frames
from asymlab.permgroup import aut_order_latin, aut_order_of, aut_order_sts
from asymlab.structures.latin import LatinSquare
from asymlab.structures.sts import is_admissible

KINDS = ('latin', 'sts', 'of')


@dataclass(frozen=True)
class AsymmetryReport:
    kind: str
    n: int
    total: int
    with_nontrivial_aut: int
    proportion: Fraction
    aut_order_histogram: Dict[int, int]
    class_count: int


def isotopy_normal_form(square: LatinSquare) -> LatinSquare:
    """The reduced square reached by permuting columns so the first row is
    natural, then rows so the first column is natural."""
    first = square.grid[0]
    col_of = {symbol: j for j, symbol in enumerate(first)}
    cols = [col_of[j] for j in range(square.n)]
    permuted = [tuple(row[c] for c in cols) for row in square.grid]
    by_first = {row[0]: row for row in permuted}
    return LatinSquare(
        square.n, tuple(by_first[i] for i in range(square.n))
    )


class _LatinOrders:
    """Autoparatopism group orders, shared between isotopic squares."""

    def __init__(self) -> None:
        self.memo: Dict[LatinSquare, int] = {}

    def __call__(self, square: LatinSquare) -> int:
        key = isotopy_normal_form(square)
        if key not in self.memo:
            self.memo[key] = aut_order_latin(key).order
        return self.memo[key]


@logger.catch(reraise=True)
def frame_histogram(
    search: TreeSearch, order_of: Callable[[object], int], frame: object
) -> Counter:
    histogram: Counter = Counter()
    for structure in search.leaves(frame):
        histogram[order_of(structure)] += 1
    return histogram


def _sts_order(sts: object) -> int:
    return aut_order_sts(sts).order  # type: ignore


def _of_order(factorization: object) -> int:
    return aut_order_of(factorization).order  # type: ignore


def full_group_order(kind: str, n: int) -> int:
    """Order of the group acting on the labeled structures."""
    return 6 * factorial(n) ** 3 if kind == 'latin' else factorial(n)


def _search_for(kind: str, n: int) -> TreeSearch:
    if kind == 'latin':
        if not 1 <= n <= LATIN_VISIT_CAP:
            raise CapExceeded(f'Latin report at order {n}')
        return LatinSearch(n)
    if kind == 'sts':
        if not is_admissible(n):
            raise InadmissibleOrder(f'{n} is not 1 or 3 (mod 6)')
        if n > STS_CAP:
            raise CapExceeded(f'STS report at order {n}')
        return StsSearch(n)
    if kind == 'of':
        if n < 2 or n % 2:
            raise OddOrder(f'{n} points')
        if n > OF_CAP:
            raise CapExceeded(f'1-factorization report at order {n}')
        return FactorizationSearch(n)
    raise MalformedInput(f'unknown kind {kind!r}')


def asymmetry_report(
    kind: str, n: int, jobs: int = 1,
    orders: Optional[Callable[[object], int]] = None,
) -> AsymmetryReport:
    """Enumerates every labeled structure of the kind and tallies the
    orders of their automorphism groups."""
    search = _search_for(kind, n)
    if orders is None:
        orders = {
            'latin': _LatinOrders(),
            'sts': _sts_order,
            'of': _of_order,
        }[kind]  # type: ignore

    frames = search.frames()
    logger.info(f'Report for {kind}({n}) over {len(frames)} frames.')
    histogram: Counter = Counter()
    for part in run_frames(
        partial(frame_histogram, search, orders), frames, jobs
    ):
        histogram.update(part)

    total = sum(histogram.values())
    nontrivial = total - histogram.get(1, 0)
    weighted = sum(order * count for order, count in histogram.items())
    classes, rest = divmod(weighted, full_group_order(kind, n))
    if rest:
        raise InconsistentCount(
            f'sum of automorphism orders {weighted} is not a multiple of '
            f'{full_group_order(kind, n)}'
        )

    return AsymmetryReport(
        kind=kind,
        n=n,
        total=total,
        with_nontrivial_aut=nontrivial,
        proportion=Fraction(nontrivial, total),
        aut_order_histogram=dict(sorted(histogram.items())),
        class_count=classes,
    )
