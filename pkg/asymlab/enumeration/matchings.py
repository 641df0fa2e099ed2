from __future__ import annotations

from typing import Iterator, List, Tuple

from asymlab import Edge
from asymlab.structures.graph import Graph

Matching = Tuple[Edge, ...]


def perfect_matchings(graph: Graph) -> Iterator[Matching]:
    """Every perfect matching of the graph, each edge stored as (a, b)
    with a < b. The least uncovered vertex is matched first, partners in
    ascending order."""
    if graph.v % 2:
        return
    masks = graph.neighbor_masks()
    full = (1 << graph.v) - 1
    chosen: List[Edge] = []

    def extend(covered: int) -> Iterator[Matching]:
        if covered == full:
            yield tuple(chosen)
            return
        free = ~covered & full
        a = (free & -free).bit_length() - 1
        partners = masks[a] & free
        while partners:
            low = partners & -partners
            chosen.append((a, low.bit_length() - 1))
            yield from extend(covered | 1 << a | low)
            chosen.pop()
            partners ^= low

    yield from extend(0)


def count_one_factors(graph: Graph) -> int:
    """Number of perfect matchings (1-factors); 0 when there is none."""
    if graph.v % 2:
        return 0
    masks = graph.neighbor_masks()
    full = (1 << graph.v) - 1
    memo = {full: 1}

    def count(covered: int) -> int:
        if covered in memo:
            return memo[covered]
        free = ~covered & full
        a = (free & -free).bit_length() - 1
        partners = masks[a] & free
        total = 0
        while partners:
            low = partners & -partners
            total += count(covered | 1 << a | low)
            partners ^= low
        memo[covered] = total
        return total

    return count(0)
