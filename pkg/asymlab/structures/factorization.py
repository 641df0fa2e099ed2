from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Set, Tuple

from asymlab import Edge, Factor
from asymlab.exceptions import (EdgeMissing, EdgeRepeated,
                                FactorNotPerfectMatching, OddOrder)


@dataclass(frozen=True)
class OneFactorization:
    n: int
    factors: Tuple[Factor, ...]

    def __iter__(self) -> Iterator[Factor]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def factor_of(self, edge: Edge) -> int:
        edge = normalize_edge(edge)
        for i, factor in enumerate(self.factors):
            if edge in factor:
                return i
        raise EdgeMissing(edge)

    @classmethod
    def k4(cls) -> OneFactorization:
        return validate_one_factorization(
            4, [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]]
        )

    @classmethod
    def patterned(cls, n: int) -> OneFactorization:
        """The rotational 1-factorization GK_n of K_n, n even."""
        if n % 2:
            raise OddOrder(f'{n} points')
        m = n - 1
        factors = []
        for i in range(m):
            factor = [(i, m)]
            factor.extend(
                ((i + j) % m, (i - j) % m) for j in range(1, n // 2)
            )
            factors.append(factor)
        return validate_one_factorization(n, factors)


def normalize_edge(edge: Sequence[int]) -> Edge:
    a, b = int(edge[0]), int(edge[1])
    return (a, b) if a < b else (b, a)


def canonical_factor(factor: Iterable[Sequence[int]]) -> Factor:
    return tuple(sorted(normalize_edge(edge) for edge in factor))


def canonical_factors(
    factors: Iterable[Iterable[Sequence[int]]]
) -> Tuple[Factor, ...]:
    return tuple(sorted(canonical_factor(factor) for factor in factors))


def is_perfect_matching(n: int, factor: Sequence[Sequence[int]]) -> bool:
    points = [x for edge in factor for x in edge]
    return (
        all(len(edge) == 2 for edge in factor)
        and sorted(points) == list(range(n))
    )


def validate_one_factorization(
    n: int, factors: Iterable[Iterable[Sequence[int]]]
) -> OneFactorization:
    if n < 2 or n % 2:
        raise OddOrder(f'{n} points')

    raw = [[tuple(edge) for edge in factor] for factor in factors]
    seen: Set[Edge] = set()
    for factor in raw:
        if not is_perfect_matching(n, factor):
            raise FactorNotPerfectMatching(f'{factor} on {n} points')
        for edge in factor:
            edge = normalize_edge(edge)
            if edge in seen:
                raise EdgeRepeated(edge)
            seen.add(edge)

    for edge in combinations(range(n), 2):
        if edge not in seen:
            raise EdgeMissing(edge)

    return OneFactorization(n, canonical_factors(raw))
