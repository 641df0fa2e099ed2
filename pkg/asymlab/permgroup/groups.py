from __future__ import annotations

from typing import Iterable, Iterator, List

from sympy.combinatorics import Permutation, PermutationGroup

from asymlab import Perm


def _is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


class PointGroup:
    """Permutation group on the points 0..degree-1 generated by image
    tuples. Order, membership and element listing use the base and
    strong generating set from Schreier-Sims."""

    def __init__(self, degree: int, generators: Iterable[Perm]) -> None:
        self.degree = degree
        gens = [
            Permutation(list(g)) for g in generators if not _is_identity(g)
        ]
        # a trivial group lists its generators as elements
        if not gens:
            gens = [Permutation(list(range(degree)))]
        self.group = PermutationGroup(gens)

    def order(self) -> int:
        return int(self.group.order())

    def contains(self, g: Perm) -> bool:
        if len(g) != self.degree:
            return False
        return bool(self.group.contains(Permutation(list(g))))

    def orbit(self, point: int) -> List[int]:
        return sorted(self.group.orbit(point))

    def elements(self) -> Iterator[Perm]:
        for p in self.group.generate(af=True):
            yield tuple(p)


def group_order(degree: int, generators: Iterable[Perm]) -> int:
    return PointGroup(degree, generators).order()


def orbit(point: int, generators: Iterable[Perm]) -> List[int]:
    gens = list(generators)
    if not gens:
        return [point]
    return PointGroup(len(gens[0]), gens).orbit(point)
