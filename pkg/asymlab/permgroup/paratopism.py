from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Any, Dict, Iterator, Tuple

from asymlab import CLASS_LETTERS, Perm
from asymlab.exceptions import MalformedInput, OrderMismatch
from asymlab.structures.latin import Cell, LatinSquare


def _is_bijection(n: int, f: Perm) -> bool:
    return len(f) == n and sorted(f) == list(range(n))


@dataclass(frozen=True)
class TriplePermutation:
    """Permutation of the 3n points r_i, c_j, e_k preserving the partition
    {R, C, E}. ``sigma[X]`` is the class the points of class X go to, and
    ``fr`` sends row i to point ``fr[i]`` of class ``sigma[R]`` (likewise
    ``fc`` and ``fe``)."""

    sigma: Tuple[int, int, int]
    fr: Perm
    fc: Perm
    fe: Perm

    def __post_init__(self) -> None:
        if sorted(self.sigma) != [0, 1, 2]:
            raise MalformedInput(f'sigma {self.sigma} is not a permutation')
        for f in self.maps:
            if not _is_bijection(self.n, f):
                raise MalformedInput(f'{list(f)} is not a bijection')

    @property
    def n(self) -> int:
        return len(self.fr)

    @property
    def maps(self) -> Tuple[Perm, Perm, Perm]:
        return (self.fr, self.fc, self.fe)

    @property
    def sigma_word(self) -> str:
        return ''.join(CLASS_LETTERS[x] for x in self.sigma)

    def is_identity(self) -> bool:
        return self.sigma == (0, 1, 2) and all(
            all(i == x for i, x in enumerate(f)) for f in self.maps
        )

    def fixes_classes(self) -> bool:
        return self.sigma == (0, 1, 2)

    def __mul__(self, other: TriplePermutation) -> TriplePermutation:
        """Composition: (g * h)(p) = g(h(p))."""
        if self.n != other.n:
            raise OrderMismatch(f'{self.n} != {other.n}')
        sigma = tuple(self.sigma[x] for x in other.sigma)
        maps = [
            tuple(self.maps[other.sigma[x]][i] for i in other.maps[x])
            for x in range(3)
        ]
        return TriplePermutation(sigma, *maps)  # type: ignore

    def inverse(self) -> TriplePermutation:
        sigma = [0, 0, 0]
        maps = [[0] * self.n for _ in range(3)]
        for x in range(3):
            sigma[self.sigma[x]] = x
            for i, y in enumerate(self.maps[x]):
                maps[self.sigma[x]][y] = i
        return TriplePermutation(
            tuple(sigma), *(tuple(m) for m in maps)  # type: ignore
        )

    # region Point representation
    def to_points(self) -> Perm:
        """Image list on the points 0..3n-1, point (X, i) being X*n + i."""
        n = self.n
        return tuple(
            self.sigma[x] * n + self.maps[x][i]
            for x in range(3) for i in range(n)
        )

    @classmethod
    def from_points(cls, n: int, image: Perm) -> TriplePermutation:
        sigma = tuple(image[x * n] // n for x in range(3))
        maps = []
        for x in range(3):
            block = image[x * n:(x + 1) * n]
            if any(p // n != sigma[x] for p in block):
                raise MalformedInput('permutation does not preserve classes')
            maps.append(tuple(p - sigma[x] * n for p in block))
        return cls(sigma, *maps)  # type: ignore
    # endregion

    # region Constructors
    @classmethod
    def identity(cls, n: int) -> TriplePermutation:
        ident = tuple(range(n))
        return cls((0, 1, 2), ident, ident, ident)

    @classmethod
    def transpose(cls, n: int) -> TriplePermutation:
        ident = tuple(range(n))
        return cls((1, 0, 2), ident, ident, ident)

    @classmethod
    def translation(
        cls, n: int, dr: int, dc: int, de: int
    ) -> TriplePermutation:
        return cls(
            (0, 1, 2),
            tuple((i + dr) % n for i in range(n)),
            tuple((i + dc) % n for i in range(n)),
            tuple((i + de) % n for i in range(n)),
        )

    @classmethod
    def all(cls, n: int) -> Iterator[TriplePermutation]:
        """All 6(n!)^3 triple permutations of order n."""
        perms = list(permutations(range(n)))
        for sigma in permutations(range(3)):
            for fr in perms:
                for fc in perms:
                    for fe in perms:
                        yield cls(sigma, fr, fc, fe)  # type: ignore
    # endregion

    # region Serialization
    def to_dict(self) -> Dict[str, Any]:
        return {
            'sigma': self.sigma_word,
            'fr': list(self.fr),
            'fc': list(self.fc),
            'fe': list(self.fe),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> TriplePermutation:
        try:
            word = data['sigma']
            if sorted(word) != sorted(CLASS_LETTERS):
                raise MalformedInput(f'sigma word {word!r}')
            sigma = tuple(CLASS_LETTERS.index(c) for c in word)
            maps = [
                tuple(int(x) for x in data[k]) for k in ('fr', 'fc', 'fe')
            ]
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedInput(f'triple permutation document: {e!r}')
        return cls(sigma, *maps)  # type: ignore

    @classmethod
    def loads(cls, text: str) -> TriplePermutation:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise MalformedInput(f'invalid JSON: {e}')
    # endregion


def apply_triple_perm(g: TriplePermutation, c: Cell) -> Cell:
    out = [0, 0, 0]
    for x, idx in enumerate(c):
        out[g.sigma[x]] = g.maps[x][idx]
    return Cell(*out)


def is_autoparatopism(g: TriplePermutation, square: LatinSquare) -> bool:
    if g.n != square.n:
        raise OrderMismatch(f'permutation of order {g.n}, square {square.n}')
    grid = square.grid
    for i, row in enumerate(grid):
        for j, entry in enumerate(row):
            image = apply_triple_perm(g, Cell(i, j, entry))
            if grid[image.row][image.col] != image.entry:
                return False
    return True
