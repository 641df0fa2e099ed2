from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from asymlab import Perm
from asymlab.exceptions import MalformedInput


@dataclass(frozen=True)
class PointPermutation:
    n: int
    image: Perm

    def __post_init__(self) -> None:
        if len(self.image) != self.n or \
                sorted(self.image) != list(range(self.n)):
            raise MalformedInput(f'{list(self.image)} is not a bijection')

    def __call__(self, point: int) -> int:
        return self.image[point]

    def __mul__(self, other: PointPermutation) -> PointPermutation:
        """Composition: (g * h)(x) = g(h(x))."""
        return PointPermutation(
            self.n, tuple(self.image[x] for x in other.image)
        )

    def inverse(self) -> PointPermutation:
        out = [0] * self.n
        for i, x in enumerate(self.image):
            out[x] = i
        return PointPermutation(self.n, tuple(out))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))

    def fixed_points(self) -> List[int]:
        return [i for i, x in enumerate(self.image) if i == x]

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.n):
            if i in seen:
                continue
            cycle = [i]
            seen.add(i)
            j = self.image[i]
            while j != i:
                cycle.append(j)
                seen.add(j)
                j = self.image[j]
            out.append(tuple(cycle))
        return out

    def apply_set(self, points: Iterable[int]) -> Tuple[int, ...]:
        return tuple(sorted(self.image[x] for x in points))

    @classmethod
    def identity(cls, n: int) -> PointPermutation:
        return cls(n, tuple(range(n)))

    @classmethod
    def from_images(cls, image: Sequence[int]) -> PointPermutation:
        return cls(len(image), tuple(int(x) for x in image))

    @classmethod
    def from_cycles(
        cls, n: int, cycles: Iterable[Sequence[int]]
    ) -> PointPermutation:
        image = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, (*cycle[1:], cycle[0])):
                image[a] = b
        return cls(n, tuple(image))
