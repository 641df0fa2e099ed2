from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import (Dict, Iterable, Iterator, Optional, Sequence, Tuple,
                    cast)

from asymlab import Block
from asymlab.exceptions import (InadmissibleOrder, MalformedBlock,
                                PairCoveredTwice, PairUncovered)


def is_admissible(n: int) -> bool:
    return n >= 3 and n % 6 in (1, 3)


@dataclass(frozen=True)
class Sts:
    n: int
    blocks: Tuple[Block, ...]

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def third_point(self, a: int, b: int) -> int:
        for block in self.blocks:
            if a in block and b in block:
                return next(x for x in block if x != a and x != b)
        raise PairUncovered((a, b))

    @classmethod
    def fano(cls) -> Sts:
        """Cyclic STS(7) with blocks {i, i+1, i+3} mod 7."""
        return validate_sts(
            7, [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
        )

    @classmethod
    def affine_plane(cls) -> Sts:
        """AG(2,3): point (x, y) is labeled 3x + y, blocks are lines."""
        lines = set()
        points = [(x, y) for x in range(3) for y in range(3)]
        for (x, y) in points:
            for dx, dy in ((0, 1), (1, 0), (1, 1), (1, 2)):
                lines.add(tuple(sorted(
                    3 * ((x + t * dx) % 3) + (y + t * dy) % 3
                    for t in range(3)
                )))
        return validate_sts(9, sorted(lines))


def canonical_blocks(blocks: Iterable[Sequence[int]]) -> Tuple[Block, ...]:
    return tuple(sorted(
        cast(Block, tuple(sorted(int(x) for x in block))) for block in blocks
    ))


def validate_sts(n: int, blocks: Iterable[Sequence[int]]) -> Sts:
    if not is_admissible(n):
        raise InadmissibleOrder(f'{n} is not 1 or 3 (mod 6)')

    raw = [tuple(block) for block in blocks]
    for block in raw:
        if len(block) != 3 or len(set(block)) != 3:
            raise MalformedBlock(f'{block} is not a 3-subset')
        if not all(0 <= int(x) < n for x in block):
            raise MalformedBlock(f'{block} has a point outside 0..{n - 1}')

    canonical = canonical_blocks(raw)
    covered: Dict[Tuple[int, int], Block] = {}
    for block in canonical:
        for pair in combinations(block, 2):
            if pair in covered:
                raise PairCoveredTwice(pair)
            covered[pair] = block

    missing: Optional[Tuple[int, int]] = next(
        (pair for pair in combinations(range(n), 2) if pair not in covered),
        None
    )
    if missing is not None:
        raise PairUncovered(missing)

    return Sts(n, canonical)
