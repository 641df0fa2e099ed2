from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterator, NamedTuple, Sequence, Tuple

from asymlab.exceptions import (MalformedInput, OutOfRange, RepeatInColumn,
                                RepeatInRow)

Rows = Tuple[Tuple[int, ...], ...]


class Cell(NamedTuple):
    row: int
    col: int
    entry: int


@dataclass(frozen=True)
class LatinSquare:
    n: int
    grid: Rows

    def __getitem__(self, pos: Tuple[int, int]) -> int:
        return self.grid[pos[0]][pos[1]]

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.grid)

    def is_symmetric(self) -> bool:
        return all(
            self.grid[i][j] == self.grid[j][i]
            for i in range(self.n) for j in range(i)
        )

    def is_reduced(self) -> bool:
        return (
            self.grid[0] == tuple(range(self.n))
            and all(self.grid[i][0] == i for i in range(self.n))
        )

    @classmethod
    def cyclic(cls, n: int) -> LatinSquare:
        """Cayley table of the cyclic group of order n."""
        return cls(n, tuple(
            tuple((i + j) % n for j in range(n)) for i in range(n)
        ))

    @classmethod
    def from_cells(cls, n: int, cells: FrozenSet[Cell]) -> LatinSquare:
        grid = [[-1] * n for _ in range(n)]
        for row, col, entry in cells:
            grid[row][col] = entry
        return validate_latin(n, grid)


@dataclass(frozen=True)
class LatinRectangle:
    n: int
    rows: Rows

    @property
    def k(self) -> int:
        return len(self.rows)

    def is_full(self) -> bool:
        return self.k == self.n


def _check_rows(n: int, rows: Sequence[Sequence[int]]) -> Rows:
    out = tuple(tuple(int(x) for x in row) for row in rows)
    for row in out:
        if len(row) != n:
            raise MalformedInput(f'row of length {len(row)} in order {n}')
    for i, row in enumerate(out):
        for symbol in row:
            if not 0 <= symbol < n:
                raise OutOfRange(f'symbol {symbol} at row {i}, order {n}')
    for i, row in enumerate(out):
        seen = set()
        for symbol in row:
            if symbol in seen:
                raise RepeatInRow(i, symbol)
            seen.add(symbol)
    for j in range(n):
        seen = set()
        for row in out:
            if row[j] in seen:
                raise RepeatInColumn(j, row[j])
            seen.add(row[j])
    return out


def validate_latin(n: int, grid: Sequence[Sequence[int]]) -> LatinSquare:
    if n < 1 or len(grid) != n:
        raise MalformedInput(f'expected {n} rows, got {len(grid)}')
    return LatinSquare(n, _check_rows(n, grid))


def validate_rectangle(
    n: int, rows: Sequence[Sequence[int]]
) -> LatinRectangle:
    if n < 1 or len(rows) > n:
        raise MalformedInput(f'{len(rows)} rows in a rectangle of order {n}')
    return LatinRectangle(n, _check_rows(n, rows))


def cells_of(square: LatinSquare) -> FrozenSet[Cell]:
    return frozenset(
        Cell(i, j, entry)
        for i, row in enumerate(square.grid)
        for j, entry in enumerate(row)
    )
