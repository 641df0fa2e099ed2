from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from asymlab.exceptions import MalformedInput


@dataclass(frozen=True, eq=False)
class ZeroOneMatrix:
    n: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.entries.shape != (self.n, self.n):
            raise MalformedInput(
                f'matrix of shape {self.entries.shape}, expected {self.n}'
            )
        if not np.isin(self.entries, (0, 1)).all():
            raise MalformedInput('entries outside {0, 1}')
        self.entries.flags.writeable = False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZeroOneMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(
            self.entries, other.entries
        )

    def __hash__(self) -> int:
        return hash((self.n, self.entries.tobytes()))

    def row_sums(self) -> List[int]:
        return [int(x) for x in self.entries.sum(axis=1)]

    def col_sums(self) -> List[int]:
        return [int(x) for x in self.entries.sum(axis=0)]

    def regular_sum(self) -> Optional[int]:
        """Common row and column sum, or None when the matrix is not
        regular."""
        sums = set(self.row_sums()) | set(self.col_sums())
        return sums.pop() if len(sums) == 1 else None

    def transpose(self) -> ZeroOneMatrix:
        return ZeroOneMatrix(self.n, self.entries.T.copy())

    def columns(self) -> List[List[int]]:
        return [[int(x) for x in col] for col in self.entries.T]

    def rows(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self.entries]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> ZeroOneMatrix:
        entries = np.array(rows, dtype=np.uint8).reshape(len(rows), -1)
        return cls(len(rows), entries)

    @classmethod
    def ones(cls, n: int) -> ZeroOneMatrix:
        return cls(n, np.ones((n, n), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> ZeroOneMatrix:
        return cls(n, np.eye(n, dtype=np.uint8))
