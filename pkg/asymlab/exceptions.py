from __future__ import annotations

from typing import Any


class AsymlabError(Exception):
    def __init__(self, detail: Any = '') -> None:
        super().__init__(detail)
        self.detail = detail

    def one_line(self) -> str:
        detail = ' '.join(str(self.detail).split())
        return f'error: {self.__class__.__name__}: {detail}'


# region Structure validation
class OutOfRange(AsymlabError):
    pass


class RepeatInRow(AsymlabError):
    def __init__(self, row: int, symbol: int) -> None:
        super().__init__(f'row {row} repeats symbol {symbol}')
        self.index = row


class RepeatInColumn(AsymlabError):
    def __init__(self, col: int, symbol: int) -> None:
        super().__init__(f'column {col} repeats symbol {symbol}')
        self.index = col


class InadmissibleOrder(AsymlabError):
    pass


class PairCoveredTwice(AsymlabError):
    def __init__(self, pair: Any) -> None:
        super().__init__(f'pair {tuple(pair)} covered twice')
        self.pair = tuple(pair)


class PairUncovered(AsymlabError):
    def __init__(self, pair: Any) -> None:
        super().__init__(f'pair {tuple(pair)} not covered')
        self.pair = tuple(pair)


class MalformedBlock(AsymlabError):
    pass


class OddOrder(AsymlabError):
    pass


class FactorNotPerfectMatching(AsymlabError):
    pass


class EdgeRepeated(AsymlabError):
    def __init__(self, edge: Any) -> None:
        super().__init__(f'edge {tuple(edge)} repeated')
        self.edge = tuple(edge)


class EdgeMissing(AsymlabError):
    def __init__(self, edge: Any) -> None:
        super().__init__(f'edge {tuple(edge)} missing')
        self.edge = tuple(edge)


class MalformedInput(AsymlabError):
    pass


class OrderMismatch(AsymlabError):
    pass
# endregion


# region Computation
class ResourceLimit(AsymlabError):
    pass


class DimensionTooLarge(AsymlabError):
    pass


class RectangleFull(AsymlabError):
    pass


class CapExceeded(AsymlabError):
    pass


class BudgetExceeded(CapExceeded):
    pass


class VisitorAbort(AsymlabError):
    def __init__(self, visited: int) -> None:
        super().__init__(f'visitor stopped enumeration after {visited}')
        self.visited = visited


class NotAnAutomorphism(AsymlabError):
    pass


class BoundViolated(AsymlabError):
    pass


class HasFixedVertex(AsymlabError):
    pass


class MissingEpsilon(AsymlabError):
    pass


class NotFound(AsymlabError):
    pass


class InconsistentCount(AsymlabError):
    pass
# endregion


# region Graphs
class NotRegular(AsymlabError):
    pass


class NotStronglyRegular(AsymlabError):
    def __init__(self, detail: Any, witness: Any = None) -> None:
        super().__init__(detail)
        self.witness = witness


class KindMismatch(AsymlabError):
    pass
# endregion
