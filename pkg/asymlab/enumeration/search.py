from __future__ import annotations

import time
from abc import ABC, abstractmethod
from functools import partial
from typing import Callable, Generic, Iterable, List, Optional, TypeVar

from loguru import logger

from asymlab.config import BUDGET_CHECK_EVERY
from asymlab.exceptions import BudgetExceeded, VisitorAbort
from asymlab.parallel import run_frames

S = TypeVar('S')
X = TypeVar('X')

# A visitor returning False stops the enumeration
Visitor = Callable[[X], Optional[bool]]


class TreeSearch(ABC, Generic[S, X]):
    """Backtracking search whose leaves are the labeled structures.

    Children are produced in a fixed order, so the leaves come out in the
    same order for every run. The tree is cut at ``split_depth`` and every
    state at that depth is a frame which can be explored on its own.
    """

    kind: str = ''

    def __init__(
        self, n: int, split_depth: int, deadline: Optional[float] = None
    ) -> None:
        self.n = n
        self.split_depth = split_depth
        self.deadline = deadline
        self.nodes = 0

    # region Tree
    @abstractmethod
    def root(self) -> S:
        pass

    @abstractmethod
    def children(self, state: S) -> Iterable[S]:
        pass

    @abstractmethod
    def is_leaf(self, state: S) -> bool:
        pass

    @abstractmethod
    def structure(self, state: S) -> X:
        pass

    def count_below(self, state: S) -> Optional[int]:
        """Number of leaves under ``state`` when it can be had without
        descending, otherwise None."""
        return None
    # endregion

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and \
                self.nodes % BUDGET_CHECK_EVERY == 0 and \
                time.time() > self.deadline:
            raise BudgetExceeded(
                f'{self.kind}({self.n}) ran out of time after '
                f'{self.nodes} nodes'
            )

    def frames(self) -> List[S]:
        """States at the split depth, plus leaves met above it, in
        search order."""
        level = [self.root()]
        for _ in range(self.split_depth):
            nxt: List[S] = []
            for state in level:
                if self.is_leaf(state):
                    nxt.append(state)
                else:
                    nxt.extend(self.children(state))
            level = nxt
        return level

    def count(self, frame: S) -> int:
        total = 0
        stack = [frame]
        while stack:
            state = stack.pop()
            self._tick()
            if self.is_leaf(state):
                total += 1
                continue
            shortcut = self.count_below(state)
            if shortcut is not None:
                total += shortcut
                continue
            stack.extend(self.children(state))
        return total

    def leaves(self, frame: S) -> Iterable[X]:
        stack = [frame]
        while stack:
            state = stack.pop()
            self._tick()
            if self.is_leaf(state):
                yield self.structure(state)
                continue
            # reversed so the smallest child is popped first
            stack.extend(reversed(list(self.children(state))))


@logger.catch(reraise=True)
def count_frame(search: TreeSearch[S, X], frame: S) -> int:
    return search.count(frame)


@logger.catch(reraise=True)
def collect_frame(search: TreeSearch[S, X], frame: S) -> List[X]:
    return list(search.leaves(frame))


class _Delivery(Generic[X]):
    def __init__(self, visitor: Visitor[X]) -> None:
        self.visitor = visitor
        self.visited = 0

    def visit(self, structure: X) -> None:
        self.visited += 1
        if self.visitor(structure) is False:
            raise VisitorAbort(self.visited)

    def visit_all(self, _idx: int, structures: List[X]) -> None:
        for structure in structures:
            self.visit(structure)


def run_search(
    search: TreeSearch[S, X],
    visitor: Optional[Visitor[X]] = None,
    jobs: int = 1,
) -> int:
    """Number of leaves of the search tree. Without a visitor only counts
    are gathered; with one, every structure is passed to it in search
    order, whatever the number of workers."""
    frames = search.frames()
    logger.debug(f'{search.kind}({search.n}) split into {len(frames)} frames.')

    if visitor is None:
        counts = run_frames(partial(count_frame, search), frames, jobs)
        return sum(counts)

    delivery = _Delivery(visitor)
    if jobs <= 1:
        for frame in frames:
            for structure in search.leaves(frame):
                delivery.visit(structure)
    else:
        run_frames(
            partial(collect_frame, search), frames, jobs,
            on_result=delivery.visit_all,
        )
    return delivery.visited


def deadline_for(budget: Optional[float]) -> Optional[float]:
    return None if budget is None else time.time() + budget


