from __future__ import annotations

import asyncio
from collections import deque
from typing import Deque, Generic, Optional, Sequence, Set, Tuple, TypeVar

from loguru import logger

F = TypeVar('F')


class WorkGenerator(Generic[F]):
    """Hands out the frames of a split search tree to workers, in frame
    order, and tracks which frames are still being worked on."""

    def __init__(self, frames: Sequence[F]) -> None:
        self.lock = asyncio.Lock()
        self.to_distribute: Deque[Tuple[int, F]] = deque(enumerate(frames))
        self.waiting_for_results: Set[int] = set()
        self.num_of_frames = len(frames)
        self.num_of_done_works = 0
        self.closed = False

    async def get(self) -> Optional[Tuple[int, F]]:
        async with self.lock:
            if self.closed or not self.to_distribute:
                return None
            idx, frame = self.to_distribute.popleft()
            self.waiting_for_results.add(idx)
            return idx, frame

    async def work_completed(self, idx: int) -> None:
        async with self.lock:
            self.waiting_for_results.discard(idx)
            self.num_of_done_works += 1
            if self.num_of_done_works % 1000 == 0:
                logger.debug(
                    f'{self.num_of_done_works}/{self.num_of_frames} '
                    'frames done.'
                )

    def close(self) -> None:
        if not self.closed:
            logger.info(
                f'Stopping work distribution, {len(self.to_distribute)} '
                'frames left undistributed.'
            )
        self.closed = True
