from __future__ import annotations

import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, TypeVar

from loguru import logger

import asymlab
from asymlab import config

from .work_generator import WorkGenerator

F = TypeVar('F')
R = TypeVar('R')

OnResult = Callable[[int, R], None]


class _OrderedDelivery:
    """Passes results to ``on_result`` strictly in frame order."""

    def __init__(self, on_result: Optional[OnResult]) -> None:
        self.on_result = on_result
        self.pending: Dict[int, object] = {}
        self.next_idx = 0
        self.results: List[object] = []

    def put(self, idx: int, result: object) -> None:
        self.pending[idx] = result
        while self.next_idx in self.pending:
            ready = self.pending.pop(self.next_idx)
            self.results.append(ready)
            if self.on_result is not None:
                self.on_result(self.next_idx, ready)
            self.next_idx += 1


async def _run(
    task: Callable[[F], R],
    frames: Sequence[F],
    jobs: int,
    delivery: _OrderedDelivery,
) -> None:
    work_gen: WorkGenerator[F] = WorkGenerator(frames)
    loop = asyncio.get_running_loop()

    # workers started by spawn import the package afresh
    with ProcessPoolExecutor(
        max_workers=jobs,
        initializer=asymlab.install_config,
        initargs=(config.config_dict,),
    ) as pool:
        async def worker() -> None:
            while True:
                work = await work_gen.get()
                if work is None:
                    return
                idx, frame = work
                try:
                    result = await loop.run_in_executor(pool, task, frame)
                    await work_gen.work_completed(idx)
                    delivery.put(idx, result)
                except BaseException:
                    work_gen.close()
                    raise

        await asyncio.gather(*(worker() for _ in range(jobs)))


def run_frames(
    task: Callable[[F], R],
    frames: Sequence[F],
    jobs: int = 1,
    on_result: Optional[OnResult] = None,
) -> List[R]:
    """Run ``task`` on every frame with ``jobs`` worker processes.

    Results come back in frame order and ``on_result`` sees them in that
    order too, whatever the number of workers.
    """
    delivery = _OrderedDelivery(on_result)
    if jobs <= 1 or len(frames) <= 1:
        for idx, frame in enumerate(frames):
            delivery.put(idx, task(frame))
    else:
        logger.info(f'Distributing {len(frames)} frames to {jobs} workers.')
        asyncio.run(_run(task, frames, jobs, delivery))
    return delivery.results  # type: ignore
