from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

from loguru import logger

import asymlab
from asymlab.config import CACHE_DIR, CACHE_ENV


class ResultCache:
    """Counts stored as JSON files, keyed by (kind, n, reduced) and
    stamped with the package version."""

    def __init__(self, directory: Optional[Path]) -> None:
        self.directory = directory

    @classmethod
    def from_options(
        cls, cache_dir: Optional[str] = None, no_cache: bool = False
    ) -> ResultCache:
        if no_cache:
            return cls(None)
        directory = cache_dir or os.environ.get(CACHE_ENV) or CACHE_DIR
        return cls(Path(directory))

    @property
    def enabled(self) -> bool:
        return self.directory is not None

    def _path(self, kind: str, n: int, reduced: bool) -> Path:
        assert self.directory is not None
        suffix = '-reduced' if reduced else ''
        return self.directory / f'{kind}-{n}{suffix}.json'

    def get(self, kind: str, n: int, reduced: bool = False) -> Optional[int]:
        if self.directory is None:
            return None
        path = self._path(kind, n, reduced)
        try:
            entry: Dict[str, Any] = json.loads(path.read_text('utf-8'))
        except FileNotFoundError:
            logger.debug(f'Cache miss for {path.name}.')
            return None
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f'Unreadable cache entry {path}: {e}')
            return None

        if entry.get('version') != asymlab.__version__:
            logger.warning(
                f'Cache entry {path.name} was written by version '
                f'{entry.get("version")}, ignoring it.'
            )
            return None

        logger.info(f'Cache hit for {path.name}.')
        return int(entry['count'])

    def put(self, kind: str, n: int, reduced: bool, count: int) -> None:
        if self.directory is None:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        entry = {
            'count': str(count),
            'kind': kind,
            'n': n,
            'reduced': reduced,
            'version': asymlab.__version__,
        }
        self._path(kind, n, reduced).write_text(
            json.dumps(entry, sort_keys=True), 'utf-8'
        )
        logger.info(f'Saved {kind}({n}) count to cache.')
