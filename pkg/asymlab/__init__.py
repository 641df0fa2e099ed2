from __future__ import annotations

import importlib
import sys
from typing import Any, Dict, Final, List, Tuple

__version__: Final[str] = '1.0.0'

Perm = Tuple[int, ...]
Grid = List[List[int]]
Block = Tuple[int, int, int]
Edge = Tuple[int, int]
Factor = Tuple[Edge, ...]

config_dict: Dict[str, Any]

# Class labels of the points of a Latin square
R: Final[int] = 0
C: Final[int] = 1
E: Final[int] = 2
CLASS_LETTERS: Final[str] = 'RCE'


def install_config(config: Dict[str, Any]) -> None:
    """Makes ``config`` the configuration read by ``asymlab.config``.

    When that module is already loaded it is reloaded, and every loaded
    module of the package still holding one of its old constants gets the
    new value."""
    global config_dict
    config_dict = config
    loaded = sys.modules.get('asymlab.config')
    if loaded is None or getattr(loaded, 'config_dict', None) == config:
        return
    before = {k: v for k, v in vars(loaded).items() if k.isupper()}
    missing = object()
    after = vars(importlib.reload(loaded))
    for name, module in list(sys.modules.items()):
        if not name.startswith('asymlab.') or name == 'asymlab.config':
            continue
        for key, old in before.items():
            if getattr(module, key, missing) is old:
                setattr(module, key, after[key])
        hook = getattr(module, 'on_config_change', None)
        if callable(hook):
            hook()


__all__ = [
    'Block', 'Edge', 'Factor', 'Grid', 'Perm', '__version__',
    'install_config',
]
