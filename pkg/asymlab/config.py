from __future__ import annotations

from typing import Dict, Final, Optional, cast

try:
    from . import config_dict
except ImportError:
    # No configuration installed by the command line; use packaged defaults
    import pkgutil

    import yaml

    config_dict = yaml.full_load(
        cast(bytes, pkgutil.get_data('asymlab', 'config.yml')).decode('utf-8')
    )

_permanent = config_dict['permanent']
_enumeration = config_dict['enumeration']
_automorphism = config_dict['automorphism']
_asymmetry = config_dict['asymmetry']

PERMANENT_MAX_DIM: Final[int] = _permanent['max_dim']
PRECISION_BITS: Final[int] = _permanent['precision_bits']

LATIN_VISIT_CAP: Final[int] = _enumeration['latin_visit_cap']
LATIN_DIRECT_CAP: Final[int] = _enumeration['latin_direct_cap']
LATIN_REDUCED_CAP: Final[int] = _enumeration['latin_reduced_cap']
STS_CAP: Final[int] = _enumeration['sts_cap']
STS_BUDGET_CAP: Final[int] = _enumeration['sts_budget_cap']
OF_CAP: Final[int] = _enumeration['of_cap']
SPLIT_DEPTH: Final[Dict[str, int]] = _enumeration['split_depth']
BUDGET_CHECK_EVERY: Final[int] = _enumeration['budget_check_every']

NODE_BUDGET: Final[int] = _automorphism['node_budget']
VERIFY_CHAIN: Final[bool] = _automorphism['verify_chain']

DEFAULT_EPS: Final[float] = _asymmetry['default_eps']
CROSSOVER_WINDOW: Final[int] = _asymmetry['crossover_window']
CROSSOVER_SEARCH_CAP: Final[int] = _asymmetry['crossover_search_cap']

EIGEN_TOLERANCE: Final[float] = config_dict['srg']['eigen_tolerance']

CACHE_DIR: Final[str] = config_dict['cache']['directory']
CACHE_ENV: Final[str] = config_dict['cache']['env']

JOBS: Final[int] = config_dict['parallel']['jobs']

LOG_LEVEL: Final[str] = config_dict['logging']['level']
LOG_FILE: Final[Optional[str]] = config_dict['logging']['file']
LOG_FORMAT: Final[str] = config_dict['logging']['format']
