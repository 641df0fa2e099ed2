from .bounds import (CROSSOVERS, bound_eval, bound_gap, crossover_order,
                     power_ratio, power_ratio_increasing, power_ratio_peak)
from .fixstats import (FixStats, check_one_factor_count,
                       count_fixed_latin, count_fixed_one_factors,
                       ep_fix_stats, fixed_cells, fixed_subsquare,
                       forced_positions, latin_fix_stats, sts_fix_stats)
from .report import (AsymmetryReport, asymmetry_report, full_group_order,
                     isotopy_normal_form)

__all__ = [
    'AsymmetryReport', 'CROSSOVERS', 'FixStats', 'asymmetry_report',
    'bound_eval', 'bound_gap', 'check_one_factor_count',
    'count_fixed_latin', 'count_fixed_one_factors', 'crossover_order',
    'ep_fix_stats', 'fixed_cells', 'fixed_subsquare', 'forced_positions',
    'full_group_order', 'isotopy_normal_form', 'latin_fix_stats',
    'power_ratio', 'power_ratio_increasing', 'power_ratio_peak',
    'sts_fix_stats',
]
