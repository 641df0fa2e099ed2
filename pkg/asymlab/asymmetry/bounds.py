from __future__ import annotations

from typing import Any, Callable, Dict, Optional, Tuple

from loguru import logger

from asymlab.config import CROSSOVER_SEARCH_CAP, CROSSOVER_WINDOW
from asymlab.exceptions import MalformedInput, MissingEpsilon, NotFound
from asymlab.permanent import LogScalar, latin_lower_bound, log_factorial
from asymlab.permanent.log_scalar import ctx
from asymlab.structures.sts import is_admissible

EPS_KINDS = ('sts_lower', 'ep_lower', 'latin_lower_eps')
R_KINDS = ('latin_fixed_upper', 'sts_fixed_upper')
K_KINDS = ('one_factor_upper', 'fixed_one_factor_upper')


def _eval_log(
    kind: str, n: int, eps: Optional[float], r: Optional[int],
    k: Optional[int]
) -> Any:
    ln_n = ctx.log(n)
    sq = ctx.mpf(n) ** 2
    e = ctx.e
    if kind == 'latin_lower':
        return latin_lower_bound(n).ln()
    if kind == 'latin_aut_upper':
        return ctx.log(6) + 3 * log_factorial(n) + sq * 5 / 8 * ln_n
    if kind == 'sts_lower':
        return (1 - ctx.mpf(eps)) * sq / 6 * ln_n
    if kind == 'sts_aut_upper':
        return log_factorial(n) + sq * 5 / 48 * ctx.log(8 * n * e / 5)
    if kind == 'ep_lower':
        return (1 - ctx.mpf(eps)) * sq / 2 * ln_n
    if kind == 'ep_aut_upper':
        return log_factorial(n) + sq * 3 / 8 * ln_n
    if kind == 'latin_lower_eps':
        return (1 - ctx.mpf(eps)) * sq * ln_n
    if kind == 'latin_fixed_upper':
        return (sq + r) / 2 * ln_n
    if kind == 'latin_fixed_cap':
        return sq * 5 / 8 * ln_n
    if kind == 'sts_fixed_upper':
        assert r is not None
        if r == 0:
            return ctx.mpf(0)
        return r * ctx.log(ctx.mpf(n) ** 3 * e / (6 * r))
    if kind == 'one_factor_upper':
        return ctx.mpf(n) / 2 * ctx.log(k)
    if kind == 'fixed_one_factor_upper':
        return ctx.mpf(n) / 4 * ctx.log(8 * e * k)
    if kind == 'ep_fixed_upper':
        return sq * 3 / 8 * ln_n
    if kind == 'ep_fpf_fixed_upper':
        return ln_n + sq / 4 * ctx.log(8 * e * n)
    raise MalformedInput(f'unknown bound kind {kind!r}')


def bound_eval(
    kind: str,
    n: int,
    eps: Optional[float] = None,
    r: Optional[int] = None,
    k: Optional[int] = None,
) -> LogScalar:
    """Natural log of the named bound at order n."""
    if n < 1:
        raise MalformedInput(f'bound at order {n}')
    if kind in EPS_KINDS:
        if eps is None:
            raise MissingEpsilon(f'{kind} needs eps')
        if not 0 < eps < 1:
            raise MalformedInput(f'eps {eps} outside (0, 1)')
    if kind in R_KINDS and (r is None or r < 0):
        raise MalformedInput(f'{kind} needs a count r >= 0')
    if kind in K_KINDS and (k is None or k < 0):
        raise MalformedInput(f'{kind} needs a valency k >= 0')
    if kind == 'one_factor_upper' and k == 0:
        return LogScalar.zero()
    return LogScalar.from_log(_eval_log(kind, n, eps, r, k))


# region Crossover
# kind -> (smaller bound, larger bound, admissible orders)
CROSSOVERS: Dict[str, Tuple[str, str, Callable[[int], bool]]] = {
    'latin': ('latin_aut_upper', 'latin_lower', lambda n: n >= 1),
    'sts': ('sts_aut_upper', 'sts_lower', is_admissible),
    'ep': ('ep_aut_upper', 'ep_lower', lambda n: n >= 2 and n % 2 == 0),
    'latin_eps': ('latin_lower_eps', 'latin_lower', lambda n: n >= 1),
    'ep_fpf': (
        'ep_fpf_fixed_upper', 'ep_fixed_upper',
        lambda n: n >= 2 and n % 2 == 0,
    ),
}


def bound_gap(kind: str, n: int, eps: Optional[float] = None) -> Any:
    """ln(larger) - ln(smaller) for a crossover kind; positive once the
    comparison holds."""
    small, large, _ = CROSSOVERS[kind]
    return bound_eval(large, n, eps).ln() - bound_eval(small, n, eps).ln()


def crossover_order(
    kind: str,
    eps: Optional[float] = None,
    window: Optional[int] = None,
    search_cap: Optional[int] = None,
) -> int:
    """Least admissible n0 such that the smaller bound is strictly below
    the larger one at every admissible n in [n0, n0 + window]."""
    window = CROSSOVER_WINDOW if window is None else window
    if search_cap is None:
        search_cap = CROSSOVER_SEARCH_CAP
    if kind not in CROSSOVERS:
        raise MalformedInput(f'unknown crossover kind {kind!r}')
    small, large, admissible = CROSSOVERS[kind]
    start: Optional[int] = None
    for n in range(1, search_cap + 1):
        if not admissible(n):
            if start is not None and n > start + window:
                break
            continue
        if bound_eval(small, n, eps) < bound_eval(large, n, eps):
            if start is None:
                start = n
        else:
            start = None
        if start is not None and n >= start + window:
            break
    else:
        start = None

    if start is None:
        raise NotFound(f'no crossover for {kind} below {search_cap}')
    logger.info(f'Crossover for {kind} at n = {start}.')
    return start
# endregion


# region Monotonicity of (a/x)^x
def power_ratio(a: float, x: float) -> LogScalar:
    """(a/x)^x."""
    return LogScalar.from_log(x * ctx.log(ctx.mpf(a) / x))


def power_ratio_peak(a: float) -> Any:
    """(a/x)^x rises up to x = a/e and falls after it."""
    return ctx.mpf(a) / ctx.e


def power_ratio_increasing(a: float, x1: float, x2: float) -> bool:
    """Whether (a/x1)^x1 < (a/x2)^x2 for 0 < x1 < x2."""
    if not 0 < x1 < x2 or a <= 0:
        raise MalformedInput(f'need 0 < x1 < x2 and a > 0, got {x1}, {x2}')
    return power_ratio(a, x1) < power_ratio(a, x2)
# endregion
