from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from asymlab.enumeration import enumerate_latin, perfect_matchings
from asymlab.exceptions import (AsymlabError, BoundViolated, CapExceeded,
                                HasFixedVertex, NotAnAutomorphism,
                                NotRegular, OrderMismatch)
from asymlab.permanent import LogScalar
from asymlab.permgroup import (TriplePermutation, apply_triple_perm,
                               is_autoparatopism)
from asymlab.structures.factorization import (OneFactorization,
                                              canonical_factor)
from asymlab.structures.graph import Graph
from asymlab.structures.latin import Cell, LatinSquare, cells_of
from asymlab.structures.permutation import PointPermutation
from asymlab.structures.sts import Sts, validate_sts

from .bounds import bound_eval

# Largest order for which fixed squares are counted by brute force
FIXED_LATIN_CAP = 5


@dataclass(frozen=True)
class FixStats:
    kind: str
    n: int
    fixed_points: Optional[int]
    fixed_objects: int
    orbit_count: int
    total_objects: int
    bound_values: Dict[str, LogScalar] = field(default_factory=dict)
    # STS: fixed blocks not inside the subsystem on the fixed points
    extra_fixed_blocks: Optional[int] = None
    # Latin: order of the subsquare on fixed rows, columns and entries
    subsquare_order: Optional[int] = None


def _orbit_count(images: Sequence[int]) -> int:
    """Number of cycles of the permutation i -> images[i]."""
    seen = [False] * len(images)
    count = 0
    for i in range(len(images)):
        if seen[i]:
            continue
        count += 1
        j = i
        while not seen[j]:
            seen[j] = True
            j = images[j]
    return count


def _require(condition: bool, detail: str) -> None:
    if not condition:
        raise BoundViolated(detail)


def _ratio(num: int, den: int) -> LogScalar:
    return LogScalar.from_value(num) / LogScalar.from_value(den)


# region Latin squares
def _check_autoparatopism(g: TriplePermutation, square: LatinSquare) -> None:
    if not is_autoparatopism(g, square):
        raise NotAnAutomorphism('map does not preserve the cells')


def fixed_cells(g: TriplePermutation, square: LatinSquare) -> int:
    _check_autoparatopism(g, square)
    return sum(1 for c in cells_of(square) if apply_triple_perm(g, c) == c)


def forced_positions(g: TriplePermutation) -> int:
    """Number of positions (i, j) holding a cell fixed by g for some
    entry, whatever the square."""
    n = g.n
    return sum(
        1 for i, j in product(range(n), repeat=2)
        if any(
            apply_triple_perm(g, Cell(i, j, e)) == Cell(i, j, e)
            for e in range(n)
        )
    )


def fixed_subsquare(
    g: TriplePermutation, square: LatinSquare
) -> Optional[LatinSquare]:
    """For a class-fixing g, the subsquare carried by the fixed rows,
    columns and entries, relabeled in increasing order. None when g moves
    the classes."""
    _check_autoparatopism(g, square)
    if not g.fixes_classes():
        return None
    rows, cols, entries = (
        [i for i, x in enumerate(f) if i == x] for f in g.maps
    )
    if not rows or not cols:
        return LatinSquare(0, ())
    _require(
        len(rows) == len(cols) == len(entries),
        f'{len(rows)} fixed rows, {len(cols)} columns, {len(entries)} '
        'entries'
    )
    label = {e: i for i, e in enumerate(entries)}
    try:
        grid = tuple(
            tuple(label[square[i, j]] for j in cols) for i in rows
        )
    except KeyError:
        raise BoundViolated('fixed cell carries a moved entry')
    return LatinSquare(len(rows), grid)


def latin_fix_stats(g: TriplePermutation, square: LatinSquare) -> FixStats:
    n = square.n
    fixed = fixed_cells(g, square)
    cells = sorted(cells_of(square))
    index = {c: i for i, c in enumerate(cells)}
    orbits = _orbit_count([index[apply_triple_perm(g, c)] for c in cells])
    points = g.to_points()
    fixed_points = sum(1 for i, x in enumerate(points) if i == x)
    r = forced_positions(g)

    subsquare = fixed_subsquare(g, square)
    if not g.is_identity():
        if not g.fixes_classes():
            _require(fixed <= n, f'{fixed} fixed cells by a class-moving map')
        elif n >= 4:
            _require(
                4 * fixed <= n * n, f'{fixed} fixed cells exceed n^2/4'
            )
        if subsquare is not None:
            _require(
                2 * subsquare.n <= n,
                f'subsquare of order {subsquare.n} in order {n}'
            )

    return FixStats(
        kind='latin',
        n=n,
        fixed_points=fixed_points,
        fixed_objects=fixed,
        orbit_count=orbits,
        total_objects=n * n,
        bound_values={
            'latin_fixed_upper': bound_eval('latin_fixed_upper', n, r=r),
            'latin_fixed_cap': bound_eval('latin_fixed_cap', n),
        },
        subsquare_order=None if subsquare is None else subsquare.n,
    )


def count_fixed_latin(g: TriplePermutation, n: int) -> int:
    """Number of labeled order-n squares having g as an autoparatopism."""
    if g.n != n:
        raise OrderMismatch(f'permutation of order {g.n}, squares {n}')
    if n > FIXED_LATIN_CAP:
        raise CapExceeded(f'fixed squares of order {n}')
    count = 0

    def visit(square: LatinSquare) -> None:
        nonlocal count
        if is_autoparatopism(g, square):
            count += 1

    enumerate_latin(n, visit)
    bound = bound_eval('latin_fixed_upper', n, r=forced_positions(g))
    _require(
        LogScalar.from_value(count) <= bound,
        f'{count} fixed squares exceed n^((n^2+r)/2)'
    )
    return count
# endregion


# region Steiner triple systems
def _block_images(g: PointPermutation, sts: Sts) -> List[int]:
    if g.n != sts.n:
        raise OrderMismatch(f'permutation of degree {g.n}, STS({sts.n})')
    index = {block: i for i, block in enumerate(sts.blocks)}
    try:
        return [index[g.apply_set(block)] for block in sts.blocks]
    except KeyError as e:
        raise NotAnAutomorphism(f'block {e.args[0]} is not a block')


def fixed_blocks_most(n: int, m: int) -> int:
    """Most blocks a non-identity automorphism fixing m of n points can
    fix: the m(m-1)/6 blocks of the subsystem on the fixed points, and
    blocks meeting the moved points, each moved point in at most one."""
    return m * (m - 1) // 6 + (n - m) // 2


def sts_fix_stats(g: PointPermutation, sts: Sts) -> FixStats:
    n = sts.n
    images = _block_images(g, sts)
    fixed_pts = set(g.fixed_points())
    m = len(fixed_pts)
    fixed_blocks = [
        block for i, block in enumerate(sts.blocks) if images[i] == i
    ]
    r = _orbit_count(images)
    inner = [b for b in fixed_blocks if fixed_pts.issuperset(b)]
    extra = len(fixed_blocks) - len(inner)

    if not g.is_identity():
        _require(2 * m <= n - 1, f'{m} fixed points in STS({n})')
        _require(m != 2, 'exactly two fixed points')
        for x in set(range(n)) - fixed_pts:
            through = sum(1 for b in fixed_blocks if x in b)
            _require(through <= 1, f'point {x} lies in {through} fixed blocks')
        most = fixed_blocks_most(n, m)
        _require(
            len(fixed_blocks) <= most,
            f'{len(fixed_blocks)} fixed blocks exceed m(m-1)/6 + (n-m)/2'
        )
        _require(
            24 * most <= n * n + 2 * n + 9,
            f'{most} possible fixed blocks exceed (n^2+2n+9)/24'
        )
        _require(
            2 * r <= len(sts) + len(fixed_blocks),
            f'{r} block orbits with {len(fixed_blocks)} fixed blocks'
        )
        if n >= 5:
            _require(
                48 * r < 5 * n * n, f'{r} block orbits, not below 5n^2/48'
            )
        if m >= 3:
            label = {x: i for i, x in enumerate(sorted(fixed_pts))}
            try:
                validate_sts(m, [[label[x] for x in b] for b in inner])
            except AsymlabError as e:
                raise BoundViolated(f'fixed points carry no subsystem: {e}')

    logger.debug(f'STS({n}): m={m}, fixed blocks={len(fixed_blocks)}, r={r}')
    return FixStats(
        kind='sts',
        n=n,
        fixed_points=m,
        fixed_objects=len(fixed_blocks),
        orbit_count=r,
        total_objects=len(sts),
        bound_values={
            'fixed_blocks_cap': _ratio(n * n + 2 * n + 9, 24),
            'orbit_cap': _ratio(5 * n * n, 48),
            'sts_fixed_upper': bound_eval('sts_fixed_upper', n, r=r),
        },
        extra_fixed_blocks=extra,
    )
# endregion


# region One-factorizations
def _factor_images(
    g: PointPermutation, factorization: OneFactorization
) -> List[int]:
    if g.n != factorization.n:
        raise OrderMismatch(
            f'permutation of degree {g.n}, factorization of K_'
            f'{factorization.n}'
        )
    index = {f: i for i, f in enumerate(factorization.factors)}
    try:
        return [
            index[canonical_factor((g(a), g(b)) for a, b in factor)]
            for factor in factorization.factors
        ]
    except KeyError as e:
        raise NotAnAutomorphism(f'{e.args[0]} is not a factor')


def ep_fix_stats(
    g: PointPermutation, factorization: OneFactorization
) -> FixStats:
    n = factorization.n
    images = _factor_images(g, factorization)
    r = len(g.fixed_points())
    s = sum(1 for i, x in enumerate(images) if i == x)
    m = _orbit_count(images)
    lemma = bound_eval('fixed_one_factor_upper', n, k=n - 1)

    if not g.is_identity():
        if r > 0:
            _require(2 * r <= n, f'{r} fixed points on {n}')
            _require(s == r - 1, f'{s} fixed classes with {r} fixed points')
            _require(2 * m <= n + r, f'{m} orbits exceed r + (n-r)/2')
            _require(4 * m <= 3 * n, f'{m} orbits exceed 3n/4')
        else:
            _require(
                2 * (m - s) <= n - 1 - s,
                f'{m - s} orbits on {n - 1 - s} moved classes'
            )
            # each fixed class is a g-fixed 1-factor of K_n
            _require(
                LogScalar.from_value(s) <= lemma,
                f'{s} fixed classes exceed (8e(n-1))^(n/4)'
            )

    return FixStats(
        kind='of',
        n=n,
        fixed_points=r,
        fixed_objects=s,
        orbit_count=m,
        total_objects=len(factorization),
        bound_values={
            'fixed_one_factor_upper': lemma,
            'ep_fixed_upper': bound_eval('ep_fixed_upper', n),
        },
    )


def count_fixed_one_factors(graph: Graph, g: PointPermutation) -> int:
    """Number of perfect matchings of the graph mapped to themselves by
    the fixed-point-free automorphism g."""
    if g.n != graph.v:
        raise OrderMismatch(f'permutation of degree {g.n}, {graph.v} vertices')
    if not graph.is_automorphism(g.image):
        raise NotAnAutomorphism('map does not preserve the edges')
    fixed = g.fixed_points()
    if fixed:
        raise HasFixedVertex(f'vertex {fixed[0]} is fixed')
    k = graph.valency()
    if k is None:
        raise NotRegular(f'degrees {sorted(set(graph.degrees()))}')

    count = 0
    for matching in perfect_matchings(graph):
        if canonical_factor((g(a), g(b)) for a, b in matching) == matching:
            count += 1

    n = graph.v
    _require(
        LogScalar.from_value(count) <= bound_eval(
            'fixed_one_factor_upper', n, k=k
        ),
        f'{count} fixed 1-factors exceed (8ek)^(n/4)'
    )
    return count


def check_one_factor_count(graph: Graph, count: int) -> Tuple[int, LogScalar]:
    """Checks count <= k^(n/2) for a k-regular graph."""
    k = graph.valency()
    if k is None:
        raise NotRegular(f'degrees {sorted(set(graph.degrees()))}')
    bound = bound_eval('one_factor_upper', graph.v, k=k)
    _require(
        LogScalar.from_value(count) <= bound,
        f'{count} 1-factors exceed k^(n/2)'
    )
    return k, bound
# endregion
