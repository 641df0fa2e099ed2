import math
from fractions import Fraction
from typing import List, Optional

import networkx as nx
import pytest
from brute_force import all_pairings, graph_automorphisms

from asymlab.asymmetry import (CROSSOVERS, AsymmetryReport,
                               asymmetry_report, bound_eval, bound_gap,
                               check_one_factor_count,
                               count_fixed_latin, count_fixed_one_factors,
                               crossover_order, ep_fix_stats, fixed_cells,
                               fixed_subsquare, forced_positions,
                               full_group_order, isotopy_normal_form,
                               latin_fix_stats, power_ratio,
                               power_ratio_increasing, power_ratio_peak,
                               sts_fix_stats)
from asymlab.asymmetry import fixstats
from asymlab.config import CROSSOVER_WINDOW
from asymlab.enumeration import (all_latin_squares, all_one_factorizations,
                                 all_sts, count_one_factors,
                                 reduced_latin_squares)
from asymlab.exceptions import (BoundViolated, CapExceeded, HasFixedVertex,
                                InadmissibleOrder, InconsistentCount,
                                MalformedInput, MissingEpsilon,
                                NotAnAutomorphism, NotFound, NotRegular,
                                OddOrder, OrderMismatch)
from asymlab.permanent import LogScalar
from asymlab.permgroup import (TriplePermutation, aut_order_of,
                               aut_order_sts, is_autoparatopism,
                               latin_automorphisms, point_automorphisms)
from asymlab.structures import (Graph, LatinSquare, OneFactorization,
                                PointPermutation, Sts)


# region Bound formulas
@pytest.mark.parametrize('kind, n, expected', [
    ('latin_aut_upper', 4,
     math.log(6) + 3 * math.lgamma(5) + 10 * math.log(4)),
    ('ep_aut_upper', 2, 2.5 * math.log(2)),
    ('sts_aut_upper', 9,
     math.lgamma(10) + 405 / 48 * math.log(72 * math.e / 5)),
    ('latin_lower', 5, 5 * math.log(120) - 25),
    ('latin_fixed_cap', 4, 10 * math.log(4)),
    ('ep_fixed_upper', 4, 6 * math.log(4)),
])
def test_bound_values(kind: str, n: int, expected: float) -> None:
    assert float(bound_eval(kind, n).ln()) == pytest.approx(expected)


def test_eps_bounds() -> None:
    value = bound_eval('sts_lower', 7, eps=0.5)
    assert float(value.ln()) == pytest.approx(0.5 * 49 / 6 * math.log(7))
    value = bound_eval('ep_lower', 6, eps=0.1)
    assert float(value.ln()) == pytest.approx(0.9 * 18 * math.log(6))


def test_count_bounds() -> None:
    assert float(bound_eval('one_factor_upper', 6, k=5)) == \
        pytest.approx(125)
    assert bound_eval('one_factor_upper', 6, k=0).sign == 0
    assert float(bound_eval('fixed_one_factor_upper', 6, k=2)) == \
        pytest.approx((16 * math.e) ** 1.5)
    assert float(bound_eval('latin_fixed_upper', 3, r=3)) == \
        pytest.approx(3 ** 6)
    assert float(bound_eval('sts_fixed_upper', 7, r=0)) == 1.0
    assert float(bound_eval('sts_fixed_upper', 7, r=2).ln()) == \
        pytest.approx(2 * math.log(343 * math.e / 12))


def _float_log_bound(kind: str, n: int) -> float:
    ln_n = math.log(n)
    log_fact = math.lgamma(n + 1)
    return {
        'latin_lower': n * log_fact - n * n,
        'latin_aut_upper': math.log(6) + 3 * log_fact + 5 / 8 * n * n * ln_n,
        'sts_lower': 0.9 * n * n / 6 * ln_n,
        'sts_aut_upper':
            log_fact + 5 / 48 * n * n * math.log(8 * n * math.e / 5),
        'ep_lower': 0.9 * n * n / 2 * ln_n,
        'ep_aut_upper': log_fact + 3 / 8 * n * n * ln_n,
        'latin_lower_eps': 0.9 * n * n * ln_n,
        'latin_fixed_cap': 5 / 8 * n * n * ln_n,
        'ep_fixed_upper': 3 / 8 * n * n * ln_n,
        'ep_fpf_fixed_upper': ln_n + n * n / 4 * math.log(8 * math.e * n),
    }[kind]


@pytest.mark.parametrize('kind', [
    'latin_lower', 'latin_aut_upper', 'sts_lower', 'sts_aut_upper',
    'ep_lower', 'ep_aut_upper', 'latin_lower_eps', 'latin_fixed_cap',
    'ep_fixed_upper', 'ep_fpf_fixed_upper',
])
def test_bounds_agree_with_float_evaluation(kind: str) -> None:
    for n in range(2, 201):
        ours = float(bound_eval(kind, n, eps=0.1).ln())
        assert ours == pytest.approx(
            _float_log_bound(kind, n), rel=1e-9, abs=1e-9
        )


@pytest.mark.parametrize('kind, orders', [
    ('latin_aut_upper', range(1, 201)),
    ('ep_aut_upper', range(2, 201, 2)),
])
def test_aut_upper_bounds_increase(kind: str, orders: range) -> None:
    values = [bound_eval(kind, n) for n in orders]
    assert all(a < b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize('kind', ['sts_lower', 'ep_lower', 'latin_lower_eps'])
def test_missing_epsilon(kind: str) -> None:
    with pytest.raises(MissingEpsilon):
        bound_eval(kind, 7)


@pytest.mark.parametrize('kind, n, eps, r, k', [
    ('sts_lower', 7, 1.0, None, None),
    ('sts_lower', 7, 0.0, None, None),
    ('latin_lower', 0, None, None, None),
    ('latin_fixed_upper', 4, None, None, None),
    ('sts_fixed_upper', 7, None, -1, None),
    ('one_factor_upper', 4, None, None, None),
    ('no_such_bound', 4, None, None, None),
])
def test_malformed_bound_arguments(
    kind: str, n: int, eps: Optional[float], r: Optional[int],
    k: Optional[int]
) -> None:
    with pytest.raises(MalformedInput):
        bound_eval(kind, n, eps, r, k)
# endregion


# region Crossover
@pytest.mark.parametrize('kind, eps', [
    ('latin', None), ('sts', 0.1), ('ep', 0.1), ('latin_eps', 0.5),
    ('ep_fpf', None),
])
def test_crossover_is_least_stable_order(
    kind: str, eps: Optional[float]
) -> None:
    window = 10
    n0 = crossover_order(kind, eps, window=window)
    admissible = CROSSOVERS[kind][2]
    assert admissible(n0)
    for n in range(n0, n0 + window + 1):
        if admissible(n):
            assert bound_gap(kind, n, eps) > 0
    before = max(n for n in range(1, n0) if admissible(n))
    assert bound_gap(kind, before, eps) <= 0


@pytest.mark.parametrize('kind, eps', [('latin', None), ('ep', 0.1)])
def test_crossover_with_configured_window(
    kind: str, eps: Optional[float]
) -> None:
    n0 = crossover_order(kind, eps)
    admissible = CROSSOVERS[kind][2]
    assert all(
        bound_gap(kind, n, eps) > 0
        for n in range(n0, n0 + CROSSOVER_WINDOW + 1) if admissible(n)
    )
    assert crossover_order(kind, eps, window=CROSSOVER_WINDOW) == n0


def test_crossover_not_found() -> None:
    with pytest.raises(NotFound):
        crossover_order('latin_eps', 0.1, search_cap=1000)


def test_crossover_unknown_kind() -> None:
    with pytest.raises(MalformedInput):
        crossover_order('cube')


def test_power_ratio() -> None:
    assert float(power_ratio(10, 2)) == pytest.approx(25)
    assert float(power_ratio_peak(10)) == pytest.approx(10 / math.e)
    assert power_ratio_increasing(10, 1, 2)
    assert power_ratio_increasing(10, 3, 3.5)
    assert not power_ratio_increasing(10, 4, 5)
    with pytest.raises(MalformedInput):
        power_ratio_increasing(10, 2, 1)
# endregion


# region Latin fixed structures
def test_fixed_cells(z3: LatinSquare) -> None:
    n = 3
    assert fixed_cells(TriplePermutation.identity(n), z3) == 9
    assert fixed_cells(TriplePermutation.transpose(n), z3) == 3
    assert fixed_cells(TriplePermutation.translation(n, 1, 0, 1), z3) == 0
    with pytest.raises(NotAnAutomorphism):
        fixed_cells(TriplePermutation.translation(n, 1, 0, 0), z3)


def test_forced_positions() -> None:
    assert forced_positions(TriplePermutation.identity(3)) == 9
    assert forced_positions(TriplePermutation.transpose(3)) == 3
    assert forced_positions(TriplePermutation.translation(3, 1, 0, 1)) == 0


def test_latin_fix_stats_transpose(z3: LatinSquare) -> None:
    stats = latin_fix_stats(TriplePermutation.transpose(3), z3)
    assert stats.fixed_objects == 3
    assert stats.orbit_count == 6
    assert stats.total_objects == 9
    assert stats.fixed_points == 3
    assert stats.subsquare_order is None
    assert set(stats.bound_values) == {'latin_fixed_upper', 'latin_fixed_cap'}


def test_latin_subsquare(z4: LatinSquare) -> None:
    negate = (0, 3, 2, 1)
    g = TriplePermutation((0, 1, 2), negate, negate, negate)
    sub = fixed_subsquare(g, z4)
    assert sub == LatinSquare.cyclic(2)
    stats = latin_fix_stats(g, z4)
    assert stats.fixed_objects == 4
    assert stats.subsquare_order == 2
    assert stats.fixed_points == 6


def test_subsquare_without_fixed_rows(z3: LatinSquare) -> None:
    g = TriplePermutation.translation(3, 1, 0, 1)
    assert fixed_subsquare(g, z3) == LatinSquare(0, ())
    assert fixed_subsquare(TriplePermutation.transpose(3), z3) is None
    assert latin_fix_stats(g, z3).subsquare_order == 0


@pytest.mark.parametrize('g, count', [
    (TriplePermutation.identity(3), 12),
    (TriplePermutation.transpose(3), 6),
    (TriplePermutation.translation(3, 1, 1, 1), 3),
])
def test_count_fixed_latin(g: TriplePermutation, count: int) -> None:
    assert count_fixed_latin(g, 3) == count
    assert count == sum(
        1 for square in all_latin_squares(3) if is_autoparatopism(g, square)
    )


def test_count_fixed_latin_errors() -> None:
    with pytest.raises(OrderMismatch):
        count_fixed_latin(TriplePermutation.identity(3), 4)
    with pytest.raises(CapExceeded):
        count_fixed_latin(TriplePermutation.identity(6), 6)


def test_count_fixed_latin_checks_bound(
    monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.setattr(
        fixstats, 'bound_eval', lambda *args, **kwargs: LogScalar.zero()
    )
    with pytest.raises(BoundViolated):
        count_fixed_latin(TriplePermutation.identity(2), 2)
# endregion


# region STS fixed structures
def test_sts_identity(fano: Sts) -> None:
    stats = sts_fix_stats(PointPermutation.identity(7), fano)
    assert (stats.fixed_points, stats.fixed_objects, stats.orbit_count) == \
        (7, 7, 7)
    assert stats.extra_fixed_blocks == 0


def test_sts_rotation(fano: Sts) -> None:
    g = PointPermutation.from_images([(x + 1) % 7 for x in range(7)])
    stats = sts_fix_stats(g, fano)
    assert (stats.fixed_points, stats.fixed_objects, stats.orbit_count) == \
        (0, 0, 1)


def test_sts_multiplier(fano: Sts) -> None:
    g = PointPermutation.from_images([2 * x % 7 for x in range(7)])
    stats = sts_fix_stats(g, fano)
    assert (stats.fixed_points, stats.fixed_objects, stats.orbit_count) == \
        (1, 1, 3)
    assert stats.extra_fixed_blocks == 1


def test_affine_translation(affine_plane: Sts) -> None:
    g = PointPermutation.from_images(
        [3 * (p // 3) + (p % 3 + 1) % 3 for p in range(9)]
    )
    stats = sts_fix_stats(g, affine_plane)
    assert (stats.fixed_points, stats.fixed_objects, stats.orbit_count) == \
        (0, 3, 6)
    assert float(stats.bound_values['fixed_blocks_cap']) == \
        pytest.approx(4.5)
    assert float(stats.bound_values['orbit_cap']) == pytest.approx(8.4375)


def test_sts_fix_stats_errors(fano: Sts) -> None:
    with pytest.raises(NotAnAutomorphism):
        sts_fix_stats(
            PointPermutation.from_images([1, 0, *range(2, 7)]), fano
        )
    with pytest.raises(OrderMismatch):
        sts_fix_stats(PointPermutation.identity(9), fano)


def test_fano_elation(fano: Sts) -> None:
    # fixes the points of the line {1, 2, 4} and every line through 2
    g = PointPermutation.from_images([6, 1, 2, 5, 4, 3, 0])
    stats = sts_fix_stats(g, fano)
    assert (stats.fixed_points, stats.fixed_objects, stats.orbit_count) == \
        (3, 3, 5)
    assert stats.extra_fixed_blocks == 2
    assert float(stats.bound_values['fixed_blocks_cap']) == \
        pytest.approx(3.0)


@pytest.mark.parametrize('n, m, most', [
    (7, 0, 3), (7, 1, 3), (7, 3, 3), (9, 0, 4), (9, 1, 4), (9, 3, 4),
    (15, 7, 11),
])
def test_fixed_blocks_most(n: int, m: int, most: int) -> None:
    assert fixstats.fixed_blocks_most(n, m) == most
    assert 24 * most <= n * n + 2 * n + 9
# endregion


# region 1-factorization fixed structures
@pytest.mark.parametrize('image, r, s, m', [
    ([0, 1, 2, 3], 4, 3, 3),
    ([1, 0, 3, 2], 0, 3, 3),
    ([1, 0, 2, 3], 2, 1, 2),
])
def test_ep_fix_stats(
    k4_factorization: OneFactorization, image: list, r: int, s: int, m: int
) -> None:
    stats = ep_fix_stats(PointPermutation.from_images(image),
                         k4_factorization)
    assert (stats.fixed_points, stats.fixed_objects, stats.orbit_count) == \
        (r, s, m)
    assert stats.total_objects == 3


def test_ep_fix_stats_on_patterned() -> None:
    f = OneFactorization.patterned(6)
    # rotation of the points 0..4, fixing 5
    g = PointPermutation.from_images([1, 2, 3, 4, 0, 5])
    stats = ep_fix_stats(g, f)
    assert (stats.fixed_points, stats.fixed_objects, stats.orbit_count) == \
        (1, 0, 1)


def test_ep_fix_stats_not_automorphism() -> None:
    f = OneFactorization.patterned(6)
    with pytest.raises(NotAnAutomorphism):
        ep_fix_stats(PointPermutation.from_images([1, 0, 2, 3, 4, 5]), f)


def test_ep_fix_stats_checks_fixed_classes(
    k4_factorization: OneFactorization, monkeypatch: pytest.MonkeyPatch
) -> None:
    g = PointPermutation.from_images([1, 0, 3, 2])
    stats = ep_fix_stats(g, k4_factorization)
    assert float(stats.bound_values['fixed_one_factor_upper']) == \
        pytest.approx((24 * math.e) ** 1.0)
    monkeypatch.setattr(
        fixstats, 'bound_eval', lambda *args, **kwargs: LogScalar.zero()
    )
    with pytest.raises(BoundViolated):
        ep_fix_stats(g, k4_factorization)


@pytest.mark.parametrize('v, shift, count', [(6, 1, 0), (6, 2, 2), (4, 2, 2)])
def test_count_fixed_one_factors(v: int, shift: int, count: int) -> None:
    g = PointPermutation.from_images([(x + shift) % v for x in range(v)])
    assert count_fixed_one_factors(Graph.cycle(v), g) == count


def test_count_fixed_one_factors_errors() -> None:
    cycle = Graph.cycle(6)
    with pytest.raises(OrderMismatch):
        count_fixed_one_factors(cycle, PointPermutation.identity(4))
    with pytest.raises(NotAnAutomorphism):
        count_fixed_one_factors(
            cycle, PointPermutation.from_images([1, 0, 3, 2, 5, 4])
        )
    with pytest.raises(HasFixedVertex):
        count_fixed_one_factors(
            cycle, PointPermutation.from_images([0, 5, 4, 3, 2, 1])
        )
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(NotRegular):
        count_fixed_one_factors(
            path, PointPermutation.from_images([3, 2, 1, 0])
        )


def test_check_one_factor_count(petersen: Graph) -> None:
    k, bound = check_one_factor_count(petersen, count_one_factors(petersen))
    assert k == 3
    assert float(bound) == pytest.approx(3 ** 5)
    with pytest.raises(BoundViolated):
        check_one_factor_count(petersen, 3 ** 5 + 1)
# endregion


# region Asymmetry reports
def test_isotopy_normal_form() -> None:
    square = LatinSquare(3, ((2, 0, 1), (0, 1, 2), (1, 2, 0)))
    assert isotopy_normal_form(square).is_reduced()


@pytest.mark.parametrize('kind, n, total, histogram, classes', [
    ('latin', 1, 1, {6: 1}, 1),
    ('latin', 2, 2, {24: 2}, 1),
    ('latin', 3, 12, {108: 12}, 1),
    ('sts', 3, 1, {6: 1}, 1),
    ('sts', 7, 30, {168: 30}, 1),
    ('of', 2, 1, {2: 1}, 1),
    ('of', 4, 1, {24: 1}, 1),
    ('of', 6, 6, {120: 6}, 1),
])
def test_small_reports(
    kind: str, n: int, total: int, histogram: dict, classes: int
) -> None:
    report = asymmetry_report(kind, n)
    assert report.total == total
    assert report.aut_order_histogram == histogram
    assert report.with_nontrivial_aut == total
    assert report.proportion == Fraction(1)
    assert report.class_count == classes


def test_latin_four_report() -> None:
    report = asymmetry_report('latin', 4)
    assert report.total == 576
    assert report.aut_order_histogram == {192: 432, 576: 144}
    assert report.class_count == 2


@pytest.mark.slow
@pytest.mark.parametrize('jobs', [1, 8])
def test_latin_five_report(jobs: int) -> None:
    report = asymmetry_report('latin', 5, jobs=jobs)
    assert report == AsymmetryReport(
        kind='latin', n=5, total=161280, with_nontrivial_aut=161280,
        proportion=Fraction(1),
        aut_order_histogram={72: 144000, 600: 17280}, class_count=2,
    )


@pytest.mark.parametrize('kind, n', [('latin', 4), ('sts', 7), ('of', 6)])
def test_report_does_not_depend_on_jobs(kind: str, n: int) -> None:
    assert asymmetry_report(kind, n, jobs=8) == asymmetry_report(kind, n)


@pytest.mark.slow
def test_sts_nine_report() -> None:
    report = asymmetry_report('sts', 9, jobs=2)
    assert report.total == 840
    assert report.aut_order_histogram == {432: 840}


def test_report_orders_are_pluggable() -> None:
    seen: List[Sts] = []

    def order_of(sts: Sts) -> int:
        seen.append(sts)
        return 168

    report = asymmetry_report('sts', 7, orders=order_of)  # type: ignore
    assert len(seen) == 30
    assert report.aut_order_histogram == {168: 30}


def test_report_detects_inconsistent_orders() -> None:
    with pytest.raises(InconsistentCount):
        asymmetry_report('sts', 7, orders=lambda _: 1)


@pytest.mark.parametrize('kind, n, error', [
    ('sts', 5, InadmissibleOrder),
    ('sts', 13, CapExceeded),
    ('of', 5, OddOrder),
    ('of', 10, CapExceeded),
    ('latin', 7, CapExceeded),
    ('cube', 3, MalformedInput),
])
def test_report_errors(kind: str, n: int, error: type) -> None:
    with pytest.raises(error):
        asymmetry_report(kind, n)


def test_full_group_order() -> None:
    assert full_group_order('latin', 3) == 6 * 216
    assert full_group_order('sts', 7) == 5040
# endregion


# region Exhaustive checks of the fixed-structure bounds
def _latin_squares_up_to(n: int) -> List[LatinSquare]:
    if n <= 4:
        return all_latin_squares(n)
    # every square is isotopic to a reduced one and conjugate
    # automorphisms have the same statistics
    return list(reduced_latin_squares(n))


@pytest.mark.slow
@pytest.mark.parametrize('n', [1, 2, 3, 4, 5])
def test_every_autoparatopism_meets_the_bounds(n: int) -> None:
    for square in _latin_squares_up_to(n):
        for g in latin_automorphisms(square):
            stats = latin_fix_stats(g, square)
            assert stats.fixed_objects <= stats.total_objects
            if not g.is_identity() and g.fixes_classes():
                assert 4 * stats.fixed_objects <= n * n


@pytest.mark.slow
@pytest.mark.parametrize('n', [7, 9])
def test_every_sts_automorphism_meets_the_bounds(n: int) -> None:
    for sts in all_sts(n):
        for g in point_automorphisms(aut_order_sts(sts), n):
            stats = sts_fix_stats(g, sts)
            if not g.is_identity():
                assert 48 * stats.orbit_count < 5 * n * n
                assert 24 * stats.fixed_objects <= n * n + 2 * n + 9


@pytest.mark.slow
@pytest.mark.parametrize('n', [4, 6, 8])
def test_every_factorization_automorphism_meets_the_bounds(n: int) -> None:
    for f in all_one_factorizations(n):
        for g in point_automorphisms(aut_order_of(f), n):
            stats = ep_fix_stats(g, f)
            if g.is_identity():
                continue
            m, s = stats.orbit_count, stats.fixed_objects
            if stats.fixed_points:
                assert 4 * m <= 3 * n
                assert s == stats.fixed_points - 1
            else:
                assert 2 * (m - s) <= n - 1 - s


def _regular_graphs() -> List[nx.Graph]:
    graphs = [nx.cycle_graph(v) for v in range(4, 13)]
    graphs += [
        nx.complete_graph(4), nx.complete_graph(6),
        nx.complete_bipartite_graph(3, 3), nx.petersen_graph(),
    ]
    graphs += [
        nx.circulant_graph(v, offsets)
        for v, offsets in [
            (6, [1, 3]), (8, [1, 2]), (8, [1, 4]), (8, [1, 3]),
            (10, [1, 3]), (10, [1, 5]), (12, [1, 5]), (12, [1, 4]),
            (12, [2, 3]),
        ]
    ]
    return graphs


@pytest.mark.slow
@pytest.mark.parametrize('graph', _regular_graphs())
def test_fixed_one_factors_of_regular_graphs(graph: nx.Graph) -> None:
    ours = Graph.from_networkx(graph)
    total = count_one_factors(ours)
    k, _ = check_one_factor_count(ours, total)
    assert k == ours.valency()
    for image in graph_automorphisms(graph):
        if any(i == x for i, x in enumerate(image)):
            continue
        g = PointPermutation.from_images(image)
        fixed = count_fixed_one_factors(ours, g)
        assert fixed <= total
        if ours.v > 10:
            continue
        assert fixed == sum(
            1 for pairing in all_pairings(range(ours.v))
            if all(graph.has_edge(a, b) for a, b in pairing)
            and {tuple(sorted((image[a], image[b]))) for a, b in pairing}
            == {tuple(sorted(e)) for e in pairing}
        )
# endregion
