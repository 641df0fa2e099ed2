from __future__ import annotations

from typing import Iterator, List, Tuple

from asymlab import Perm
from asymlab.structures.factorization import OneFactorization
from asymlab.structures.latin import LatinSquare
from asymlab.structures.permutation import PointPermutation
from asymlab.structures.sts import Sts

from .colored_graph import AutReport, ColoredGraph
from .groups import PointGroup
from .paratopism import TriplePermutation
from .refinement import colored_graph_aut


def latin_colored_graph(square: LatinSquare) -> ColoredGraph:
    """Vertices 0..3n-1 are the row, column and entry points (all one
    color, so class-permuting maps are automorphisms); vertex 3n + i*n + j
    is the cell at (i, j), adjacent to its three points."""
    n = square.n
    color = [0] * (3 * n) + [1] * (n * n)
    edges: List[Tuple[int, int]] = []
    for i, row in enumerate(square.grid):
        for j, entry in enumerate(row):
            cell = 3 * n + i * n + j
            edges.extend(((cell, i), (cell, n + j), (cell, 2 * n + entry)))
    return ColoredGraph.build(color, edges)


def sts_colored_graph(sts: Sts) -> ColoredGraph:
    n = sts.n
    color = [0] * n + [1] * len(sts)
    edges = [
        (n + b, x) for b, block in enumerate(sts.blocks) for x in block
    ]
    return ColoredGraph.build(color, edges)


def of_colored_graph(factorization: OneFactorization) -> ColoredGraph:
    """Point vertices, then one vertex per factor, then one vertex per edge
    adjacent to its two endpoints and to its factor."""
    n = factorization.n
    num_factors = len(factorization)
    color = [0] * n + [1] * num_factors
    edges: List[Tuple[int, int]] = []
    vertex = n + num_factors
    for f, factor in enumerate(factorization.factors):
        for a, b in factor:
            color.append(2)
            edges.extend(((vertex, a), (vertex, b), (vertex, n + f)))
            vertex += 1
    return ColoredGraph.build(color, edges)


def _restrict(gamma: Perm, points: int) -> Perm:
    return tuple(gamma[:points])


def aut_order_latin(square: LatinSquare) -> AutReport[TriplePermutation]:
    n = square.n
    report = colored_graph_aut(latin_colored_graph(square))
    return report.with_generators([
        TriplePermutation.from_points(n, _restrict(g, 3 * n))
        for g in report.generators
    ])


def aut_order_sts(sts: Sts) -> AutReport[PointPermutation]:
    report = colored_graph_aut(sts_colored_graph(sts))
    return report.with_generators([
        PointPermutation(sts.n, _restrict(g, sts.n))
        for g in report.generators
    ])


def aut_order_of(
    factorization: OneFactorization
) -> AutReport[PointPermutation]:
    n = factorization.n
    report = colored_graph_aut(of_colored_graph(factorization))
    return report.with_generators([
        PointPermutation(n, _restrict(g, n)) for g in report.generators
    ])


# region Group elements
def latin_automorphisms(square: LatinSquare) -> Iterator[TriplePermutation]:
    """Every autoparatopism of the square."""
    n = square.n
    gens = [g.to_points() for g in aut_order_latin(square).generators]
    for p in PointGroup(3 * n, gens).elements():
        yield TriplePermutation.from_points(n, p)


def point_automorphisms(
    report: AutReport[PointPermutation], n: int
) -> Iterator[PointPermutation]:
    gens = [g.image for g in report.generators]
    for p in PointGroup(n, gens).elements():
        yield PointPermutation(n, p)
# endregion
