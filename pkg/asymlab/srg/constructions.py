from __future__ import annotations

from itertools import combinations

import networkx as nx

from asymlab.exceptions import OutOfRange
from asymlab.structures.graph import Graph
from asymlab.structures.latin import LatinSquare
from asymlab.structures.sts import Sts

CLASSICAL_KINDS = ('triangular', 'square_lattice')


def latin_square_graph(square: LatinSquare) -> Graph:
    """Cell (i, j) is vertex i * n + j; two cells are adjacent when they
    share a row, a column or an entry."""
    n = square.n
    cells = [
        (i, j, square[i, j]) for i in range(n) for j in range(n)
    ]
    return Graph.from_edges(n * n, (
        (a, b) for a, b in combinations(range(n * n), 2)
        if any(x == y for x, y in zip(cells[a], cells[b]))
    ))


def steiner_graph(sts: Sts) -> Graph:
    """Blocks, adjacent when they meet in a point."""
    blocks = [set(b) for b in sts.blocks]
    return Graph.from_edges(len(blocks), (
        (a, b) for a, b in combinations(range(len(blocks)), 2)
        if len(blocks[a] & blocks[b]) == 1
    ))


def complete_multipartite(parts: int, size: int) -> Graph:
    if parts < 2 or size < 1:
        raise OutOfRange(f'{parts} parts of size {size}')
    return Graph.from_networkx(
        nx.complete_multipartite_graph(*[size] * parts)
    )


def classical_graph(kind: str, n: int) -> Graph:
    """Triangular graph T(n) on the 2-subsets of an n-set, or the square
    lattice graph L2(n) on an n x n grid."""
    if kind == 'triangular':
        if n < 4:
            raise OutOfRange(f'T({n}) needs n >= 4')
        return Graph.from_networkx(nx.line_graph(nx.complete_graph(n)))
    if kind == 'square_lattice':
        if n < 2:
            raise OutOfRange(f'L2({n}) needs n >= 2')
        return Graph.from_networkx(nx.cartesian_product(
            nx.complete_graph(n), nx.complete_graph(n)
        ))
    raise OutOfRange(f'unknown graph kind {kind!r}')
