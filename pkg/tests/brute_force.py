"""Slow, obviously correct reference implementations used as oracles."""
from itertools import combinations, permutations, product
from math import prod
from typing import FrozenSet, List, Sequence, Set, Tuple

import networkx as nx

from asymlab.permgroup import TriplePermutation, is_autoparatopism
from asymlab.structures import LatinSquare, OneFactorization, Sts

Pairing = FrozenSet[Tuple[int, int]]


def permanent(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    return sum(
        prod(rows[i][s[i]] for i in range(n))
        for s in permutations(range(n))
    )


def latin_grids(n: int) -> Set[Tuple[Tuple[int, ...], ...]]:
    perms = list(permutations(range(n)))
    return {
        rows for rows in product(perms, repeat=n)
        if all(len({row[j] for row in rows}) == n for j in range(n))
    }


def sts_block_sets(n: int) -> Set[Tuple[Tuple[int, int, int], ...]]:
    """Include/exclude every triple in lexicographic order."""
    triples = list(combinations(range(n), 3))
    need = n * (n - 1) // 6
    out = set()

    def walk(i: int, chosen: List[Tuple[int, int, int]], pairs: Set) -> None:
        if len(chosen) == need:
            out.add(tuple(chosen))
            return
        if i == len(triples) or len(triples) - i < need - len(chosen):
            return
        t = triples[i]
        new = set(combinations(t, 2))
        if not new & pairs:
            walk(i + 1, chosen + [t], pairs | new)
        walk(i + 1, chosen, pairs)

    walk(0, [], set())
    return out


def all_pairings(items: Sequence[int]) -> List[List[Tuple[int, int]]]:
    items = list(items)
    if not items:
        return [[]]
    first = items.pop(0)
    out = []
    for i, item in enumerate(items):
        for rest in all_pairings(items[:i] + items[i + 1:]):
            out.append([(first, item)] + rest)
    return out


def factorization_sets(n: int) -> Set[FrozenSet[Pairing]]:
    matchings = [frozenset(p) for p in all_pairings(range(n))]
    out = set()
    for chosen in combinations(matchings, n - 1):
        edges = [e for m in chosen for e in m]
        if len(set(edges)) == n * (n - 1) // 2:
            out.add(frozenset(chosen))
    return out


def as_pairing_set(f: OneFactorization) -> FrozenSet[Pairing]:
    return frozenset(frozenset(factor) for factor in f.factors)


def matching_count(graph: nx.Graph) -> int:
    return sum(
        1 for pairing in all_pairings(sorted(graph.nodes))
        if all(graph.has_edge(a, b) for a, b in pairing)
    )


def latin_aut_count(square: LatinSquare) -> int:
    return sum(
        1 for g in TriplePermutation.all(square.n)
        if is_autoparatopism(g, square)
    )


def sts_aut_count(sts: Sts) -> int:
    blocks = set(sts.blocks)
    return sum(
        1 for p in permutations(range(sts.n))
        if all(tuple(sorted(p[x] for x in b)) in blocks for b in blocks)
    )


def of_aut_count(f: OneFactorization) -> int:
    factors = as_pairing_set(f)
    return sum(
        1 for p in permutations(range(f.n))
        if frozenset(
            frozenset(tuple(sorted((p[a], p[b]))) for a, b in factor)
            for factor in factors
        ) == factors
    )


def graph_automorphisms(graph: nx.Graph) -> List[Tuple[int, ...]]:
    nodes = sorted(graph.nodes)
    matcher = nx.algorithms.isomorphism.GraphMatcher(graph, graph)
    return [
        tuple(iso[x] for x in nodes) for iso in matcher.isomorphisms_iter()
    ]
