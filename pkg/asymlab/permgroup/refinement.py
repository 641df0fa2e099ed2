from __future__ import annotations

from collections import Counter
from typing import List, Optional, Tuple

from loguru import logger

from asymlab import Perm
from asymlab.config import NODE_BUDGET, VERIFY_CHAIN
from asymlab.exceptions import InconsistentCount, ResourceLimit

from .colored_graph import AutReport, ColoredGraph
from .groups import group_order, orbit

Coloring = List[int]


class Search:
    """Individualization-refinement search for the color-preserving
    automorphism group of a colored graph.

    The first path of the search tree is followed to a discrete coloring.
    Walking back up, the orbit of each first-path vertex under the
    stabilizer of the vertices above it is completed by searching the
    sibling subtrees for a leaf equivalent to the first leaf; the group
    order is the product of those orbit lengths.
    """

    def __init__(self, graph: ColoredGraph, node_budget: int) -> None:
        self.v = graph.v
        self.neighbors = [graph.graph.neighbors(x) for x in range(self.v)]
        self.neighbor_sets = [frozenset(nb) for nb in self.neighbors]
        self.initial: Coloring = list(graph.color)
        self.node_budget = node_budget
        self.nodes = 0

    # region Refinement
    def refine(self, coloring: Coloring) -> Tuple[Coloring, int]:
        """Equitable refinement; colors are ranks of sorted signatures so
        the result does not depend on vertex labels. Returns the coloring
        and a label-invariant hash of the refinement trace."""
        trace = []
        num_colors = len(set(coloring))
        while True:
            signatures = [
                (coloring[x], tuple(sorted(coloring[y] for y in nb)))
                for x, nb in enumerate(self.neighbors)
            ]
            ranked = sorted(set(signatures))
            rank = {s: i for i, s in enumerate(ranked)}
            trace.append(hash(tuple(sorted(Counter(signatures).items()))))
            coloring = [rank[s] for s in signatures]
            if len(ranked) == num_colors:
                return coloring, hash(tuple(trace))
            num_colors = len(ranked)

    @staticmethod
    def individualize(coloring: Coloring, x: int) -> Coloring:
        c = coloring[x]
        return [
            col + 1 if col > c or (col == c and y != x) else col
            for y, col in enumerate(coloring)
        ]

    def target_cell(self, coloring: Coloring) -> Optional[List[int]]:
        sizes = Counter(coloring)
        candidates = [(size, col) for col, size in sizes.items() if size > 1]
        if not candidates:
            return None
        _, col = min(candidates)
        return [x for x, c in enumerate(coloring) if c == col]

    def child(self, coloring: Coloring, x: int) -> Tuple[Coloring, int]:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise ResourceLimit(
                f'automorphism search exceeded {self.node_budget} nodes'
            )
        return self.refine(self.individualize(coloring, x))
    # endregion

    # region Leaves
    def is_automorphism(self, gamma: Perm) -> bool:
        for x in range(self.v):
            image = frozenset(gamma[y] for y in self.neighbors[x])
            if image != self.neighbor_sets[gamma[x]]:
                return False
        return True

    @staticmethod
    def leaf_order(coloring: Coloring) -> List[int]:
        order = [0] * len(coloring)
        for x, c in enumerate(coloring):
            order[c] = x
        return order

    def leaf_map(self, leaf: Coloring) -> Perm:
        gamma = [0] * self.v
        for x, y in zip(self.first_leaf, self.leaf_order(leaf)):
            gamma[x] = y
        return tuple(gamma)

    def find_equivalent(
        self, coloring: Coloring, depth: int
    ) -> Optional[Perm]:
        """Search the subtree rooted at ``coloring`` (at ``depth`` on the
        first path's scale) for a leaf equivalent to the first leaf."""
        cell = self.target_cell(coloring)
        if cell is None:
            gamma = self.leaf_map(coloring)
            return gamma if self.is_automorphism(gamma) else None
        for x in cell:
            child, trace = self.child(coloring, x)
            if trace != self.traces[depth + 1]:
                continue
            found = self.find_equivalent(child, depth + 1)
            if found is not None:
                return found
        return None
    # endregion

    def run(self) -> AutReport[Perm]:
        coloring, trace = self.refine(self.initial)
        path: List[Coloring] = [coloring]
        self.traces: List[int] = [trace]
        choices: List[int] = []
        cell = self.target_cell(coloring)
        while cell is not None:
            choices.append(cell[0])
            coloring, trace = self.child(coloring, cell[0])
            path.append(coloring)
            self.traces.append(trace)
            cell = self.target_cell(coloring)
        self.first_leaf = self.leaf_order(coloring)

        generators: List[Perm] = []
        order = 1
        for depth in reversed(range(len(choices))):
            v = choices[depth]
            current = set(orbit(v, generators))
            for w in self.target_cell(path[depth]) or ():
                if w in current:
                    continue
                child, trace = self.child(path[depth], w)
                if trace != self.traces[depth + 1]:
                    continue
                gamma = self.find_equivalent(child, depth + 1)
                if gamma is not None:
                    generators.append(gamma)
                    current = set(orbit(v, generators))
            order *= len(current)

        logger.debug(
            f'Automorphism search: {self.v} vertices, {self.nodes} nodes, '
            f'order {order}, {len(generators)} generators.'
        )
        return AutReport(order, generators, self.nodes)


def colored_graph_aut(
    graph: ColoredGraph,
    node_budget: Optional[int] = None,
    verify_chain: Optional[bool] = None,
) -> AutReport[Perm]:
    budget = NODE_BUDGET if node_budget is None else node_budget
    report = Search(graph, budget).run()
    if not (VERIFY_CHAIN if verify_chain is None else verify_chain):
        return report
    chain_order = group_order(graph.v, report.generators)
    if chain_order != report.order:
        raise InconsistentCount(
            f'stabilizer chain gives {chain_order}, '
            f'search gives {report.order}'
        )
    return report
