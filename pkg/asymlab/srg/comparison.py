from __future__ import annotations

from typing import Any, Dict, NamedTuple, Union

from asymlab.exceptions import KindMismatch
from asymlab.permgroup import (ColoredGraph, aut_order_latin, aut_order_sts,
                               colored_graph_aut)
from asymlab.structures.graph import Graph
from asymlab.structures.latin import LatinSquare
from asymlab.structures.sts import Sts

from .constructions import latin_square_graph, steiner_graph


class AutComparison(NamedTuple):
    graph_aut_order: int
    structure_aut_order: int

    @property
    def induced_equal(self) -> bool:
        return self.graph_aut_order == self.structure_aut_order

    def to_dict(self) -> Dict[str, Any]:
        return {
            'graph_aut_order': str(self.graph_aut_order),
            'structure_aut_order': str(self.structure_aut_order),
            'induced_equal': self.induced_equal,
        }


def graph_aut_order(graph: Graph) -> int:
    return colored_graph_aut(ColoredGraph.uniform(graph)).order


def aut_comparison(
    structure: Union[LatinSquare, Sts], graph: Graph
) -> AutComparison:
    """Automorphism group orders of a Latin square or Steiner graph and of
    the structure it was built from. Small orders may differ."""
    if isinstance(structure, LatinSquare):
        expected = latin_square_graph(structure)
        order = aut_order_latin(structure).order
    elif isinstance(structure, Sts):
        expected = steiner_graph(structure)
        order = aut_order_sts(structure).order
    else:
        raise KindMismatch(
            f'no graph construction for {type(structure).__name__}'
        )
    if graph != expected:
        raise KindMismatch('graph was not built from this structure')
    return AutComparison(graph_aut_order(graph), order)
