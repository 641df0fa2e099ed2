from __future__ import annotations

from dataclasses import dataclass, field
from typing import Generic, List, Sequence, Tuple, TypeVar

from asymlab.exceptions import MalformedInput
from asymlab.structures.graph import Graph

T = TypeVar('T')


@dataclass(frozen=True)
class ColoredGraph:
    graph: Graph
    color: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.color) != self.graph.v:
            raise MalformedInput(
                f'{len(self.color)} colors for {self.graph.v} vertices'
            )
        used = sorted(set(self.color))
        if used != list(range(len(used))):
            raise MalformedInput('colors are not an initial segment')

    @property
    def v(self) -> int:
        return self.graph.v

    @classmethod
    def uniform(cls, graph: Graph) -> ColoredGraph:
        return cls(graph, (0,) * graph.v)

    @classmethod
    def build(
        cls, color: Sequence[int], edges: Sequence[Tuple[int, int]]
    ) -> ColoredGraph:
        return cls(Graph.from_edges(len(color), edges), tuple(color))


@dataclass(frozen=True)
class AutReport(Generic[T]):
    order: int
    generators: List[T] = field(default_factory=list)
    nodes: int = 0

    def with_generators(self, generators: List[T]) -> AutReport[T]:
        return AutReport(self.order, generators, self.nodes)
