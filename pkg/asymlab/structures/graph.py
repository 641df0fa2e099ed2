from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from asymlab import Edge
from asymlab.exceptions import MalformedInput


@dataclass(frozen=True, eq=False)
class Graph:
    v: int
    adjacency: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        adj = self.adjacency
        if adj.shape != (self.v, self.v) or adj.dtype != np.bool_:
            raise MalformedInput(f'adjacency of shape {adj.shape}')
        if adj.diagonal().any():
            raise MalformedInput('graph has a loop')
        if not np.array_equal(adj, adj.T):
            raise MalformedInput('adjacency is not symmetric')
        adj.flags.writeable = False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.v == other.v and np.array_equal(
            self.adjacency, other.adjacency
        )

    def __hash__(self) -> int:
        return hash((self.v, self.adjacency.tobytes()))

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adjacency[a, b])

    def neighbors(self, x: int) -> List[int]:
        return [int(y) for y in np.flatnonzero(self.adjacency[x])]

    def degrees(self) -> List[int]:
        return [int(d) for d in self.adjacency.sum(axis=1)]

    def valency(self) -> Optional[int]:
        """Common degree, or None when the graph is not regular."""
        degrees = set(self.degrees())
        return degrees.pop() if len(degrees) == 1 else None

    def edges(self) -> List[Edge]:
        rows, cols = np.nonzero(np.triu(self.adjacency))
        return [(int(a), int(b)) for a, b in zip(rows, cols)]

    def neighbor_masks(self) -> List[int]:
        masks = []
        for x in range(self.v):
            mask = 0
            for y in self.neighbors(x):
                mask |= 1 << y
            masks.append(mask)
        return masks

    def is_automorphism(self, image: Sequence[int]) -> bool:
        perm = np.asarray(image)
        return np.array_equal(
            self.adjacency[np.ix_(perm, perm)], self.adjacency
        )

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.v))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_edges(cls, v: int, edges: Iterable[Tuple[int, int]]) -> Graph:
        adj = np.zeros((v, v), dtype=np.bool_)
        for a, b in edges:
            if not (0 <= a < v and 0 <= b < v):
                raise MalformedInput(f'edge {(a, b)} outside 0..{v - 1}')
            if a == b:
                raise MalformedInput(f'loop at {a}')
            adj[a, b] = adj[b, a] = True
        return cls(v, adj)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        nodes = sorted(g.nodes)
        index = {x: i for i, x in enumerate(nodes)}
        return cls.from_edges(
            len(nodes), ((index[a], index[b]) for a, b in g.edges)
        )

    @classmethod
    def cycle(cls, v: int) -> Graph:
        return cls.from_edges(v, ((i, (i + 1) % v) for i in range(v)))

    @classmethod
    def complete(cls, v: int) -> Graph:
        return cls.from_edges(
            v, ((a, b) for a in range(v) for b in range(a + 1, v))
        )
