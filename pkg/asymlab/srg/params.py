from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict

import networkx as nx
import numpy as np

from asymlab.exceptions import NotRegular, NotStronglyRegular
from asymlab.structures.graph import Graph


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def is_feasible(self) -> bool:
        return self.k * (self.k - self.lam - 1) == \
            (self.v - self.k - 1) * self.mu

    def to_dict(self) -> Dict[str, Any]:
        return {'v': self.v, 'k': self.k, 'lambda': self.lam, 'mu': self.mu}


def _constant(
    common: np.ndarray, mask: np.ndarray, what: str
) -> int:
    rows, cols = np.nonzero(np.triu(mask, 1))
    if len(rows) == 0:
        return 0
    values = common[rows, cols]
    bad = np.flatnonzero(values != values[0])
    if len(bad):
        a, b = int(rows[bad[0]]), int(cols[bad[0]])
        raise NotStronglyRegular(
            f'{what} pairs {(int(rows[0]), int(cols[0]))} and {(a, b)} '
            f'have {values[0]} and {values[bad[0]]} common neighbours',
            witness=(a, b),
        )
    return int(values[0])


def srg_params(graph: Graph) -> SrgParams:
    """(v, k, lambda, mu) of a connected strongly regular graph. A complete
    graph has no non-adjacent pairs and gets mu = 0."""
    if graph.v == 0:
        raise NotStronglyRegular('graph has no vertices')
    k = graph.valency()
    if k is None:
        raise NotRegular(f'degrees {sorted(set(graph.degrees()))}')
    if not nx.is_connected(graph.to_networkx()):
        raise NotStronglyRegular('graph is disconnected')

    adj = graph.adjacency
    a = adj.astype(np.int64)
    common = a @ a
    non_adjacent = ~adj & ~np.eye(graph.v, dtype=np.bool_)
    params = SrgParams(
        graph.v, k,
        _constant(common, adj, 'adjacent'),
        _constant(common, non_adjacent, 'non-adjacent'),
    )
    if not params.is_feasible():
        raise NotStronglyRegular(f'{params} breaks k(k-l-1) = (v-k-1)mu')
    return params
