from __future__ import annotations

import math
from typing import List, NamedTuple, Optional, Tuple

import numpy as np
from loguru import logger

from asymlab.config import EIGEN_TOLERANCE
from asymlab.exceptions import NotStronglyRegular
from asymlab.structures.graph import Graph

from .constructions import classical_graph, complete_multipartite
from .params import SrgParams, srg_params


def least_eigenvalue(graph: Graph) -> float:
    return float(np.linalg.eigvalsh(graph.adjacency.astype(np.float64))[0])


def srg_eigenvalues(params: SrgParams) -> Tuple[int, float, float]:
    """k and the two roots of x^2 - (lambda - mu) x - (k - mu)."""
    b = params.lam - params.mu
    root = math.sqrt(b * b + 4 * (params.k - params.mu))
    return params.k, (b + root) / 2, (b - root) / 2


def checked_least_eigenvalue(
    graph: Graph, params: SrgParams, tolerance: Optional[float] = None
) -> float:
    """Numeric least eigenvalue, compared with the closed form."""
    if tolerance is None:
        tolerance = EIGEN_TOLERANCE
    numeric = least_eigenvalue(graph)
    _, _, expected = srg_eigenvalues(params)
    if abs(numeric - expected) > tolerance:
        raise NotStronglyRegular(
            f'least eigenvalue {numeric} but parameters give {expected}'
        )
    return numeric


class FamilyResult(NamedTuple):
    family: str
    parameter: int
    params: SrgParams
    least: float
    expected: int

    @property
    def ok(self) -> bool:
        return abs(self.least - self.expected) <= EIGEN_TOLERANCE


def family_check(max_parameter: int = 7) -> List[FamilyResult]:
    """Least eigenvalues of the classical families with least eigenvalue
    -2 or -3."""
    families = [
        ('multipartite_2', 2, -2, lambda m: complete_multipartite(m, 2)),
        ('multipartite_3', 2, -3, lambda m: complete_multipartite(m, 3)),
        ('square_lattice', 2, -2,
         lambda m: classical_graph('square_lattice', m)),
        ('triangular', 4, -2, lambda m: classical_graph('triangular', m)),
    ]
    out = []
    for name, first, expected, build in families:
        for m in range(first, max_parameter + 1):
            graph = build(m)
            params = srg_params(graph)
            result = FamilyResult(
                name, m, params,
                checked_least_eigenvalue(graph, params), expected,
            )
            if not result.ok:
                logger.warning(f'{name}({m}) has least eigenvalue '
                               f'{result.least}, expected {expected}')
            out.append(result)
    return out
