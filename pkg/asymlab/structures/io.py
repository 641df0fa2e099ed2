from __future__ import annotations

import json
from typing import Any, Dict, List, Union

from asymlab.exceptions import MalformedInput

from .factorization import OneFactorization, validate_one_factorization
from .graph import Graph
from .latin import LatinSquare, validate_latin
from .matrix import ZeroOneMatrix
from .permutation import PointPermutation
from .sts import Sts, validate_sts

Structure = Union[LatinSquare, Sts, OneFactorization]


def dumps_json(obj: Any, sort_keys: bool = True) -> str:
    """Compact JSON. Documents whose key order is part of their format
    pass ``sort_keys=False`` and keep insertion order."""
    return json.dumps(obj, separators=(',', ':'), sort_keys=sort_keys)


def _loads_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f'invalid JSON: {e}')


# region Structures
def structure_to_dict(x: Structure) -> Dict[str, Any]:
    if isinstance(x, LatinSquare):
        return {'kind': 'latin', 'n': x.n, 'grid': [list(r) for r in x.grid]}
    if isinstance(x, Sts):
        return {'kind': 'sts', 'n': x.n, 'blocks': [list(b) for b in x]}
    return {
        'kind': 'of',
        'n': x.n,
        'factors': [[list(e) for e in factor] for factor in x],
    }


def structure_from_dict(data: Dict[str, Any]) -> Structure:
    try:
        kind, n = data['kind'], int(data['n'])
        if kind == 'latin':
            return validate_latin(n, data['grid'])
        if kind == 'sts':
            return validate_sts(n, data['blocks'])
        if kind == 'of':
            return validate_one_factorization(n, data['factors'])
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInput(f'structure document: {e!r}')
    raise MalformedInput(f'unknown structure kind {kind!r}')


def dumps_structure(x: Structure) -> str:
    return dumps_json(structure_to_dict(x), sort_keys=False)


def loads_structure(text: str) -> Structure:
    """Parse a JSON structure document, or a Latin square given as n lines
    of n space-separated integers."""
    stripped = text.strip()
    if stripped.startswith('{'):
        return structure_from_dict(_loads_json(stripped))
    return loads_latin_text(stripped)


def loads_latin_text(text: str) -> LatinSquare:
    try:
        grid = [
            [int(x) for x in line.split()]
            for line in text.strip().splitlines() if line.strip()
        ]
    except ValueError as e:
        raise MalformedInput(f'Latin square text: {e}')
    return validate_latin(len(grid), grid)


def dumps_latin_text(square: LatinSquare) -> str:
    return ''.join(' '.join(map(str, row)) + '\n' for row in square.grid)
# endregion


# region Matrices, permutations and graphs
def loads_matrix(text: str) -> ZeroOneMatrix:
    lines = [line.strip() for line in text.strip().splitlines()]
    rows: List[List[int]] = []
    for line in lines:
        if set(line) - {'0', '1'}:
            raise MalformedInput(f'matrix line {line!r}')
        rows.append([int(c) for c in line])
    if not rows or any(len(row) != len(rows) for row in rows):
        raise MalformedInput('matrix is not square')
    return ZeroOneMatrix.from_rows(rows)


def dumps_matrix(m: ZeroOneMatrix) -> str:
    return ''.join(''.join(map(str, row)) + '\n' for row in m.rows())


def loads_permutation(text: str) -> PointPermutation:
    try:
        return PointPermutation.from_images(
            [int(x) for x in text.split()]
        )
    except ValueError as e:
        raise MalformedInput(f'permutation: {e}')


def dumps_permutation(g: PointPermutation) -> str:
    return ' '.join(map(str, g.image)) + '\n'


def graph_to_dict(g: Graph) -> Dict[str, Any]:
    return {'v': g.v, 'edges': [list(e) for e in g.edges()]}


def loads_graph(text: str) -> Graph:
    data = _loads_json(text)
    try:
        return Graph.from_edges(
            int(data['v']), (tuple(e) for e in data['edges'])
        )
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInput(f'graph document: {e!r}')


def dumps_graph(g: Graph) -> str:
    return dumps_json(graph_to_dict(g))
# endregion
