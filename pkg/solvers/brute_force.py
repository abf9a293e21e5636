"""
Exhaustive reference answers for small graphs, used to cross-check the
branch-and-bound solvers.
"""
from typing import List

from graphs.graph import Graph
from utils.errors import GraphError
from utils.misc import bits_to_list, popcount

BRUTE_FORCE_LIMIT = 12


def _check_size(graph: Graph):
    if graph.n > BRUTE_FORCE_LIMIT:
        raise GraphError(f'Brute force is limited to {BRUTE_FORCE_LIMIT} '
                         f'vertices, got {graph.n}')


def _is_clique(rows: List[int], mask: int) -> bool:
    return all((rows[v] | (1 << v)) & mask == mask
               for v in bits_to_list(mask))


def _is_independent(rows: List[int], mask: int) -> bool:
    return not any(rows[v] & mask for v in bits_to_list(mask))


def brute_force_clique(graph: Graph) -> List[int]:
    _check_size(graph)
    rows = list(graph.rows)
    best = 0
    for mask in range(1, 1 << graph.n):
        if popcount(mask) > popcount(best) and _is_clique(rows, mask):
            best = mask
    return bits_to_list(best)


def brute_force_independent_set(graph: Graph) -> List[int]:
    _check_size(graph)
    rows = list(graph.rows)
    best = 0
    for mask in range(1, 1 << graph.n):
        if popcount(mask) > popcount(best) and _is_independent(rows, mask):
            best = mask
    return bits_to_list(best)


def brute_force_chromatic_number(graph: Graph) -> int:
    """
    Minimum number of independent sets covering the vertices, by dynamic
    programming over all vertex subsets.
    """
    _check_size(graph)
    rows = list(graph.rows)
    full = (1 << graph.n) - 1
    independent = [_is_independent(rows, mask) for mask in range(full + 1)]
    cover = [0] * (full + 1)
    for mask in range(1, full + 1):
        low = mask & -mask
        rest = mask ^ low
        best = graph.n
        # Every subset of mask containing its lowest vertex
        sub = rest
        while True:
            part = sub | low
            if independent[part]:
                best = min(best, cover[mask ^ part] + 1)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        cover[mask] = best
    return cover[full]
