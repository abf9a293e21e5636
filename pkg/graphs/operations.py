import itertools
import logging
from collections import deque
from typing import List, Sequence

from graphs.graph import ClassicalColouring, Graph
from utils.errors import ColouringError, GraphError
from utils.reports import Report, Violation

logger = logging.getLogger(__name__)

ISOMORPHISM_LIMIT = 8


def complement(graph: Graph) -> Graph:
    full = graph.vertex_mask
    return Graph.from_rows([full & ~row & ~(1 << v)
                            for v, row in enumerate(graph.rows)])


def union_same_vertices(g: Graph, h: Graph) -> Graph:
    if g.n != h.n:
        raise GraphError(f'Cannot unite graphs on {g.n} and {h.n} vertices')
    return Graph.from_rows([a | b for a, b in zip(g.rows, h.rows)])


def induced_subgraph(graph: Graph, vertices: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    return Graph(len(vertices), ((index[u], index[v]) for u, v in graph.edges
                                 if u in index and v in index))


def check_homomorphism(source: Graph, target: Graph,
                       mapping: Sequence[int]) -> Report:
    if len(mapping) != source.n:
        raise GraphError(f'Map has {len(mapping)} entries for a source with '
                         f'{source.n} vertices')
    for v, image in enumerate(mapping):
        if not 0 <= image < target.n:
            raise GraphError(f'Vertex {v} maps to {image}, outside the '
                             f'target\'s {target.n} vertices')
    violations = [Violation('edge', (u, v), (mapping[u], mapping[v]), 1.0)
                  for u, v in source.edges
                  if not target.has_edge(mapping[u], mapping[v])]
    return Report.from_violations(violations)


def verify_proper_colouring(graph: Graph,
                            colouring: ClassicalColouring) -> Report:
    if len(colouring) != graph.n:
        raise ColouringError(f'Colouring has {len(colouring)} entries for '
                             f'{graph.n} vertices')
    colours = colouring.colours
    violations = [Violation('monochromatic', (u, v), (colours[u],), 1.0)
                  for u, v in graph.edges if colours[u] == colours[v]]
    return Report.from_violations(violations, c=colouring.c,
                                  used=colouring.used)


def components(graph: Graph) -> List[List[int]]:
    seen = 0
    found = []
    for start in range(graph.n):
        if seen >> start & 1:
            continue
        component = [start]
        seen |= 1 << start
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in graph.neighbour_list(v):
                if not seen >> w & 1:
                    seen |= 1 << w
                    component.append(w)
                    queue.append(w)
        found.append(sorted(component))
    return found


def is_connected(graph: Graph) -> bool:
    return len(components(graph)) == 1


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute force over all vertex permutations; small graphs only"""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.n > ISOMORPHISM_LIMIT:
        raise GraphError(f'Isomorphism testing is limited to '
                         f'{ISOMORPHISM_LIMIT} vertices, got {g.n}')
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    h_edges = set(h.edges)
    for perm in itertools.permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in h_edges
               for u, v in g.edges):
            return True
    return False
