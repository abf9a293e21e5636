from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from utils.errors import ColouringError, GraphError, typecheck
from utils.misc import bits_to_list, popcount

Edge = Tuple[int, int]


class Graph:
    """
    Finite simple undirected graph on the vertices 0..n-1.

    Adjacency is held as one bitset row per vertex, so edge queries are
    constant time. Instances are never mutated after construction.
    """

    __slots__ = ['n', '_rows', '_edges']

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        typecheck(n, int, 'n')
        if n < 1:
            raise GraphError(f'A graph needs at least one vertex, got n={n}')
        rows = [0] * n
        for edge in edges:
            u, v = (int(x) for x in edge)
            if u == v:
                raise GraphError(f'Loop ({u},{v}) is not allowed')
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f'Edge ({u},{v}) out of range for n={n}')
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self._rows: Tuple[int, ...] = tuple(rows)
        self._edges: Optional[Tuple[Edge, ...]] = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> Graph:
        """Build directly from symmetric, loop-free bitset rows"""
        graph = cls.__new__(cls)
        graph.n = len(rows)
        if graph.n < 1:
            raise GraphError('A graph needs at least one vertex')
        graph._rows = tuple(int(r) for r in rows)
        graph._edges = None
        for v, row in enumerate(graph._rows):
            if row >> v & 1:
                raise GraphError(f'Loop at vertex {v} is not allowed')
            if row >> graph.n:
                raise GraphError(f'Row {v} has neighbours out of range')
        return graph

    @classmethod
    def from_adjacency(cls, matrix) -> Graph:
        matrix = np.asarray(matrix, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise GraphError('Adjacency matrix must be square')
        if not np.array_equal(matrix, matrix.T):
            raise GraphError('Adjacency matrix must be symmetric')
        us, vs = np.nonzero(np.triu(matrix, 1))
        if matrix.diagonal().any():
            raise GraphError('Adjacency matrix has loops')
        return cls(int(matrix.shape[0]), zip(us.tolist(), vs.tolist()))

    def __repr__(self):
        return f'<Graph n={self.n} m={self.edge_count}>'

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self):
        return hash((self.n, self._rows))

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Sorted (u, v) pairs with u < v"""
        if self._edges is None:
            self._edges = tuple((u, v) for u in range(self.n)
                                for v in bits_to_list(self._rows[u] >> (u + 1)
                                                      << (u + 1)))
        return self._edges

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self._rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbours(self, v: int) -> int:
        return self._rows[v]

    def neighbour_list(self, v: int) -> List[int]:
        return bits_to_list(self._rows[v])

    def degree(self, v: int) -> int:
        return popcount(self._rows[v])

    def degrees(self) -> List[int]:
        return [popcount(r) for r in self._rows]

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            matrix[u, v] = matrix[v, u] = True
        return matrix


@dataclass(frozen=True)
class ClassicalColouring:
    """A vertex-indexed colour map into {0..c-1}"""
    c: int
    colours: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'colours', tuple(int(x) for x in
                                                  self.colours))
        if self.c < 1:
            raise ColouringError(f'Colour count must be positive, '
                                 f'got {self.c}')
        for v, colour in enumerate(self.colours):
            if not 0 <= colour < self.c:
                raise ColouringError(f'Vertex {v} has colour {colour}, '
                                     f'outside 0..{self.c - 1}')

    def __len__(self):
        return len(self.colours)

    def __getitem__(self, v: int) -> int:
        return self.colours[v]

    @property
    def used(self) -> int:
        return len(set(self.colours))

    def classes(self) -> List[List[int]]:
        classes = [[] for _ in range(self.c)]
        for v, colour in enumerate(self.colours):
            classes[colour].append(v)
        return classes

    def compacted(self) -> ClassicalColouring:
        """Relabel to the colours actually used, in order of first use"""
        relabel = {}
        for colour in self.colours:
            relabel.setdefault(colour, len(relabel))
        return ClassicalColouring(max(len(relabel), 1),
                                  tuple(relabel[x] for x in self.colours))

    def to_dict(self):
        return {'c': self.c, 'colours': list(self.colours)}

    @classmethod
    def from_dict(cls, data) -> ClassicalColouring:
        if isinstance(data, list):
            colours = [int(x) for x in data]
            return cls(max(colours, default=0) + 1, tuple(colours))
        return cls(int(data['c']), tuple(data['colours']))


@dataclass(frozen=True)
class Homomorphism:
    """An edge-preserving vertex map from source to target"""
    source: Graph
    target: Graph
    map: Tuple[int, ...]

    def __post_init__(self):
        # Local import; operations depends on this module
        from graphs.operations import check_homomorphism
        object.__setattr__(self, 'map', tuple(int(x) for x in self.map))
        report = check_homomorphism(self.source, self.target, self.map)
        if not report.passed:
            raise GraphError(f'Map is not a homomorphism: '
                             f'{len(report.violations)} edges are not '
                             f'preserved, first {report.violations[0]}')

    def __getitem__(self, v: int) -> int:
        return self.map[v]
