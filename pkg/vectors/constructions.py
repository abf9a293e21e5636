import itertools
import logging
from typing import List, Tuple

import numpy as np
from sympy import isprime

from graphs.graph import ClassicalColouring, Graph
from utils.enums import Backend
from utils.errors import GraphError, RepresentationError
from vectors.representation import VectorRep, orthogonality_graph

logger = logging.getLogger(__name__)

HADAMARD_LIMIT = 20
ROOTS_LIMIT = 5

# Powers of i as Gaussian integer pairs
_I_POWERS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _check_hadamard_order(n: int):
    if n < 1:
        raise GraphError(f'Hadamard graph order must be positive, got {n}')
    if n > HADAMARD_LIMIT:
        raise GraphError(f'Hadamard graph order {n} exceeds the size guard '
                         f'of {HADAMARD_LIMIT}')
    if n % 2:
        logger.warning(f'Hadamard graph of odd order {n} has no edges')
        raise GraphError(f'Hadamard graph order must be even, got {n}')


def hadamard_graph(n: int) -> Graph:
    """
    Vertices are the n-bit strings in lexicographic order (vertex i is the
    binary expansion of i), adjacent at Hamming distance exactly n/2.
    """
    _check_hadamard_order(n)
    flips = [sum(1 << b for b in bits)
             for bits in itertools.combinations(range(n), n // 2)]
    return Graph.from_rows([sum(1 << (v ^ f) for f in flips)
                            for v in range(1 << n)])


def _bits(v: int, n: int) -> List[int]:
    return [(v >> (n - 1 - j)) & 1 for j in range(n)]


def hadamard_vectors(n: int) -> VectorRep:
    """Each bit string as its +-1 vector: bit 0 is +1, bit 1 is -1"""
    _check_hadamard_order(n)
    return VectorRep(n, Backend.INTEGER,
                     tuple(tuple(1 - 2 * b for b in _bits(v, n))
                           for v in range(1 << n)))


def sylvester_hadamard_rows(n: int) -> List[int]:
    """
    Rows of the Sylvester Hadamard matrix of order n as Hadamard graph
    vertices. They are pairwise at distance n/2, so they form an n-clique.
    """
    if n < 1 or n & (n - 1):
        raise GraphError(f'Sylvester construction needs a power of two, '
                         f'got {n}')
    matrix = np.array([[1]])
    while matrix.shape[0] < n:
        matrix = np.kron(matrix, np.array([[1, 1], [1, -1]]))
    return [int(''.join('0' if x > 0 else '1' for x in row), 2)
            for row in matrix]


def _check_prime(p: int):
    if not isprime(p):
        raise GraphError(f'The roots-of-unity graph needs a prime, got {p}')
    if p > ROOTS_LIMIT:
        raise GraphError(f'p={p} exceeds the size guard of {ROOTS_LIMIT} '
                         f'({p}^{p} vertices)')


def _exponent_index(exponents, p: int) -> int:
    index = 0
    for e in exponents:
        index = index * p + e
    return index


def roots_of_unity_graph(p: int) -> Tuple[Graph, VectorRep]:
    """
    All p^p vectors of p-th roots of unity in lexicographic exponent order.
    x and y are adjacent iff the exponents of conj(x) * y are all distinct,
    so the graph is the Cayley graph of Z_p^p whose connection set is the
    permutations of 0..p-1.
    """
    _check_prime(p)
    vertices = list(itertools.product(range(p), repeat=p))
    connection = list(itertools.permutations(range(p)))
    rows = []
    for x in vertices:
        row = 0
        for s in connection:
            row |= 1 << _exponent_index(((a + b) % p for a, b in zip(x, s)),
                                        p)
        rows.append(row)
    logger.debug(f'roots-of-unity graph p={p}: {len(vertices)} vertices, '
                 f'degree {len(connection)}')
    rep = VectorRep(p, Backend.ROOT_EXPONENT, tuple(vertices), order=p)
    return Graph.from_rows(rows), rep


def roots_of_unity_colouring(p: int) -> ClassicalColouring:
    """Colour x by (x_1 - x_2) mod p; equal colours make conj(x) * y repeat
    its first two exponents"""
    _check_prime(p)
    return ClassicalColouring(p, tuple((x[0] - x[1]) % p for x in
                                       itertools.product(range(p), repeat=p)))


def fourth_roots_dim4_vectors() -> VectorRep:
    """(1, i^a, i^b, i^c) for vertex 16a + 4b + c"""
    vectors = tuple(((1, 0),) + tuple(_I_POWERS[k] for k in exponents)
                    for exponents in itertools.product(range(4), repeat=3))
    return VectorRep(4, Backend.GAUSSIAN, vectors)


def fourth_roots_dim4_graph() -> Tuple[Graph, VectorRep]:
    rep = fourth_roots_dim4_vectors()
    return orthogonality_graph(rep), rep


def dim2_sign_vectors() -> Tuple[Graph, VectorRep]:
    """The four +-1 vectors of the plane; orthogonality pairs them up"""
    rep = VectorRep(2, Backend.INTEGER, ((1, 1), (1, -1), (-1, 1), (-1, -1)))
    return orthogonality_graph(rep), rep


def standard_basis(dim: int) -> VectorRep:
    if dim < 1:
        raise RepresentationError(f'Dimension must be positive, got {dim}')
    return VectorRep(dim, Backend.INTEGER,
                     tuple(tuple(int(i == j) for j in range(dim))
                           for i in range(dim)))
