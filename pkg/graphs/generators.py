import logging

import numpy as np

from graphs.graph import Graph
from utils.errors import GraphError, typecheck

logger = logging.getLogger(__name__)


def complete_graph(n: int) -> Graph:
    typecheck(n, int, 'n')
    if n < 1:
        raise GraphError(f'K_n needs n >= 1, got {n}')
    full = (1 << n) - 1
    return Graph.from_rows([full & ~(1 << v) for v in range(n)])


def edgeless_graph(n: int) -> Graph:
    return Graph(n)


def cycle_graph(n: int) -> Graph:
    typecheck(n, int, 'n')
    if n < 3:
        raise GraphError(f'A cycle needs at least 3 vertices, got {n}')
    return Graph(n, ((v, (v + 1) % n) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((v, v + 1) for v in range(n - 1)))


def gnp(n: int, p: float, seed: int) -> Graph:
    """
    Erdos-Renyi random graph. Pairs (u, v), u < v, are visited in
    lexicographic order and each consumes one uniform draw from
    PCG64(seed), so a seed fixes the edge set on every platform.
    """
    typecheck(seed, int, 'seed')
    if not 0.0 <= p <= 1.0:
        raise GraphError(f'Edge probability must lie in [0, 1], got {p}')
    if seed < 0:
        raise GraphError(f'Seed must be non-negative, got {seed}')
    rng = np.random.Generator(np.random.PCG64(seed))
    us, vs = np.triu_indices(n, 1)
    keep = rng.random(us.size) < p
    logger.debug(f'gnp n={n} p={p} seed={seed}: {int(keep.sum())} edges')
    return Graph(n, zip(us[keep].tolist(), vs[keep].tolist()))
