import logging
from typing import Optional

from commands.utils.data_classes import GeneratedGraph
from graphs.generators import complete_graph, cycle_graph, gnp
from utils.config import config
from utils.errors import UsageError
from vectors.constructions import (fourth_roots_dim4_graph, hadamard_graph,
                                   hadamard_vectors, roots_of_unity_colouring,
                                   roots_of_unity_graph)
from vectors.datasets import dim4_colouring, g18_dataset

logger = logging.getLogger(__name__)

GRAPH_KINDS = ('hadamard', 'roots', 'dim4', 'gnp', 'g18', 'complete',
               'cycle')


def generate_graph(kind: str, n: Optional[int] = None,
                   p: Optional[float] = None,
                   seed: Optional[int] = None) -> GeneratedGraph:
    """
    Build a named graph family together with the representation or
    colouring that comes with it, if any.
    """
    if kind == 'hadamard':
        return GeneratedGraph(hadamard_graph(n), f'hadamard n={n}',
                              rep=hadamard_vectors(n))
    if kind == 'roots':
        graph, rep = roots_of_unity_graph(n)
        return GeneratedGraph(graph, f'roots of unity p={n}', rep=rep,
                              colouring=roots_of_unity_colouring(n))
    if kind == 'dim4':
        graph, rep = fourth_roots_dim4_graph()
        return GeneratedGraph(graph, 'fourth roots of unity, dimension 4',
                              rep=rep, colouring=dim4_colouring())
    if kind == 'g18':
        graph, rep = g18_dataset()
        return GeneratedGraph(graph, 'g18', rep=rep)
    if kind == 'gnp':
        if seed is None:
            seed = int(config['experiment']['seed'])
        return GeneratedGraph(gnp(n, p, seed),
                              f'gnp n={n} p={p} seed={seed} '
                              f'prng={config["prng"]}')
    if kind == 'complete':
        return GeneratedGraph(complete_graph(n), f'complete n={n}')
    if kind == 'cycle':
        return GeneratedGraph(cycle_graph(n), f'cycle n={n}')
    raise UsageError(f'Unknown graph family {kind!r}; expected one of '
                     f'{", ".join(GRAPH_KINDS)}')
