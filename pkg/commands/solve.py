import logging
from typing import Optional

from graphs.graph import Graph
from solvers.clique import max_clique, max_independent_set
from solvers.colouring import chromatic_number, is_bipartite
from solvers.results import SearchBudget, SolveResult
from utils.errors import UsageError

logger = logging.getLogger(__name__)

PARAMETERS = ('chi', 'omega', 'alpha', 'bipartite')


def solve(graph: Graph, parameter: str,
          budget: Optional[int] = None) -> SolveResult:
    search_budget = SearchBudget(budget)
    if parameter == 'chi':
        result = chromatic_number(graph, search_budget)
    elif parameter == 'omega':
        result = max_clique(graph, search_budget)
    elif parameter == 'alpha':
        result = max_independent_set(graph, search_budget)
    elif parameter == 'bipartite':
        colouring = is_bipartite(graph)
        result = SolveResult('bipartite', int(colouring is not None),
                             colouring, 0, search_budget.elapsed_ms)
    else:
        raise UsageError(f'Unknown parameter {parameter!r}; expected one of '
                         f'{", ".join(PARAMETERS)}')
    logger.info(f'{parameter}={result.value} ({result.nodes} nodes, '
                f'{result.ms:.1f} ms)')
    return result
