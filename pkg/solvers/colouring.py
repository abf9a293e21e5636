import logging
from collections import deque
from typing import List, Optional, Sequence

from graphs.graph import ClassicalColouring, Graph
from graphs.operations import verify_proper_colouring
from solvers.clique import degeneracy_order, max_clique
from solvers.results import SearchBudget, SolveResult
from utils.errors import GraphError

logger = logging.getLogger(__name__)


def greedy_colouring(graph: Graph,
                     order: Optional[Sequence[int]] = None) -> ClassicalColouring:
    """Give each vertex, in order, the smallest colour unused by neighbours"""
    if order is None:
        order = range(graph.n)
    elif sorted(order) != list(range(graph.n)):
        raise GraphError('Greedy order must be a permutation of the vertices')
    colours = [-1] * graph.n
    for v in order:
        taken = {colours[w] for w in graph.neighbour_list(v)}
        colour = 0
        while colour in taken:
            colour += 1
        colours[v] = colour
    return ClassicalColouring(max(colours) + 1, tuple(colours))


def smallest_last_order(graph: Graph) -> List[int]:
    return degeneracy_order(graph)[::-1]


def is_bipartite(graph: Graph) -> Optional[ClassicalColouring]:
    colours = [-1] * graph.n
    for start in range(graph.n):
        if colours[start] != -1:
            continue
        colours[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in graph.neighbour_list(v):
                if colours[w] == -1:
                    colours[w] = 1 - colours[v]
                    queue.append(w)
                elif colours[w] == colours[v]:
                    return None
    return ClassicalColouring(2, tuple(colours))


class _DsaturSearch:
    """
    Exact k-colouring by saturation-degree branch and bound. The next vertex
    is the uncoloured one seeing the most distinct colours, ties by lowest
    index. A vertex may open at most one colour beyond those in use, which
    forces the first branching vertex to colour 0.
    """

    def __init__(self, graph: Graph, k: int, budget: SearchBudget):
        self.graph = graph
        self.k = k
        self.budget = budget
        self.neighbours = [graph.neighbour_list(v) for v in range(graph.n)]
        self.colours = [-1] * graph.n
        self.seen = [[0] * k for _ in range(graph.n)]
        self.saturation = [0] * graph.n

    def _select(self) -> int:
        best = -1
        best_saturation = -1
        for v in range(self.graph.n):
            if self.colours[v] == -1 and self.saturation[v] > best_saturation:
                best = v
                best_saturation = self.saturation[v]
        return best

    def _assign(self, v: int, colour: int) -> bool:
        """Colour v and report whether every uncoloured neighbour still has
        a colour left"""
        self.colours[v] = colour
        alive = True
        for w in self.neighbours[v]:
            seen = self.seen[w]
            seen[colour] += 1
            if seen[colour] == 1:
                self.saturation[w] += 1
                if self.colours[w] == -1 and self.saturation[w] >= self.k:
                    alive = False
        return alive

    def _unassign(self, v: int, colour: int):
        self.colours[v] = -1
        for w in self.neighbours[v]:
            seen = self.seen[w]
            seen[colour] -= 1
            if seen[colour] == 0:
                self.saturation[w] -= 1

    def search(self, coloured: int, used: int) -> bool:
        if coloured == self.graph.n:
            return True
        self.budget.tick('chi')
        v = self._select()
        seen = self.seen[v]
        for colour in range(min(used + 1, self.k)):
            if seen[colour]:
                continue
            if self._assign(v, colour) and \
                    self.search(coloured + 1, max(used, colour + 1)):
                return True
            self._unassign(v, colour)
        return False


def k_colourable(graph: Graph, k: int,
                 budget: Optional[SearchBudget] = None
                 ) -> Optional[ClassicalColouring]:
    """
    A proper k-colouring if one exists, None if none does. Running out of
    budget raises BudgetExceeded instead of answering.
    """
    if k < 1:
        raise GraphError(f'k must be at least 1, got {k}')
    budget = budget or SearchBudget()
    start_nodes = budget.nodes
    search = _DsaturSearch(graph, k, budget)
    found = search.search(0, 0)
    logger.debug(f'k={k}: {"colourable" if found else "not colourable"} '
                 f'after {budget.nodes - start_nodes} nodes')
    if not found:
        return None
    colouring = ClassicalColouring(k, tuple(search.colours))
    if not verify_proper_colouring(graph, colouring).passed:
        raise RuntimeError(f'colouring search produced an improper '
                           f'{k}-colouring')
    return colouring


def chromatic_number(graph: Graph,
                     budget: Optional[SearchBudget] = None) -> SolveResult:
    """
    Bracket chi between the clique number and a smallest-last greedy
    colouring, then tighten the upper end one colour at a time.
    """
    budget = budget or SearchBudget()
    start_nodes = budget.nodes
    omega = max_clique(graph, budget)
    best = greedy_colouring(graph, smallest_last_order(graph))
    lower, greedy = omega.value, best.c
    logger.debug(f'chi bracket [{lower}, {greedy}]')

    upper = greedy
    while upper > lower:
        colouring = k_colourable(graph, upper - 1, budget)
        if colouring is None:
            break
        best = colouring
        upper -= 1
        logger.debug(f'chi <= {upper}')

    best = ClassicalColouring(upper, best.colours)
    if not (lower <= upper <= greedy) or \
            not verify_proper_colouring(graph, best).passed:
        raise RuntimeError('chromatic number witness failed verification')
    return SolveResult('chi', upper, best, budget.nodes - start_nodes,
                       budget.elapsed_ms,
                       details={'omega': lower, 'greedy': greedy})
