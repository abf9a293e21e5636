import logging
from typing import List, Optional, Tuple

from graphs.graph import Graph
from graphs.operations import complement
from solvers.results import SearchBudget, SolveResult
from utils.misc import iter_bits, popcount
from utils.reports import Report, Violation

logger = logging.getLogger(__name__)


def degeneracy_order(graph: Graph) -> List[int]:
    """
    Repeatedly remove a vertex of minimum remaining degree, ties by lowest
    index. Returns vertices in removal order.
    """
    remaining = graph.vertex_mask
    degree = graph.degrees()
    order = []
    while remaining:
        v = min(iter_bits(remaining), key=lambda x: (degree[x], x))
        remaining &= ~(1 << v)
        order.append(v)
        for w in iter_bits(graph.neighbours(v) & remaining):
            degree[w] -= 1
    return order


def _colour_sort(candidates: int, rows: List[int]) -> Tuple[List[int],
                                                             List[int]]:
    """
    Greedy colouring of the candidate set; the colour of a vertex bounds the
    size of any clique among it and the vertices before it.
    """
    order = []
    bounds = []
    colour = 0
    work = candidates
    while work:
        colour += 1
        available = work
        while available:
            low = available & -available
            v = low.bit_length() - 1
            order.append(v)
            bounds.append(colour)
            work &= ~low
            available &= ~low & ~rows[v]
    return order, bounds


def _pivot(candidates: int, rows: List[int]) -> int:
    """Candidate with the most neighbours among the candidates, lowest index
    on ties"""
    return max(iter_bits(candidates),
               key=lambda u: popcount(candidates & rows[u]))


class _CliqueSearch:

    def __init__(self, rows: List[int], budget: SearchBudget, parameter: str):
        self.rows = rows
        self.budget = budget
        self.parameter = parameter
        self.best_size = 0
        self.best = 0

    def expand(self, size: int, clique: int, candidates: int):
        order, bounds = _colour_sort(candidates, self.rows)
        # Every maximal clique among the candidates holds a non-neighbour
        # of the pivot, so its neighbours are never branched on here
        pivot_neighbours = self.rows[_pivot(candidates, self.rows)]
        skipped = set()
        for i in range(len(order) - 1, -1, -1):
            # Colour classes are independent sets; count those still present
            classes = bounds[i] + sum(1 for c in skipped if c > bounds[i])
            if size + classes <= self.best_size:
                return
            v = order[i]
            if pivot_neighbours >> v & 1:
                skipped.add(bounds[i])
                continue
            self.budget.tick(self.parameter)
            grown = clique | (1 << v)
            remaining = candidates & self.rows[v]
            if remaining:
                self.expand(size + 1, grown, remaining)
            elif size + 1 > self.best_size:
                self.best_size = size + 1
                self.best = grown
            candidates &= ~(1 << v)


def is_clique(graph: Graph, vertices: List[int]) -> bool:
    mask = sum(1 << v for v in vertices)
    return all((graph.neighbours(v) | (1 << v)) & mask == mask
               for v in vertices)


def max_clique(graph: Graph, budget: Optional[SearchBudget] = None,
               parameter: str = 'omega') -> SolveResult:
    """
    Exact clique number by branch and bound with pivoting and a greedy
    colouring bound, vertices relabelled to degeneracy order.
    """
    budget = budget or SearchBudget()
    start_nodes = budget.nodes
    order = degeneracy_order(graph)
    position = {v: i for i, v in enumerate(order)}
    rows = [0] * graph.n
    for v in range(graph.n):
        for w in graph.neighbour_list(v):
            rows[position[v]] |= 1 << position[w]

    search = _CliqueSearch(rows, budget, parameter)
    search.expand(0, 0, (1 << graph.n) - 1)
    witness = sorted(order[i] for i in iter_bits(search.best))

    if len(witness) != search.best_size or not is_clique(graph, witness):
        raise RuntimeError(f'clique search produced an invalid witness '
                           f'{witness}')
    nodes = budget.nodes - start_nodes
    logger.debug(f'{parameter}={search.best_size} after {nodes} nodes')
    return SolveResult(parameter, search.best_size, witness, nodes,
                       budget.elapsed_ms)


def max_independent_set(graph: Graph,
                        budget: Optional[SearchBudget] = None) -> SolveResult:
    result = max_clique(complement(graph), budget, parameter='alpha')
    mask = sum(1 << v for v in result.witness)
    if any(graph.neighbours(v) & mask for v in result.witness):
        raise RuntimeError(f'independent set witness {result.witness} '
                           f'contains an edge')
    return result


def godsil_identity_check(graph: Graph,
                          budget: Optional[SearchBudget] = None) -> Report:
    """
    Whether alpha * omega equals the vertex count. Only the arithmetic
    identity is checked; vertex-transitivity is not.
    """
    budget = budget or SearchBudget()
    alpha = max_independent_set(graph, budget).value
    omega = max_clique(graph, budget).value
    product = alpha * omega
    violations = []
    if product != graph.n:
        violations.append(Violation('identity', (graph.n,), (alpha, omega),
                                    float(abs(graph.n - product))))
    return Report.from_violations(violations, alpha=alpha, omega=omega,
                                  product=product, n=graph.n)
