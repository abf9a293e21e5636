import json
import logging
from typing import Any, Dict, List

from graphs.graph import ClassicalColouring, Graph
from utils.errors import ColouringError, GraphError, GraphFormatError

logger = logging.getLogger(__name__)


def read_dimacs(text: str) -> Graph:
    """
    Parse the DIMACS edge format: a `p edge n m` header, 1-indexed `e u v`
    lines, and `c` comment lines. Duplicate edges and a header edge count
    that disagrees with the body are tolerated with a warning.
    """
    n = declared_m = None
    edges = set()
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == 'c':
            continue
        try:
            if tokens[0] == 'p':
                if n is not None:
                    raise GraphFormatError(f'line {number}: second header')
                if len(tokens) != 4 or tokens[1] not in {'edge', 'col'}:
                    raise GraphFormatError(f'line {number}: expected '
                                           f'"p edge n m", got {line!r}')
                n, declared_m = int(tokens[2]), int(tokens[3])
            elif tokens[0] == 'e':
                if n is None:
                    raise GraphFormatError(f'line {number}: edge before the '
                                           f'"p" header')
                if len(tokens) != 3:
                    raise GraphFormatError(f'line {number}: expected '
                                           f'"e u v", got {line!r}')
                u, v = int(tokens[1]) - 1, int(tokens[2]) - 1
                if u == v:
                    raise GraphFormatError(f'line {number}: loop at vertex '
                                           f'{u + 1}')
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphFormatError(f'line {number}: vertex out of '
                                           f'range 1..{n}')
                edge = (min(u, v), max(u, v))
                if edge in edges:
                    logger.warning(f'line {number}: duplicate edge '
                                   f'{u + 1}-{v + 1} ignored')
                edges.add(edge)
            else:
                raise GraphFormatError(f'line {number}: unknown line type '
                                       f'{tokens[0]!r}')
        except ValueError:
            raise GraphFormatError(f'line {number}: non-integer field in '
                                   f'{line!r}')
    if n is None:
        raise GraphFormatError('missing "p edge n m" header')
    if declared_m != len(edges):
        logger.warning(f'header declares {declared_m} edges, '
                       f'found {len(edges)}')
    try:
        return Graph(n, sorted(edges))
    except GraphError as e:
        raise GraphFormatError(str(e))


def write_dimacs(graph: Graph, comment: str = '') -> str:
    lines = [f'c {line}' for line in comment.splitlines()]
    lines.append(f'p edge {graph.n} {graph.edge_count}')
    lines.extend(f'e {u + 1} {v + 1}' for u, v in graph.edges)
    return '\n'.join(lines) + '\n'


def graph_to_dict(graph: Graph) -> Dict[str, Any]:
    return {'n': graph.n, 'edges': [list(e) for e in graph.edges]}


def graph_from_dict(data: Dict[str, Any]) -> Graph:
    try:
        return Graph(int(data['n']), data['edges'])
    except (KeyError, TypeError, ValueError) as e:
        raise GraphFormatError(f'malformed graph JSON: {e}')
    except GraphError as e:
        raise GraphFormatError(str(e))


def load_graph(text: str) -> Graph:
    """Read either format; JSON is recognised by a leading brace"""
    stripped = text.lstrip()
    if stripped.startswith('{'):
        data = json.loads(stripped)
        # Certificate files carry their graph under "graph"
        if 'graph' in data and 'n' not in data:
            data = data['graph']
        return graph_from_dict(data)
    return read_dimacs(text)


def parse_colouring(text: str) -> ClassicalColouring:
    """
    A colouring is JSON ({"c": .., "colours": [..]} or a bare list) or
    whitespace-separated 0-indexed integers.
    """
    stripped = text.strip()
    try:
        if stripped.startswith(('{', '[')):
            return ClassicalColouring.from_dict(json.loads(stripped))
        colours: List[int] = [int(x) for x in stripped.split()]
    except (KeyError, TypeError, ValueError) as e:
        raise ColouringError(f'malformed colouring: {e}')
    return ClassicalColouring.from_dict(colours)
