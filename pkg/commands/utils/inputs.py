import json
import sys
from pathlib import Path
from typing import Optional, Tuple

import numpy as np

from certificates.io import AnyCert, load_cert, measurements_from_dict
from graphs.graph import ClassicalColouring, Graph
from graphs.io import load_graph, parse_colouring
from utils.errors import UsageError
from vectors.io import load_rep
from vectors.representation import VectorRep


def read_input(path: Optional[str]) -> str:
    """Contents of a file, or of standard input for no path or `-`"""
    if path in {None, '-'}:
        if sys.stdin is None or sys.stdin.isatty():
            raise UsageError('Expected input on standard input')
        return sys.stdin.read()
    return Path(path).read_text()


def read_graph(path: Optional[str]) -> Graph:
    return load_graph(read_input(path))


def read_colouring(path: Optional[str]) -> ClassicalColouring:
    return parse_colouring(read_input(path))


def read_rep(path: Optional[str]) -> VectorRep:
    return load_rep(read_input(path))


def read_cert(path: Optional[str],
              graph_path: Optional[str] = None) -> Tuple[Graph, AnyCert]:
    """A certificate with the graph stored in it, or from graph_path"""
    graph, cert = load_cert(read_input(path))
    if graph_path is not None:
        graph = read_graph(graph_path)
    return graph, cert


def read_measurements(path: Optional[str]) -> Tuple[Graph, np.ndarray]:
    return measurements_from_dict(json.loads(read_input(path)))


def read_map(path: Optional[str]) -> Tuple[int, ...]:
    """A homomorphism map: JSON {"map": [...]} or a bare JSON list"""
    data = json.loads(read_input(path))
    if isinstance(data, dict):
        data = data.get('map')
    if not isinstance(data, list):
        raise UsageError('A map file holds {"map": [...]} or a JSON list')
    return tuple(int(x) for x in data)
