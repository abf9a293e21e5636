import json
import logging
from functools import lru_cache
from typing import Tuple

from graphs.graph import ClassicalColouring, Graph
from graphs.io import read_dimacs
from utils.constants import DATASETS_FOLDER
from utils.errors import DatasetError
from utils.misc import checksum
from vectors.io import rep_from_dict
from vectors.representation import VectorRep

logger = logging.getLogger(__name__)

CHECKSUMS_FILE = DATASETS_FOLDER / 'checksums.json'


@lru_cache(maxsize=None)
def _expected_checksums():
    with open(CHECKSUMS_FILE) as f:
        return json.load(f)


def read_dataset(name: str) -> str:
    """Raw text of a checked-in dataset after verifying its checksum"""
    path = DATASETS_FOLDER / name
    try:
        raw = path.read_bytes()
    except FileNotFoundError:
        raise DatasetError(f'Dataset {name} is missing')
    expected = _expected_checksums().get(name)
    if expected is None:
        raise DatasetError(f'Dataset {name} has no recorded checksum')
    actual = checksum(raw)
    if actual != expected:
        raise DatasetError(f'Dataset {name} checksum mismatch: expected '
                           f'{expected}, got {actual}')
    logger.info(f'Loaded dataset {name} ({len(raw)} bytes)')
    return raw.decode()


def g18_graph() -> Graph:
    return read_dimacs(read_dataset('g18.dimacs'))


def g18_vectors() -> VectorRep:
    return rep_from_dict(json.loads(read_dataset('g18_vectors.json')))


def g18_dataset() -> Tuple[Graph, VectorRep]:
    """The 18-vertex, 44-edge graph and its real representation in R^4"""
    graph, rep = g18_graph(), g18_vectors()
    if len(rep) != graph.n:
        raise DatasetError('G18 vector count does not match the graph')
    return graph, rep


def dim4_colouring() -> ClassicalColouring:
    """The published 4-colouring of the 64-vertex graph, shifted to 0..3"""
    lines = [line for line in read_dataset('dim4_colouring.txt').splitlines()
             if not line.startswith('#')]
    colours = [int(x) - 1 for x in ' '.join(lines).split()]
    if len(colours) != 64:
        raise DatasetError(f'Expected 64 colours, found {len(colours)}')
    return ClassicalColouring(4, tuple(colours))
