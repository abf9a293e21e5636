from .graph import Graph, ClassicalColouring, Homomorphism
from .generators import (complete_graph, edgeless_graph, cycle_graph,
                         path_graph, gnp)
from .operations import (complement, union_same_vertices, induced_subgraph,
                         check_homomorphism, verify_proper_colouring,
                         components, is_connected, is_isomorphic)
