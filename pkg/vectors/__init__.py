from .representation import (VectorRep, InnerProductValue, inner_product,
                             orthogonality_graph, check_representation)
from .constructions import (hadamard_graph, hadamard_vectors,
                            sylvester_hadamard_rows, roots_of_unity_graph,
                            roots_of_unity_colouring, fourth_roots_dim4_graph,
                            dim2_sign_vectors, standard_basis)
from .datasets import g18_dataset, dim4_colouring
