from .results import SearchBudget, SolveResult
from .clique import (max_clique, max_independent_set, godsil_identity_check,
                     degeneracy_order, is_clique)
from .colouring import (greedy_colouring, smallest_last_order, is_bipartite,
                        k_colourable, chromatic_number)
