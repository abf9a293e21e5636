from .models import (Rank1Cert, ProjectorCert, GeneralCert,
                     maximally_entangled_state)
from .designs import fourier_matrix, od_matrix
from .verify import verify_rank1, verify_projector, verify_general, verify
from .constructions import (classical_to_rank1, unit_modulus_rep_to_rank1,
                            real_rep_to_rank1_od, rank1_to_rep,
                            rank1_to_projector, projector_to_general,
                            rank1_to_general)
from .transforms import (pullback, tensor_union, equalize_ranks, normal_form,
                         apply_gauge, extract_classical_3col)
from .bounds import upper_bound_report
