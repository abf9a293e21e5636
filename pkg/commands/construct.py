import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence

from certificates.constructions import (classical_to_rank1,
                                        rank1_to_projector, rank1_to_rep,
                                        real_rep_to_rank1_od,
                                        unit_modulus_rep_to_rank1)
from certificates.io import cert_to_dict
from certificates.models import GeneralCert, Rank1Cert
from certificates.transforms import (equalize_ranks, extract_classical_3col,
                                     normal_form, pullback, tensor_union)
from certificates.verify import verify
from commands.utils.inputs import (read_cert, read_colouring, read_graph,
                                   read_map, read_measurements, read_rep)
from graphs.graph import Homomorphism
from graphs.operations import union_same_vertices, verify_proper_colouring
from utils.errors import CertificateError, UsageError
from utils.reports import Report
from vectors.io import rep_to_dict
from vectors.representation import check_representation

logger = logging.getLogger(__name__)

CONSTRUCTIONS = ('fourier-lift', 'od-lift', 'classical-lift', 'tensor-union',
                 'pullback', 'normal-form', 'equalize', 'extract3',
                 'to-projector', 'to-rep')


@dataclass
class Construction:
    """JSON output of a construction and the check of that output"""
    payload: Dict[str, Any]
    report: Report
    details: Optional[Report] = None


def _rank1(cert) -> Rank1Cert:
    if not isinstance(cert, Rank1Cert):
        raise CertificateError(f'Expected a rank-1 certificate, got '
                               f'{cert.kind.value}')
    return cert


def _checked(graph, cert, tol) -> Construction:
    return Construction(cert_to_dict(graph, cert), verify(graph, cert, tol))


def construct(name: str, paths: Sequence[Optional[str]],
              tol: Optional[float] = None) -> Construction:
    """
    Run one construction on the given input files. Every result is checked
    before it is returned; a failing check is reported, not raised.
    """
    logger.debug(f'construct {name} from {list(paths)}')
    if name == 'fourier-lift':
        graph = read_graph(paths[0])
        return _checked(graph, unit_modulus_rep_to_rank1(
            graph, read_rep(paths[1])), tol)

    if name == 'od-lift':
        graph = read_graph(paths[0])
        return _checked(graph, real_rep_to_rank1_od(
            graph, read_rep(paths[1])), tol)

    if name == 'classical-lift':
        graph = read_graph(paths[0])
        return _checked(graph, classical_to_rank1(
            graph, read_colouring(paths[1])), tol)

    if name == 'tensor-union':
        graph_g, cert_g = read_cert(paths[0])
        graph_h, cert_h = read_cert(paths[1])
        if graph_g.n != graph_h.n:
            raise UsageError(f'Graphs have {graph_g.n} and {graph_h.n} '
                             f'vertices')
        return _checked(union_same_vertices(graph_g, graph_h),
                        tensor_union(cert_g, cert_h), tol)

    if name == 'pullback':
        source = read_graph(paths[0])
        target, cert = read_cert(paths[2])
        hom = Homomorphism(source, target, read_map(paths[1]))
        return _checked(source, pullback(hom, cert), tol)

    if name == 'normal-form':
        graph, cert = read_cert(paths[0])
        if not isinstance(cert, GeneralCert):
            raise CertificateError(f'Expected a general certificate, got '
                                   f'{cert.kind.value}')
        result, report = normal_form(graph, cert, tol)
        construction = _checked(graph, result, tol)
        construction.details = report
        return construction

    if name == 'equalize':
        graph, projectors = read_measurements(paths[0])
        return _checked(graph, equalize_ranks(projectors, tol), tol)

    if name == 'extract3':
        graph, cert = read_cert(paths[0])
        colouring = extract_classical_3col(graph, _rank1(cert), tol)
        return Construction(colouring.to_dict(),
                            verify_proper_colouring(graph, colouring))

    if name == 'to-projector':
        graph, cert = read_cert(paths[0])
        return _checked(graph, rank1_to_projector(_rank1(cert)), tol)

    if name == 'to-rep':
        graph, cert = read_cert(paths[0])
        rep = rank1_to_rep(_rank1(cert))
        return Construction(rep_to_dict(rep),
                            check_representation(graph, rep, tol))

    raise UsageError(f'Unknown construction {name!r}; expected one of '
                     f'{", ".join(CONSTRUCTIONS)}')
