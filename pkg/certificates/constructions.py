import logging

import numpy as np

from certificates.designs import fourier_matrix, fourier_rows, od_matrix
from certificates.models import (GeneralCert, ProjectorCert, Rank1Cert,
                                 maximally_entangled_state)
from graphs.graph import ClassicalColouring, Graph
from graphs.operations import verify_proper_colouring
from utils.enums import Backend
from utils.errors import ColouringError, RepresentationError
from vectors.representation import VectorRep, check_representation

logger = logging.getLogger(__name__)

UNIT_MODULUS_TOLERANCE = 1e-9


def _fourier_lift(vectors: np.ndarray) -> np.ndarray:
    """U_v = diag(x_v) F_c for each unit-modulus row x_v"""
    F = fourier_matrix(vectors.shape[1])
    return vectors[:, :, None] * F[None, :, :]


def classical_to_rank1(graph: Graph,
                       colouring: ClassicalColouring) -> Rank1Cert:
    """
    Colour k becomes row k of sqrt(c) F_c, which is then lifted to
    diag(x) F_c. Distinct colours give orthogonal rows, so a proper
    colouring yields a passing certificate.
    """
    report = verify_proper_colouring(graph, colouring)
    if not report.passed:
        raise ColouringError(f'Colouring is not proper: '
                             f'{report.violations[0]}')
    rows = np.array(fourier_rows(colouring.c))
    return Rank1Cert(_fourier_lift(rows[list(colouring.colours)]))


def unit_modulus_rep_to_rank1(graph: Graph, rep: VectorRep) -> Rank1Cert:
    """
    Lift an orthogonal representation whose vectors each have entries of
    one common modulus. The vectors are rescaled to unit-modulus entries.
    """
    report = check_representation(graph, rep)
    if not report.passed:
        raise RepresentationError(f'Not an orthogonal representation: '
                                  f'{report.violations[0]}')
    vectors = rep.as_complex_array()
    moduli = np.abs(vectors)
    spread = np.abs(moduli - moduli[:, :1]).max(axis=1)
    bad = np.flatnonzero(spread > UNIT_MODULUS_TOLERANCE * moduli[:, 0])
    if bad.size:
        raise RepresentationError(f'Vector {int(bad[0])} does not have '
                                  f'entries of constant modulus')
    return Rank1Cert(_fourier_lift(vectors / moduli[:, :1]))


def real_rep_to_rank1_od(graph: Graph, rep: VectorRep) -> Rank1Cert:
    """
    Lift a real orthogonal representation of dimension at most 8 through
    the orthogonal design of order 4 or 8. Shorter vectors are padded with
    zeros and every vector is normalized first.
    """
    if not rep.is_real:
        raise RepresentationError('The orthogonal-design lift needs a real '
                                  'representation')
    if rep.dim > 8:
        raise RepresentationError(f'Dimension {rep.dim} exceeds 8')
    report = check_representation(graph, rep)
    if not report.passed:
        raise RepresentationError(f'Not an orthogonal representation: '
                                  f'{report.violations[0]}')
    order = 4 if rep.dim <= 4 else 8
    vectors = np.zeros((len(rep), order))
    vectors[:, :rep.dim] = rep.as_complex_array().real
    vectors /= np.linalg.norm(vectors, axis=1, keepdims=True)
    logger.debug(f'OD lift: padded dimension {rep.dim} to {order}')
    return Rank1Cert(np.array([od_matrix(v) for v in vectors]))


def rank1_to_rep(cert: Rank1Cert) -> VectorRep:
    """The first column of every unitary"""
    return VectorRep(cert.c, Backend.COMPLEX_FLOAT,
                     tuple(tuple(complex(x) for x in U[:, 0])
                           for U in cert.unitaries))


def rank1_to_projector(cert: Rank1Cert) -> ProjectorCert:
    """Column a of U_v becomes the rank-1 projector onto it"""
    U = cert.unitaries
    projectors = np.einsum('via,vja->vaij', U, U.conj())
    return ProjectorCert(1, projectors)


def projector_to_general(cert: ProjectorCert) -> GeneralCert:
    """Share the maximally entangled state; Bob measures conj(E)"""
    return GeneralCert(maximally_entangled_state(cert.d), cert.projectors,
                       cert.projectors.conj())


def rank1_to_general(cert: Rank1Cert) -> GeneralCert:
    return projector_to_general(rank1_to_projector(cert))


def classical_measurements(colouring: ClassicalColouring) -> np.ndarray:
    """
    The deterministic strategy as 1 x 1 projective measurements: E_va is 1
    when v has colour a and 0 otherwise, so ranks are mixed.
    """
    projectors = np.zeros((len(colouring), colouring.c, 1, 1), dtype=complex)
    projectors[np.arange(len(colouring)), list(colouring.colours)] = 1
    return projectors
