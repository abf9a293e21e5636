import logging
from typing import List, Optional

import numpy as np

from certificates.models import GeneralCert, ProjectorCert, Rank1Cert
from graphs.graph import Graph
from utils.config import config
from utils.errors import CertificateError
from utils.reports import Report, Violation

logger = logging.getLogger(__name__)


def _default_tolerance(tol: Optional[float]) -> float:
    return config.tolerance('orthogonality') if tol is None else float(tol)


def _check_vertices(graph: Graph, n: int):
    if n != graph.n:
        raise CertificateError(f'Certificate covers {n} vertices, graph has '
                               f'{graph.n}')


def _edge_arrays(graph: Graph):
    edges = np.array(graph.edges, dtype=int).reshape(-1, 2)
    return edges[:, 0], edges[:, 1]


def _max_entry(array: np.ndarray, axes) -> np.ndarray:
    if array.size == 0:
        return np.zeros(array.shape[:-len(axes)])
    return np.abs(array).max(axis=axes)


def _flag(violations: List[Violation], residuals: np.ndarray, tol: float,
          kind: str, where_of, colours_of=lambda index: ()):
    for index in zip(*np.nonzero(residuals > tol)):
        index = tuple(int(i) for i in index)
        violations.append(Violation(kind, where_of(index), colours_of(index),
                                    float(residuals[index])))


def _worst(*residuals: np.ndarray) -> float:
    return max((float(r.max()) for r in residuals if r.size), default=0.0)


def verify_rank1(graph: Graph, cert: Rank1Cert,
                 tol: Optional[float] = None) -> Report:
    """
    Every U_v unitary and, on every edge vw, (U_v^dagger U_w) has a zero
    diagonal: colour a's basis vectors at v and w are orthogonal.
    """
    tol = _default_tolerance(tol)
    _check_vertices(graph, cert.n)
    U = cert.unitaries
    identity = np.eye(cert.c)

    gram = np.einsum('vji,vjk->vik', U.conj(), U)
    unitary = _max_entry(gram - identity, (1, 2))

    us, ws = _edge_arrays(graph)
    overlaps = np.abs(np.einsum('eja,eja->ea', U[us].conj(), U[ws]))

    violations = []
    _flag(violations, unitary, tol, 'unitary', lambda i: (i[0],))
    _flag(violations, overlaps, tol, 'edge',
          lambda i: (int(us[i[0]]), int(ws[i[0]])), lambda i: (i[1],))
    return Report.from_violations(violations, tol, _worst(unitary, overlaps),
                                  kind='rank1', c=cert.c)


def projector_ranks(projectors: np.ndarray) -> np.ndarray:
    """Ranks by counting eigenvalues above one half"""
    hermitian = (projectors + np.swapaxes(projectors, -1, -2).conj()) / 2
    return (np.linalg.eigvalsh(hermitian) > 0.5).sum(axis=-1)


def verify_projector(graph: Graph, cert: ProjectorCert,
                     tol: Optional[float] = None) -> Report:
    """
    Every E_va a Hermitian idempotent of rank r, each vertex's projectors
    summing to the identity, and E_va E_wa = 0 on every edge vw.
    """
    tol = _default_tolerance(tol)
    _check_vertices(graph, cert.n)
    E = cert.projectors
    adjoint = np.swapaxes(E, -1, -2).conj()

    hermitian = _max_entry(E - adjoint, (2, 3))
    idempotent = _max_entry(E @ E - E, (2, 3))
    complete = _max_entry(E.sum(axis=1) - np.eye(cert.d), (1, 2))
    ranks = projector_ranks(E)

    us, ws = _edge_arrays(graph)
    products = _max_entry(E[us] @ E[ws], (2, 3))

    violations = []
    _flag(violations, hermitian, tol, 'hermitian', lambda i: (i[0],),
          lambda i: (i[1],))
    _flag(violations, idempotent, tol, 'idempotent', lambda i: (i[0],),
          lambda i: (i[1],))
    _flag(violations, complete, tol, 'completeness', lambda i: (i[0],))
    for v, a in zip(*np.nonzero(ranks != cert.r)):
        violations.append(Violation('rank', (int(v),), (int(a),),
                                    float(abs(ranks[v, a] - cert.r))))
    _flag(violations, products, tol, 'edge',
          lambda i: (int(us[i[0]]), int(ws[i[0]])), lambda i: (i[1],))
    return Report.from_violations(
        violations, tol, _worst(hermitian, idempotent, complete, products),
        kind='projector', c=cert.c, r=cert.r, d=cert.d)


def correlations(cert: GeneralCert) -> np.ndarray:
    """
    X[v, a] = M^dagger E_va M for the state's coefficient matrix M, so that
    <psi| E_va (x) F_wb |psi> = sum(X[v, a] * F_wb).
    """
    M = cert.state_matrix()
    return np.einsum('ij,vaik,kl->vajl', M.conj(), cert.alice, M)


def verify_general(graph: Graph, cert: GeneralCert,
                   tol: Optional[float] = None) -> Report:
    """
    A unit state, PSD POVMs that sum to the identity, and zero probability
    of differing answers on one vertex or equal answers on an edge.
    """
    tol = _default_tolerance(tol)
    _check_vertices(graph, cert.n)
    norm = np.array([abs(np.linalg.norm(cert.state) - 1)])

    violations = []
    povm_residuals = []
    for side, ops in (('alice', cert.alice), ('bob', cert.bob)):
        hermitian = (ops + np.swapaxes(ops, -1, -2).conj()) / 2
        negativity = np.maximum(-np.linalg.eigvalsh(hermitian).min(axis=-1),
                                0.0)
        complete = _max_entry(ops.sum(axis=1) - np.eye(ops.shape[2]), (1, 2))
        _flag(violations, negativity, tol, f'{side}_positive',
              lambda i: (i[0],), lambda i: (i[1],))
        _flag(violations, complete, tol, f'{side}_completeness',
              lambda i: (i[0],))
        povm_residuals += [negativity, complete]
    _flag(violations, norm, tol, 'state', lambda i: ())

    X = correlations(cert)
    same = np.abs(np.einsum('vajl,vbjl->vab', X, cert.bob))
    off_diagonal = same * (1 - np.eye(cert.c))

    us, ws = _edge_arrays(graph)
    forward = np.abs(np.einsum('eajl,eajl->ea', X[us], cert.bob[ws]))
    backward = np.abs(np.einsum('eajl,eajl->ea', X[ws], cert.bob[us]))

    _flag(violations, off_diagonal, tol, 'consistency', lambda i: (i[0],),
          lambda i: (i[1], i[2]))
    _flag(violations, forward, tol, 'edge',
          lambda i: (int(us[i[0]]), int(ws[i[0]])), lambda i: (i[1],))
    _flag(violations, backward, tol, 'edge',
          lambda i: (int(ws[i[0]]), int(us[i[0]])), lambda i: (i[1],))
    return Report.from_violations(
        violations, tol,
        _worst(norm, off_diagonal, forward, backward, *povm_residuals),
        kind='general', c=cert.c, dA=cert.dA, dB=cert.dB)


def verify(graph: Graph, cert, tol: Optional[float] = None) -> Report:
    if isinstance(cert, Rank1Cert):
        return verify_rank1(graph, cert, tol)
    if isinstance(cert, ProjectorCert):
        return verify_projector(graph, cert, tol)
    if isinstance(cert, GeneralCert):
        return verify_general(graph, cert, tol)
    raise CertificateError(f'Unknown certificate type {type(cert).__name__}')
