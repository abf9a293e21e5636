import logging
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from certificates.constructions import rank1_to_projector
from certificates.models import GeneralCert, ProjectorCert, Rank1Cert
from certificates.verify import projector_ranks, verify_general, verify_rank1
from graphs.graph import ClassicalColouring, Graph, Homomorphism
from graphs.operations import is_connected, verify_proper_colouring
from utils.config import config
from utils.errors import CertificateError, GraphError
from utils.reports import Report, Violation

logger = logging.getLogger(__name__)

AnyCert = Union[Rank1Cert, ProjectorCert, GeneralCert]


def pullback(hom: Homomorphism, cert: AnyCert) -> AnyCert:
    """Vertex x of the source takes the operators of hom(x) in the target"""
    if cert.n != hom.target.n:
        raise CertificateError(f'Certificate covers {cert.n} vertices, the '
                               f'homomorphism target has {hom.target.n}')
    index = list(hom.map)
    if isinstance(cert, Rank1Cert):
        return Rank1Cert(cert.unitaries[index])
    if isinstance(cert, ProjectorCert):
        return ProjectorCert(cert.r, cert.projectors[index])
    return GeneralCert(cert.state, cert.alice[index], cert.bob[index])


def _as_projector(cert: Union[Rank1Cert, ProjectorCert]) -> ProjectorCert:
    if isinstance(cert, Rank1Cert):
        return rank1_to_projector(cert)
    if isinstance(cert, ProjectorCert):
        return cert
    raise CertificateError('Only rank-1 and projector certificates can be '
                           'combined')


def tensor_union(cert_g: Union[Rank1Cert, ProjectorCert],
                 cert_h: Union[Rank1Cert, ProjectorCert]) -> ProjectorCert:
    """
    Certificate for the union of two graphs on the same vertices: colour
    (a, b), numbered a * c_H + b, gets E_va (x) E'_vb.
    """
    g, h = _as_projector(cert_g), _as_projector(cert_h)
    if g.n != h.n:
        raise CertificateError(f'Certificates cover {g.n} and {h.n} '
                               f'vertices')
    projectors = np.einsum('vaij,vbkl->vabikjl', g.projectors, h.projectors)
    projectors = projectors.reshape(g.n, g.c * h.c, g.d * h.d, g.d * h.d)
    return ProjectorCert(g.r * h.r, projectors)


def _check_complete(projectors: np.ndarray, tol: float):
    d = projectors.shape[2]
    residual = np.abs(projectors.sum(axis=1) - np.eye(d)).max(axis=(1, 2))
    bad = np.flatnonzero(residual > tol)
    if bad.size:
        raise CertificateError(f'Measurement at vertex {int(bad[0])} is '
                               f'incomplete (residual '
                               f'{residual[bad[0]]:.3g})')
    idempotent = np.abs(projectors @ projectors - projectors).max(
        axis=(2, 3))
    bad = np.argwhere(idempotent > tol)
    if bad.size:
        v, a = (int(x) for x in bad[0])
        raise CertificateError(f'Operator {a} at vertex {v} is not a '
                               f'projector')


def equalize_ranks(projectors: np.ndarray,
                   tol: Optional[float] = None) -> ProjectorCert:
    """
    Make every projector rank d by E'_va = sum_i E_v,(a+i mod c) (x) |i><i|
    on dimension d * c. Colour a keeps its meaning.
    """
    tol = config.tolerance('orthogonality') if tol is None else tol
    projectors = np.asarray(projectors, dtype=complex)
    if projectors.ndim != 4:
        raise CertificateError('Measurements must have shape '
                               '(vertices, colours, d, d)')
    _check_complete(projectors, tol)
    n, c, d, _ = projectors.shape
    out = np.zeros((n, c, d * c, d * c), dtype=complex)
    for a in range(c):
        for i in range(c):
            marker = np.zeros((c, c))
            marker[i, i] = 1
            out[:, a] += np.kron(projectors[:, (a + i) % c], marker)
    return ProjectorCert(d, out)


def _support(operator: np.ndarray, threshold: float) -> np.ndarray:
    """Projector onto eigenvectors with eigenvalue above threshold"""
    values, vectors = np.linalg.eigh((operator + operator.conj().T) / 2)
    ambiguous = (values > threshold / 10) & (values < threshold * 10)
    if ambiguous.any():
        raise CertificateError(f'Numerically ambiguous rank: eigenvalue '
                               f'{values[ambiguous][0]:.3g} is near the '
                               f'threshold {threshold:.3g}')
    keep = vectors[:, values > threshold]
    return keep @ keep.conj().T


def _schmidt_basis(M: np.ndarray, tol: float):
    U, s, Vh = np.linalg.svd(M)
    # A flat full spectrum leaves the basis free; keep Alice's own
    if M.shape[0] == M.shape[1] and np.all(np.abs(s - s[0]) <= tol):
        return np.eye(M.shape[0]), s, M / s[0]
    return U, s, Vh


def normal_form(graph: Graph, cert: GeneralCert,
                tol: Optional[float] = None) -> Tuple[ProjectorCert, Report]:
    """
    Reduce a general strategy to projective measurements shared through a
    maximally entangled state. Alice's projector for colour a is the
    support of tr_B((1 (x) F_va)|psi><psi|) on the Schmidt support, and
    Bob's must come out as its conjugate.
    """
    tol = config.tolerance('orthogonality') if tol is None else float(tol)
    gate = verify_general(graph, cert, tol)
    if not gate.passed:
        raise CertificateError('Input does not win the colouring game',
                               report=gate)

    M = cert.state_matrix()
    U, s, Vh = _schmidt_basis(M, tol)
    eigenvalues = s ** 2
    threshold = config.tolerance('rank_relative') * eigenvalues.max()
    ambiguous = (eigenvalues > threshold / 10) & (eigenvalues < threshold * 10)
    if ambiguous.any():
        raise CertificateError('Numerically ambiguous Schmidt rank')
    k = int((eigenvalues > threshold).sum())
    WA = U[:, :k]
    # Rows of Vh are Bob's Schmidt vectors
    WB = Vh[:k].T
    S = np.diag(s[:k])

    alice = np.einsum('ij,vajk,kl->vail', WA.conj().T, cert.alice, WA)
    bob = np.einsum('ij,vajk,kl->vail', WB.conj().T, cert.bob, WB)
    P = np.empty_like(alice)
    Q = np.empty_like(bob)
    for v in range(cert.n):
        for a in range(cert.c):
            P[v, a] = _support(S @ bob[v, a].T @ S, threshold)
            Q[v, a] = _support(S @ alice[v, a].T @ S, threshold)

    conjugate = float(np.abs(Q - P.conj()).max())
    if conjugate > tol:
        raise CertificateError(f'Bob\'s supports are not the conjugates of '
                               f'Alice\'s (residual {conjugate:.3g})')
    rho = np.diag(eigenvalues[:k] / eigenvalues[:k].sum())
    commutation = np.abs(np.einsum('ij,vajk->vaik', rho, P)
                         - np.einsum('vaij,jk->vaik', P, rho))
    commutation = commutation.max(axis=(2, 3))

    if k == M.shape[0]:
        # Full Schmidt rank: report in Alice's original coordinates
        P = np.einsum('ij,vajk,kl->vail', WA, P, WA.conj().T)
    ranks = projector_ranks(P)
    equalized = len(set(ranks.ravel().tolist())) != 1 or \
        int(ranks[0, 0]) * cert.c != k
    if equalized:
        logger.info(f'Projector ranks {sorted(set(ranks.ravel().tolist()))} '
                    f'differ; equalizing')
        result = equalize_ranks(P, tol)
    else:
        result = ProjectorCert(int(ranks[0, 0]), P)

    violations = []
    for v, a in np.argwhere(commutation > tol):
        violations.append(Violation('commutation', (int(v),), (int(a),),
                                    float(commutation[v, a])))
    report = Report.from_violations(
        violations, tol, max(float(commutation.max()), conjugate),
        schmidt_rank=k, commutation_residual=float(commutation.max()),
        conjugate_residual=conjugate, equalized=equalized,
        r=result.r, d=result.d)
    return result, report


def apply_gauge(cert: Rank1Cert, left: Optional[np.ndarray] = None,
                phases: Optional[np.ndarray] = None) -> Rank1Cert:
    """U_v -> W U_v diag(phases[v])"""
    U = cert.unitaries
    if left is not None:
        U = np.einsum('ij,vjk->vik', left, U)
    if phases is not None:
        U = U * np.asarray(phases)[:, None, :]
    return Rank1Cert(U)


def extract_classical_3col(graph: Graph, cert: Rank1Cert,
                           tol: Optional[float] = None) -> ClassicalColouring:
    """
    Read a classical 3-colouring off a passing 3-colour rank-1 certificate.
    After the gauge U_0 = I every U_v is a phased permutation matrix, and v
    is coloured by the row holding the nonzero entry of its first column.
    """
    if cert.c != 3:
        raise CertificateError(f'Extraction needs 3 colours, got {cert.c}')
    if not is_connected(graph):
        raise GraphError('Extraction needs a connected graph')
    report = verify_rank1(graph, cert, tol)
    if not report.passed:
        raise CertificateError('Certificate does not verify', report=report)

    hit = config.tolerance('permutation_hit')
    noise = config.tolerance('permutation_noise')
    gauged = np.einsum('ji,vjk->vik', cert.unitaries[0].conj(),
                       cert.unitaries)
    moduli = np.abs(gauged)
    colours = []
    for v in range(graph.n):
        grey = (moduli[v] > noise) & (moduli[v] < hit)
        hits = moduli[v] >= hit
        if grey.any() or not (np.all(hits.sum(axis=0) == 1)
                              and np.all(hits.sum(axis=1) == 1)):
            raise CertificateError(f'Gauged unitary at vertex {v} is not a '
                                   f'phased permutation matrix')
        colours.append(int(np.flatnonzero(hits[:, 0])[0]))
    colouring = ClassicalColouring(3, tuple(colours))
    if not verify_proper_colouring(graph, colouring).passed:
        raise CertificateError('Extracted colouring is not proper')
    return colouring


def vertex_phases(n: int, c: int, seed: int) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(seed))
    return np.exp(2j * np.pi * rng.random((n, c)))


def random_unitary(c: int, seed: int) -> np.ndarray:
    """Haar-distributed unitary from the QR decomposition of a Ginibre
    matrix"""
    rng = np.random.Generator(np.random.PCG64(seed))
    z = rng.standard_normal((c, c)) + 1j * rng.standard_normal((c, c))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
