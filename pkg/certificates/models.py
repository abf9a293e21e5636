from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from utils.enums import CertificateKind
from utils.errors import CertificateError

DIMENSION_CAP = 256


def _complex_array(data, ndim: int, name: str) -> np.ndarray:
    array = np.asarray(data, dtype=complex)
    if array.ndim != ndim:
        raise CertificateError(f'{name} must be a {ndim}-dimensional array, '
                               f'got shape {array.shape}')
    if not np.all(np.isfinite(array)):
        raise CertificateError(f'{name} has non-finite entries')
    return array


def _check_dimension(d: int):
    if d > DIMENSION_CAP:
        raise CertificateError(f'Dimension {d} exceeds the cap of '
                               f'{DIMENSION_CAP}')


@dataclass
class Rank1Cert:
    """
    One c x c unitary per vertex; column a of unitaries[v] is the basis
    vector Alice measures for colour a. Bob's vectors are the conjugates.
    """
    unitaries: np.ndarray

    kind = CertificateKind.RANK1

    def __post_init__(self):
        self.unitaries = _complex_array(self.unitaries, 3, 'unitaries')
        n, rows, cols = self.unitaries.shape
        if rows != cols:
            raise CertificateError(f'Unitaries must be square, got '
                                   f'{rows}x{cols}')
        if n < 1:
            raise CertificateError('A certificate needs at least one vertex')
        _check_dimension(cols)

    @property
    def n(self) -> int:
        return self.unitaries.shape[0]

    @property
    def c(self) -> int:
        return self.unitaries.shape[1]


@dataclass
class ProjectorCert:
    """
    c projectors of rank r per vertex acting on dimension d = r * c, shared
    with the maximally entangled state of that dimension.
    """
    r: int
    projectors: np.ndarray

    kind = CertificateKind.PROJECTOR

    def __post_init__(self):
        self.projectors = _complex_array(self.projectors, 4, 'projectors')
        n, c, rows, cols = self.projectors.shape
        if rows != cols:
            raise CertificateError(f'Projectors must be square, got '
                                   f'{rows}x{cols}')
        if n < 1 or c < 1:
            raise CertificateError('A certificate needs at least one vertex '
                                   'and one colour')
        if self.r < 1 or self.r * c != rows:
            raise CertificateError(f'Dimension {rows} is not rank {self.r} '
                                   f'times {c} colours')
        _check_dimension(rows)

    @property
    def n(self) -> int:
        return self.projectors.shape[0]

    @property
    def c(self) -> int:
        return self.projectors.shape[1]

    @property
    def d(self) -> int:
        return self.projectors.shape[2]


@dataclass
class GeneralCert:
    """A pure state on A (x) B with c-outcome POVMs for each side"""
    state: np.ndarray
    alice: np.ndarray
    bob: np.ndarray

    kind = CertificateKind.GENERAL

    def __post_init__(self):
        self.state = _complex_array(self.state, 1, 'state')
        self.alice = _complex_array(self.alice, 4, 'alice')
        self.bob = _complex_array(self.bob, 4, 'bob')
        if self.alice.shape[:2] != self.bob.shape[:2]:
            raise CertificateError(f'Alice has {self.alice.shape[:2]} '
                                   f'(vertices, colours), Bob has '
                                   f'{self.bob.shape[:2]}')
        for name, ops in (('alice', self.alice), ('bob', self.bob)):
            if ops.shape[2] != ops.shape[3]:
                raise CertificateError(f'{name} operators must be square')
            _check_dimension(ops.shape[2])
        if self.state.size != self.dA * self.dB:
            raise CertificateError(f'State has {self.state.size} entries, '
                                   f'expected dA*dB = {self.dA * self.dB}')

    @property
    def n(self) -> int:
        return self.alice.shape[0]

    @property
    def c(self) -> int:
        return self.alice.shape[1]

    @property
    def dA(self) -> int:
        return self.alice.shape[2]

    @property
    def dB(self) -> int:
        return self.bob.shape[2]

    def state_matrix(self) -> np.ndarray:
        """The state as a dA x dB coefficient matrix"""
        return self.state.reshape(self.dA, self.dB)


def maximally_entangled_state(d: int, dtype=complex) -> np.ndarray:
    return np.eye(d, dtype=dtype).reshape(-1) / np.sqrt(d)
